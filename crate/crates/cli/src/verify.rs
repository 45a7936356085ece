//! `verify`: cross-check every path on random elements and known cases.

use serde::Serialize;

use cliffchar::random::{random_multivector, seeded_rng};
use cliffchar::{
    build_representation, charpoly_explicit, oracle_compare_with, Multivector, OracleReport,
    Signature,
};

use crate::corpus::CorpusCase;
use crate::expr::parse_expression;
use crate::CliError;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub max_n: usize,
    pub trials_per_signature: usize,
    pub signatures: Vec<SignatureSummary>,
    pub corpus: CorpusSummary,
    pub total_checks: usize,
    pub mismatches: usize,
    pub failures: Vec<Failure>,
    pub elapsed_micros: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SignatureSummary {
    pub signature: [usize; 2],
    pub seed: u64,
    pub trials: usize,
    pub methods: Vec<&'static str>,
    pub mismatches: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CorpusSummary {
    pub cases: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub signature: [usize; 2],
    /// Trial index, or the corpus line for corpus cases.
    pub case: String,
    pub input: String,
    pub method: String,
    pub detail: String,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// Per-signature seed derived from the run seed.
pub fn signature_seed(seed: u64, sig: Signature) -> u64 {
    let tag = (sig.p() as u64) << 8 | sig.q() as u64;
    seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn methods_for(dim: usize) -> Vec<&'static str> {
    let mut m = vec!["recursive", "oracle"];
    if dim <= 6 {
        m.push("closed");
    }
    if dim == 4 || dim == 5 {
        m.push("explicit");
    }
    m
}

/// Failures of one element across all applicable paths.
fn check_element(u: &Multivector, report: &OracleReport) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = report
        .failures()
        .into_iter()
        .map(|p| {
            let detail = match &p.deltas {
                Ok(d) => format!(
                    "deltas [{}]",
                    d.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
                ),
                Err(e) => e.to_string(),
            };
            (p.method.to_string(), detail)
        })
        .collect();
    let dim = u.signature().dim();
    if dim == 4 || dim == 5 {
        match charpoly_explicit(u) {
            Ok(c) if c == report.recursive => {}
            Ok(c) => out.push((
                "explicit".into(),
                format!("got {c}, recursive {}", report.recursive),
            )),
            Err(e) => out.push(("explicit".into(), e.to_string())),
        }
    }
    out
}

pub fn run_verify(
    opts: &VerifyOptions,
    corpus: &[CorpusCase],
) -> Result<VerifyReport, CliError> {
    let start = std::time::Instant::now();
    let mut signatures = Vec::new();
    let mut failures = Vec::new();
    let mut total_checks = 0;

    for sig in Signature::all_up_to(opts.max_n.min(Signature::MAX_DIM)) {
        let seed = signature_seed(opts.seed, sig);
        let mut rng = seeded_rng(seed);
        let rep = build_representation(sig);
        let mut mismatches = 0;
        for trial in 0..opts.trials {
            let u = random_multivector(sig, &mut rng);
            let report = oracle_compare_with(&u, &rep);
            total_checks += 1;
            let bad = check_element(&u, &report);
            if !bad.is_empty() {
                mismatches += 1;
            }
            for (method, detail) in bad {
                failures.push(Failure {
                    signature: [sig.p(), sig.q()],
                    case: format!("trial {trial}"),
                    input: u.to_string(),
                    method,
                    detail,
                });
            }
        }
        signatures.push(SignatureSummary {
            signature: [sig.p(), sig.q()],
            seed,
            trials: opts.trials,
            methods: methods_for(sig.dim()),
            mismatches,
        });
    }

    let mut summary = CorpusSummary::default();
    for (line, case) in corpus.iter().enumerate() {
        summary.cases += 1;
        total_checks += 1;
        let bad = check_case(case)?;
        if bad.is_empty() {
            summary.passed += 1;
        }
        for (method, detail) in bad {
            failures.push(Failure {
                signature: case.signature,
                case: format!("corpus {}", line + 1),
                input: case.expr.clone(),
                method,
                detail,
            });
        }
    }

    let mismatches = signatures.iter().map(|s| s.mismatches).sum::<usize>()
        + (summary.cases - summary.passed);
    Ok(VerifyReport {
        seed: opts.seed,
        max_n: opts.max_n,
        trials_per_signature: opts.trials,
        signatures,
        corpus: summary,
        total_checks,
        mismatches,
        failures,
        elapsed_micros: start.elapsed().as_micros() as u64,
    })
}

fn check_case(case: &CorpusCase) -> Result<Vec<(String, String)>, CliError> {
    let sig = case.signature()?;
    let u = parse_expression(&case.expr, sig)?;
    let report = oracle_compare_with(&u, &build_representation(sig));
    let mut bad = check_element(&u, &report);
    let expected = case.expected()?;
    if expected.len() != report.recursive.degree() {
        bad.push((
            "corpus".into(),
            format!(
                "expect_C has {} entries, N = {}",
                expected.len(),
                report.recursive.degree()
            ),
        ));
        return Ok(bad);
    }
    for (k, want) in expected.iter().enumerate() {
        if let Some(want) = want {
            let got = report.recursive.get(k + 1);
            if got != want {
                bad.push(("corpus".into(), format!("C({}) = {got}, expected {want}", k + 1)));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{parse_corpus, BUILTIN};

    #[test]
    fn small_run_passes_and_is_reproducible() {
        let opts = VerifyOptions {
            max_n: 3,
            trials: 5,
            seed: 7,
        };
        let corpus = parse_corpus(BUILTIN).unwrap();
        let a = run_verify(&opts, &corpus).unwrap();
        let b = run_verify(&opts, &corpus).unwrap();
        assert!(a.passed(), "{:?}", a.failures);
        assert_eq!(a.signatures.len(), 9);
        assert_eq!(a.corpus.passed, corpus.len());
        let strip = |r: &VerifyReport| {
            let mut v = serde_json::to_value(r).unwrap();
            v.as_object_mut().unwrap().remove("elapsed_micros");
            v
        };
        assert_eq!(strip(&a), strip(&b));
    }

    #[test]
    fn wrong_expectation_is_reported() {
        let corpus =
            parse_corpus(r#"{"signature":[2,0],"expr":"e1","expect_C":["0","2"]}"#).unwrap();
        let opts = VerifyOptions {
            max_n: 1,
            trials: 1,
            seed: 0,
        };
        let r = run_verify(&opts, &corpus).unwrap();
        assert_eq!(r.mismatches, 1);
        assert_eq!(r.failures[0].method, "corpus");
    }

    #[test]
    fn seeds_differ_per_signature() {
        let a = signature_seed(7, Signature::new(1, 0).unwrap());
        let b = signature_seed(7, Signature::new(0, 1).unwrap());
        assert_ne!(a, b);
    }
}
