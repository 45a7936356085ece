//! `bench`: wall time per method and trial, as CSV.

use std::fmt::Write as _;
use std::time::Instant;

use cliffchar::random::{random_multivector, seeded_rng};
use cliffchar::{charpoly, Method, Signature};

use crate::CliError;

pub const HEADER: &str = "method,trial,micros";

/// CSV with one row per method and trial, then `median` and `p95` rows per
/// method. Every result is checked against the recursion.
pub fn run_bench(
    sig: Signature,
    trials: usize,
    methods: &[Method],
    seed: u64,
) -> Result<String, CliError> {
    for m in methods {
        if !m.supports(sig.dim()) {
            return Err(CliError::Unsupported(format!(
                "method {m} does not support n = {}",
                sig.dim()
            )));
        }
    }
    let mut rng = seeded_rng(seed);
    let inputs: Vec<_> = (0..trials).map(|_| random_multivector(sig, &mut rng)).collect();
    let mut csv = String::from(HEADER);
    csv.push('\n');
    if trials == 0 {
        return Ok(csv);
    }
    for &m in methods {
        let mut times = Vec::with_capacity(trials);
        for (trial, u) in inputs.iter().enumerate() {
            let start = Instant::now();
            let c = m.compute(u)?;
            let micros = start.elapsed().as_micros() as u64;
            if c != charpoly(u) {
                return Err(CliError::Mismatch(format!("{m} disagrees on trial {trial}: {u}")));
            }
            times.push(micros);
            writeln!(csv, "{m},{trial},{micros}").expect("write to string");
        }
        times.sort_unstable();
        writeln!(csv, "{m},median,{}", percentile(&times, 50)).expect("write to string");
        writeln!(csv, "{m},p95,{}", percentile(&times, 95)).expect("write to string");
    }
    Ok(csv)
}

/// Nearest-rank percentile of sorted values.
fn percentile(sorted: &[u64], pct: usize) -> u64 {
    let rank = (pct * sorted.len()).div_ceil(100).max(1);
    sorted[rank - 1]
}
