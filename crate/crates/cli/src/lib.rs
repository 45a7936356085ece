//! The `cliffchar` command-line tool.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 unsupported method or
//! dimension, 3 cross-check mismatch, 4 singular element.

pub mod bench;
pub mod corpus;
pub mod document;
pub mod expr;
pub mod verify;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use cliffchar::{charpoly, inverse, CharPoly, Method, Multivector, Signature};

use document::{format_list, format_multivector, format_number, ResultDocument};
use expr::{parse_expression, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    /// A mismatch whose report still goes to standard output.
    #[error("mismatch: {message}")]
    Report { output: String, message: String },
    #[error("singular element: the determinant is zero")]
    Singular,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 1,
            CliError::Unsupported(_) => 2,
            CliError::Mismatch(_) | CliError::Report { .. } => 3,
            CliError::Singular => 4,
        }
    }
}

impl From<cliffchar::Error> for CliError {
    fn from(e: cliffchar::Error) -> Self {
        use cliffchar::Error as E;
        match e {
            E::InvalidSignature { .. } | E::UnsupportedDimension { .. } => {
                CliError::Unsupported(e.to_string())
            }
            E::SingularElement => CliError::Singular,
            E::NonScalarCoefficient { .. } | E::ComplexCoefficient { .. } => {
                CliError::Mismatch(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cliffchar",
    version,
    about = "Characteristic polynomial coefficients, determinants and inverses in Cl(p,q)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print C(1)..C(N).
    Charpoly(ComputeArgs),
    /// Print Det(U) = -C(N).
    Det(ComputeArgs),
    /// Print U^-1 = Adj(U) / Det(U).
    Inverse(ComputeArgs),
    /// Cross-check all methods on random elements and known cases.
    Verify(VerifyArgs),
    /// Time the methods against each other, as CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Signature as "p,q".
    #[arg(long, short, value_parser = parse_pair)]
    pub signature: (usize, usize),
    /// recursive, closed, explicit, interp, oracle or all.
    #[arg(long, short, default_value = "recursive")]
    pub method: String,
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    #[arg(long)]
    pub text: bool,
    /// Read the expression from standard input.
    #[arg(long, conflicts_with = "expression")]
    pub stdin: bool,
    /// Show numbers as floating point (text output only).
    #[arg(long)]
    pub float: bool,
    #[arg(allow_hyphen_values = true)]
    pub expression: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, env = "CLIFFCHAR_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Extra JSON-lines corpus, checked after the built-in cases.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, short, value_parser = parse_pair, default_value = "4,1")]
    pub signature: (usize, usize),
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, value_delimiter = ',', default_value = "recursive,closed")]
    pub methods: Vec<String>,
    #[arg(long, env = "CLIFFCHAR_SEED", default_value_t = 0)]
    pub seed: u64,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"p,q\", got {s:?}"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("{t:?}: {e}"))
    };
    Ok((num(p)?, num(q)?))
}

fn signature(pair: (usize, usize)) -> Result<Signature, CliError> {
    Ok(Signature::new(pair.0, pair.1)?)
}

fn parse_method(name: &str) -> Result<Method, CliError> {
    name.parse()
        .map_err(|_| CliError::Unsupported(format!("unknown method {name:?}")))
}

/// Standard output of one invocation.
pub type Output = String;

/// Parse arguments and run; returns the exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    match run(cli) {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            0
        }
        Err(e) => {
            if let CliError::Report { output, .. } = &e {
                let _ = stdout.write_all(output.as_bytes());
            }
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Charpoly(a) => cmd_charpoly(&a),
        Command::Det(a) => cmd_det(&a),
        Command::Inverse(a) => cmd_inverse(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Bench(a) => cmd_bench(&a),
    }
}

fn read_input(args: &ComputeArgs) -> Result<String, CliError> {
    if args.stdin {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        Ok(s.trim().to_string())
    } else {
        args.expression
            .clone()
            .ok_or_else(|| CliError::Usage("missing expression (or pass --stdin)".into()))
    }
}

/// Coefficients by the requested method; `all` runs every applicable method
/// and fails on any disagreement.
fn coefficients(u: &Multivector, method: &str) -> Result<CharPoly, CliError> {
    let dim = u.signature().dim();
    if method != "all" {
        let m = parse_method(method)?;
        if !m.supports(dim) {
            return Err(CliError::Unsupported(format!(
                "method {m} does not support n = {dim}"
            )));
        }
        return Ok(m.compute(u)?);
    }
    let reference = charpoly(u);
    let mut problems = Vec::new();
    for m in Method::ALL.into_iter().filter(|m| m.supports(dim)) {
        match m.compute(u) {
            Ok(c) if c == reference => {}
            Ok(c) => problems.push(format!("{m} gave {c}, recursive gave {reference}")),
            Err(e) => problems.push(format!("{m} failed: {e}")),
        }
    }
    if problems.is_empty() {
        Ok(reference)
    } else {
        Err(CliError::Mismatch(problems.join("; ")))
    }
}

struct Computed {
    sig: Signature,
    input: String,
    u: Multivector,
    poly: CharPoly,
    micros: u64,
}

fn compute(args: &ComputeArgs) -> Result<Computed, CliError> {
    let sig = signature(args.signature)?;
    let input = read_input(args)?;
    let u = parse_expression(&input, sig)?;
    let start = Instant::now();
    let poly = coefficients(&u, &args.method)?;
    Ok(Computed {
        sig,
        input,
        u,
        poly,
        micros: start.elapsed().as_micros() as u64,
    })
}

fn document(c: &Computed, method: &str) -> ResultDocument {
    let mut doc = ResultDocument::new(c.sig, &c.input, &c.poly, method);
    doc.micros = c.micros;
    doc
}

fn json_line(doc: &ResultDocument) -> String {
    let mut s = serde_json::to_string(doc).expect("document serializes");
    s.push('\n');
    s
}

pub fn cmd_charpoly(args: &ComputeArgs) -> Result<Output, CliError> {
    let c = compute(args)?;
    if args.json {
        return Ok(json_line(&document(&c, &args.method)));
    }
    Ok(format!("C = {}\n", format_list(c.poly.coeffs(), args.float)))
}

pub fn cmd_det(args: &ComputeArgs) -> Result<Output, CliError> {
    let c = compute(args)?;
    if args.json {
        return Ok(json_line(&document(&c, &args.method)));
    }
    Ok(format!("{}\n", format_number(&c.poly.det(), args.float)))
}

pub fn cmd_inverse(args: &ComputeArgs) -> Result<Output, CliError> {
    let mut c = compute(args)?;
    if c.poly.det().is_zero() {
        return Err(CliError::Singular);
    }
    let start = Instant::now();
    let inv = inverse(&c.u)?;
    c.micros += start.elapsed().as_micros() as u64;
    let e = Multivector::identity(c.sig);
    if &c.u * &inv != e || &inv * &c.u != e {
        return Err(CliError::Mismatch("U * U^-1 is not the identity".into()));
    }
    if args.json {
        return Ok(json_line(&document(&c, &args.method).with_inverse(&inv)));
    }
    Ok(format!("{}\n", format_multivector(&inv, args.float)))
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Output, CliError> {
    let mut cases = corpus::parse_corpus(corpus::BUILTIN)?;
    if let Some(path) = &args.corpus {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        cases.extend(corpus::parse_corpus(&text)?);
    }
    let opts = verify::VerifyOptions {
        max_n: args.max_n,
        trials: args.trials,
        seed: args.seed,
    };
    let report = verify::run_verify(&opts, &cases)?;
    let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
    json.push('\n');
    let out = match &args.output {
        Some(path) => {
            std::fs::write(path, &json)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            String::new()
        }
        None => json,
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(CliError::Report {
            output: out,
            message: format!("{} of {} checks failed", report.mismatches, report.total_checks),
        })
    }
}

pub fn cmd_bench(args: &BenchArgs) -> Result<Output, CliError> {
    let sig = signature(args.signature)?;
    let methods = args
        .methods
        .iter()
        .map(|m| parse_method(m.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    bench::run_bench(sig, args.trials, &methods, args.seed)
}
