use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use binconv_core::convolve::{self, Method, ProductKind};
use binconv_core::ratfun::reconstruct_rational;
use binconv_core::seqlib::{self, SuiteOptions};
use binconv_core::{LinearRecurrence, Poly, RatFun, Rational, Series};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::eval::eval;
use crate::expr::{parse, ParseError};

/// Exact binomial and Hadamard products of rational power series.
#[derive(Debug, Parser)]
#[command(name = "binconv", version)]
pub struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simplify an expression to a reduced fraction.
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Resultant)]
        method: MethodArg,
    },
    /// Print the first N series coefficients, one per line.
    Coeffs {
        expr: String,
        #[arg(short = 'n', default_value_t = 10)]
        n: usize,
    },
    /// Binomial product A obprod B.
    Bprod(ProductArgs),
    /// Hadamard product A hprod B.
    Hprod(ProductArgs),
    /// Candidate denominator of a product, before cancellation.
    Denominator {
        a: String,
        b: String,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Recover a rational function from its leading coefficients.
    Reconstruct {
        /// File with one coefficient per line (`p/q` or an integer).
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        den_deg: usize,
        #[arg(long)]
        num_deg: usize,
    },
    /// Run the identity catalog.
    Verify {
        /// Identity ids or group names (binomial, hadamard), comma separated.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Linear recurrence satisfied by the coefficients.
    Recurrence { expr: String },
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    pub a: String,
    pub b: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Resultant)]
    pub method: MethodArg,
    /// Run all four methods in parallel and require identical results.
    #[arg(long)]
    pub cross_check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Resultant,
    Symfun,
    Pfrac,
    Reconstruct,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Resultant => Method::Resultant,
            MethodArg::Symfun => Method::Symfun,
            MethodArg::Pfrac => Method::Pfrac,
            MethodArg::Reconstruct => Method::Reconstruct,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Binomial,
    Hadamard,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Compute(#[from] binconv_core::Error),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Compute(_) | CliError::Input(_) => 1,
            CliError::Verification(_) => 3,
        }
    }
}

/// What a command produced: text for stdout, plus a failure that still
/// wants its report printed.
pub struct Outcome {
    pub stdout: String,
    pub failure: Option<CliError>,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, failure: None }
    }
}

fn rational_strings(c: &[Rational]) -> Vec<String> {
    c.iter().map(|r| r.to_string()).collect()
}

pub fn ratfun_json(f: &RatFun) -> Value {
    json!({ "num": rational_strings(f.num().coeffs()), "den": rational_strings(f.den().coeffs()) })
}

fn poly_json(p: &Poly) -> Value {
    json!({ "coeffs": rational_strings(p.coeffs()) })
}

fn recurrence_json(r: &LinearRecurrence) -> Value {
    json!({ "coeffs": rational_strings(&r.coeffs), "start": r.start, "initial": rational_strings(&r.initial) })
}

fn render_ratfun(f: &RatFun, json: bool) -> String {
    if json {
        format!("{}\n", ratfun_json(f))
    } else {
        format!("{f}\n")
    }
}

fn eval_str(src: &str, method: Method) -> Result<RatFun, CliError> {
    Ok(eval(&parse(src)?, method)?)
}

fn product(kind: ProductKind, args: &ProductArgs, json: bool) -> Result<Outcome, CliError> {
    let a = eval_str(&args.a, Method::Resultant)?;
    let b = eval_str(&args.b, Method::Resultant)?;
    if !args.cross_check {
        let p = convolve::product(kind, &a, &b, args.method.into())?;
        return Ok(Outcome::ok(render_ratfun(&p, json)));
    }
    let results: Vec<(Method, binconv_core::Result<RatFun>)> = std::thread::scope(|s| {
        let handles: Vec<_> = Method::ALL
            .iter()
            .map(|&m| {
                let (a, b) = (&a, &b);
                (m, s.spawn(move || convolve::product(kind, a, b, m)))
            })
            .collect();
        handles.into_iter().map(|(m, h)| (m, h.join().expect("product thread panicked"))).collect()
    });
    let mut values = Vec::with_capacity(results.len());
    for (m, r) in results {
        values.push((m, r.map_err(CliError::Compute)?));
    }
    let reference = &values[0].1;
    if values.iter().all(|(_, v)| v == reference) {
        return Ok(Outcome::ok(render_ratfun(reference, json)));
    }
    let mut out = String::new();
    if json {
        let all: serde_json::Map<String, Value> =
            values.iter().map(|(m, v)| (m.name().to_string(), ratfun_json(v))).collect();
        writeln!(out, "{}", Value::Object(all)).unwrap();
    } else {
        for (m, v) in &values {
            writeln!(out, "{}: {v}", m.name()).unwrap();
        }
    }
    Ok(Outcome { stdout: out, failure: Some(CliError::Verification("methods disagree".into())) })
}

fn read_coefficients(path: &PathBuf) -> Result<Series, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let mut coeffs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let c = Rational::from_str(line)
            .map_err(|e| CliError::Input(format!("{}:{}: bad coefficient `{line}`: {e}", path.display(), i + 1)))?;
        coeffs.push(c);
    }
    Ok(Series::new(coeffs))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let json = cli.json;
    let text = match &cli.command {
        Command::Eval { expr, method } => render_ratfun(&eval_str(expr, (*method).into())?, json),
        Command::Coeffs { expr, n } => {
            let s = eval_str(expr, Method::Resultant)?.expand(*n);
            if json {
                format!("{}\n", json!(rational_strings(s.coeffs())))
            } else {
                s.coeffs().iter().map(|c| format!("{c}\n")).collect()
            }
        }
        Command::Bprod(args) => return product(ProductKind::Binomial, args, json),
        Command::Hprod(args) => return product(ProductKind::Hadamard, args, json),
        Command::Denominator { a, b, kind } => {
            let (a, b) = (eval_str(a, Method::Resultant)?, eval_str(b, Method::Resultant)?);
            let d = match kind {
                KindArg::Binomial => convolve::binomial_denominator(a.den(), b.den())?,
                KindArg::Hadamard => convolve::hadamard_denominator(a.den(), b.den())?,
            };
            if json {
                format!("{}\n", poly_json(&d))
            } else {
                format!("{d}\n")
            }
        }
        Command::Reconstruct { coeffs, den_deg, num_deg } => {
            let s = read_coefficients(coeffs)?;
            render_ratfun(&reconstruct_rational(&s, *den_deg, *num_deg)?, json)
        }
        Command::Verify { only } => {
            let opts = SuiteOptions::only(only);
            let report = seqlib::run_identity_suite(&opts)?;
            let text = if json {
                let records: Vec<Value> = report
                    .records
                    .iter()
                    .map(|r| {
                        json!({
                            "id": r.id,
                            "title": r.title,
                            "group": r.group.name(),
                            "params": r.params,
                            "checks": r.checks,
                            "status": r.status.name(),
                            "witness": r.witness,
                        })
                    })
                    .collect();
                format!("{}\n", json!({ "passed": report.passed(), "records": records }))
            } else {
                format!("{report}\n")
            };
            let failure = (!report.passed()).then(|| CliError::Verification("identity check failed".into()));
            return Ok(Outcome { stdout: text, failure });
        }
        Command::Recurrence { expr } => {
            let r = eval_str(expr, Method::Resultant)?.recurrence();
            if json {
                format!("{}\n", recurrence_json(&r))
            } else {
                format!("{r}\n")
            }
        }
    };
    Ok(Outcome::ok(text))
}
