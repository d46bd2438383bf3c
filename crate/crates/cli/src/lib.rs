//! Command-line front end: parse a power matrix, integrate it over O(N)
//! symbolically, evaluate at a concrete `N`, or check the value against a
//! Monte Carlo estimate.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::Path;

use clap::{Parser, ValueEnum};
use orthomoments::oracle::mc_moment;
use orthomoments::{
    integrate, one_vector_unitary, render_expanded, render_factored, BigRational, ExactField,
    IntegratorConfig, MemoCache, Method, PowerMatrix, RationalFunctionN,
};
use serde_json::{json, Value};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Monte Carlo agreement threshold, in standard errors.
pub const MC_THRESHOLD: f64 = 4.0;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] orthomoments::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Parse a whitespace grid or a JSON array of arrays of integers.
///
/// The format is chosen by the first non-space character (`[` means JSON).
/// In grid form rows are separated by newlines or `;`.
pub fn parse_matrix(text: &str) -> Result<PowerMatrix, CliError> {
    let rows = if text.trim_start().starts_with('[') {
        parse_json(text)?
    } else {
        parse_grid(text)?
    };
    if rows.is_empty() {
        return Err(CliError::Parse {
            line: 1,
            column: 1,
            msg: "empty matrix".into(),
        });
    }
    Ok(PowerMatrix::new(&rows)?)
}

fn parse_json(text: &str) -> Result<Vec<Vec<i64>>, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })
}

fn parse_grid(text: &str) -> Result<Vec<Vec<i64>>, CliError> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let mut offset = 0;
        for segment in line.split(';') {
            let mut row = Vec::new();
            let mut col = offset;
            for tok in segment.split_whitespace() {
                let start = segment[col - offset..].find(tok).unwrap() + col;
                let value = tok.parse::<i64>().map_err(|_| CliError::Parse {
                    line: lineno + 1,
                    column: start + 1,
                    msg: format!("'{tok}' is not an integer"),
                })?;
                row.push(value);
                col = start + tok.len();
            }
            if !row.is_empty() {
                rows.push(row);
            }
            offset += segment.len() + 1;
        }
    }
    Ok(rows)
}

/// Grid form of the support rows; the zero matrix prints as one zero row.
pub fn render_matrix(m: &PowerMatrix) -> String {
    if m.is_zero() {
        return vec!["0"; m.column_count()].join(" ");
    }
    m.rows()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Recursion,
    TwoVector,
    Ullah,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Recursion => Method::RecursionOnly,
            MethodArg::TwoVector => Method::TwoVectorClosed,
            MethodArg::Ullah => Method::Ullah,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Factored,
    Expanded,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "orthomoments",
    version,
    about = "Exact integrals of monomials over O(N)"
)]
pub struct Cli {
    /// Power matrix: a file path, `-` for stdin, or inline text
    /// (e.g. "1 1; 1 1" or "[[1,1],[1,1]]").
    #[arg(long)]
    pub matrix: String,

    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,

    /// Evaluate at this N.
    #[arg(long, value_name = "N")]
    pub eval: Option<u32>,

    /// Monte Carlo samples; with --eval this runs the verification mode.
    #[arg(long, value_name = "K")]
    pub mc_samples: Option<usize>,

    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t = OutputFormat::Factored)]
    pub format: OutputFormat,

    /// Treat a two-column matrix as (m : n), the real and imaginary exponents
    /// of one column of a unitary matrix.
    #[arg(long)]
    pub unitary: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Eval,
    Verify,
}

#[derive(Clone, Debug)]
pub struct Request {
    pub matrix: PowerMatrix,
    pub mode: Mode,
    pub method: Method,
    pub eval_n: Option<u32>,
    pub mc_samples: Option<usize>,
    pub seed: u64,
    pub format: OutputFormat,
    pub unitary: bool,
}

fn load_matrix_text(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return Ok(std::fs::read_to_string(path)?);
    }
    Ok(arg.to_string())
}

impl Cli {
    pub fn into_request(self) -> Result<Request, CliError> {
        let matrix = parse_matrix(&load_matrix_text(&self.matrix)?)?;
        let mode = match (self.eval, self.mc_samples) {
            (None, None) => Mode::Symbolic,
            (Some(_), None) => Mode::Eval,
            (Some(_), Some(_)) => Mode::Verify,
            (None, Some(_)) => {
                return Err(CliError::Usage("--mc-samples requires --eval <N>".into()))
            }
        };
        if self.eval == Some(0) {
            return Err(CliError::Usage("--eval must be a positive integer".into()));
        }
        if self.mc_samples.is_some_and(|k| k < 2) {
            return Err(CliError::Usage("--mc-samples must be at least 2".into()));
        }
        if self.unitary {
            if matrix.column_count() != 2 {
                return Err(CliError::Usage(format!(
                    "--unitary needs exactly two columns (m : n), got {}",
                    matrix.column_count()
                )));
            }
            if mode == Mode::Verify {
                return Err(CliError::Usage(
                    "no Monte Carlo sampler for U(N); drop --mc-samples".into(),
                ));
            }
        }
        Ok(Request {
            matrix,
            mode,
            method: self.method.into(),
            eval_n: self.eval,
            mc_samples: self.mc_samples,
            seed: self.seed,
            format: self.format,
            unitary: self.unitary,
        })
    }
}

fn ratio_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// JSON description of a value, with coefficients as exact `"p/q"` strings.
pub fn to_json(value: &RationalFunctionN, valid_from: usize) -> Value {
    let coeffs = |p: &orthomoments::PolynomialN| -> Vec<String> {
        p.coeffs().iter().map(ratio_string).collect()
    };
    json!({
        "numerator": coeffs(value.numer()),
        "denominator": coeffs(value.denom()),
        "validFromN": valid_from,
        "factored": render_factored(value),
    })
}

fn render(value: &RationalFunctionN, format: OutputFormat) -> String {
    match format {
        OutputFormat::Expanded => render_expanded(value),
        _ => render_factored(value),
    }
}

/// Execute a request, writing the report to `out`. Returns the exit code.
pub fn run(req: &Request, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let (value, valid_from) = if req.unitary {
        let m = req.matrix.column_vector(0);
        let n = req.matrix.column_vector(1);
        (one_vector_unitary(&m, &n)?, req.matrix.support().max(1))
    } else {
        let cfg = IntegratorConfig::with_method(req.method);
        (
            integrate(&req.matrix, &cfg, &MemoCache::new())?,
            req.matrix.validity_bound(),
        )
    };

    if let Some(n) = req.eval_n {
        if (n as usize) < valid_from {
            if req.mode == Mode::Verify {
                return Err(orthomoments::Error::DimensionTooSmall {
                    n: n as usize,
                    required: valid_from,
                }
                .into());
            }
            writeln!(
                err,
                "warning: N = {n} is below the validity bound {valid_from}"
            )?;
        }
    }

    let mut json = to_json(&value, valid_from);
    let mut text = String::new();
    let mut code = EXIT_OK;
    match req.mode {
        Mode::Symbolic => {
            writeln!(text, "{}", render(&value, req.format)).unwrap();
            writeln!(text, "valid for N >= {valid_from}").unwrap();
        }
        Mode::Eval => {
            let n = req.eval_n.expect("eval mode carries N");
            let exact = value.evaluate_at(n as i64)?;
            writeln!(text, "{exact}").unwrap();
            json["N"] = json!(n);
            json["value"] = json!(ratio_string(&exact));
        }
        Mode::Verify => {
            let n = req.eval_n.expect("verify mode carries N");
            let samples = req.mc_samples.expect("verify mode carries a sample count");
            let exact = value.evaluate_at(n as i64)?;
            let exact_f = exact.to_f64_lossy();
            let est = mc_moment::<f64>(&req.matrix, n as usize, samples, req.seed)?;
            let pass = est.is_consistent_with(exact_f, MC_THRESHOLD);
            let z = est.z_score(exact_f);
            writeln!(text, "symbolic: {}", render(&value, req.format)).unwrap();
            writeln!(text, "valid for N >= {valid_from}").unwrap();
            writeln!(text, "exact at N={n}: {exact} ({exact_f:.8})").unwrap();
            writeln!(
                text,
                "monte carlo: {:.8} +- {:.2e} ({samples} samples, seed {})",
                est.mean, est.standard_error, req.seed
            )
            .unwrap();
            writeln!(
                text,
                "deviation: {z:.2} standard errors (threshold {MC_THRESHOLD})"
            )
            .unwrap();
            writeln!(text, "{}", if pass { "PASS" } else { "FAIL" }).unwrap();
            json["N"] = json!(n);
            json["value"] = json!(ratio_string(&exact));
            json["monteCarlo"] = json!({
                "mean": est.mean,
                "standardError": est.standard_error,
                "samples": samples,
                "seed": req.seed,
                "pass": pass,
            });
            if !pass {
                code = EXIT_FAIL;
            }
        }
    }
    if req.format == OutputFormat::Json {
        writeln!(out, "{}", serde_json::to_string_pretty(&json).unwrap())?;
    } else {
        out.write_all(text.as_bytes())?;
    }
    Ok(code)
}

/// Full command-line entry point over explicit argument and output streams.
pub fn main_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let outcome = cli.into_request().and_then(|req| run(&req, out, err));
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
