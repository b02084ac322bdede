//! Command-line front end.
//!
//! Matrices are read as JSON `{"rows":n,"cols":m,"data":[[...]]}` or as
//! whitespace-separated text rows; vectors are inline comma-separated
//! lists. Output is canonical JSON (sorted keys, integral values without a
//! fractional part, other values in shortest round-trip form) or, for region
//! data, CSV. Exit codes: 0 holds/success, 1 fails/absent, 2 error.

use std::io::Read;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::extreme::{self, BlockSpec};
use crate::majorization;
use crate::oracles::{self, OracleBudget};
use crate::semiring::{MaxMatrix, MaxVector, Scalar, Tolerance};
use crate::spectral;
use crate::stochastic::{self, Axis};

pub const TOLERANCE_ENV: &str = "MAXALG_TOLERANCE";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Row,
    Column,
    Doubly,
    Unital,
    Trace,
}

#[derive(Debug, Parser)]
#[command(name = "maxalg", version, about = "Max-times linear algebra toolkit")]
struct Cli {
    /// Comparison tolerance (overrides MAXALG_TOLERANCE; default 1e-9).
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    /// Output format; csv is only available for `majorize region`.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: OutputFormat,

    /// Seed for randomized helpers.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// How matrix inputs are parsed.
    #[arg(long, global = true, value_enum, default_value = "auto")]
    input_format: InputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test a stochasticity predicate.
    Check {
        #[arg(long, value_enum)]
        kind: CheckKind,
        /// Matrix file, or `-` for stdin.
        matrix: String,
    },
    /// Spectral radius, norm, local radii and irreducibility.
    Spectral {
        matrix: String,
        /// Also report the local spectral radius at this vector.
        #[arg(long)]
        x: Option<String>,
    },
    /// Max-majorization.
    Majorize {
        #[command(subcommand)]
        action: MajorizeCommand,
    },
    /// Max-extreme points of the MDS matrices.
    Extreme {
        #[command(subcommand)]
        action: ExtremeCommand,
    },
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        action: OracleCommand,
    },
    /// Emit a random MDS matrix (uses --seed).
    Generate {
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
}

#[derive(Debug, Subcommand)]
enum MajorizeCommand {
    Check {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    Witness {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    Region {
        #[arg(long)]
        y: String,
        #[arg(long)]
        step: Option<f64>,
        #[arg(long)]
        lo: Option<f64>,
        #[arg(long)]
        hi: Option<f64>,
    },
}

#[derive(Debug, Subcommand)]
enum ExtremeCommand {
    Check { matrix: String },
    Enumerate { n: usize },
    Decompose { matrix: String },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    Cycle {
        matrix: String,
    },
    Extreme {
        n: usize,
    },
    Majorize {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
}

/// Result of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn emit(holds: bool, stdout: String) -> Self {
        Outcome {
            code: if holds { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn error(message: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Parses `args` (including the program name) and runs the command, reading
/// the tolerance default from the environment.
pub fn run(args: &[String]) -> Outcome {
    run_with_env(args, std::env::var(TOLERANCE_ENV).ok())
}

pub fn run_with_env(args: &[String], env_tolerance: Option<String>) -> Outcome {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome::error(text),
            };
        }
    };
    let tol = match resolve_tolerance(cli.tolerance, env_tolerance.as_deref()) {
        Ok(t) => t,
        Err(e) => return Outcome::error(e.to_string()),
    };
    match dispatch(&cli, tol) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(format!("error: {e}")),
    }
}

fn resolve_tolerance(flag: Option<f64>, env: Option<&str>) -> Result<Tolerance> {
    if let Some(eps) = flag {
        return Tolerance::new(eps);
    }
    match env {
        Some(raw) => {
            let eps: f64 = raw.trim().parse().map_err(|_| {
                Error::validation(format!("{TOLERANCE_ENV} is not a number: {raw:?}"))
            })?;
            Tolerance::new(eps)
        }
        None => Ok(Tolerance::default()),
    }
}

fn dispatch(cli: &Cli, tol: Tolerance) -> Result<Outcome> {
    let region = matches!(
        cli.command,
        Command::Majorize {
            action: MajorizeCommand::Region { .. }
        }
    );
    if cli.format == OutputFormat::Csv && !region {
        return Err(Error::validation(
            "--format csv is only supported by `majorize region`",
        ));
    }
    let load = |src: &str| load_matrix(src, cli.input_format);
    match &cli.command {
        Command::Check { kind, matrix } => {
            let verdict = check_verdict(&load(matrix)?, *kind, tol)?;
            Ok(Outcome::emit(verdict.holds, verdict.to_json()))
        }
        Command::Spectral { matrix, x } => {
            let a = load(matrix)?;
            let report = spectral::analyze(&a)?;
            let mut doc = Map::new();
            doc.insert("radius".into(), num(report.radius.get()));
            doc.insert("norm".into(), num(report.norm.get()));
            doc.insert(
                "local_radii".into(),
                Value::Array(report.local_radii.iter().map(|r| num(r.get())).collect()),
            );
            doc.insert("irreducible".into(), Value::Bool(report.irreducible));
            if let Some(x) = x {
                let r = spectral::local_spectral_radius(&a, &load_vector(x)?)?;
                doc.insert("local_radius".into(), num(r.get()));
            }
            Ok(Outcome::emit(true, to_canonical(&Value::Object(doc))))
        }
        Command::Majorize { action } => majorize(action, cli.format, tol),
        Command::Extreme { action } => match action {
            ExtremeCommand::Check { matrix } => {
                let verdict = extreme_verdict(&load(matrix)?, tol)?;
                Ok(Outcome::emit(verdict.holds, verdict.to_json()))
            }
            ExtremeCommand::Enumerate { n } => {
                let all = extreme::enumerate_extreme(*n)?;
                Ok(Outcome::emit(true, to_canonical(&matrix_list(&all))))
            }
            ExtremeCommand::Decompose { matrix } => {
                let e = load(matrix)?;
                if !extreme::is_max_extreme(&e, tol)? {
                    let verdict = extreme_verdict(&e, tol)?;
                    return Ok(Outcome::emit(false, verdict.to_json()));
                }
                let d = extreme::decompose_extreme(&e, tol)?;
                Ok(Outcome::emit(true, to_canonical(&decomposition_json(&d))))
            }
        },
        Command::Oracle { action } => match action {
            OracleCommand::Cycle { matrix } => {
                let r = oracles::brute_cycle_radius(&load(matrix)?, OracleBudget::CYCLES)?;
                Ok(Outcome::emit(
                    true,
                    to_canonical(&json!({ "radius": num(r.get()) })),
                ))
            }
            OracleCommand::Extreme { n } => {
                let all = oracles::brute_extreme_points(*n, OracleBudget::PATTERNS)?;
                Ok(Outcome::emit(true, to_canonical(&matrix_list(&all))))
            }
            OracleCommand::Majorize { x, y } => {
                let found = oracles::brute_majorization_witness(
                    &load_vector(x)?,
                    &load_vector(y)?,
                    OracleBudget::MAJORIZATION,
                )?;
                let doc = json!({
                    "found": found.is_some(),
                    "matrix": found.as_ref().map_or(Value::Null, matrix_json),
                });
                Ok(Outcome::emit(found.is_some(), to_canonical(&doc)))
            }
        },
        Command::Generate { n, density } => {
            let d = stochastic::random_mds(*n, cli.seed.unwrap_or(0), *density)?;
            Ok(Outcome::emit(true, to_canonical(&matrix_json(&d))))
        }
    }
}

fn majorize(action: &MajorizeCommand, format: OutputFormat, tol: Tolerance) -> Result<Outcome> {
    match action {
        MajorizeCommand::Check { x, y } => {
            let (x, y) = (load_vector(x)?, load_vector(y)?);
            let holds = majorization::majorizes_check(&x, &y, tol)?;
            let verdict = Verdict {
                predicate: "majorized".into(),
                holds,
                details: json!({
                    "max_x": num(x.max()), "max_y": num(y.max()),
                    "min_x": num(x.min()), "min_y": num(y.min()),
                }),
            };
            Ok(Outcome::emit(holds, verdict.to_json()))
        }
        MajorizeCommand::Witness { x, y } => {
            let (x, y) = (load_vector(x)?, load_vector(y)?);
            match majorization::witness(&x, &y, tol) {
                Ok(w) => {
                    let (k, l, m) = w.pivot_indices;
                    let doc = json!({
                        "matrix": matrix_json(&w.matrix),
                        "pivots": { "k": k + 1, "l": l + 1, "m": m + 1 },
                        "product": vector_json(&w.matrix.otimes_vec(&y)?),
                    });
                    Ok(Outcome::emit(true, to_canonical(&doc)))
                }
                Err(Error::NotMajorized) => {
                    let verdict = Verdict {
                        predicate: "majorized".into(),
                        holds: false,
                        details: json!({ "reason": "x is not max-majorized by y" }),
                    };
                    Ok(Outcome::emit(false, verdict.to_json()))
                }
                Err(e) => Err(e),
            }
        }
        MajorizeCommand::Region { y, step, lo, hi } => {
            let y = load_vector(y)?;
            let y_max = y.max();
            let step = step.unwrap_or(if y_max > 0.0 { y_max / 20.0 } else { 1.0 });
            let bounds = vec![(lo.unwrap_or(0.0), hi.unwrap_or(1.5 * y_max)); y.dim()];
            let sample = majorization::region_sample(&y, step, &bounds, tol)?;
            let text = match format {
                OutputFormat::Csv => region_csv(&sample),
                OutputFormat::Json => to_canonical(&json!({
                    "bounds": sample.bounds.iter().map(|&(a, b)| json!([num(a), num(b)])).collect::<Vec<_>>(),
                    "step": num(sample.step.get()),
                    "points": sample.grid_points.iter().map(vector_json).collect::<Vec<_>>(),
                    "inside": sample.labels,
                })),
            };
            Ok(Outcome::emit(true, text))
        }
    }
}

/// A predicate result with diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub predicate: String,
    pub holds: bool,
    pub details: Value,
}

impl Verdict {
    pub fn to_json(&self) -> String {
        to_canonical(&json!({
            "predicate": self.predicate,
            "holds": self.holds,
            "details": self.details,
        }))
    }
}

pub fn check_verdict(a: &MaxMatrix, kind: CheckKind, tol: Tolerance) -> Result<Verdict> {
    let class = stochastic::classify(a, tol)?;
    let (name, axes): (&str, &[Axis]) = match kind {
        CheckKind::Row => ("row", &[Axis::Row]),
        CheckKind::Column => ("column", &[Axis::Column]),
        CheckKind::Doubly => ("doubly", &[Axis::Row, Axis::Column]),
        CheckKind::Unital => ("unital", &[Axis::Row]),
        CheckKind::Trace => ("trace", &[Axis::Column]),
    };
    let holds = match kind {
        CheckKind::Row => class.row,
        CheckKind::Column => class.column,
        CheckKind::Doubly => class.doubly,
        CheckKind::Unital => stochastic::is_unital_preserving(a, tol)?,
        CheckKind::Trace => stochastic::is_trace_preserving(a, tol)?,
    };
    let violations: Vec<Value> = class
        .violations
        .iter()
        .filter(|v| axes.contains(&v.axis))
        .map(|v| {
            json!({
                "axis": v.axis.name(),
                "index": v.index + 1,
                "max_value": num(v.max_value.get()),
            })
        })
        .collect();
    Ok(Verdict {
        predicate: name.into(),
        holds,
        details: json!({ "n": a.rows(), "violations": violations }),
    })
}

fn extreme_verdict(e: &MaxMatrix, tol: Tolerance) -> Result<Verdict> {
    let holds = extreme::is_max_extreme(e, tol)?;
    let mds = stochastic::is_mds(e, tol)?;
    let mut details = Map::new();
    details.insert("mds".into(), Value::Bool(mds));
    match extreme::singleton_profile(e, tol) {
        Ok(profile) => {
            details.insert("zero_one".into(), Value::Bool(true));
            let non: Vec<Value> = profile
                .iter()
                .filter(|(_, c)| **c == extreme::EntryClass::NonSingleton)
                .map(|((i, j), _)| json!([i + 1, j + 1]))
                .collect();
            details.insert("non_singletons".into(), Value::Array(non));
        }
        Err(Error::NotZeroOne { row, col, value }) => {
            details.insert("zero_one".into(), Value::Bool(false));
            details.insert(
                "fractional_entry".into(),
                json!({ "row": row + 1, "col": col + 1, "value": num(value) }),
            );
        }
        Err(err) => return Err(err),
    }
    if mds {
        if let Some(w) = extreme::non_extremality_witness(e, tol)? {
            details.insert(
                "witness".into(),
                json!({
                    "d1": matrix_json(&w.d1),
                    "d2": matrix_json(&w.d2),
                    "alpha1": num(w.alpha1.get()),
                    "alpha2": num(w.alpha2.get()),
                }),
            );
        }
    }
    Ok(Verdict {
        predicate: "max_extreme".into(),
        holds,
        details: Value::Object(details),
    })
}

fn decomposition_json(d: &extreme::ExtremeDecomposition) -> Value {
    let perm = |p: &crate::semiring::Permutation| {
        Value::Array(p.mapping().iter().map(|&m| json!(m + 1)).collect())
    };
    let blocks: Vec<Value> = d
        .blocks
        .iter()
        .map(|b| match *b {
            BlockSpec::Column(m) => json!({ "kind": "column", "size": m }),
            BlockSpec::Row(n) => json!({ "kind": "row", "size": n }),
            BlockSpec::Hook { rows, cols } => json!({ "kind": "hook", "rows": rows, "cols": cols }),
        })
        .collect();
    json!({ "p_left": perm(&d.p_left), "p_right": perm(&d.p_right), "blocks": blocks })
}

/// A number in canonical form: integral values as integers, others as the
/// shortest decimal that round-trips.
pub fn num(v: f64) -> Value {
    if v.fract() == 0.0 && v.abs() < 9.0e15 {
        if v >= 0.0 {
            Value::from(v as u64)
        } else {
            Value::from(v as i64)
        }
    } else {
        serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
    }
}

fn format_num(v: f64) -> String {
    num(v).to_string()
}

pub fn to_canonical(v: &Value) -> String {
    // serde_json's default map is ordered by key.
    serde_json::to_string(v).expect("serializing a Value cannot fail")
}

pub fn vector_json(x: &MaxVector) -> Value {
    Value::Array(x.as_slice().iter().map(|&v| num(v)).collect())
}

pub fn matrix_json(a: &MaxMatrix) -> Value {
    let data: Vec<Value> = (0..a.rows())
        .map(|i| Value::Array(a.row(i).iter().map(|&v| num(v)).collect()))
        .collect();
    json!({ "rows": a.rows(), "cols": a.cols(), "data": data })
}

fn matrix_list(all: &[MaxMatrix]) -> Value {
    Value::Array(all.iter().map(matrix_json).collect())
}

/// Canonical JSON text of a matrix document.
pub fn save_matrix(a: &MaxMatrix) -> String {
    to_canonical(&matrix_json(a))
}

pub fn region_csv(sample: &majorization::RegionSample) -> String {
    let n = sample.bounds.len();
    let mut out = String::new();
    let header: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    out.push_str(&header.join(","));
    out.push_str(",inside\n");
    for (p, &inside) in sample.grid_points.iter().zip(&sample.labels) {
        for &v in p.as_slice() {
            out.push_str(&format_num(v));
            out.push(',');
        }
        out.push_str(if inside { "1\n" } else { "0\n" });
    }
    out.pop();
    out
}

/// Reads a matrix from a file path, or stdin for `-`.
pub fn load_matrix(source: &str, format: InputFormat) -> Result<MaxMatrix> {
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Io(e.to_string()))?;
        buf
    } else {
        std::fs::read_to_string(source).map_err(|e| Error::Io(format!("{source}: {e}")))?
    };
    parse_matrix(&text, format)
}

pub fn parse_matrix(text: &str, format: InputFormat) -> Result<MaxMatrix> {
    let format = match format {
        InputFormat::Auto if text.trim_start().starts_with('{') => InputFormat::Json,
        InputFormat::Auto => InputFormat::Text,
        f => f,
    };
    match format {
        InputFormat::Json => parse_matrix_json(text),
        _ => parse_matrix_text(text),
    }
}

fn parse_matrix_json(text: &str) -> Result<MaxMatrix> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let schema = |msg: &str| Error::Parse {
        line: 1,
        column: 1,
        message: msg.to_string(),
    };
    let dim = |key: &str| {
        doc.get(key)
            .and_then(Value::as_u64)
            .map(|v| v as usize)
            .ok_or_else(|| schema(&format!("`{key}` must be a nonnegative integer")))
    };
    let (rows, cols) = (dim("rows")?, dim("cols")?);
    let data = doc
        .get("data")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("`data` must be an array of rows"))?;
    if data.len() != rows {
        return Err(schema(&format!(
            "`data` has {} rows, expected {rows}",
            data.len()
        )));
    }
    let mut flat = Vec::with_capacity(rows * cols);
    for (i, row) in data.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| schema(&format!("row {} is not an array", i + 1)))?;
        if row.len() != cols {
            return Err(schema(&format!(
                "row {} has {} entries, expected {cols}",
                i + 1,
                row.len()
            )));
        }
        for v in row {
            flat.push(
                v.as_f64()
                    .ok_or_else(|| schema(&format!("row {} holds a non-number", i + 1)))?,
            );
        }
    }
    MaxMatrix::new(rows, cols, flat)
}

fn parse_matrix_text(text: &str) -> Result<MaxMatrix> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut offset = 0;
        for token in line.split_whitespace() {
            let column = line[offset..].find(token).map_or(offset, |p| p + offset) + 1;
            offset = column - 1 + token.len();
            let value: f64 = token.parse().map_err(|_| Error::Parse {
                line: ln + 1,
                column,
                message: format!("not a number: {token:?}"),
            })?;
            row.push(value);
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    line: ln + 1,
                    column: 1,
                    message: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "empty matrix".into(),
        });
    }
    MaxMatrix::from_rows(&rows)
}

/// Parses an inline vector such as `2,1`, or reads one from a file path.
pub fn load_vector(source: &str) -> Result<MaxVector> {
    let path = Path::new(source);
    if !source.contains(',') && path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
        return parse_vector(text.trim());
    }
    parse_vector(source)
}

pub fn parse_vector(text: &str) -> Result<MaxVector> {
    let mut entries = Vec::new();
    let mut column = 1;
    for token in text.split(',') {
        let trimmed = token.trim();
        let value: f64 = trimmed.parse().map_err(|_| Error::Parse {
            line: 1,
            column,
            message: if trimmed.is_empty() {
                "empty vector entry".to_string()
            } else {
                format!("not a number: {trimmed:?}")
            },
        })?;
        entries.push(value);
        column += token.len() + 1;
    }
    MaxVector::new(entries)
}

/// Builds a scalar from a CLI-provided value.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let v: f64 = text.trim().parse().map_err(|_| Error::Parse {
        line: 1,
        column: 1,
        message: format!("not a number: {text:?}"),
    })?;
    Scalar::new(v)
}
