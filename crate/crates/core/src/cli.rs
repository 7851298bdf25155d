//! Command-line front end: series summation, extrapolation, ODE runs, and
//! re-analysis of emitted CSV files.
//!
//! Data goes to the chosen output; diagnostics and regression summaries go
//! to the diagnostic stream.

use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::aitken::{Node, NodeSet};
use crate::epsilon::{EtaTable, PadeTable};
use crate::error::Error;
use crate::npade::evaluate_sweep;
use crate::ode::{solve, OdeProblem, OdeTrace};
use crate::series::{error_sweep, partial_sums, SeriesSpec, DEFAULT_TERMS};
use crate::stats::{loglog_regression, RegressionSummary};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Numeric(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("{path}:{line}: {message}")]
    NodeFile {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "wynn-pade",
    version,
    about = "Robust N-point Padé approximants with minimal-|eta| selection"
)]
pub struct Cli {
    /// Write data here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sum the ln(1+x) Taylor series at one point or over a sweep.
    #[command(allow_negative_numbers = true)]
    SumSeries(SumSeriesArgs),
    /// Rational extrapolation from tabulated nodes or the builtin sine arch.
    #[command(allow_negative_numbers = true)]
    Extrapolate(ExtrapolateArgs),
    /// Integrate dy/dx = F(x, y) with the Padé predictor.
    #[command(allow_negative_numbers = true)]
    Ode(OdeArgs),
    /// Log-log regression of eps_emp against eps_real from a CSV file.
    Analyze(AnalyzeArgs),
}

#[derive(Debug, Args)]
pub struct SumSeriesArgs {
    /// Series argument.
    #[arg(long)]
    pub x: Option<f64>,
    /// Number of terms.
    #[arg(long, default_value_t = DEFAULT_TERMS)]
    pub terms: usize,
    /// Sweep as MIN:MAX:STEP, e.g. 1:20:0.1.
    #[arg(long, conflicts_with = "x")]
    pub sweep: Option<SweepRange>,
    /// Also dump the Padé table (single-point mode) as CSV to this path.
    #[arg(long, requires = "x")]
    pub table: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRange {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl FromStr for SweepRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [min, max, step] = parts[..] else {
            return Err(format!("expected MIN:MAX:STEP, got '{s}'"));
        };
        let num = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("'{v}': {e}"));
        Ok(SweepRange {
            min: num(min)?,
            max: num(max)?,
            step: num(step)?,
        })
    }
}

#[derive(Debug, Args)]
pub struct ExtrapolateArgs {
    /// Node file: one node per line, `x y [y' y'' ...]`, `#` comments.
    /// Without it the builtin sine arch is used.
    #[arg(long)]
    pub nodes: Option<PathBuf>,
    /// Derivatives per node used through the Taylor shift.
    #[arg(long, default_value_t = 0)]
    pub hermite: usize,
    /// Builtin sine: number of equidistant nodes.
    #[arg(long, default_value_t = 21)]
    pub node_count: usize,
    /// Builtin sine: first node.
    #[arg(long, default_value_t = -PI)]
    pub node_min: f64,
    /// Builtin sine: last node.
    #[arg(long, default_value_t = 0.0)]
    pub node_max: f64,
    /// Builtin queries: number of arches of width pi after 0.
    #[arg(long, default_value_t = 2)]
    pub arches: usize,
    /// Builtin queries: equidistant interior points per arch.
    #[arg(long, default_value_t = 2000)]
    pub per_arch: usize,
    /// Explicit query point; repeatable. Overrides the query grid.
    #[arg(long = "query")]
    pub queries: Vec<f64>,
    /// Uniform query grid start (inclusive).
    #[arg(long, requires = "to")]
    pub from: Option<f64>,
    /// Uniform query grid end (inclusive).
    #[arg(long, requires = "from")]
    pub to: Option<f64>,
    /// Uniform query grid size.
    #[arg(long, default_value_t = 2000)]
    pub count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OdeBuiltin {
    /// F = 0
    Const,
    /// F = y
    Identity,
    /// F = cos x
    Cosine,
}

impl OdeBuiltin {
    pub fn rhs(self) -> fn(f64, f64) -> f64 {
        match self {
            OdeBuiltin::Const => |_, _| 0.0,
            OdeBuiltin::Identity => |_, y| y,
            OdeBuiltin::Cosine => |x, _| x.cos(),
        }
    }
}

#[derive(Debug, Args)]
pub struct OdeArgs {
    #[arg(long, value_enum)]
    pub problem: OdeBuiltin,
    #[arg(long, default_value_t = 0.0)]
    pub x0: f64,
    #[arg(long, default_value_t = 1.0)]
    pub y0: f64,
    #[arg(long, default_value_t = 1.0)]
    pub x_end: f64,
    #[arg(long, default_value_t = 0.01)]
    pub h: f64,
    #[arg(long, default_value_t = 6)]
    pub window: usize,
    #[arg(long, default_value_t = f64::INFINITY)]
    pub eta_tol: f64,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// CSV with `eps_emp` and `eps_real` columns.
    pub csv: PathBuf,
}

/// Runs `cli`, sending data to `out` and diagnostics to `diag`.
pub fn run(cli: &Cli, out: &mut dyn Write, diag: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::SumSeries(args) => sum_series(args, out, diag),
        Command::Extrapolate(args) => extrapolate(args, out, diag),
        Command::Ode(args) => ode(args, out),
        Command::Analyze(args) => analyze(args, out),
    }
}

/// Opens `--output` or standard output, runs, and flushes.
pub fn run_to_output(cli: &Cli, diag: &mut dyn Write) -> Result<(), CliError> {
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let result = run(cli, &mut out, diag);
    out.flush()?;
    result
}

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt_num(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn report_regression(pairs: &[(f64, f64)], diag: &mut dyn Write) -> Result<(), CliError> {
    match loglog_regression(pairs) {
        Ok(summary) => writeln!(diag, "regression: {summary}")?,
        Err(e) => writeln!(diag, "regression: {e}")?,
    }
    Ok(())
}

fn sum_series(
    args: &SumSeriesArgs,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> Result<(), CliError> {
    if args.terms == 0 {
        return Err(CliError::Usage("--terms must be at least 1".into()));
    }
    let records = match (args.x, args.sweep) {
        (Some(x), None) => {
            if let Some(path) = &args.table {
                let sums = partial_sums(&SeriesSpec::log_one_plus_x(x, args.terms))?;
                let table = PadeTable::build(&sums)?;
                let etas = EtaTable::from_table(&table);
                table.write_csv(&etas, BufWriter::new(File::create(path)?))?;
            }
            error_sweep(x, x, 1.0, args.terms)?
        }
        (None, Some(s)) => error_sweep(s.min, s.max, s.step, args.terms)?,
        _ => return Err(CliError::Usage("give either --x or --sweep".into())),
    };

    let mut csv = csv::Writer::from_writer(out);
    csv.write_record(["x", "value", "eps_emp", "eps_real", "L", "M"])?;
    for r in &records {
        csv.write_record([
            num(r.x),
            num(r.value),
            opt_num(r.eps_emp),
            num(r.eps_real),
            r.l.to_string(),
            r.m.to_string(),
        ])?;
    }
    csv.flush()?;

    if args.sweep.is_some() {
        let pairs: Vec<_> = records
            .iter()
            .map(|r| (r.eps_real, r.eps_emp.unwrap_or(f64::NAN)))
            .collect();
        report_regression(&pairs, diag)?;
    }
    Ok(())
}

/// Parses the node-file format, keeping the first `hermite` derivative
/// columns of every line.
pub fn parse_nodes(text: &str, hermite: usize, path: &str) -> Result<NodeSet, CliError> {
    let fail = |line: usize, message: String| CliError::NodeFile {
        path: path.to_string(),
        line,
        message,
    };
    let mut nodes = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields = content
            .split_whitespace()
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|e| fail(line_no, format!("'{f}': {e}")))
            })
            .collect::<Result<Vec<f64>, _>>()?;
        if fields.len() < 2 + hermite {
            return Err(fail(
                line_no,
                format!(
                    "expected at least {} columns, found {}",
                    2 + hermite,
                    fields.len()
                ),
            ));
        }
        if fields.iter().any(|v| !v.is_finite()) {
            return Err(fail(line_no, "non-finite value".into()));
        }
        nodes.push(Node::with_derivs(
            fields[0],
            fields[1],
            fields[2..2 + hermite].to_vec(),
        ));
    }
    if nodes.is_empty() {
        return Err(fail(0, "no nodes".into()));
    }
    NodeSet::new(nodes).map_err(CliError::from)
}

/// `sin` and its first `order` derivatives at `x`.
fn sine_node(x: f64, order: usize) -> Node {
    let cycle = |j: usize| match j % 4 {
        0 => x.sin(),
        1 => x.cos(),
        2 => -x.sin(),
        _ => -x.cos(),
    };
    Node::with_derivs(x, x.sin(), (1..=order).map(cycle).collect())
}

pub fn builtin_sine_nodes(
    count: usize,
    min: f64,
    max: f64,
    hermite: usize,
) -> Result<NodeSet, CliError> {
    if count == 0 {
        return Err(CliError::Usage("--node-count must be at least 1".into()));
    }
    let xs: Vec<f64> = if count == 1 {
        vec![min]
    } else {
        (0..count)
            .map(|i| min + (max - min) * i as f64 / (count - 1) as f64)
            .collect()
    };
    Ok(NodeSet::new(
        xs.into_iter().map(|x| sine_node(x, hermite)).collect(),
    )?)
}

/// `per_arch` equidistant interior points of each open interval `(kπ, (k+1)π)`,
/// `k < arches`.
pub fn arch_queries(arches: usize, per_arch: usize) -> Vec<f64> {
    let spacing = 1.0 / (per_arch + 1) as f64;
    (0..arches)
        .flat_map(|k| (1..=per_arch).map(move |j| PI * (k as f64 + j as f64 * spacing)))
        .collect()
}

fn linspace(from: f64, to: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![from],
        _ => (0..count)
            .map(|i| from + (to - from) * i as f64 / (count - 1) as f64)
            .collect(),
    }
}

/// Closed form to compare against, when the data has one.
type Reference = Option<fn(f64) -> f64>;

fn extrapolate(
    args: &ExtrapolateArgs,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> Result<(), CliError> {
    let (nodes, exact): (NodeSet, Reference) = match &args.nodes {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            (
                parse_nodes(&text, args.hermite, &path.display().to_string())?,
                None,
            )
        }
        None => (
            builtin_sine_nodes(args.node_count, args.node_min, args.node_max, args.hermite)?,
            Some(f64::sin),
        ),
    };

    let queries = if !args.queries.is_empty() {
        args.queries.clone()
    } else if let (Some(from), Some(to)) = (args.from, args.to) {
        linspace(from, to, args.count)
    } else {
        arch_queries(args.arches, args.per_arch)
    };

    let evals = evaluate_sweep(&nodes, &queries)?;

    let mut csv = csv::Writer::from_writer(out);
    csv.write_record(["x", "value", "exact", "eps_emp", "eps_real", "L", "M"])?;
    let mut pairs = Vec::with_capacity(evals.len());
    for e in &evals {
        let exact_value = exact.map(|f| f(e.x));
        let eps_real = exact_value.map(|v| (e.value - v).abs());
        pairs.push((eps_real.unwrap_or(f64::NAN), e.eta_min.unwrap_or(f64::NAN)));
        csv.write_record([
            num(e.x),
            num(e.value),
            opt_num(exact_value),
            opt_num(e.eta_min),
            opt_num(eps_real),
            e.l.to_string(),
            e.m.to_string(),
        ])?;
    }
    csv.flush()?;

    if exact.is_some() {
        report_regression(&pairs, diag)?;
    }
    Ok(())
}

fn write_trace(trace: &OdeTrace, out: &mut dyn Write) -> Result<(), CliError> {
    let mut csv = csv::Writer::from_writer(out);
    csv.write_record(["x", "y", "dy", "eta_used", "L", "M"])?;
    for p in &trace.points {
        let (l, m) = p
            .accepted_order
            .map(|(l, m)| (l.to_string(), m.to_string()))
            .unwrap_or_default();
        csv.write_record([num(p.x), num(p.y), num(p.dy), opt_num(p.eta_used), l, m])?;
    }
    csv.flush()?;
    Ok(())
}

fn ode(args: &OdeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let problem = OdeProblem::new(args.problem.rhs(), args.x0, args.y0, args.x_end, args.h)
        .with_window(args.window)
        .with_eta_tol(args.eta_tol);
    match solve(&problem) {
        Ok(trace) => write_trace(&trace, out),
        Err(Error::Diverged { x, trace }) => {
            write_trace(&trace, out)?;
            Err(Error::Diverged { x, trace }.into())
        }
        Err(e) => Err(e.into()),
    }
}

/// Reads `(eps_real, eps_emp)` pairs from a CSV with a header row. Empty
/// or unparsable cells become NaN and are dropped by the regression.
pub fn read_error_pairs(path: &Path) -> Result<Vec<(f64, f64)>, CliError> {
    let mut reader = csv::Reader::from_path(path)?;
    let headers = reader.headers()?.clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| CliError::Usage(format!("{}: missing column '{name}'", path.display())))
    };
    let emp = column("eps_emp")?;
    let real = column("eps_real")?;

    let parse = |s: Option<&str>| {
        s.and_then(|v| v.trim().parse::<f64>().ok())
            .unwrap_or(f64::NAN)
    };
    reader
        .records()
        .map(|record| {
            let record = record?;
            Ok((parse(record.get(real)), parse(record.get(emp))))
        })
        .collect()
}

pub fn analyze_file(path: &Path) -> Result<RegressionSummary, CliError> {
    Ok(loglog_regression(&read_error_pairs(path)?)?)
}

fn analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let summary = analyze_file(&args.csv)?;
    writeln!(out, "{summary}")?;
    Ok(())
}
