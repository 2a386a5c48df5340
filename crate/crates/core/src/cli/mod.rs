//! The `lpoly` command line.
//!
//! Exit codes: 0 success, 1 input error, 2 no maximum exists (`k <= d`),
//! 3 internal inconsistency, 4 a verification check failed.

pub mod plot;
pub mod record;
pub mod table;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::points::PointSet;
use crate::rational::Rational;
use crate::solver::{solve, solve_parallel, verify, ExtremalResult, VerificationReport};
use record::OutputRecord;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NO_MAXIMUM: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;
pub const EXIT_VERIFY_FAILED: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "lpoly",
    version,
    about = "Maximum lead coefficient polynomials bounded by 1 on a finite point set"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one instance and report the polynomial with its certificate.
    Solve(SolveArgs),
    /// Compare closed form, enumeration and Chebyshev floor over a k-range on {1..k}.
    Table(TableArgs),
    /// Re-check a previously exported JSON result.
    Verify(VerifyArgs),
    /// Emit (x, L(x)) samples across [x_1, x_k] as CSV.
    Plotdata(PlotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Either an explicit point list or a progression.
#[derive(Debug, Args)]
struct PointArgs {
    /// Comma-separated rationals, e.g. 1,3/2,2,4
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["start", "step", "count"])]
    points: Option<String>,
    /// First term of an arithmetic progression
    #[arg(long, allow_hyphen_values = true, requires_all = ["step", "count"])]
    start: Option<String>,
    /// Progression step
    #[arg(long, allow_hyphen_values = true, requires_all = ["start", "count"])]
    step: Option<String>,
    /// Number of terms
    #[arg(long, requires_all = ["start", "step"])]
    count: Option<usize>,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(short = 'd', long)]
    degree: usize,
    #[command(flatten)]
    points: PointArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Spread the enumeration over all cores
    #[arg(long)]
    parallel: bool,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(short = 'd', long)]
    degree: usize,
    /// Inclusive range such as 5..21
    #[arg(long = "k")]
    k: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    parallel: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// JSON file written by `solve --format json`
    file: PathBuf,
    /// Check against this degree instead of the one in the file
    #[arg(short = 'd', long)]
    degree: Option<usize>,
    #[command(flatten)]
    points: PointArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct PlotArgs {
    #[arg(short = 'd', long)]
    degree: usize,
    #[command(flatten)]
    points: PointArgs,
    /// Number of equally spaced samples, endpoints included
    #[arg(short = 'n', long = "samples", default_value_t = 100)]
    samples: usize,
    /// Decimal places in the x and y columns
    #[arg(long, default_value_t = 12)]
    digits: usize,
    #[arg(long)]
    parallel: bool,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Math(Error),
    VerifyFailed,
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Math(Error::NoMaximum { .. }) => EXIT_NO_MAXIMUM,
            CliError::Math(Error::InternalInconsistency(_)) => EXIT_INCONSISTENT,
            CliError::Math(_) => EXIT_INPUT,
            CliError::VerifyFailed => EXIT_VERIFY_FAILED,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Math(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(format!("i/o error: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Input(format!("csv error: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("json error: {e}"))
    }
}

/// Parses `args` (including the program name), writes results to `out` and
/// diagnostics to `err`, and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Solve(args) => cmd_solve(args, out),
        Command::Table(args) => cmd_table(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Plotdata(args) => cmd_plotdata(args, out),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            match &e {
                CliError::Input(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                }
                CliError::Math(m) => {
                    let _ = writeln!(err, "error: {m}");
                }
                CliError::VerifyFailed => {
                    let _ = writeln!(err, "error: verification failed");
                }
            }
            e.exit_code()
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.parse::<Rational>().map_err(|e| CliError::Input(e.to_string()))
}

impl PointArgs {
    fn is_given(&self) -> bool {
        self.points.is_some() || self.start.is_some()
    }

    /// Parsed abscissae, not yet checked for order.
    fn abscissae(&self) -> Result<Vec<Rational>, CliError> {
        if let Some(list) = &self.points {
            return list.split(',').map(parse_rational).collect();
        }
        match (&self.start, &self.step, self.count) {
            (Some(start), Some(step), Some(count)) => {
                let start = parse_rational(start)?;
                let step = parse_rational(step)?;
                if !step.is_positive() {
                    return Err(CliError::Input(format!("step must be positive, got {step}")));
                }
                Ok((0..count)
                    .map(|i| &start + &(&step * &Rational::from(i)))
                    .collect())
            }
            _ => Err(CliError::Input(
                "give either --points or all of --start, --step and --count".into(),
            )),
        }
    }

    fn point_set(&self) -> Result<PointSet, CliError> {
        PointSet::new(self.abscissae()?).map_err(|e| CliError::Input(e.to_string()))
    }
}

/// `k <= d` is reported as the mathematical obstruction ahead of any
/// complaint about the point set's shape.
fn instance(degree: usize, args: &PointArgs) -> Result<PointSet, CliError> {
    let xs = args.abscissae()?;
    if degree >= 1 && xs.len() <= degree {
        return Err(Error::NoMaximum {
            degree,
            points: xs.len(),
        }
        .into());
    }
    PointSet::new(xs).map_err(|e| CliError::Input(e.to_string()))
}

fn run_solver(ps: &PointSet, d: usize, parallel: bool) -> Result<ExtremalResult, Error> {
    if parallel {
        solve_parallel(ps, d)
    } else {
        solve(ps, d)
    }
}

fn cmd_solve(args: SolveArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let ps = instance(args.degree, &args.points)?;
    let d = args.degree;
    let result = run_solver(&ps, d, args.parallel)?;
    let report = verify(&result, &ps, d);
    let record = OutputRecord::new(&ps, d, &result, report)?;
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?,
        Format::Csv => OutputRecord::write_csv(std::slice::from_ref(&record), &mut *out)?,
        Format::Text => write_solve_text(&record, &result, out)?,
    }
    if !record.verification.passed(d) {
        return Err(CliError::Math(Error::InternalInconsistency(
            "solver output failed its own verification".into(),
        )));
    }
    Ok(())
}

fn write_solve_text(
    record: &OutputRecord,
    result: &ExtremalResult,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    writeln!(out, "degree           {}", record.degree)?;
    writeln!(out, "points           {}", record::join(&record.points))?;
    writeln!(out, "polynomial       {}", result.polynomial)?;
    writeln!(out, "coefficients     {}", record::join(&record.coefficients))?;
    writeln!(out, "lead             {}", record.lead)?;
    writeln!(out, "chebyshev floor  {}", record.chebyshev_floor)?;
    writeln!(out, "certificate      {}", record::join(&record.certificate))?;
    writeln!(
        out,
        "candidates       {} enumerated, {} feasible",
        result.candidates_enumerated, result.candidates_feasible
    )?;
    if let Some(c) = &record.correction {
        writeln!(
            out,
            "correction       {}",
            crate::poly::Polynomial::new(c.clone())
        )?;
    }
    write_report_text(&record.verification, record.degree, out)
}

fn write_report_text(
    report: &VerificationReport,
    d: usize,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let mark = |ok: bool| if ok { "ok" } else { "FAILED" };
    writeln!(out, "terminal values  {}", mark(report.terminal_ok))?;
    writeln!(out, "bounded          {}", mark(report.bounded_ok))?;
    writeln!(out, "alternation      {}", mark(report.alternation_ok))?;
    writeln!(
        out,
        "sign changes     {} ({})",
        report.sign_change_count,
        mark(report.sign_change_count == d)
    )?;
    writeln!(out, "unique maximum   {}", mark(report.unique_max_ok))?;
    writeln!(out, "verdict          {}", if report.passed(d) { "pass" } else { "FAIL" })
}

fn parse_k_range(s: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || CliError::Input(format!("malformed k range {s:?}; expected e.g. 5..21"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let range = match s.split_once("..") {
        Some((lo, hi)) => num(lo)?..=num(hi.strip_prefix('=').unwrap_or(hi))?,
        None => {
            let k = num(s)?;
            k..=k
        }
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

fn cmd_table(args: TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let ks = parse_k_range(&args.k)?;
    if args.degree >= 1 && *ks.start() <= args.degree {
        return Err(Error::NoMaximum {
            degree: args.degree,
            points: *ks.start(),
        }
        .into());
    }
    if *ks.start() < 2 {
        return Err(CliError::Input("k must be at least 2".into()));
    }
    let rows = table::table_rows(args.degree, ks, args.parallel)?;
    match args.format {
        Format::Text => table::write_text(&rows, &mut *out)?,
        Format::Csv => table::write_csv(&rows, &mut *out)?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?,
    }
    if let Some(bad) = rows.iter().find(|r| r.disagrees()) {
        return Err(Error::InternalInconsistency(format!(
            "closed form and enumeration disagree at k = {}",
            bad.k
        ))
        .into());
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", args.file.display())))?;
    let record: OutputRecord = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("malformed result file: {e}")))?;
    let d = args.degree.unwrap_or(record.degree);
    let ps = if args.points.is_given() {
        args.points.point_set()?
    } else {
        record
            .point_set()
            .map_err(|e| CliError::Input(format!("malformed result file: {e}")))?
    };
    let report = verify(&record.to_result(), &ps, d);
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "terminal_ok",
                "bounded_ok",
                "alternation_ok",
                "sign_change_count",
                "unique_max_ok",
                "passed",
            ])?;
            w.write_record([
                report.terminal_ok.to_string(),
                report.bounded_ok.to_string(),
                report.alternation_ok.to_string(),
                report.sign_change_count.to_string(),
                report.unique_max_ok.to_string(),
                report.passed(d).to_string(),
            ])?;
            w.flush()?;
        }
        Format::Text => write_report_text(&report, d, out)?,
    }
    if report.passed(d) {
        Ok(())
    } else {
        Err(CliError::VerifyFailed)
    }
}

fn cmd_plotdata(args: PlotArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.samples < 2 {
        return Err(CliError::Input("need at least 2 samples".into()));
    }
    let ps = instance(args.degree, &args.points)?;
    let result = run_solver(&ps, args.degree, args.parallel)?;
    let rows = plot::plot_rows(&result.polynomial, &ps, args.samples);
    plot::write_csv(&rows, args.digits, out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["lpoly"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn k_ranges() {
        assert_eq!(parse_k_range("5..21").unwrap(), 5..=21);
        assert_eq!(parse_k_range("5..=21").unwrap(), 5..=21);
        assert_eq!(parse_k_range("7").unwrap(), 7..=7);
        assert!(parse_k_range("9..3").is_err());
        assert!(parse_k_range("a..3").is_err());
    }

    #[test]
    fn solve_text() {
        let (code, out, _) = run_capture(&["solve", "-d", "2", "--start", "1", "--step", "1", "--count", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("lead             2\n"));
        assert!(out.contains("coefficients     7 -8 2\n"));
        assert!(out.contains("verdict          pass"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["solve", "-d", "3", "--points", "1,2"]).0, EXIT_NO_MAXIMUM);
        assert_eq!(run_capture(&["solve", "-d", "2", "--points", "1,2/x,3"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["solve", "-d", "2", "--points", "3,2,1"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["solve", "-d", "3", "--points", "1,x"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["solve", "-d", "1", "--start", "0", "--step", "-1", "--count", "4"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["solve", "-d", "0", "--points", "1,2"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["solve", "-d", "2"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["solve", "--points", "1,2,3"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["table", "-d", "3", "--k", "2..5"]).0, EXIT_NO_MAXIMUM);
        assert_eq!(run_capture(&["plotdata", "-d", "2", "--points", "1,2,3", "-n", "1"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn negative_points_parse() {
        let (code, out, err) = run_capture(&["solve", "-d", "1", "--points", "-1,0,1", "--format", "csv"]);
        assert_eq!(code, 0, "{err}");
        assert!(out.lines().nth(1).unwrap().starts_with("1,-1 0 1,0 1,1,"));
    }
}
