//! The `mixstir` command line: `compute`, `table`, `audit` and `factor`.
//!
//! Exit codes: 0 success, 2 usage error, 3 size guard exceeded, 4 an audited
//! identity was refuted, 5 internal error.

mod ops;
mod table;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::audit::{self, Grid};
use crate::error::Error;
use crate::factor;
use crate::oracle::SizeGuard;

pub use ops::{operation_names, OPERATIONS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_REFUTED: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "mixstir",
    version,
    about = "Exact mixed partition, r-Stirling and factorization counts"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Oracle limit on the number of balls.
    #[arg(long, global = true)]
    guard_max_balls: Option<usize>,
    /// Oracle limit on the number of cells.
    #[arg(long, global = true)]
    guard_max_cells: Option<usize>,
    /// Oracle limit on the projected number of search states.
    #[arg(long, global = true)]
    guard_max_states: Option<u64>,
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one counting operation.
    Compute(ComputeArgs),
    /// Tabulate a family of numbers over a range.
    Table(TableArgs),
    /// Check every registered identity against the oracle on a grid.
    Audit(AuditArgs),
    /// Factorize an integer and count its factorizations.
    Factor(FactorArgs),
}

#[derive(Debug, Args, Default, Clone)]
pub struct ComputeArgs {
    /// Operation name (see `compute list`).
    pub name: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<i64>,
    #[arg(long)]
    pub m: Option<u64>,
    /// Ball multiplicities, e.g. `2,1`.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub balls: Option<Vec<usize>>,
    /// Cell group sizes, e.g. `2,1`.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub cells: Option<Vec<usize>>,
    /// Multinomial parts, e.g. `2,1,1`.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub parts: Option<Vec<usize>>,
    #[arg(long)]
    pub allow_empty: bool,
    #[arg(long)]
    pub no_units: bool,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Table name: stirling2, stirling2-cumulative, binomial, bell, rstirling, rbell, b, b0.
    name: String,
    /// Row range, e.g. `0..6`.
    #[arg(long)]
    n: String,
    /// Column range for the b / b0 tables.
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    r: Option<usize>,
    /// Field delimiter for text output.
    #[arg(long, default_value = ",")]
    delim: String,
}

#[derive(Debug, Args)]
struct AuditArgs {
    /// Use the default grid (n=0..6 k=1..3 c=1..3 r=0..3 m=2..200).
    #[arg(long)]
    default_grid: bool,
    /// Overrides on top of the default grid, e.g. `n=0..5,k=1..3,r=1..3`.
    #[arg(long)]
    grid: Option<String>,
    /// Restrict to these identity ids.
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
}

#[derive(Debug, Args)]
struct FactorArgs {
    #[arg(long)]
    m: u64,
    /// Also report ordered factorizations into this many factors.
    #[arg(long)]
    k: Option<usize>,
}

/// Entry point used by the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `argv`, executes, and returns the exit code.
pub fn run<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok((body, code)) => match emit(&cli, &body, stdout) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                EXIT_INTERNAL
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::UnknownIdentity(_) => EXIT_USAGE,
        Error::SizeGuardExceeded(_) => EXIT_GUARD,
    }
}

fn emit(cli: &Cli, body: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, body),
        None => stdout.write_all(body.as_bytes()),
    }
}

fn guard(cli: &Cli) -> SizeGuard {
    let mut g = SizeGuard::default();
    if let Some(v) = cli.guard_max_balls {
        g.max_balls = v;
    }
    if let Some(v) = cli.guard_max_cells {
        g.max_total_cells = v;
    }
    if let Some(v) = cli.guard_max_states {
        g.max_states = v;
    }
    g
}

fn execute(cli: &Cli) -> crate::Result<(String, i32)> {
    let guard = guard(cli);
    match &cli.command {
        Command::Compute(args) => Ok((ops::compute(args, &guard, cli.format)?, EXIT_OK)),
        Command::Table(args) => {
            let out = table::render(&args.name, &args.n, args.k.as_deref(), args.r, &args.delim, cli.format)?;
            Ok((out, EXIT_OK))
        }
        Command::Audit(args) => {
            let grid = match &args.grid {
                Some(spec) => Grid::default().with_overrides(spec)?,
                None => Grid::default(),
            };
            let report = if args.only.is_empty() {
                audit::run_audit(&grid, &guard)
            } else {
                audit::run_audit_selected(&grid, &guard, &args.only)?
            };
            let body = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            let code = if report.any_refuted() { EXIT_REFUTED } else { EXIT_OK };
            Ok((body, code))
        }
        Command::Factor(args) => Ok((factor_report(args, cli.format)?, EXIT_OK)),
    }
}

fn factor_report(args: &FactorArgs, format: Format) -> crate::Result<String> {
    let m = args.m;
    let f = factor::factorize(m)?;
    let mut fields: Vec<(String, String)> = vec![
        ("m".into(), m.to_string()),
        ("factorization".into(), f.to_string()),
        ("big_omega".into(), f.big_omega().to_string()),
    ];
    if m >= 2 {
        fields.push((
            "total_ordered_factorizations".into(),
            factor::total_ordered_factorizations(m)?.to_string(),
        ));
        fields.push((
            "unordered_multiplicative_partitions".into(),
            factor::unordered_multiplicative_partitions(m)?.to_string(),
        ));
    }
    if let Some(k) = args.k {
        fields.push((
            format!("ordered_with_units_k{k}"),
            factor::ordered_factorizations_with_units(m, k)?.to_string(),
        ));
        if m >= 2 {
            fields.push((
                format!("ordered_no_units_k{k}"),
                factor::ordered_factorizations_no_units(m, k)?.to_string(),
            ));
        }
    }
    Ok(match format {
        Format::Text => fields.iter().map(|(k, v)| format!("{k} = {v}\n")).collect(),
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (k, v) in fields {
                map.insert(k, Value::String(v));
            }
            let factors: Vec<Value> = f
                .factors()
                .iter()
                .map(|(p, a)| json!({ "prime": p.to_string(), "exponent": a }))
                .collect();
            map.insert("factors".into(), Value::Array(factors));
            format!("{}\n", Value::Object(map))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["mixstir"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_capture(&["compute"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["compute", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["compute", "b0", "--n", "2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("compute"));
    }

    #[test]
    fn factor_text() {
        let (code, out, _) = run_capture(&["factor", "--m", "12", "--k", "2"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "m = 12\nfactorization = 2^2 * 3\nbig_omega = 3\ntotal_ordered_factorizations = 8\n\
             unordered_multiplicative_partitions = 4\nordered_with_units_k2 = 6\nordered_no_units_k2 = 4\n"
        );
        let (code, out, _) = run_capture(&["factor", "--m", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("factorization = 1"));
        assert_eq!(run_capture(&["factor", "--m", "0"]).0, EXIT_USAGE);
    }
}
