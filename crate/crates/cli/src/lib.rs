//! `qmc`: sequences of matrix counts over finite fields, their limits, and
//! the verification suites.

pub mod emit;
pub mod oeis;
pub mod regression;
pub mod sequences;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qmc_core::gfengine::{self, LimitKind, MAX_LIMIT_DIGITS};
use qmc_core::oracle::{OracleConfig, DEFAULT_BUDGET};
use qmc_core::PrimePower;

use crate::sequences::{ComputeOptions, SeqName, SequenceSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qmc", version, about = "Counting matrices over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a sequence by name.
    Seq(SeqArgs),
    /// Evaluate an infinite product limit to a number of decimal places.
    Limit(LimitArgs),
    /// Run the regression, cross-route, oracle, identity, limit and trend suites.
    Verify(VerifyArgs),
    /// Print rows of a triangle (qbinom_row, qstirling_row, rank_row).
    Table(TableArgs),
}

fn parse_q(s: &str) -> Result<PrimePower, String> {
    s.parse::<PrimePower>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Bfile,
}

#[derive(Debug, Args)]
struct OracleArgs {
    /// Maximum number of matrices an exhaustive sweep may visit.
    #[arg(long, env = "QMC_ORACLE_BUDGET")]
    oracle_budget: Option<u64>,
    /// Worker threads for enumeration.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    jobs: u64,
}

impl OracleArgs {
    fn config(&self) -> OracleConfig {
        OracleConfig {
            budget: self.oracle_budget.unwrap_or(DEFAULT_BUDGET),
            jobs: self.jobs as usize,
            ..OracleConfig::default()
        }
    }
}

#[derive(Debug, Args)]
struct SeqArgs {
    #[arg(value_enum)]
    name: SeqName,
    /// Field order, a prime power.
    #[arg(long, value_parser = parse_q)]
    q: PrimePower,
    /// Exponent for power_identity; column for triangle rows.
    #[arg(long)]
    k: Option<u64>,
    /// First n; defaults to the OEIS offset where one is known.
    #[arg(long)]
    min_n: Option<usize>,
    /// Last n (the row, for triangle rows).
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Series truncation order; at least --max-n.
    #[arg(long)]
    order: Option<usize>,
    #[command(flatten)]
    oracle: OracleArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum LimitArg {
    Invertible,
    LinearDerangementFrac,
    ProjectiveFrac,
    Cyclic,
    ConjRatio,
}

impl From<LimitArg> for LimitKind {
    fn from(a: LimitArg) -> Self {
        match a {
            LimitArg::Invertible => LimitKind::Invertible,
            LimitArg::LinearDerangementFrac => LimitKind::LinearDerangementFrac,
            LimitArg::ProjectiveFrac => LimitKind::ProjectiveFrac,
            LimitArg::Cyclic => LimitKind::Cyclic,
            LimitArg::ConjRatio => LimitKind::ConjRatio,
        }
    }
}

#[derive(Debug, Args)]
struct LimitArgs {
    #[arg(value_enum)]
    kind: LimitArg,
    #[arg(long, value_parser = parse_q)]
    q: PrimePower,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..=MAX_LIMIT_DIGITS as u64))]
    digits: u64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    oracle: OracleArgs,
    /// Treat printed values with recorded errata as failures.
    #[arg(long)]
    strict: bool,
    /// Print passing checks too.
    #[arg(long)]
    verbose: bool,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(value_enum)]
    name: SeqName,
    #[arg(long, value_parser = parse_q)]
    q: PrimePower,
    #[arg(long, default_value_t = 0)]
    min_n: usize,
    #[arg(long, default_value_t = 6)]
    max_n: usize,
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let result = match cli.command {
        Command::Seq(a) => run_seq(a, out),
        Command::Limit(a) => run_limit(a, out),
        Command::Verify(a) => return run_verify(a, out, err),
        Command::Table(a) => run_table(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn run_seq(a: SeqArgs, out: &mut dyn Write) -> Result<(), String> {
    let spec = SequenceSpec::new(a.name, a.q, a.k, a.min_n, a.max_n);
    let opts = ComputeOptions {
        order: a.order,
        oracle: a.oracle.config(),
    };
    let terms = sequences::compute(&spec, &opts).map_err(|e| e.to_string())?;
    let text = match a.format {
        Format::Plain => emit::emit_plain(&terms),
        Format::Json => emit::emit_json(&spec, &terms),
        Format::Bfile => emit::emit_bfile(&terms),
    };
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

fn run_limit(a: LimitArgs, out: &mut dyn Write) -> Result<(), String> {
    let value = gfengine::limit_eval(a.kind.into(), a.q, a.digits as usize).map_err(|e| e.to_string())?;
    writeln!(out, "{value}").map_err(|e| e.to_string())
}

fn run_table(a: TableArgs, out: &mut dyn Write) -> Result<(), String> {
    let rows = sequences::triangle(a.name, a.q, a.min_n, a.max_n).map_err(|e| e.to_string())?;
    for r in rows {
        out.write_all(emit::emit_plain(&r).as_bytes()).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn run_verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let report = verify::run_all(&a.oracle.config());
    for c in &report.checks {
        let show = a.verbose || c.status != verify::Status::Pass;
        if show {
            let _ = if c.is_failure(a.strict) {
                writeln!(err, "{c}")
            } else {
                writeln!(out, "{c}")
            };
        }
    }
    for line in report.summary() {
        let _ = writeln!(out, "{line}");
    }
    if report.passed(a.strict) {
        let _ = writeln!(out, "verify: ok");
        EXIT_OK
    } else {
        let _ = writeln!(out, "verify: FAILED");
        EXIT_VERIFY_FAILED
    }
}
