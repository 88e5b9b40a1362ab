//! `tconc` command-line interface.
//!
//! Exit codes: 0 concordant / success, 1 obstructed, 2 inconclusive,
//! 64 unparsable expression or usage error, 65 unsupported input, 74 I/O
//! failure while writing output.

use std::io::Write;

use clap::{Parser, Subcommand};

use crate::covers::{double_branched_cover_two_strand, h1_order, is_reduced_scoped, Reducedness};
use crate::invariants::{alexander_fraction, alexander_sum};
use crate::knotsum::{KnotSum, KnotSumError};
use crate::obstruct::{evaluate, Status};
use crate::scan::{self, Family, Format, ScanConfig, Signs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OBSTRUCTED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_UNSUPPORTED: i32 = 65;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(
    name = "tconc",
    version,
    about = "Concordance obstructions for sums of torus knots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every obstruction and print the verdict as JSON.
    Check {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the forced Alexander polynomial of a concordant L-space knot.
    Alex {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the double branched cover of a two-strand sum.
    Cover {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Enumerate and evaluate all reduced sums within bounds.
    Scan {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        max_q: u64,
        #[arg(long)]
        max_p: Option<u64>,
        #[arg(long = "max-factors", default_value_t = 2)]
        max_factors: usize,
        #[arg(long, value_enum, default_value_t = Signs::Both)]
        signs: Signs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

pub fn status_exit_code(status: Status) -> i32 {
    match status {
        Status::Concordant => EXIT_OK,
        Status::Obstructed => EXIT_OBSTRUCTED,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn parse_expr(expr: &str, err: &mut dyn Write) -> Result<KnotSum, i32> {
    expr.parse::<KnotSum>().map_err(|e| {
        report_parse_error(expr, &e, err);
        EXIT_USAGE
    })
}

fn report_parse_error(expr: &str, e: &KnotSumError, err: &mut dyn Write) {
    let _ = writeln!(err, "error: {e}");
    if let Some(pos) = e.position() {
        let _ = writeln!(err, "  {expr}");
        let _ = writeln!(err, "  {}^", " ".repeat(pos));
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_IO
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match cli.command {
        Command::Check { expr } => {
            let k = match parse_expr(&expr, err) {
                Ok(k) => k,
                Err(code) => return Ok(code),
            };
            let verdict = evaluate(&k);
            writeln!(out, "{}", verdict.to_json())?;
            Ok(status_exit_code(verdict.status))
        }
        Command::Alex { expr } => {
            let k = match parse_expr(&expr, err) {
                Ok(k) => k,
                Err(code) => return Ok(code),
            };
            let both_signs = k.positives().next().is_some() && k.negatives().next().is_some();
            if !both_signs {
                writeln!(out, "{}", alexander_sum(&k))?;
                return Ok(EXIT_OK);
            }
            let fraction = alexander_fraction(&k);
            match fraction.quotient() {
                Some(p) => {
                    writeln!(out, "{p}")?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(
                        out,
                        "not a polynomial: ({}) / ({})",
                        fraction.numerator, fraction.denominator
                    )?;
                    Ok(EXIT_OBSTRUCTED)
                }
            }
        }
        Command::Cover { expr } => {
            let k = match parse_expr(&expr, err) {
                Ok(k) => k,
                Err(code) => return Ok(code),
            };
            let cover = match double_branched_cover_two_strand(&k) {
                Ok(c) => c,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_UNSUPPORTED);
                }
            };
            writeln!(out, "{cover}")?;
            writeln!(out, "h1 = {}", h1_order(&cover))?;
            match is_reduced_scoped(&cover) {
                Ok(Reducedness::Reduced) => writeln!(out, "reduced = true")?,
                Ok(Reducedness::NotReduced(why)) => writeln!(out, "reduced = false ({why})")?,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_UNSUPPORTED);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Scan {
            family,
            max_q,
            max_p,
            max_factors,
            signs,
            format,
        } => {
            let config = match ScanConfig::new(family, max_q, max_p, max_factors) {
                Ok(c) => c.with_signs(signs),
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_USAGE);
                }
            };
            let verdicts = scan::run(&config);
            let summary = scan::write_records(&verdicts, format, &mut *out)?;
            writeln!(
                err,
                "summary: {}",
                serde_json::to_string(&summary).expect("summary serializes")
            )?;
            Ok(EXIT_OK)
        }
    }
}
