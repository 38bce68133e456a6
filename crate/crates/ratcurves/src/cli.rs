//! The `ratcurves` command line.
//!
//! Exit codes: 0 on success, 1 on invalid arguments, 2 when `verify` or
//! `examples` finds a failure.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use ratcurves_core::classifier::classify;
use ratcurves_core::lattice::validate_params;
use ratcurves_core::plot::{render_region, PlotFormat};

use crate::fixtures::{fixture_table, run_examples};
use crate::report::{emit_inventory, OutputFormat};
use crate::sweep::emit_sweep;
use crate::verify::{emit_verification, verify_grid};

#[derive(Debug, Parser)]
#[command(
    name = "ratcurves",
    version,
    about = "Irreducible components of spaces of rational curves on moduli of rank-2 bundles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the irreducible components for one (g, k).
    Classify {
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        /// table, json or csv
        #[arg(long, default_value = "table")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the (a, e) lattice with the component region.
    Region {
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        /// ascii or svg
        #[arg(long, default_value = "ascii")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify every cell of a (g, k) grid. Ranges are inclusive: `2..20`.
    Sweep {
        #[arg(long, value_parser = parse_range)]
        g: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range)]
        k: RangeInclusive<i64>,
        /// csv, json or table
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check the component region against its boundary-curve description.
    Verify {
        #[arg(long, value_parser = parse_range, default_value = "2..20")]
        g: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range, default_value = "1..100")]
        k: RangeInclusive<i64>,
        /// table or json
        #[arg(long, default_value = "table")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the published worked examples and print a pass/fail table.
    Examples,
}

/// Parses `A..B` (inclusive) or a single integer `A`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let num = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("invalid integer '{t}': {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi)?),
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

fn write_output(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => stdout.write_all(text.as_bytes()).context("writing output"),
    }
}

enum Outcome {
    Ok,
    Failed,
}

fn execute(command: Command, stdout: &mut dyn Write) -> anyhow::Result<Outcome> {
    match command {
        Command::Classify { g, k, format, out } => {
            let params = validate_params(g, k)?;
            if !matches!(format, OutputFormat::Table | OutputFormat::Json | OutputFormat::Csv) {
                bail!("classify supports --format table|json|csv, not {format}");
            }
            let text = emit_inventory(&classify(params), format)?;
            write_output(&text, out.as_ref(), stdout)?;
            Ok(Outcome::Ok)
        }
        Command::Region { g, k, format, out } => {
            let params = validate_params(g, k)?;
            let plot = match format {
                OutputFormat::Ascii => PlotFormat::Ascii,
                OutputFormat::Svg => PlotFormat::Svg,
                other => bail!("region supports --format ascii|svg, not {other}"),
            };
            write_output(&render_region(params, plot), out.as_ref(), stdout)?;
            Ok(Outcome::Ok)
        }
        Command::Sweep { g, k, format, out } => {
            let text = emit_sweep(&g, &k, format)?;
            write_output(&text, out.as_ref(), stdout)?;
            Ok(Outcome::Ok)
        }
        Command::Verify { g, k, format, out } => {
            let report = verify_grid(&g, &k)?;
            let text = emit_verification(&report, format)?;
            write_output(&text, out.as_ref(), stdout)?;
            Ok(if report.passed() { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Examples => {
            let report = run_examples();
            write_output(&fixture_table(&report), None, stdout)?;
            Ok(if report.passed() { Outcome::Ok } else { Outcome::Failed })
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match execute(cli.command, stdout) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => 2,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            1
        }
    }
}
