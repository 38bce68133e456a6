//! Published worked examples as runnable fixtures.
//!
//! The pure classification fixtures live in
//! [`ratcurves_core::oracle::verify_paper_fixtures`]; this adds the ones that
//! go through serialization and rendering.

use std::fmt::Write as _;

use ratcurves_core::classifier::classify;
use ratcurves_core::lattice::{enumerate_range, validate_params, Params};
use ratcurves_core::oracle::{verify_paper_fixtures, FixtureOutcome, VerificationReport};
use ratcurves_core::plot::{render_region, PlotFormat};

use crate::report::{emit_inventory, OutputFormat};
use crate::sweep::emit_sweep;

fn params(g: i64, k: i64) -> Params {
    validate_params(g, k).expect("fixture parameters are valid")
}

fn csv_rows(text: &str) -> Vec<String> {
    text.split("\r\n").skip(1).filter(|l| !l.is_empty()).map(str::to_string).collect()
}

fn ascii_cells(doc: &str) -> String {
    doc.lines().filter_map(|l| l.split_once(" |").map(|(_, c)| c)).collect()
}

type Fixture = (&'static str, fn() -> bool);

fn output_fixtures() -> Vec<Fixture> {
    vec![
        ("CSV for (6,15) has 5 rows", || {
            emit_inventory(&classify(params(6, 15)), OutputFormat::Csv).is_ok_and(|t| csv_rows(&t).len() == 5)
        }),
        ("table for (6,15) has 5 component rows", || {
            emit_inventory(&classify(params(6, 15)), OutputFormat::Table)
                .is_ok_and(|t| t.lines().filter(|l| l.starts_with("M(")).count() == 5)
        }),
        ("CSV for (g,1) is one row whose labels include nice and max_dim", || {
            (2..=20).all(|g| {
                emit_inventory(&classify(params(g, 1)), OutputFormat::Csv).is_ok_and(|t| {
                    let rows = csv_rows(&t);
                    let labels = rows.first().and_then(|r| r.split(',').nth(9)).unwrap_or("");
                    let labels: Vec<&str> = labels.split(';').collect();
                    rows.len() == 1 && labels.contains(&"nice") && labels.contains(&"max_dim")
                })
            })
        }),
        ("CSV row for (6,15) M(10,1) has empty labels", || {
            emit_inventory(&classify(params(6, 15)), OutputFormat::Csv)
                .is_ok_and(|t| csv_rows(&t).iter().any(|r| r.starts_with("6,15,MAE,10,1,") && r.contains(",0,,")))
        }),
        ("sweep g=2..4 k=1..3 has 15 rows", || {
            emit_sweep(&(2..=4), &(1..=3), OutputFormat::Csv).is_ok_and(|t| csv_rows(&t).len() == 15)
        }),
        ("ASCII region (2,1) has a single marked cell", || {
            let cells = ascii_cells(&render_region(params(2, 1), PlotFormat::Ascii));
            cells.chars().filter(|c| *c != ' ').count() == 1
        }),
        ("SVG region (6,15) has 5 component markers", || {
            render_region(params(6, 15), PlotFormat::Svg).matches("class=\"pt component").count() == 5
        }),
        ("ASCII region (3,9) has 2 component cells", || {
            let cells = ascii_cells(&render_region(params(3, 9), PlotFormat::Ascii));
            cells.chars().filter(|c| "#NA*".contains(*c)).count() == 2
                && cells.chars().filter(|c| *c != ' ').count() == enumerate_range(9).len()
        }),
    ]
}

/// Classification fixtures followed by output fixtures.
pub fn run_examples() -> VerificationReport {
    let mut report = verify_paper_fixtures();
    report.fixtures.extend(output_fixtures().into_iter().map(|(name, check)| FixtureOutcome { name, passed: check() }));
    report
}

pub fn fixture_table(report: &VerificationReport) -> String {
    let width = report.fixtures.iter().map(|f| f.name.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for f in &report.fixtures {
        let pad = width - f.name.chars().count();
        let _ = writeln!(out, "{}{}  {}", f.name, " ".repeat(pad), if f.passed { "PASS" } else { "FAIL" });
    }
    let failed = report.fixtures.iter().filter(|f| !f.passed).count();
    let _ = writeln!(out, "{} fixtures, {} failed", report.fixtures.len(), failed);
    out
}
