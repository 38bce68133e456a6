//! Parallel oracle verification over `(g, k)` grids.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use ratcurves_core::oracle::{verify_cell, VerificationReport};
use rayon::prelude::*;
use serde_json::json;

use crate::report::{to_sorted_json, OutputFormat, ReportError, Result};
use crate::sweep::grid_cells;

pub const DEFAULT_G: RangeInclusive<i64> = 2..=20;
pub const DEFAULT_K: RangeInclusive<i64> = 1..=100;

/// Region cross-check and identity checks for every cell. Cells run in
/// parallel; the merged report is sorted by `(g, k)`.
pub fn verify_grid(g_range: &RangeInclusive<i64>, k_range: &RangeInclusive<i64>) -> Result<VerificationReport> {
    let cells = grid_cells(g_range, k_range)?;
    let parts: Vec<VerificationReport> = cells.into_par_iter().map(verify_cell).collect();
    let mut report = VerificationReport::default();
    for p in parts {
        report.merge(p);
    }
    Ok(report)
}

pub fn emit_verification(report: &VerificationReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "cells checked: {}", report.grid.len());
            let _ = writeln!(out, "region mismatches: {}", report.mismatches.len());
            for m in &report.mismatches {
                let _ =
                    writeln!(out, "  g={} k={} {}: direct={} geometric={}", m.g, m.k, m.pair, m.direct, m.geometric);
            }
            let _ = writeln!(out, "identity failures: {}", report.identity_failures.len());
            for f in &report.identity_failures {
                let _ = writeln!(out, "  g={} k={} {} {}", f.g, f.k, f.identity, f.detail);
            }
            for f in &report.fixtures {
                let _ = writeln!(out, "{} {}", if f.passed { "PASS" } else { "FAIL" }, f.name);
            }
            let _ = writeln!(out, "{}", if report.passed() { "PASSED" } else { "FAILED" });
            Ok(out)
        }
        OutputFormat::Json => {
            let value = json!({
                "grid": report.grid,
                "mismatches": report.mismatches.iter().map(|m| json!({
                    "g": m.g, "k": m.k, "a": m.pair.a, "e": m.pair.e,
                    "direct_verdict": m.direct, "geometric_verdict": m.geometric,
                })).collect::<Vec<_>>(),
                "identity_failures": report.identity_failures.iter().map(|f| json!({
                    "g": f.g, "k": f.k, "identity": f.identity, "detail": f.detail,
                })).collect::<Vec<_>>(),
                "fixtures": report.fixtures.iter().map(|f| json!({
                    "name": f.name, "passed": f.passed,
                })).collect::<Vec<_>>(),
                "passed": report.passed(),
            });
            to_sorted_json(&value)
        }
        other => Err(ReportError::Unsupported(other)),
    }
}
