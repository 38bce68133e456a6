//! Inventories over rectangular `(g, k)` grids.

use std::ops::RangeInclusive;

use ratcurves_core::classifier::{classify, Inventory};
use ratcurves_core::lattice::{validate_params, Params};
use rayon::prelude::*;

use crate::report::{
    inventories_to_csv, inventory_to_table, to_sorted_json, InventoryDocument, OutputFormat, ReportError, Result,
};

/// Validated cells of `g_range × k_range`, sorted by `(g, k)`.
pub fn grid_cells(g_range: &RangeInclusive<i64>, k_range: &RangeInclusive<i64>) -> Result<Vec<Params>> {
    for (name, r) in [("g", g_range), ("k", k_range)] {
        if r.is_empty() {
            return Err(ReportError::EmptyRange { name, start: *r.start(), end: *r.end() });
        }
    }
    // the corners bound every cell, so checking them validates the grid
    validate_params(*g_range.start(), *k_range.start())?;
    validate_params(*g_range.end(), *k_range.end())?;
    let mut cells = Vec::new();
    for g in g_range.clone() {
        for k in k_range.clone() {
            cells.push(validate_params(g, k)?);
        }
    }
    Ok(cells)
}

/// Classifies every cell in parallel; output order is canonical.
pub fn sweep(g_range: &RangeInclusive<i64>, k_range: &RangeInclusive<i64>) -> Result<Vec<Inventory>> {
    let cells = grid_cells(g_range, k_range)?;
    Ok(cells.into_par_iter().map(classify).collect())
}

pub fn emit_sweep(
    g_range: &RangeInclusive<i64>,
    k_range: &RangeInclusive<i64>,
    format: OutputFormat,
) -> Result<String> {
    let invs = sweep(g_range, k_range)?;
    match format {
        OutputFormat::Csv => inventories_to_csv(&invs),
        OutputFormat::Json => {
            let docs: Vec<InventoryDocument> = invs.iter().map(InventoryDocument::from).collect();
            to_sorted_json(&docs)
        }
        OutputFormat::Table => Ok(invs.iter().map(inventory_to_table).collect::<Vec<_>>().join("\n")),
        other => Err(ReportError::Unsupported(other)),
    }
}
