//! Serialization of inventories to JSON, CSV and aligned text tables.
//!
//! JSON documents have sorted keys and a `schema_version`; `a`, `e`,
//! `delta` and `mrc` are `null` for the `M_E` component. The CSV column set
//! is fixed (see [`CSV_HEADER`]).

use std::fmt::Write as _;
use std::str::FromStr;

use ratcurves_core::classifier::{ComponentKind, ComponentRecord, Inventory, InventoryNote, Labels};
use ratcurves_core::dimension::expected_dim;
use ratcurves_core::lattice::{validate_params, PairAE};
use ratcurves_core::mrc::{MrcResult, MrcTarget};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: &str = "1";

pub const CSV_HEADER: [&str; 15] = [
    "g",
    "k",
    "kind",
    "a",
    "e",
    "dim",
    "expected",
    "excess",
    "delta",
    "labels",
    "unobstructed",
    "nonreduced",
    "covers_M",
    "mrc_target",
    "mrc_dominant",
];

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Params(#[from] ratcurves_core::Error),
    #[error("empty {name} range {start}..{end}")]
    EmptyRange { name: &'static str, start: i64, end: i64 },
    #[error("format {0} is not supported here")]
    Unsupported(OutputFormat),
    #[error("malformed inventory document: {0}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, ReportError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
    Ascii,
    Svg,
}

impl OutputFormat {
    pub fn as_str(&self) -> &'static str {
        match self {
            OutputFormat::Table => "table",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Ascii => "ascii",
            OutputFormat::Svg => "svg",
        }
    }
}

impl std::fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "ascii" => Ok(OutputFormat::Ascii),
            "svg" => Ok(OutputFormat::Svg),
            other => Err(format!("unknown format '{other}' (expected table|json|csv|ascii|svg)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MrcDocument {
    pub target: String,
    pub dominant: bool,
    pub pic_degrees: Vec<i64>,
    pub image_note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDocument {
    pub kind: String,
    pub a: Option<i64>,
    pub e: Option<i64>,
    pub dim: i64,
    pub excess: i64,
    pub delta: Option<i64>,
    pub labels: Vec<String>,
    pub unobstructed: bool,
    pub nonreduced: bool,
    #[serde(rename = "covers_M")]
    pub covers_m: bool,
    pub mrc: Option<MrcDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InventoryDocument {
    pub schema_version: String,
    pub g: i64,
    pub k: i64,
    pub expected_dim: i64,
    pub components: Vec<ComponentDocument>,
    pub notes: Vec<String>,
}

impl From<&ComponentRecord> for ComponentDocument {
    fn from(c: &ComponentRecord) -> Self {
        let pair = c.kind.pair();
        ComponentDocument {
            kind: c.kind.tag().to_string(),
            a: pair.map(|p| p.a),
            e: pair.map(|p| p.e),
            dim: c.dim,
            excess: c.excess(),
            delta: c.delta,
            labels: c.labels.names().map(str::to_string).collect(),
            unobstructed: c.unobstructed,
            nonreduced: c.nonreduced,
            covers_m: c.covers_m,
            mrc: c.mrc.as_ref().map(|m| MrcDocument {
                target: m.target.as_str().to_string(),
                dominant: m.dominant,
                pic_degrees: m.pic_degrees(),
                image_note: m.image_note.clone(),
            }),
        }
    }
}

impl From<&Inventory> for InventoryDocument {
    fn from(inv: &Inventory) -> Self {
        InventoryDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            g: inv.params.g(),
            k: inv.params.k(),
            expected_dim: inv.expected,
            components: inv.components.iter().map(ComponentDocument::from).collect(),
            notes: inv.notes.iter().map(|n| n.code().to_string()).collect(),
        }
    }
}

fn schema(msg: impl Into<String>) -> ReportError {
    ReportError::Schema(msg.into())
}

impl ComponentDocument {
    fn to_record(&self, expected: i64) -> Result<ComponentRecord> {
        let kind = match (self.kind.as_str(), self.a, self.e) {
            ("ME", None, None) => ComponentKind::Me,
            ("MAE", Some(a), Some(e)) => ComponentKind::Mae(PairAE::new(a, e)),
            (kind, a, e) => return Err(schema(format!("kind {kind} with a={a:?} e={e:?}"))),
        };
        if self.dim - expected != self.excess {
            return Err(schema(format!("excess {} != dim {} - expected {expected}", self.excess, self.dim)));
        }
        let labels = Labels::from_names(self.labels.iter().map(String::as_str))
            .ok_or_else(|| schema(format!("unknown label in {:?}", self.labels)))?;
        let mrc = match (&self.mrc, kind, self.delta) {
            (None, ComponentKind::Me, None) => None,
            (Some(m), ComponentKind::Mae(p), Some(delta)) => {
                let target =
                    MrcTarget::parse(&m.target).ok_or_else(|| schema(format!("unknown MRC target {}", m.target)))?;
                let mrc = MrcResult { delta, e: p.e, target, dominant: m.dominant, image_note: m.image_note.clone() };
                if mrc.pic_degrees() != m.pic_degrees {
                    return Err(schema(format!("pic_degrees {:?} do not match target", m.pic_degrees)));
                }
                Some(mrc)
            }
            _ => return Err(schema("delta/mrc must be null exactly for ME")),
        };
        Ok(ComponentRecord {
            kind,
            dim: self.dim,
            expected,
            delta: self.delta,
            labels,
            unobstructed: self.unobstructed,
            nonreduced: self.nonreduced,
            covers_m: self.covers_m,
            mrc,
        })
    }
}

impl InventoryDocument {
    pub fn into_inventory(self) -> Result<Inventory> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(schema(format!("unsupported schema_version {}", self.schema_version)));
        }
        let params = validate_params(self.g, self.k)?;
        if expected_dim(params) != self.expected_dim {
            return Err(schema(format!("expected_dim {} is not 2k+3g-3", self.expected_dim)));
        }
        let components = self.components.iter().map(|c| c.to_record(self.expected_dim)).collect::<Result<Vec<_>>>()?;
        let notes = self
            .notes
            .iter()
            .map(|n| InventoryNote::parse(n).ok_or_else(|| schema(format!("unknown note {n}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Inventory { params, expected: self.expected_dim, components, notes })
    }
}

/// Pretty JSON with lexicographically sorted keys and a trailing newline.
pub fn to_sorted_json<T: Serialize>(value: &T) -> Result<String> {
    // serde_json::Value objects are BTreeMap-backed, so keys come out sorted
    let value = serde_json::to_value(value)?;
    let mut s = serde_json::to_string_pretty(&value)?;
    s.push('\n');
    Ok(s)
}

pub fn inventory_to_json(inv: &Inventory) -> Result<String> {
    to_sorted_json(&InventoryDocument::from(inv))
}

pub fn parse_inventory_json(text: &str) -> Result<Inventory> {
    let doc: InventoryDocument = serde_json::from_str(text)?;
    doc.into_inventory()
}

fn opt(v: Option<i64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub(crate) fn csv_row(inv: &Inventory, c: &ComponentRecord) -> [String; 15] {
    let pair = c.kind.pair();
    [
        inv.params.g().to_string(),
        inv.params.k().to_string(),
        c.kind.tag().to_string(),
        opt(pair.map(|p| p.a)),
        opt(pair.map(|p| p.e)),
        c.dim.to_string(),
        c.expected.to_string(),
        c.excess().to_string(),
        opt(c.delta),
        c.labels.names().collect::<Vec<_>>().join(";"),
        c.unobstructed.to_string(),
        c.nonreduced.to_string(),
        c.covers_m.to_string(),
        c.mrc.as_ref().map(|m| m.target.as_str().to_string()).unwrap_or_default(),
        c.mrc.as_ref().map(|m| m.dominant.to_string()).unwrap_or_default(),
    ]
}

/// RFC-4180 CSV for a sequence of inventories, one row per component.
pub fn inventories_to_csv<'a>(invs: impl IntoIterator<Item = &'a Inventory>) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for inv in invs {
        for c in &inv.components {
            w.write_record(csv_row(inv, c))?;
        }
    }
    let bytes = w.into_inner().map_err(|e| ReportError::Csv(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("csv output is built from UTF-8 strings"))
}

const TABLE_HEADER: [&str; 10] =
    ["component", "dim", "excess", "delta", "labels", "unobstr", "nonred", "covers_M", "mrc", "pic"];

fn table_cells(c: &ComponentRecord) -> [String; 10] {
    let labels = c.labels.names().collect::<Vec<_>>().join(",");
    let yn = |b: bool| if b { "yes" } else { "no" }.to_string();
    let (mrc, pic) = match &c.mrc {
        None => ("-".to_string(), "-".to_string()),
        Some(m) => {
            let how = if m.delta == 0 {
                "onto"
            } else if m.dominant {
                "dominant"
            } else {
                "not dominant"
            };
            let pic = m.pic_degrees().iter().map(|d| format!("Pic^{d}")).collect::<Vec<_>>().join(" x ");
            (format!("{} ({how})", m.target), pic)
        }
    };
    [
        c.kind.to_string(),
        c.dim.to_string(),
        c.excess().to_string(),
        c.delta.map_or("-".to_string(), |d| d.to_string()),
        if labels.is_empty() { "-".to_string() } else { labels },
        yn(c.unobstructed),
        yn(c.nonreduced),
        yn(c.covers_m),
        mrc,
        pic,
    ]
}

/// Aligned plain-text table: a title line, a header row, one row per
/// component, then any notes.
pub fn inventory_to_table(inv: &Inventory) -> String {
    let rows: Vec<[String; 10]> = inv.components.iter().map(table_cells).collect();
    let mut widths = TABLE_HEADER.map(str::len);
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let pad = w - cell.chars().count();
            s.push_str(cell);
            s.extend(std::iter::repeat_n(' ', pad));
        }
        s.truncate(s.trim_end().len());
        s
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "g={} k={}  expected dim {}  {} component(s)",
        inv.params.g(),
        inv.params.k(),
        inv.expected,
        inv.len()
    );
    out.push_str(&line(&TABLE_HEADER.map(String::from)));
    out.push('\n');
    for r in &rows {
        out.push_str(&line(r));
        out.push('\n');
    }
    for n in &inv.notes {
        let _ = writeln!(out, "note: {}", n.code());
    }
    out
}

pub fn emit_inventory(inv: &Inventory, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => inventory_to_json(inv),
        OutputFormat::Csv => inventories_to_csv([inv]),
        OutputFormat::Table => Ok(inventory_to_table(inv)),
        other => Err(ReportError::Unsupported(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratcurves_core::classify;

    fn inv(g: i64, k: i64) -> Inventory {
        classify(validate_params(g, k).unwrap())
    }

    #[test]
    fn csv_example_one() {
        let text = emit_inventory(&inv(6, 15), OutputFormat::Csv).unwrap();
        let lines: Vec<_> = text.split("\r\n").filter(|l| !l.is_empty()).collect();
        assert_eq!(lines.len(), 1 + 5);
        assert_eq!(lines[0], CSV_HEADER.join(","));
        assert_eq!(lines[4], "6,15,MAE,10,1,53,45,8,0,,false,false,false,JAC,true");
        assert_eq!(lines[2], "6,15,MAE,9,1,46,45,1,3,,false,false,false,JAC_X_JAC,false");
    }

    #[test]
    fn csv_lines_row() {
        let text = emit_inventory(&inv(5, 1), OutputFormat::Csv).unwrap();
        let rows: Vec<_> = text.split("\r\n").skip(1).filter(|l| !l.is_empty()).collect();
        assert_eq!(rows, ["5,1,MAE,1,0,14,14,0,0,nice;max_dim,true,false,false,JAC,true"]);
    }

    #[test]
    fn me_row_has_empty_cells() {
        let text = emit_inventory(&inv(4, 6), OutputFormat::Csv).unwrap();
        let me = text.split("\r\n").nth(1).unwrap();
        assert_eq!(me, "4,6,ME,,,21,21,0,,nice,true,false,true,,");
    }

    #[test]
    fn json_keys_sorted_and_nulls() {
        let text = emit_inventory(&inv(4, 6), OutputFormat::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        let me = &v["components"][0];
        assert_eq!(me["kind"], "ME");
        assert!(me["a"].is_null() && me["e"].is_null() && me["delta"].is_null() && me["mrc"].is_null());
        // text order matches sorted order
        let a_pos = text.find("\"a\"").unwrap();
        let covers_pos = text.find("\"covers_M\"").unwrap();
        let dim_pos = text.find("\"dim\"").unwrap();
        assert!(a_pos < covers_pos && covers_pos < dim_pos);
        assert!(text.ends_with("}\n"));
    }

    #[test]
    fn json_round_trip_examples() {
        for (g, k) in [(6, 15), (7, 61), (4, 6), (10, 33), (9, 1), (2, 8)] {
            let i = inv(g, k);
            let text = inventory_to_json(&i).unwrap();
            assert_eq!(parse_inventory_json(&text).unwrap(), i);
        }
    }

    #[test]
    fn malformed_documents_rejected() {
        let mut doc = InventoryDocument::from(&inv(6, 15));
        doc.components[0].labels.push("shiny".into());
        assert!(matches!(doc.into_inventory(), Err(ReportError::Schema(_))));
        let mut doc = InventoryDocument::from(&inv(6, 15));
        doc.components[1].excess += 1;
        assert!(matches!(doc.into_inventory(), Err(ReportError::Schema(_))));
        let mut doc = InventoryDocument::from(&inv(6, 15));
        doc.g = 1;
        assert!(matches!(doc.into_inventory(), Err(ReportError::Params(_))));
        assert!(parse_inventory_json("{").is_err());
    }

    #[test]
    fn table_example_one() {
        let t = emit_inventory(&inv(6, 15), OutputFormat::Table).unwrap();
        let lines: Vec<_> = t.lines().collect();
        assert_eq!(lines.len(), 2 + 5);
        assert!(lines[0].starts_with("g=6 k=15  expected dim 45  5 component(s)"));
        assert!(lines[2].starts_with("M(8,7)"));
        assert!(lines[4].contains("almost_nice"));
        assert!(lines[6].contains("max_dim"));
        assert!(emit_inventory(&inv(6, 15), OutputFormat::Svg).is_err());
    }
}
