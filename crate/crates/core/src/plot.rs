//! ASCII and SVG pictures of the `(a, e)` lattice: the admissible range,
//! the curves `A` and `B`, and the component markers.
//!
//! Output is a pure function of `(g, k, format)`. Curve samples are exact
//! rationals until the final conversion to fixed three-decimal SVG
//! coordinates.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::classifier::{classify, Inventory, Labels};
use crate::lattice::{enumerate_range, PairAE, Params};
use crate::oracle::{BoundaryCurves, Ratio};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotFormat {
    Ascii,
    Svg,
}

/// Marker kinds, one per admissible lattice point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Marker {
    Range,
    Component,
    Nice,
    AlmostNice,
    NiceAndAlmostNice,
}

impl Marker {
    fn from_labels(labels: Labels) -> Self {
        match (labels.nice, labels.almost_nice) {
            (true, true) => Marker::NiceAndAlmostNice,
            (true, false) => Marker::Nice,
            (false, true) => Marker::AlmostNice,
            (false, false) => Marker::Component,
        }
    }

    pub fn ascii(&self) -> char {
        match self {
            Marker::Range => '.',
            Marker::Component => '#',
            Marker::Nice => 'N',
            Marker::AlmostNice => 'A',
            Marker::NiceAndAlmostNice => '*',
        }
    }

    pub fn svg_class(&self) -> &'static str {
        match self {
            Marker::Range => "pt range",
            Marker::Component => "pt component",
            Marker::Nice => "pt component nice",
            Marker::AlmostNice => "pt component almost-nice",
            Marker::NiceAndAlmostNice => "pt component nice almost-nice",
        }
    }

    pub fn is_component(&self) -> bool {
        *self != Marker::Range
    }
}

/// Lattice window shown in a picture (inclusive bounds).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Viewport {
    pub a_min: i64,
    pub a_max: i64,
    pub e_min: i64,
    pub e_max: i64,
}

#[derive(Debug, Clone)]
pub struct PlotSpec {
    pub params: Params,
    pub format: PlotFormat,
    pub viewport: Viewport,
    pub markers: BTreeMap<PairAE, Marker>,
}

impl PlotSpec {
    pub fn new(params: Params, format: PlotFormat) -> Self {
        Self::from_inventory(&classify(params), format)
    }

    pub fn from_inventory(inventory: &Inventory, format: PlotFormat) -> Self {
        let params = inventory.params;
        let k = params.k();
        let mut markers: BTreeMap<PairAE, Marker> =
            enumerate_range(k).into_iter().map(|p| (p, Marker::Range)).collect();
        for c in &inventory.components {
            if let Some(p) = c.kind.pair() {
                markers.insert(p, Marker::from_labels(c.labels));
            }
        }
        let top = markers.keys().map(|p| p.e).max().unwrap_or(0);
        let viewport = Viewport { a_min: (k + 1) / 2, a_max: k + 1, e_min: 0, e_max: top + 1 };
        PlotSpec { params, format, viewport, markers }
    }

    pub fn render(&self) -> String {
        match self.format {
            PlotFormat::Ascii => self.render_ascii(),
            PlotFormat::Svg => self.render_svg(),
        }
    }

    fn render_ascii(&self) -> String {
        let vp = self.viewport;
        let width = format!("{}", vp.e_max).len();
        let mut out = String::new();
        let _ = writeln!(
            out,
            "g={} k={}  a={}..{}  e={}..{}",
            self.params.g(),
            self.params.k(),
            vp.a_min,
            vp.a_max,
            vp.e_min,
            vp.e_max
        );
        for e in (vp.e_min..=vp.e_max).rev() {
            let _ = write!(out, "{e:>width$} |");
            for a in vp.a_min..=vp.a_max {
                let c = self.markers.get(&PairAE::new(a, e)).map_or(' ', Marker::ascii);
                out.push(c);
            }
            out.push('\n');
        }
        let cols = (vp.a_max - vp.a_min + 1) as usize;
        let _ = writeln!(out, "{:>width$} +{}", "", "-".repeat(cols));
        out.push_str("legend: . range  # component  N nice  A almost-nice  * nice+almost-nice\n");
        out
    }

    fn render_svg(&self) -> String {
        let vp = self.viewport;
        let span = (vp.a_max - vp.a_min).max(vp.e_max - vp.e_min).max(1);
        let cell: i64 = if span <= 20 { 40 } else { (800 / span).max(6) };
        let margin: i64 = 50;
        let width = 2 * margin + (vp.a_max - vp.a_min) * cell;
        let height = 2 * margin + (vp.e_max - vp.e_min) * cell;
        let x_of = |a: Ratio| -> Ratio {
            let shifted = a.numer() - (vp.a_min as i128) * a.denom();
            Ratio::new(margin as i128 * a.denom() + shifted * cell as i128, a.denom()).expect("den > 0")
        };
        let y_of = |e: Ratio| -> Ratio {
            let shifted = (vp.e_max as i128) * e.denom() - e.numer();
            Ratio::new(margin as i128 * e.denom() + shifted * cell as i128, e.denom()).expect("den > 0")
        };
        let coord = |r: Ratio| r.to_fixed(3);

        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
        );
        let _ = writeln!(out, "<title>(a,e) lattice for g={} k={}</title>", self.params.g(), self.params.k());
        out.push_str(concat!(
            "<style>",
            ".frame{fill:none;stroke:#888;stroke-width:1}",
            ".curve-a{fill:none;stroke:#1f77b4;stroke-width:2}",
            ".curve-b{fill:none;stroke:#d62728;stroke-width:2}",
            ".range{fill:#bbb}",
            ".component{fill:#333}",
            ".nice{fill:#2ca02c}",
            ".almost-nice{fill:#ff7f0e}",
            ".nice.almost-nice{fill:#9467bd}",
            "text{font-family:monospace;font-size:12px}",
            "</style>\n"
        ));
        let _ = writeln!(
            out,
            "<rect class=\"frame\" x=\"{margin}\" y=\"{margin}\" width=\"{}\" height=\"{}\"/>",
            width - 2 * margin,
            height - 2 * margin
        );
        for a in vp.a_min..=vp.a_max {
            let x = coord(x_of(Ratio::integer(a as i128)));
            let _ = writeln!(out, "<text class=\"tick\" x=\"{x}\" y=\"{}\">{a}</text>", height - margin + 20);
        }
        for e in vp.e_min..=vp.e_max {
            let y = coord(y_of(Ratio::integer(e as i128)));
            let _ = writeln!(out, "<text class=\"tick\" x=\"{}\" y=\"{y}\">{e}</text>", margin - 30);
        }

        let curves = BoundaryCurves::new(self.params);
        let lo = Ratio::integer(vp.e_min as i128 - 1);
        let hi = Ratio::integer(vp.e_max as i128 + 1);
        for (class, samples) in
            [("curve-a", curves.sample_a(vp.a_min, vp.a_max)), ("curve-b", curves.sample_b(vp.a_min, vp.a_max))]
        {
            let pts: Vec<String> = samples
                .into_iter()
                .filter(|(_, e)| *e >= lo && *e <= hi)
                .map(|(a, e)| format!("{},{}", coord(x_of(a)), coord(y_of(e))))
                .collect();
            if pts.len() >= 2 {
                let _ = writeln!(out, "<polyline class=\"{class}\" points=\"{}\"/>", pts.join(" "));
            }
        }

        let radius = (cell / 5).max(2);
        for (p, m) in &self.markers {
            let _ = writeln!(
                out,
                "<circle class=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{radius}\"><title>{p}</title></circle>",
                m.svg_class(),
                coord(x_of(Ratio::integer(p.a as i128))),
                coord(y_of(Ratio::integer(p.e as i128))),
            );
        }
        let _ = writeln!(
            out,
            "<text class=\"legend\" x=\"{margin}\" y=\"20\">g={} k={}: grey range, dark component, green nice, orange almost-nice; blue A, red B</text>",
            self.params.g(),
            self.params.k()
        );
        out.push_str("</svg>\n");
        out
    }

    pub fn marker_count(&self) -> usize {
        self.markers.len()
    }

    pub fn component_marker_count(&self) -> usize {
        self.markers.values().filter(|m| m.is_component()).count()
    }
}

pub fn render_region(params: Params, format: PlotFormat) -> String {
    PlotSpec::new(params, format).render()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::validate_params;

    fn p(g: i64, k: i64) -> Params {
        validate_params(g, k).unwrap()
    }

    fn grid_chars(doc: &str) -> Vec<char> {
        doc.lines().filter_map(|l| l.split_once(" |").map(|(_, cells)| cells)).flat_map(|cells| cells.chars()).collect()
    }

    #[test]
    fn lines_ascii_has_one_marked_cell() {
        let doc = render_region(p(2, 1), PlotFormat::Ascii);
        let marked: Vec<char> = grid_chars(&doc).into_iter().filter(|c| *c != ' ').collect();
        assert_eq!(marked, ['*']);
        // bottom row is e = 0, first column a = 1
        let bottom = doc.lines().find(|l| l.starts_with("0 |")).unwrap();
        assert_eq!(bottom, "0 |* ");
    }

    #[test]
    fn genus_three_ascii_has_two_components() {
        let doc = render_region(p(3, 9), PlotFormat::Ascii);
        let chars = grid_chars(&doc);
        assert_eq!(chars.iter().filter(|c| "#NA*".contains(**c)).count(), 2);
        assert_eq!(chars.iter().filter(|c| **c != ' ').count(), enumerate_range(9).len());
    }

    #[test]
    fn svg_markers_match_inventory() {
        let spec = PlotSpec::new(p(6, 15), PlotFormat::Svg);
        let doc = spec.render();
        assert_eq!(doc.matches("class=\"pt component").count(), 5);
        assert_eq!(doc.matches("<circle").count(), enumerate_range(15).len());
        assert_eq!(doc.matches("class=\"curve-a\"").count(), 1);
        assert_eq!(doc.matches("class=\"curve-b\"").count(), 1);
        assert_eq!(spec.component_marker_count(), 5);
        assert_eq!(doc, render_region(p(6, 15), PlotFormat::Svg));
    }

    #[test]
    fn curve_b_omitted_for_lines() {
        let doc = render_region(p(2, 1), PlotFormat::Svg);
        assert_eq!(doc.matches("class=\"curve-a\"").count(), 1);
        assert_eq!(doc.matches("class=\"curve-b\"").count(), 0);
    }

    #[test]
    fn viewport_bounds() {
        let s = PlotSpec::new(p(6, 15), PlotFormat::Ascii);
        assert_eq!(s.viewport, Viewport { a_min: 8, a_max: 16, e_min: 0, e_max: 8 });
        let s = PlotSpec::new(p(4, 6), PlotFormat::Ascii);
        assert_eq!(s.viewport, Viewport { a_min: 3, a_max: 7, e_min: 0, e_max: 2 });
    }
}
