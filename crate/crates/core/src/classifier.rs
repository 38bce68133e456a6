//! Component inventory of `Hom_k(P¹, M)`.
//!
//! `M(a, e)` closes up to a component exactly when `(a, e)` is admissible
//! and `dim M(a, e) ≥ 2k + 3g − 3`. Together with the nice component (which
//! is `M_E` for even `k` and `M((k+1)/2, (k−1)/2)` for odd `k`) these are all
//! the components.

use alloc::vec::Vec;
use core::fmt;

use crate::dimension::{dim_mae, dim_me, expected_dim};
use crate::error::Result;
use crate::lattice::{delta_in_range, in_range, PairAE, Params, RangeIter};
use crate::mrc::{mrc_quotient, MrcResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    /// The equal-splitting component `M_E` (even `k` only).
    Me,
    /// The closure of `M(a, e)`.
    Mae(PairAE),
}

impl ComponentKind {
    pub fn pair(&self) -> Option<PairAE> {
        match self {
            ComponentKind::Me => None,
            ComponentKind::Mae(p) => Some(*p),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            ComponentKind::Me => "ME",
            ComponentKind::Mae(_) => "MAE",
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::Me => f.write_str("M_E"),
            ComponentKind::Mae(p) => write!(f, "M{p}"),
        }
    }
}

/// Labels a component can carry.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Labels {
    pub nice: bool,
    pub almost_nice: bool,
    pub max_dim: bool,
}

impl Labels {
    pub const NAMES: [&'static str; 3] = ["nice", "almost_nice", "max_dim"];

    /// Label names in canonical order.
    pub fn names(&self) -> impl Iterator<Item = &'static str> {
        let flags = [self.nice, self.almost_nice, self.max_dim];
        Self::NAMES.into_iter().zip(flags).filter(|(_, on)| *on).map(|(n, _)| n)
    }

    /// Inverse of [`Labels::names`]; `None` on an unknown name.
    pub fn from_names<'a>(names: impl IntoIterator<Item = &'a str>) -> Option<Self> {
        let mut l = Labels::default();
        for n in names {
            match n {
                "nice" => l.nice = true,
                "almost_nice" => l.almost_nice = true,
                "max_dim" => l.max_dim = true,
                _ => return None,
            }
        }
        Some(l)
    }

    pub fn is_empty(&self) -> bool {
        !(self.nice || self.almost_nice || self.max_dim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentRecord {
    pub kind: ComponentKind,
    pub dim: i64,
    pub expected: i64,
    /// Absent for `M_E`.
    pub delta: Option<i64>,
    pub labels: Labels,
    pub unobstructed: bool,
    pub nonreduced: bool,
    pub covers_m: bool,
    /// Absent for `M_E`.
    pub mrc: Option<MrcResult>,
}

impl ComponentRecord {
    pub fn excess(&self) -> i64 {
        self.dim - self.expected
    }
}

/// Annotations attached to an inventory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InventoryNote {
    /// Odd `k < g − 1`: the nice component is reported unobstructed although
    /// the obstruction criterion for `M(a, e)` components is only stated
    /// for `k ≥ g − 1`.
    NiceUnobstructedBelowGMinus1,
}

impl InventoryNote {
    pub fn code(&self) -> &'static str {
        match self {
            InventoryNote::NiceUnobstructedBelowGMinus1 => "nice_unobstructed_below_g_minus_1",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "nice_unobstructed_below_g_minus_1" => Some(InventoryNote::NiceUnobstructedBelowGMinus1),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Inventory {
    pub params: Params,
    pub expected: i64,
    /// `M_E` first when present, then `M(a, e)` by `(a, e)`.
    pub components: Vec<ComponentRecord>,
    pub notes: Vec<InventoryNote>,
}

impl Inventory {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn get(&self, kind: ComponentKind) -> Option<&ComponentRecord> {
        self.components.iter().find(|c| c.kind == kind)
    }

    pub fn get_pair(&self, a: i64, e: i64) -> Option<&ComponentRecord> {
        self.get(ComponentKind::Mae(PairAE::new(a, e)))
    }

    pub fn pairs(&self) -> impl Iterator<Item = PairAE> + '_ {
        self.components.iter().filter_map(|c| c.kind.pair())
    }

    pub fn mae_count(&self) -> usize {
        self.pairs().count()
    }
}

pub fn nice_component(params: Params) -> ComponentKind {
    if params.k_is_odd() {
        let k = params.k();
        ComponentKind::Mae(PairAE::new((k + 1) / 2, (k - 1) / 2))
    } else {
        ComponentKind::Me
    }
}

/// `(kg/(2(g−1)), g/2 − 1)` when `g` is even and `(g − 1) | k`.
pub fn almost_nice_component(params: Params) -> Option<PairAE> {
    let (g, k) = (params.g(), params.k());
    if !params.g_is_even() || k % (g - 1) != 0 {
        return None;
    }
    // k = m(g − 1) and g even, so kg/(2(g − 1)) = m·(g/2)
    let pair = PairAE::new((k / (g - 1)) * (g / 2), g / 2 - 1);
    debug_assert!(in_range(k, pair.a, pair.e));
    Some(pair)
}

pub fn is_component(params: Params, a: i64, e: i64) -> bool {
    let pair = PairAE::new(a, e);
    match dim_mae(params, pair) {
        Ok(d) => d >= expected_dim(params),
        Err(_) => false,
    }
}

pub fn unobstructed_flag(params: Params, kind: ComponentKind) -> bool {
    kind == nice_component(params) || matches!(kind, ComponentKind::Mae(p) if Some(p) == almost_nice_component(params))
}

pub fn nonreduced_flag(_params: Params, record: &ComponentRecord) -> bool {
    matches!(record.kind, ComponentKind::Mae(_))
        && record.dim == record.expected
        && !record.labels.nice
        && !record.labels.almost_nice
}

pub fn covers_flag(params: Params, record: &ComponentRecord) -> bool {
    match record.kind {
        ComponentKind::Me => true,
        ComponentKind::Mae(p) => {
            let nice_cover =
                params.k_is_odd() && params.k() >= params.g() - 1 && ComponentKind::Mae(p) == nice_component(params);
            nice_cover || Some(p) == almost_nice_component(params)
        }
    }
}

fn record_for(params: Params, kind: ComponentKind, dim: i64) -> Result<ComponentRecord> {
    let k = params.k();
    let nice = nice_component(params);
    let almost = almost_nice_component(params);
    let (delta, mrc) = match kind {
        ComponentKind::Me => (None, None),
        ComponentKind::Mae(p) => (Some(delta_in_range(k, p)?), Some(mrc_quotient(params, p)?)),
    };
    let labels = Labels {
        nice: kind == nice,
        almost_nice: kind.pair().is_some() && kind.pair() == almost,
        max_dim: kind == ComponentKind::Mae(PairAE::new(k, 0)),
    };
    let mut rec = ComponentRecord {
        kind,
        dim,
        expected: expected_dim(params),
        delta,
        labels,
        unobstructed: unobstructed_flag(params, kind),
        nonreduced: false,
        covers_m: false,
        mrc,
    };
    rec.nonreduced = nonreduced_flag(params, &rec);
    rec.covers_m = covers_flag(params, &rec);
    Ok(rec)
}

/// Full component inventory for `(g, k)`.
pub fn classify(params: Params) -> Inventory {
    let expected = expected_dim(params);
    let mut components = Vec::new();
    // every admissible pair has dim and δ bounded by a few multiples of
    // MAX_PARAM², well inside i64, so the record builders cannot fail
    if !params.k_is_odd() {
        let dim = dim_me(params).expect("k is even");
        components.push(record_for(params, ComponentKind::Me, dim).expect("M_E record"));
    }
    for pair in RangeIter::new(params.k()) {
        let dim = dim_mae(params, pair).expect("pair comes from the range");
        if dim >= expected {
            components.push(record_for(params, ComponentKind::Mae(pair), dim).expect("in-range record"));
        }
    }
    let mut notes = Vec::new();
    if params.k_is_odd() && params.k() < params.g() - 1 {
        notes.push(InventoryNote::NiceUnobstructedBelowGMinus1);
    }
    Inventory { params, expected, components, notes }
}
