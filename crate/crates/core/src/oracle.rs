//! Second route to the component region.
//!
//! The classifier decides component-hood pair by pair from the dimension
//! formula. Here the region is rebuilt from its boundary instead: the
//! hyperbola `A` (where `δ = 0`), the hyperbola `B` (where the dimension is
//! exactly the expected one), the line `a = k/2 + 1` and the isolated nice
//! point. For each column `a` the admissible `e` are read off as floors of
//! the curve values, so no dimension is ever evaluated. The two routes are
//! then compared, and the algebraic identities the region description rests
//! on are checked exactly.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::classifier::{
    almost_nice_component, classify, covers_flag, is_component, nice_component, unobstructed_flag, ComponentKind,
};
use crate::dimension::{dim_excess, dim_mae, dim_mae_unchecked, dim_me, expected_dim};
use crate::lattice::{delta, enumerate_range, in_range, max_e, validate_params, PairAE, Params, RangeIter};
use crate::mrc::{mrc_quotient, MrcTarget};

/// An exact rational with positive denominator.
#[derive(Debug, Clone, Copy)]
pub struct Ratio {
    num: i128,
    den: i128,
}

impl Ratio {
    /// `None` when `den` is zero.
    pub fn new(num: i128, den: i128) -> Option<Self> {
        match den.cmp(&0) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Ratio { num, den }),
            Ordering::Less => Some(Ratio { num: -num, den: -den }),
        }
    }

    pub fn integer(n: i128) -> Self {
        Ratio { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn floor(&self) -> i128 {
        self.num.div_euclid(self.den)
    }

    pub fn ceil(&self) -> i128 {
        -(-self.num).div_euclid(self.den)
    }

    pub fn to_integer(&self) -> Option<i128> {
        (self.num % self.den == 0).then(|| self.num / self.den)
    }

    /// Decimal rendering with exactly `digits` fractional digits, rounded
    /// half away from zero.
    pub fn to_fixed(&self, digits: u32) -> String {
        let scale = 10i128.pow(digits);
        let scaled = self.num * scale;
        let q = scaled / self.den;
        let r = scaled % self.den;
        let q = if 2 * r.abs() >= self.den { q + scaled.signum() } else { q };
        let sign = if q < 0 { "-" } else { "" };
        let q = q.abs();
        if digits == 0 {
            format!("{sign}{q}")
        } else {
            format!("{sign}{}.{:0width$}", q / scale, q % scale, width = digits as usize)
        }
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        self.num * other.den == other.num * self.den
    }
}

impl Eq for Ratio {}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// `slope·a + offset` with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Linear {
    pub slope: i128,
    pub offset: i128,
}

/// A curve `e = num(a) / den(a)` with linear numerator and denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalCurve {
    pub num: Linear,
    pub den: Linear,
}

impl RationalCurve {
    /// Value at `a`; `None` where the denominator vanishes.
    pub fn at(&self, a: Ratio) -> Option<Ratio> {
        let (p, q) = (a.numer(), a.denom());
        Ratio::new(self.num.slope * p + self.num.offset * q, self.den.slope * p + self.den.offset * q)
    }

    pub fn at_int(&self, a: i64) -> Option<Ratio> {
        self.at(Ratio::integer(a as i128))
    }
}

/// The hyperbolas bounding the component region for a given `(g, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryCurves {
    pub g: i64,
    pub k: i64,
    /// `e = (k − a)/(2a − k)`, the `δ = 0` locus.
    pub curve_a: RationalCurve,
    /// `e = (2g − 3)/2 + (2g − 2 − k)/(2(2a − k − 2))`, the locus where
    /// `dim M(a, e)` equals the expected dimension.
    pub curve_b: RationalCurve,
}

impl BoundaryCurves {
    pub fn new(params: Params) -> Self {
        let (g, k) = (params.g() as i128, params.k() as i128);
        let curve_a = RationalCurve { num: Linear { slope: -1, offset: k }, den: Linear { slope: 2, offset: -k } };
        // over the common denominator 2(2a − k − 2)
        let curve_b = RationalCurve {
            num: Linear { slope: 2 * (2 * g - 3), offset: -(2 * g - 3) * (k + 2) + (2 * g - 2 - k) },
            den: Linear { slope: 4, offset: -2 * k - 4 },
        };
        BoundaryCurves { g: params.g(), k: params.k(), curve_a, curve_b }
    }

    /// `B` degenerates to the horizontal line `e = (2g − 3)/2` when `k = 2g − 2`.
    pub fn b_is_line(&self) -> bool {
        self.k == 2 * self.g - 2
    }

    /// The two points where `A` and `B` meet:
    /// `(kg/(2(g − 1)), g/2 − 1)` and `((k + 1)/2, (k − 1)/2)`.
    pub fn intersections(&self) -> [(Ratio, Ratio); 2] {
        let (g, k) = (self.g as i128, self.k as i128);
        [
            (Ratio::new(k * g, 2 * (g - 1)).expect("g ≥ 2"), Ratio::new(g - 2, 2).expect("nonzero")),
            (Ratio::new(k + 1, 2).expect("nonzero"), Ratio::new(k - 1, 2).expect("nonzero")),
        ]
    }

    /// Where `B` meets the `a`-axis: `((k + 1)(g − 1) − 1)/(2g − 3)`.
    pub fn b_axis_crossing(&self) -> Ratio {
        let (g, k) = (self.g as i128, self.k as i128);
        Ratio::new((k + 1) * (g - 1) - 1, 2 * g - 3).expect("g ≥ 2")
    }

    /// `A` sampled at the half-integers `a_lo, a_lo + ½, …, a_hi` where it is defined.
    pub fn sample_a(&self, a_lo: i64, a_hi: i64) -> Vec<(Ratio, Ratio)> {
        sample(&self.curve_a, a_lo, a_hi, |twice_a| twice_a > self.k as i128)
    }

    /// The branch of `B` with `2a > k + 2`, sampled like [`Self::sample_a`].
    pub fn sample_b(&self, a_lo: i64, a_hi: i64) -> Vec<(Ratio, Ratio)> {
        sample(&self.curve_b, a_lo, a_hi, |twice_a| twice_a > self.k as i128 + 2)
    }
}

fn sample(curve: &RationalCurve, a_lo: i64, a_hi: i64, keep: impl Fn(i128) -> bool) -> Vec<(Ratio, Ratio)> {
    let mut out = Vec::new();
    for twice_a in (2 * a_lo as i128)..=(2 * a_hi as i128) {
        if !keep(twice_a) {
            continue;
        }
        let a = Ratio::new(twice_a, 2).expect("nonzero");
        if let Some(e) = curve.at(a) {
            out.push((a, e));
        }
    }
    out
}

/// The component region assembled from its boundary pieces:
/// the nice point for odd `k`, the admissible part of `a = k/2 + 1` for even
/// `k ≤ 2g − 2`, the lattice points on or under both `A` and `B` for
/// `2a ≥ k + 3`, and `(k, 0)`.
pub fn region_r_geometric(params: Params) -> BTreeSet<PairAE> {
    let (g, k) = (params.g(), params.k());
    let curves = BoundaryCurves::new(params);
    let mut region = BTreeSet::new();

    if k % 2 == 1 {
        region.insert(PairAE::new((k + 1) / 2, (k - 1) / 2));
    }

    if k % 2 == 0 && k <= 2 * g - 2 {
        let a = k / 2 + 1;
        if a <= k {
            let top = curves.curve_a.at_int(a).expect("2a > k").floor();
            for e in 1..=top as i64 {
                region.insert(PairAE::new(a, e));
            }
        }
    }

    // 2a ≥ k + 3, so 2a − k − 2 > 0 and B's denominator is positive
    let first = (k + 3 + 1) / 2;
    for a in first..=k {
        let under_a = curves.curve_a.at_int(a).expect("2a > k").floor();
        let under_b = curves.curve_b.at_int(a).expect("2a ≠ k + 2").floor();
        let top = under_a.min(under_b);
        for e in 1..=top as i64 {
            region.insert(PairAE::new(a, e));
        }
    }

    // dim M(k, 0) − expected = (k − 1)(g − 2) ≥ 0
    if (k - 1) * (g - 2) >= 0 {
        region.insert(PairAE::new(k, 0));
    }
    region
}

/// `{ (a, e) admissible : dim M(a, e) ≥ expected }` by direct evaluation.
pub fn region_r_direct(params: Params) -> BTreeSet<PairAE> {
    let expected = expected_dim(params) as i128;
    RangeIter::new(params.k()).filter(|p| dim_mae_unchecked(params.g(), params.k(), p.a, p.e) >= expected).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub g: i64,
    pub k: i64,
    pub pair: PairAE,
    pub direct: bool,
    pub geometric: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure {
    pub g: i64,
    pub k: i64,
    pub identity: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    /// `(g, k)` cells checked, sorted.
    pub grid: Vec<(i64, i64)>,
    pub mismatches: Vec<Mismatch>,
    pub identity_failures: Vec<IdentityFailure>,
    pub fixtures: Vec<FixtureOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.identity_failures.is_empty() && self.fixtures.iter().all(|f| f.passed)
    }

    /// Appends `other` and restores canonical `(g, k)` ordering.
    pub fn merge(&mut self, other: VerificationReport) {
        self.grid.extend(other.grid);
        self.mismatches.extend(other.mismatches);
        self.identity_failures.extend(other.identity_failures);
        self.fixtures.extend(other.fixtures);
        self.grid.sort_unstable();
        self.grid.dedup();
        self.mismatches.sort_by_key(|m| (m.g, m.k, m.pair));
        self.identity_failures.sort_by_key(|x| (x.g, x.k));
    }
}

pub fn cross_check_region(params: Params) -> Vec<Mismatch> {
    let geometric = region_r_geometric(params);
    let direct = region_r_direct(params);
    geometric
        .symmetric_difference(&direct)
        .map(|&pair| Mismatch {
            g: params.g(),
            k: params.k(),
            pair,
            direct: direct.contains(&pair),
            geometric: geometric.contains(&pair),
        })
        .collect()
}

pub fn check_identities(params: Params) -> Vec<IdentityFailure> {
    let (g, k) = (params.g(), params.k());
    let mut fails = Vec::new();
    let mut fail = |identity: &'static str, detail: String| fails.push(IdentityFailure { g, k, identity, detail });
    let dim = |p: PairAE| dim_mae_unchecked(g, k, p.a, p.e);
    let (g128, k128) = (g as i128, k as i128);

    let pairs = enumerate_range(k);
    let mut by_a: BTreeMap<i64, Vec<PairAE>> = BTreeMap::new();
    let mut by_e: BTreeMap<i64, Vec<PairAE>> = BTreeMap::new();
    for &p in &pairs {
        by_a.entry(p.a).or_default().push(p);
        by_e.entry(p.e).or_default().push(p);
    }

    for column in by_a.values() {
        for &p in column {
            for &q in column {
                let (a, e, e2) = (p.a as i128, p.e as i128, q.e as i128);
                if dim(q) - dim(p) != (2 * a - k128 - 2) * (e - e2) {
                    fail("dim(a,e')-dim(a,e)=(2a-k-2)(e-e')", format!("{p} vs {q}"));
                }
            }
        }
    }
    for row in by_e.values() {
        for &p in row {
            for &q in row {
                let (a, a2, e) = (p.a as i128, q.a as i128, p.e as i128);
                if dim(q) - dim(p) != (2 * g128 - 2 * e - 3) * (a2 - a) {
                    fail("dim(a',e)-dim(a,e)=(2g-2e-3)(a'-a)", format!("{p} vs {q}"));
                }
            }
        }
    }

    let expected = expected_dim(params) as i128;
    for &p in &pairs {
        let (a, e) = (p.a as i128, p.e as i128);
        let d = 2 * a - k128 - 2;
        if d == 0 {
            continue;
        }
        let on_b = e * 2 * d == (2 * g128 - 3) * d + (2 * g128 - 2 - k128);
        if (dim(p) == expected) != on_b {
            fail("excess=0 <=> pair on B", format!("{p}"));
        }
    }

    let curves = BoundaryCurves::new(params);
    let [(a1, e1), (a2, e2)] = curves.intersections();
    if curves.curve_a.at(a1) != Some(e1) {
        fail("A passes through (kg/(2(g-1)), g/2-1)", format!("a = {a1}"));
    }
    if !curves.b_is_line() && curves.curve_b.at(a1) != Some(e1) {
        fail("B passes through (kg/(2(g-1)), g/2-1)", format!("a = {a1}"));
    }
    if curves.curve_a.at(a2) != Some(e2) || curves.curve_b.at(a2) != Some(e2) {
        fail("A and B pass through ((k+1)/2, (k-1)/2)", format!("a = {a2}"));
    }
    if !curves.b_is_line() && curves.curve_b.at(curves.b_axis_crossing()) != Some(Ratio::integer(0)) {
        fail("B meets the a-axis at ((k+1)(g-1)-1)/(2g-3)", format!("{}", curves.b_axis_crossing()));
    }
    if curves.b_is_line() {
        let line = Ratio::new(2 * g128 - 3, 2).expect("nonzero");
        for a in (k / 2 + 2)..=k {
            if curves.curve_b.at_int(a) != Some(line) {
                fail("B is the line e=(2g-3)/2 when k=2g-2", format!("a = {a}"));
            }
        }
    }

    if let Some(p) = almost_nice_component(params) {
        if delta(k, p.a, p.e) != 0 || dim(p) != expected {
            fail("almost nice point lies on A and B", format!("{p}"));
        }
    }
    if k % 2 == 1 {
        let p = PairAE::new((k + 1) / 2, (k - 1) / 2);
        if delta(k, p.a, p.e) != 0 || dim(p) != expected {
            fail("nice point lies on A and B", format!("{p}"));
        }
    }

    if dim(PairAE::new(k, 0)) != (k128 + 2) * g128 - 1 {
        fail("dim M(k,0)=(k+2)g-1", String::new());
    }
    fails
}

/// Region cross-check and identity checks for one cell.
pub fn verify_cell(params: Params) -> VerificationReport {
    VerificationReport {
        grid: alloc::vec![(params.g(), params.k())],
        mismatches: cross_check_region(params),
        identity_failures: check_identities(params),
        fixtures: Vec::new(),
    }
}

/// Sequential sweep over `g_lo..=g_hi` × `k_lo..=k_hi`, skipping invalid cells.
pub fn verify_grid(g_lo: i64, g_hi: i64, k_lo: i64, k_hi: i64) -> VerificationReport {
    let mut report = VerificationReport::default();
    for g in g_lo..=g_hi {
        for k in k_lo..=k_hi {
            if let Ok(params) = validate_params(g, k) {
                report.merge(verify_cell(params));
            }
        }
    }
    report
}

fn params(g: i64, k: i64) -> Params {
    validate_params(g, k).expect("fixture parameters are valid")
}

fn pairs(list: &[(i64, i64)]) -> Vec<PairAE> {
    list.iter().copied().map(PairAE::from).collect()
}

fn mae_dims(g: i64, k: i64) -> Vec<(i64, i64, i64)> {
    classify(params(g, k)).components.iter().filter_map(|c| c.kind.pair().map(|p| (p.a, p.e, c.dim))).collect()
}

type Fixture = (&'static str, fn() -> bool);

fn fixture_list() -> Vec<Fixture> {
    alloc::vec![
        ("validate_params(6,15) accepted", || validate_params(6, 15).is_ok()),
        ("in_range(15,9,2)", || in_range(15, 9, 2)),
        ("in_range(15,15,0)", || in_range(15, 15, 0)),
        ("delta(15,9,1) = 3", || delta(15, 9, 1) == 3),
        ("range k=1 is {(1,0)}", || enumerate_range(1) == pairs(&[(1, 0)])),
        ("range k=2 is {(2,0)}", || enumerate_range(2) == pairs(&[(2, 0)])),
        ("range k=3 is {(2,1),(3,0)}", || enumerate_range(3) == pairs(&[(2, 1), (3, 0)])),
        ("range k=15 contains the five components", || {
            let r = enumerate_range(15);
            pairs(&[(8, 7), (9, 1), (9, 2), (10, 1), (15, 0)]).iter().all(|p| r.contains(p))
        }),
        ("expected_dim(6,15) = 45", || expected_dim(params(6, 15)) == 45),
        ("expected_dim(2,1) = 3g-1 = 5", || expected_dim(params(2, 1)) == 5),
        ("dim M(10,1) = 53 at (6,15)", || dim_mae(params(6, 15), PairAE::new(10, 1)) == Ok(53)),
        ("dim M(15,0) = 101 at (6,15)", || dim_mae(params(6, 15), PairAE::new(15, 0)) == Ok(101)),
        ("dim M(9,1) = 46 at (6,15)", || dim_mae(params(6, 15), PairAE::new(9, 1)) == Ok(46)),
        ("excess M(9,2) = 0 at (6,15)", || dim_excess(params(6, 15), PairAE::new(9, 2)) == Ok(0)),
        ("nice component (6,15) is M(8,7)", || {
            nice_component(params(6, 15)) == ComponentKind::Mae(PairAE::new(8, 7))
        }),
        ("nice component (2,1) is M(1,0)", || {
            nice_component(params(2, 1)) == ComponentKind::Mae(PairAE::new(1, 0))
        }),
        ("almost nice (6,15) is (9,2)", || almost_nice_component(params(6, 15)) == Some(PairAE::new(9, 2))),
        ("almost nice (4,6) is (4,1)", || almost_nice_component(params(4, 6)) == Some(PairAE::new(4, 1))),
        ("no almost nice component in genus 3", || almost_nice_component(params(3, 9)).is_none()),
        ("almost nice (4,3) equals the nice pair (2,1)", || {
            almost_nice_component(params(4, 3)) == Some(PairAE::new(2, 1))
                && nice_component(params(4, 3)) == ComponentKind::Mae(PairAE::new(2, 1))
        }),
        ("M(36,2) is a component at (7,61)", || is_component(params(7, 61), 36, 2)),
        ("M(9,1) is a component at (6,15)", || is_component(params(6, 15), 9, 1)),
        ("Example 1: five components with dims 45,46,45,53,101", || {
            mae_dims(6, 15) == [(8, 7, 45), (9, 1, 46), (9, 2, 45), (10, 1, 53), (15, 0, 101)]
                && classify(params(6, 15)).len() == 5
        }),
        ("Example 1: MRC of M(9,1) is J x A_3, others J", || {
            let inv = classify(params(6, 15));
            inv.components.iter().all(|c| {
                let m = c.mrc.as_ref().expect("odd k has no M_E");
                if c.kind == ComponentKind::Mae(PairAE::new(9, 1)) {
                    m.delta == 3 && m.target == MrcTarget::JacXJac && !m.dominant
                } else {
                    m.delta == 0 && m.target == MrcTarget::Jac
                }
            })
        }),
        ("Example 2: ten components at (7,61)", || {
            let want = [(31, 30), (35, 1), (35, 2), (36, 1), (36, 2), (37, 1), (38, 1), (39, 1), (40, 1), (61, 0)];
            mae_dims(7, 61).iter().map(|&(a, e, _)| (a, e)).eq(want)
        }),
        ("Example 2: dominant onto J x J exactly for (35,2) and (35..38,1)", || {
            let inv = classify(params(7, 61));
            inv.components.iter().all(|c| {
                let p = c.kind.pair().expect("odd k");
                let m = c.mrc.as_ref().expect("odd k");
                let want = p == PairAE::new(35, 2) || (p.e == 1 && (35..=38).contains(&p.a));
                (m.target == MrcTarget::JacXJac && m.dominant) == want
            })
        }),
        ("Example 2: M(31,30) and M(61,0) have MRC quotient J", || {
            let inv = classify(params(7, 61));
            [(31, 30), (61, 0)].iter().all(|&(a, e)| {
                inv.get_pair(a, e).and_then(|c| c.mrc.as_ref()).map(|m| m.target) == Some(MrcTarget::Jac)
            })
        }),
        ("Genus 2: two components of dim 2k+3", || {
            (2..=30).all(|k| {
                let inv = classify(params(2, k));
                inv.len() == 2 && inv.components.iter().all(|c| c.dim == 2 * k + 3)
            })
        }),
        ("Lines: one component of dim 3g-1", || {
            (2..=20).all(|g| {
                let inv = classify(params(g, 1));
                inv.len() == 1 && inv.components[0].dim == 3 * g - 1
            })
        }),
        ("Conics: M_E of dim 3g+1 and M(2,0) of dim 4g-1", || {
            (2..=20).all(|g| {
                let inv = classify(params(g, 2));
                inv.len() == 2
                    && inv.get(ComponentKind::Me).map(|c| c.dim) == Some(3 * g + 1)
                    && inv.get_pair(2, 0).map(|c| c.dim) == Some(4 * g - 1)
            })
        }),
        ("Cubics: M(2,1) of dim 3g+3 and M(3,0) of dim 5g-1", || {
            (2..=20).all(|g| {
                let inv = classify(params(g, 3));
                inv.len() == 2
                    && inv.get_pair(2, 1).map(|c| c.dim) == Some(3 * g + 3)
                    && inv.get_pair(3, 0).map(|c| c.dim) == Some(5 * g - 1)
            })
        }),
        ("Genus 3: two components of dims 2k+6 and 3k+5", || {
            (2..=30).all(|k| {
                let inv = classify(params(3, k));
                let dims: Vec<i64> = inv.components.iter().map(|c| c.dim).collect();
                dims == [2 * k + 6, 3 * k + 5]
            })
        }),
        ("Genus 4: extra component M(2k/3,1) of dim 2k+9 when 3|k, k > 3", || {
            (4..=30).all(|k| {
                let inv = classify(params(4, k));
                let extra = inv.get_pair(2 * k / 3, 1).map(|c| c.dim);
                if k % 3 == 0 {
                    inv.len() == 3 && extra == Some(2 * k + 9)
                } else {
                    inv.len() == 2 && inv.get_pair(k, 0).map(|c| c.dim) == Some(4 * k + 7)
                }
            })
        }),
        ("almost nice M(9,2) at (6,15) is unobstructed", || {
            unobstructed_flag(params(6, 15), ComponentKind::Mae(PairAE::new(9, 2)))
        }),
        ("M(18,1) at (10,33): expected dim 93, obstructed, non-reduced", || {
            let inv = classify(params(10, 33));
            inv.get_pair(18, 1).is_some_and(|c| c.dim == 93 && c.expected == 93 && !c.unobstructed && c.nonreduced)
        }),
        ("nice M(8,7) at (6,15) covers M", || {
            classify(params(6, 15)).get_pair(8, 7).is_some_and(|c| covers_flag(params(6, 15), c))
        }),
        ("M(15,0) at (6,15) does not cover M", || {
            classify(params(6, 15)).get_pair(15, 0).is_some_and(|c| !c.covers_m)
        }),
        ("M_E at (3,4) covers M", || { classify(params(3, 4)).get(ComponentKind::Me).is_some_and(|c| c.covers_m) }),
        ("MRC (9,1) at (6,15): delta 3, J x A_3", || {
            mrc_quotient(params(6, 15), PairAE::new(9, 1))
                .is_ok_and(|m| m.delta == 3 && m.target == MrcTarget::JacXJac && !m.dominant && m.image_note.is_some())
        }),
        ("MRC (35,2) at (7,61): delta 8 >= g, dominant", || {
            mrc_quotient(params(7, 61), PairAE::new(35, 2))
                .is_ok_and(|m| m.delta == 8 && m.target == MrcTarget::JacXJac && m.dominant)
        }),
        ("region R at (6,15) from the boundary curves", || {
            region_r_geometric(params(6, 15)).into_iter().eq(pairs(&[(8, 7), (9, 1), (9, 2), (10, 1), (15, 0)]))
        }),
        ("region R in genus 3 is two points", || {
            (2..=30).all(|k| {
                let mut want = Vec::new();
                if k % 2 == 1 {
                    want.push(PairAE::new((k + 1) / 2, (k - 1) / 2));
                }
                want.push(PairAE::new(k, 0));
                region_r_geometric(params(3, k)).into_iter().eq(want)
            })
        }),
        ("region R at (7,61) has 10 points and matches the direct set", || {
            region_r_geometric(params(7, 61)).len() == 10 && cross_check_region(params(7, 61)).is_empty()
        }),
        ("B is the line e=(2g-3)/2 at k=2g-2 with no integer points", || {
            let curves = BoundaryCurves::new(params(4, 6));
            let line = Ratio::new(5, 2).expect("nonzero");
            curves.b_is_line() && (5..=6).all(|a| curves.curve_b.at_int(a) == Some(line)) && line.to_integer().is_none()
        }),
        ("dim M_E formula", || dim_me(params(3, 2)) == Ok(10)),
        ("max admissible e per column", || max_e(15, 8) == Some(7) && max_e(15, 9) == Some(2)),
    ]
}

/// Runs every published worked example and corollary as a named fixture.
pub fn verify_paper_fixtures() -> VerificationReport {
    VerificationReport {
        fixtures: fixture_list().into_iter().map(|(name, check)| FixtureOutcome { name, passed: check() }).collect(),
        ..Default::default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(g: i64, k: i64) -> Params {
        validate_params(g, k).unwrap()
    }

    #[test]
    fn ratio_basics() {
        let r = Ratio::new(7, -2).unwrap();
        assert_eq!((r.numer(), r.denom()), (-7, 2));
        assert_eq!((r.floor(), r.ceil()), (-4, -3));
        assert_eq!(Ratio::new(4, 2), Some(Ratio::integer(2)));
        assert!(Ratio::new(1, 3).unwrap() < Ratio::new(1, 2).unwrap());
        assert_eq!(Ratio::new(1, 0), None);
        assert_eq!(Ratio::new(2, 3).unwrap().to_fixed(3), "0.667");
        assert_eq!(Ratio::new(-1, 3).unwrap().to_fixed(3), "-0.333");
        assert_eq!(Ratio::new(-1, 2000).unwrap().to_fixed(3), "-0.001");
        assert_eq!(Ratio::new(1, 4000).unwrap().to_fixed(3), "0.000");
        assert_eq!(Ratio::integer(12).to_fixed(3), "12.000");
    }

    #[test]
    fn boundary_curve_values() {
        let c = BoundaryCurves::new(p(6, 15));
        assert_eq!(c.curve_a.at_int(8), Some(Ratio::integer(7)));
        assert_eq!(c.curve_a.at_int(9), Some(Ratio::integer(2)));
        // e_B(9) = 9/2 + (−5)/2 = 2
        assert_eq!(c.curve_b.at_int(9), Some(Ratio::integer(2)));
        assert_eq!(c.curve_b.at(Ratio::new(17, 2).unwrap()), None);
        let [(a1, e1), _] = c.intersections();
        assert_eq!((a1, e1), (Ratio::integer(9), Ratio::integer(2)));
        assert_eq!(c.b_axis_crossing(), Ratio::new(79, 9).unwrap());
    }

    #[test]
    fn geometric_regions() {
        let want = |v: &[(i64, i64)]| v.iter().copied().map(PairAE::from).collect::<BTreeSet<_>>();
        assert_eq!(region_r_geometric(p(6, 15)), want(&[(8, 7), (9, 1), (9, 2), (10, 1), (15, 0)]));
        assert_eq!(region_r_geometric(p(4, 6)), want(&[(4, 1), (6, 0)]));
        assert_eq!(region_r_geometric(p(2, 9)), want(&[(5, 4), (9, 0)]));
        assert_eq!(region_r_geometric(p(3, 7)), want(&[(4, 3), (7, 0)]));
        assert_eq!(region_r_geometric(p(3, 8)), want(&[(8, 0)]));
    }

    #[test]
    fn cross_check_examples() {
        assert!(cross_check_region(p(6, 15)).is_empty());
        assert!(cross_check_region(p(2, 9)).is_empty());
        assert!(cross_check_region(p(7, 61)).is_empty());
        assert_eq!(region_r_direct(p(7, 61)).len(), 10);
    }

    #[test]
    fn identities_hold_on_small_grid() {
        let report = verify_grid(2, 8, 1, 30);
        assert_eq!(report.grid.len(), 7 * 30);
        assert!(report.passed(), "{:?}", report.identity_failures.first());
    }

    #[test]
    fn any_mismatch_fails_the_report() {
        let m = Mismatch { g: 6, k: 15, pair: PairAE::new(9, 1), direct: true, geometric: false };
        let mut r = VerificationReport::default();
        r.merge(VerificationReport { mismatches: alloc::vec![m], ..Default::default() });
        assert!(!r.passed());
    }

    #[test]
    fn fixtures_pass() {
        let report = verify_paper_fixtures();
        let failed: Vec<_> = report.fixtures.iter().filter(|f| !f.passed).map(|f| f.name).collect();
        assert!(failed.is_empty(), "{failed:?}");
        assert!(report.fixtures.len() > 40);
    }
}
