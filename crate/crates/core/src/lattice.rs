//! The `(a, e)` parameter lattice.
//!
//! For degree `k` the admissible pairs are `(k, 0)` together with every
//! integer pair satisfying `k ≥ a > k/2` and `(k − a)/(2a − k) ≥ e > 0`.
//! The fraction is never formed: since `2a − k > 0` on that branch the
//! bound is checked as `k − a ≥ e·(2a − k)`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest accepted genus or degree. Keeps every in-range formula inside `i64`.
pub const MAX_PARAM: i64 = 1_000_000_000;

/// A validated `(g, k)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params {
    g: i64,
    k: i64,
}

impl Params {
    pub fn new(g: i64, k: i64) -> Result<Self> {
        validate_params(g, k)
    }

    /// Genus of the curve.
    pub fn g(&self) -> i64 {
        self.g
    }

    /// Degree `deg f*Θ` of the rational curves.
    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn k_is_odd(&self) -> bool {
        self.k % 2 != 0
    }

    pub fn g_is_even(&self) -> bool {
        self.g % 2 == 0
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={} k={}", self.g, self.k)
    }
}

pub fn validate_params(g: i64, k: i64) -> Result<Params> {
    if g < 2 {
        return Err(Error::GenusTooSmall { g });
    }
    if k < 1 {
        return Err(Error::DegreeTooSmall { k });
    }
    if g > MAX_PARAM {
        return Err(Error::ParamTooLarge { name: "g", value: g });
    }
    if k > MAX_PARAM {
        return Err(Error::ParamTooLarge { name: "k", value: k });
    }
    Ok(Params { g, k })
}

/// A lattice point `(a, e)`.
///
/// `a` is the larger degree of the generic splitting type on the `P¹`
/// fibers, `e` is minus the degree of the `C`-factor of the canonical
/// sub-line-bundle. Ordering is lexicographic in `(a, e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairAE {
    pub a: i64,
    pub e: i64,
}

impl PairAE {
    pub const fn new(a: i64, e: i64) -> Self {
        PairAE { a, e }
    }
}

impl fmt::Display for PairAE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.e)
    }
}

impl From<(i64, i64)> for PairAE {
    fn from((a, e): (i64, i64)) -> Self {
        PairAE { a, e }
    }
}

/// Membership in the admissible range for degree `k`.
pub fn in_range(k: i64, a: i64, e: i64) -> bool {
    if a == k && e == 0 {
        return true;
    }
    let (k, a, e) = (k as i128, a as i128, e as i128);
    k >= a && 2 * a > k && e >= 1 && (k - a) >= e * (2 * a - k)
}

/// `δ = (k − a) − e·(2a − k)`, the length of the 0-cycle in the canonical
/// extension. Total: out-of-range pairs may give negative values.
pub fn delta(k: i64, a: i64, e: i64) -> i128 {
    let (k, a, e) = (k as i128, a as i128, e as i128);
    (k - a) - e * (2 * a - k)
}

/// `δ` for a pair already known to be in range, narrowed to `i64`.
pub(crate) fn delta_in_range(k: i64, pair: PairAE) -> Result<i64> {
    i64::try_from(delta(k, pair.a, pair.e)).map_err(|_| Error::Overflow)
}

pub(crate) fn check_in_range(k: i64, pair: PairAE) -> Result<()> {
    if in_range(k, pair.a, pair.e) {
        Ok(())
    } else {
        Err(Error::OutOfRange { k, a: pair.a, e: pair.e })
    }
}

/// Largest admissible `e` for a given `a` with `k ≥ a > k/2`, i.e.
/// `floor((k − a)/(2a − k))`. `None` when `a` is outside that strip.
pub fn max_e(k: i64, a: i64) -> Option<i64> {
    if a > k || 2 * (a as i128) <= k as i128 {
        return None;
    }
    // both operands non-negative, so truncating division is floor
    Some((k - a) / (2 * a - k))
}

/// Iterator over the admissible range in lexicographic `(a, e)` order.
#[derive(Debug, Clone)]
pub struct RangeIter {
    k: i64,
    a: i64,
    e: i64,
    e_max: i64,
    done: bool,
}

impl RangeIter {
    pub fn new(k: i64) -> Self {
        let a = k / 2 + 1;
        RangeIter { k, a, e: 1, e_max: max_e(k, a).unwrap_or(0), done: k < 1 }
    }
}

impl Iterator for RangeIter {
    type Item = PairAE;

    fn next(&mut self) -> Option<PairAE> {
        if self.done {
            return None;
        }
        loop {
            if self.a == self.k {
                // e ranges over 1..=0 at a = k, so only (k, 0) remains
                self.done = true;
                return Some(PairAE::new(self.k, 0));
            }
            if self.e <= self.e_max {
                let p = PairAE::new(self.a, self.e);
                self.e += 1;
                return Some(p);
            }
            self.a += 1;
            self.e = 1;
            self.e_max = max_e(self.k, self.a).unwrap_or(0);
        }
    }
}

/// All admissible pairs for degree `k`, sorted by `(a, e)`.
pub fn enumerate_range(k: i64) -> Vec<PairAE> {
    RangeIter::new(k).collect()
}
