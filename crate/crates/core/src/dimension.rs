//! Dimension formulas for `M(a, e)`, `M_E` and the expected dimension
//! `2k + 3g − 3` of `Hom_k(P¹, M)`.

use crate::error::{Error, Result};
use crate::lattice::{check_in_range, PairAE, Params};

/// `2k + 3g − 3`.
pub fn expected_dim(params: Params) -> i64 {
    // g, k ≤ MAX_PARAM so this cannot overflow
    2 * params.k() + 3 * params.g() - 3
}

/// `(2a − k + 2)g + (3k − 3a − 1) − e(2a − k − 2)` evaluated for any
/// integers, in `i128`. The oracle uses this to probe pairs the checked
/// API refuses.
pub fn dim_mae_unchecked(g: i64, k: i64, a: i64, e: i64) -> i128 {
    let (g, k, a, e) = (g as i128, k as i128, a as i128, e as i128);
    (2 * a - k + 2) * g + (3 * k - 3 * a - 1) - e * (2 * a - k - 2)
}

/// Dimension of `M(a, e)`; defined only on the admissible range.
pub fn dim_mae(params: Params, pair: PairAE) -> Result<i64> {
    check_in_range(params.k(), pair)?;
    narrow(dim_mae_unchecked(params.g(), params.k(), pair.a, pair.e))
}

/// Dimension of `M_E`, which exists only for even `k`.
pub fn dim_me(params: Params) -> Result<i64> {
    if params.k_is_odd() {
        return Err(Error::OddDegree { k: params.k() });
    }
    Ok(expected_dim(params))
}

/// `dim M(a, e) − (2k + 3g − 3)`.
pub fn dim_excess(params: Params, pair: PairAE) -> Result<i64> {
    Ok(dim_mae(params, pair)? - expected_dim(params))
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

/// A dimension together with the expected dimension and their difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionReport {
    pub dim: i64,
    pub expected: i64,
    pub excess: i64,
}

impl DimensionReport {
    pub fn new(dim: i64, expected: i64) -> Self {
        let excess = dim - expected;
        debug_assert_eq!(excess + expected, dim);
        DimensionReport { dim, expected, excess }
    }

    pub fn for_pair(params: Params, pair: PairAE) -> Result<Self> {
        Ok(Self::new(dim_mae(params, pair)?, expected_dim(params)))
    }

    pub fn for_me(params: Params) -> Result<Self> {
        Ok(Self::new(dim_me(params)?, expected_dim(params)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::validate_params;

    fn p(g: i64, k: i64) -> Params {
        validate_params(g, k).unwrap()
    }

    #[test]
    fn expected_dimension() {
        assert_eq!(expected_dim(p(6, 15)), 45);
        assert_eq!(expected_dim(p(7, 61)), 140);
        assert_eq!(expected_dim(p(2, 1)), 5);
    }

    #[test]
    fn mae_dimensions() {
        assert_eq!(dim_mae(p(6, 15), PairAE::new(10, 1)), Ok(53));
        assert_eq!(dim_mae(p(6, 15), PairAE::new(15, 0)), Ok(101));
        assert_eq!(dim_mae(p(6, 15), PairAE::new(9, 1)), Ok(46));
        assert_eq!(dim_mae(p(10, 33), PairAE::new(18, 1)), Ok(93));
        assert_eq!(expected_dim(p(10, 33)), 93);
        assert_eq!(dim_mae(p(6, 15), PairAE::new(7, 1)), Err(Error::OutOfRange { k: 15, a: 7, e: 1 }));
    }

    #[test]
    fn me_dimensions() {
        assert_eq!(dim_me(p(3, 2)), Ok(10));
        assert_eq!(dim_me(p(2, 4)), Ok(11));
        assert_eq!(dim_me(p(6, 14)), Ok(43));
        assert_eq!(dim_me(p(6, 15)), Err(Error::OddDegree { k: 15 }));
    }

    #[test]
    fn excess_values() {
        assert_eq!(dim_excess(p(6, 15), PairAE::new(9, 2)), Ok(0));
        assert_eq!(dim_excess(p(6, 15), PairAE::new(15, 0)), Ok(56));
        // 138 − 140
        assert_eq!(dim_excess(p(7, 61), PairAE::new(34, 1)), Ok(-2));
        let r = DimensionReport::for_pair(p(7, 61), PairAE::new(34, 1)).unwrap();
        assert_eq!((r.dim, r.expected, r.excess), (138, 140, -2));
    }

    #[test]
    fn large_inputs_do_not_wrap() {
        let big = p(1_000_000, 1_000_000);
        assert_eq!(dim_mae(big, PairAE::new(1_000_000, 0)), Ok(1_000_002 * 1_000_000 - 1));
        let top = p(crate::lattice::MAX_PARAM, crate::lattice::MAX_PARAM);
        let m = crate::lattice::MAX_PARAM;
        assert_eq!(dim_mae(top, PairAE::new(m, 0)), Ok((m + 2) * m - 1));
    }
}
