//! MRC quotients of the loci `M(a, e)`.
//!
//! With `δ = (k − a) − e(2a − k)`:
//! * `δ = 0`: the MRC fibration is a surjection onto `Pic^{-e}(C) ≅ J(C)`;
//! * `δ > 0`: it maps to `Pic^{-e}(C) × Pic^{δ}(C) ≅ J(C) × J(C)` and is
//!   dominant exactly when `δ ≥ g`. Below that the image is `J × A_δ` with
//!   `A_δ` the image of `Sym^δ(C)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;
use crate::lattice::{check_in_range, delta_in_range, PairAE, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MrcTarget {
    /// A single Jacobian `Pic^{-e}(C)`.
    Jac,
    /// `Pic^{-e}(C) × Pic^{δ}(C)`.
    JacXJac,
}

impl MrcTarget {
    pub fn as_str(&self) -> &'static str {
        match self {
            MrcTarget::Jac => "JAC",
            MrcTarget::JacXJac => "JAC_X_JAC",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "JAC" => Some(MrcTarget::Jac),
            "JAC_X_JAC" => Some(MrcTarget::JacXJac),
            _ => None,
        }
    }
}

impl fmt::Display for MrcTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MrcResult {
    pub delta: i64,
    /// Degree of the Jacobian factor `Pic^{-e}(C)`.
    pub e: i64,
    pub target: MrcTarget,
    /// Surjective when `δ = 0`, dominant when `δ ≥ g`.
    pub dominant: bool,
    pub image_note: Option<String>,
}

impl MrcResult {
    /// Picard degrees of the target's factors: `[-e]` or `[-e, δ]`.
    pub fn pic_degrees(&self) -> Vec<i64> {
        match self.target {
            MrcTarget::Jac => vec![-self.e],
            MrcTarget::JacXJac => vec![-self.e, self.delta],
        }
    }
}

pub fn image_note(delta: i64) -> String {
    format!("J × A_{delta}, A_{delta} = image of Sym^{delta}(C) in Pic^{delta}(C)")
}

pub fn mrc_quotient(params: Params, pair: PairAE) -> Result<MrcResult> {
    check_in_range(params.k(), pair)?;
    let delta = delta_in_range(params.k(), pair)?;
    debug_assert!(delta >= 0);
    let (target, dominant, note) = if delta == 0 {
        (MrcTarget::Jac, true, None)
    } else if delta >= params.g() {
        (MrcTarget::JacXJac, true, None)
    } else {
        (MrcTarget::JacXJac, false, Some(image_note(delta)))
    };
    Ok(MrcResult { delta, e: pair.e, target, dominant, image_note: note })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::lattice::validate_params;

    fn mrc(g: i64, k: i64, a: i64, e: i64) -> Result<MrcResult> {
        mrc_quotient(validate_params(g, k).unwrap(), PairAE::new(a, e))
    }

    #[test]
    fn nice_point_maps_onto_jacobian() {
        let r = mrc(6, 15, 8, 7).unwrap();
        assert_eq!((r.delta, r.target, r.dominant), (0, MrcTarget::Jac, true));
        assert_eq!(r.pic_degrees(), vec![-7]);
        assert!(r.image_note.is_none());
    }

    #[test]
    fn small_delta_is_not_dominant() {
        let r = mrc(6, 15, 9, 1).unwrap();
        assert_eq!((r.delta, r.target, r.dominant), (3, MrcTarget::JacXJac, false));
        assert!(r.image_note.as_deref().unwrap().starts_with("J × A_3"));
        assert_eq!(r.pic_degrees(), vec![-1, 3]);
    }

    #[test]
    fn large_delta_is_dominant() {
        let r = mrc(7, 61, 35, 2).unwrap();
        assert_eq!((r.delta, r.target, r.dominant), (8, MrcTarget::JacXJac, true));
        assert!(r.image_note.is_none());
    }

    #[test]
    fn top_pair_and_errors() {
        for (g, k) in [(2, 1), (5, 9), (9, 40)] {
            let r = mrc(g, k, k, 0).unwrap();
            assert_eq!((r.delta, r.target, r.dominant), (0, MrcTarget::Jac, true));
        }
        assert_eq!(mrc(6, 15, 9, 3), Err(Error::OutOfRange { k: 15, a: 9, e: 3 }));
        assert_eq!(MrcTarget::parse("JAC_X_JAC"), Some(MrcTarget::JacXJac));
    }
}
