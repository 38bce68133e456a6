use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The genus is below 2.
    GenusTooSmall { g: i64 },
    /// The degree is below 1.
    DegreeTooSmall { k: i64 },
    /// A parameter exceeds [`crate::lattice::MAX_PARAM`].
    ParamTooLarge { name: &'static str, value: i64 },
    /// `(a, e)` is not in the admissible range for degree `k`.
    OutOfRange { k: i64, a: i64, e: i64 },
    /// `M_E` only exists for even `k`.
    OddDegree { k: i64 },
    /// A result does not fit in `i64`.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GenusTooSmall { g } => write!(f, "g must be ≥ 2 (got {g})"),
            Error::DegreeTooSmall { k } => write!(f, "k must be ≥ 1 (got {k})"),
            Error::ParamTooLarge { name, value } => {
                write!(f, "{name} must be ≤ {} (got {value})", crate::lattice::MAX_PARAM)
            }
            Error::OutOfRange { k, a, e } => {
                write!(f, "(a, e) = ({a}, {e}) is outside the admissible range for k = {k}")
            }
            Error::OddDegree { k } => write!(f, "M_E exists only for even k (got k = {k})"),
            Error::Overflow => f.write_str("integer overflow"),
        }
    }
}

impl core::error::Error for Error {}
