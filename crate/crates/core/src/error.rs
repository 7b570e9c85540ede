//! Error type shared by all exact-arithmetic operations.

use crate::multiplicity::HilbertSamuelTrace;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("generator {0} does not lie in the ambient semigroup")]
    InvalidGenerator(String),

    #[error("point {0} does not lie in the ambient semigroup")]
    InvalidPoint(String),

    #[error("operation is not defined for the zero ideal")]
    ZeroIdeal,

    #[error("operation is not defined for the unit ideal")]
    UnitIdeal,

    #[error("ideals live in different ambient rings")]
    RingMismatch,

    #[error("ideal is not m-primary: the complement is infinite")]
    InfiniteColength,

    #[error(
        "Hilbert-Samuel differences did not stabilize by n_max = {n_max}; \
         retry with a larger n_max (doubling it is usually enough)"
    )]
    NotStabilized {
        n_max: usize,
        trace: Box<HilbertSamuelTrace>,
    },

    #[error("internal geometry error: expected an integer, got {0}")]
    NonIntegerResult(String),

    #[error("dimension {found} is not supported here: {reason}")]
    DimensionUnsupported { found: usize, reason: String },

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("T-graded ideals live over different base rings")]
    BaseMismatch,

    #[error("bad generator choice: {0}")]
    BadGeneratorChoice(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
