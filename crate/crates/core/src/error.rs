use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("weighted degree overflows u64")]
    DegreeOverflow,

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("{0} is not a prime below 2^31")]
    InvalidModulus(u64),

    #[error("leading term of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("staircase is infinite in variable x{0}; pass a degree bound")]
    NotZeroDimensional(usize),

    #[error("the last {0} variables do not form a Noether normalization")]
    NotNoetherNormalization(usize),

    #[error("no nonzero divisor found after {tried} coordinate changes (ideal likely not saturated)")]
    NonzeroDivisorNotFound { tried: usize },

    #[error("the ideal is the whole ring")]
    UnitIdeal,

    #[error("unsupported dimension {0} for this operation")]
    UnsupportedDimension(usize),

    #[error("regularity needs a standard (constant) grading")]
    RegularityUndefined,

    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("invalid semigroup: {0}")]
    InvalidSemigroup(String),

    #[error("invalid integer sequence: {0}")]
    InvalidSequence(String),

    #[error("bound not applicable: {0}")]
    BoundInapplicable(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("closed form disagrees with direct computation: {0}")]
    ClosedFormMismatch(String),
}

impl Error {
    /// True for errors caused by malformed or out-of-contract input, as
    /// opposed to a computation that could not be completed.
    pub fn is_validation(&self) -> bool {
        !matches!(
            self,
            Error::NonzeroDivisorNotFound { .. }
                | Error::DegreeOverflow
                | Error::VerificationFailed(_)
                | Error::ClosedFormMismatch(_)
                | Error::NotNoetherNormalization(_)
                | Error::NotZeroDimensional(_)
                | Error::UnitIdeal
        )
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
