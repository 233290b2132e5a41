use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected a vector of length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("integer overflow in lattice arithmetic")]
    Overflow,

    #[error("intersection matrix is not square and symmetric")]
    AsymmetricForm,

    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("slope is undefined for a sheaf of rank zero")]
    ZeroRank,

    #[error("expected a Chern character of rank {expected}, got rank {found}")]
    WrongRank { expected: u32, found: u32 },

    #[error("curves of classes {first} and {second} meet in C1.C2 = {value} <= 0 points")]
    NonPositiveIntersection {
        first: String,
        second: String,
        value: i64,
    },

    #[error("class {0} lies outside the effective region R0")]
    NotEffective(String),

    #[error("curve class {0} is not nef, so its general members share a fixed component")]
    NotNef(String),

    #[error("cohomology bounds for the ideal sheaf assume a generic complete intersection")]
    NotGeneric,

    #[error("h0 of the twisted ideal sheaf is not certified to vanish (bound [{lo}, {hi}])")]
    Uncertified { lo: u64, hi: u64 },

    #[error("effective cone generator {0} has non-positive degree against the polarization")]
    ConeUnboundedAlongL(String),

    #[error("invalid polarization: {0}")]
    InvalidPolarization(String),

    #[error("cohomology oracle produced inconsistent dimensions for {0}")]
    InconsistentOracle(String),

    #[error("unknown surface `{0}` (expected one of p2, p1xp1, blp2)")]
    UnknownSurface(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid coefficient box: {0}")]
    InvalidBox(String),
}
