use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no irreducible root system of type {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("cannot parse root system type {0:?}")]
    BadTypeLabel(String),

    #[error("positive root index {index} out of range (system has {count})")]
    RootIndex { index: usize, count: usize },

    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("root subset is not a closed symmetric subsystem")]
    NotClosed,

    #[error("subsystem does not span a hyperplane (rank {rank}, ambient rank {ambient})")]
    NotCorankOne { rank: usize, ambient: usize },

    #[error("invalid group spec {spec:?}: {reason}")]
    GroupSpec { spec: String, reason: String },

    #[error("exhaustive subsystem search limited to {limit} positive roots, got {got}")]
    TooLarge { limit: usize, got: usize },

    #[error("no multiset of factor sizes reproduces the series (first mismatch at t^{0})")]
    InconsistentSeries(usize),

    #[error("{0} has no nonempty proper closed subsystem")]
    NoProperSubsystem(String),

    #[error("zero polynomial has no degree or order")]
    ZeroPolynomial,

    #[error("invalid trace function: {0}")]
    Trace(String),

    #[error("permutation of F2^3 is linear; twisting by it gives an equivalent subgroup")]
    LinearTwist,

    #[error("invalid permutation of F2^3: {0}")]
    BadPermutation(String),

    #[error("sign homomorphisms have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("malformed degree table: {0}")]
    Table(String),
}

pub type Result<T> = std::result::Result<T, Error>;
