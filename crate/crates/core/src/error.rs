use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("cannot parse type string {0:?}")]
    ParseType(String),

    #[error("root system needs at least one simple component")]
    EmptyComponents,

    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("{0:?} is not a positive root")]
    NotAPositiveRoot(Vec<i64>),

    #[error("node {node} out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("non-exact division in {0}")]
    InexactDivision(String),

    #[error("{what} exceeded its iteration cap of {cap}")]
    IterationCap { what: &'static str, cap: u64 },

    #[error("Weyl group of order {order} exceeds the cap {cap}")]
    WeylGroupTooLarge { order: u128, cap: u128 },

    #[error("Weyl orbit exceeds the cap of {cap} weights")]
    OrbitTooLarge { cap: usize },

    #[error("sl2 certificate failed: {0}")]
    Sl2Certificate(String),

    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),

    #[error("no generator supported on axis {axis} alone; finiteness cannot be certified")]
    AxisGeneratorMissing { axis: usize },

    #[error("complement not certified within box bound {bound}")]
    NotCertified { bound: u32 },

    #[error("m_{node} not found within cap {cap}")]
    MValueNotFound { node: usize, cap: u64 },

    #[error("rank cap {rank_cap} is insufficient: {reason}")]
    RankCapInsufficient { rank_cap: usize, reason: String },

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("cache entry {0} differs from recomputation")]
    CacheMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
