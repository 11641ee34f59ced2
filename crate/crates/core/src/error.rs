use thiserror::Error;

/// Everything that can go wrong while building fields, spaces and groups.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{k} exceeds the cap of {cap}")]
    FieldTooLarge { p: u64, k: u32, cap: u64 },
    #[error("no monic irreducible polynomial of degree {k} over GF({p}) was found")]
    NoIrreducible { p: u64, k: u32 },
    #[error("inversion of zero")]
    InverseOfZero,
    #[error("field automorphism check failed for Frobenius power {0}")]
    AutomorphismCheck(u32),
    #[error("projective space has {points} points, above the cap of {cap}")]
    TooManyPoints { points: u64, cap: u64 },
    #[error("operation needs {needed} but the space has dimension {actual}")]
    Dimension { needed: &'static str, actual: usize },
    #[error("points must be pairwise distinct")]
    DuplicatePoints,
    #[error("point id {0} is out of range")]
    PointOutOfRange(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("image array is not a bijection")]
    NotABijection,
    #[error("group closure exceeded the order cap of {cap} (reached {reached} elements)")]
    OrderCap { cap: usize, reached: usize },
    #[error("{candidates} candidates exceed the factorial cap of {cap}; use the sampled strategy")]
    FactorialCap { candidates: u128, cap: u128 },
    #[error("{count} matrices exceed the enumeration cap of {cap}")]
    MatrixCap { count: u128, cap: u128 },
    #[error("matrix is singular")]
    Singular,
    #[error("homothety ratio must be nonzero")]
    ZeroRatio,
    #[error("matrix dimension {got} does not match the space ({expected})")]
    MatrixShape { expected: usize, got: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
