use thiserror::Error;

/// Errors reported by the library. Internal inconsistencies (overflow,
/// non-integral results where an integer is forced) are treated as bugs
/// and panic instead of returning a variant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing and nonnegative: {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("frobenius coordinates must be strictly decreasing sequences of equal length: arms={arms:?} legs={legs:?}")]
    InvalidFrobenius { arms: Vec<u32>, legs: Vec<u32> },
    #[error("grassmannian requires 0 < k < n, got k={k} n={n}")]
    InvalidGrassmannian { k: u32, n: u32 },
    #[error("partition {parts:?} does not fit in the {k}x{w} box")]
    BoxViolation { parts: Vec<u32>, k: u32, w: u32 },
    #[error("classes live on different grassmannians: Gr({0},{1}) vs Gr({2},{3})")]
    ContextMismatch(u32, u32, u32, u32),
    #[error("schur decompositions have different base ranks: {0} vs {1}")]
    RankMismatch(u32, u32),
    #[error("wedge index {index} out of range 0..={max}")]
    WedgeOutOfRange { index: u32, max: u32 },
    #[error("weight has {parts} parts but the subbundle has rank {k}")]
    TooManyParts { parts: usize, k: u32 },
    #[error("unsupported bundle expression: {0}")]
    UnsupportedExpression(String),
    #[error("section bundle of rank {rank} exceeds the ambient dimension {dim}")]
    RankExceedsDimension { rank: u64, dim: u64 },
    #[error("expected a threefold: expected dimension is {0}")]
    NotAThreefold(i64),
    #[error("D.D - D.K = {0} must be even")]
    ParityViolation(i64),
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
