use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sign sequence has {zeros} zeros and {ones} ones, expected {expected_zeros} and {expected_ones}")]
    CountMismatch {
        zeros: usize,
        ones: usize,
        expected_zeros: usize,
        expected_ones: usize,
    },

    #[error("sign sequence must be nonempty")]
    EmptySequence,

    #[error("sign sequence digits must be 0 or 1")]
    BadDigit,

    #[error("truncation order must be at least 1")]
    OrderTooSmall,

    #[error("index {index} out of range 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("generator level must be at least 1 (level 0 is the scalar delta)")]
    LevelZero,

    #[error("operands belong to different contexts")]
    ContextMismatch,

    #[error("empty linear combination has no context")]
    EmptyCombination,

    #[error("coefficient order {order} exceeds truncation order {max}")]
    TruncationExceeded { order: usize, max: usize },

    #[error("constant term is not an invertible scalar")]
    NonInvertible,

    #[error("matrix dimensions {lhs_rows}x{lhs_cols} and {rhs_rows}x{rhs_cols} are incompatible")]
    DimensionMismatch {
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("composition parts must be positive and sum to {expected}")]
    BadComposition { expected: usize },

    #[error("tuples have different lengths {lhs} and {rhs}")]
    TupleLengthMismatch { lhs: usize, rhs: usize },

    #[error("not a permutation of 1..={size}")]
    NotAPermutation { size: usize },

    #[error("digits ({got}) do not form an admissible pair at position {index}")]
    NotAnOddReflection { index: usize, got: String },

    #[error("target sequence does not extend the source sequence")]
    NotAnInclusion,

    #[error("generator level {level} exceeds the truncation order {max}; images are only stored up to that order")]
    LevelExceedsOrder { level: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
