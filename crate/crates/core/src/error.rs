use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be at least 1")]
    ZeroOrder,

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("not a permutation of 1..={n}: {reason}")]
    InvalidPermutation { n: usize, reason: String },

    #[error("entry {index} is zero; monomial values must be invertible")]
    ZeroEntry { index: usize },

    #[error("matrix is not monomial: row {row} {reason}")]
    NotMonomial { row: usize, reason: String },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {left_rows}x{left_cols} times {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("residue {r} out of range for modulus {n}")]
    InvalidResidue { r: usize, n: usize },

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("interval endpoint {point} is a root; perturb the interval")]
    EndpointRoot { point: String },

    #[error("empty interval: lo must be strictly below hi")]
    EmptyInterval,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("malformed matrix input at line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("no recorded failure to build a counterexample from")]
    NoFailure,
}
