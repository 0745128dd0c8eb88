//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by exact-arithmetic operations and geometric constructions.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("incompatible scalar kinds: {0}")]
    IncompatibleScalars(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator divisible by the field characteristic {0}")]
    BadReduction(u64),

    #[error("variable count mismatch: expected {expected}, got {got}")]
    VariableMismatch { expected: usize, got: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix too large for exact expansion (size {0}, limit {1})")]
    MatrixTooLarge(usize, usize),

    #[error("minor size {size} out of range for {rows}x{cols} matrix")]
    MinorSize { size: usize, rows: usize, cols: usize },

    #[error("matrix entries are not constant")]
    NonConstantEntries,

    #[error("{0}")]
    InvalidConfiguration(String),

    #[error("duplicate line at indices {0} and {1}")]
    DuplicateLine(usize, usize),

    #[error("line count mismatch: {0} vs {1}")]
    LineCountMismatch(usize, usize),

    #[error("formula not applicable: {0}")]
    FormulaNotApplicable(String),

    #[error("unknown catalog name {0:?} (expected complete-quadrangle, hesse or dual-hesse)")]
    UnknownCatalog(String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("problem size {0} exceeds the configured bound {1}")]
    SizeGuardrail(usize, usize),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
