use thiserror::Error;

/// Errors raised by the exact-arithmetic routines and the classifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("composition of the two maps is not zero")]
    CompositionNotZero,

    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: i64, max: usize },

    #[error("negative degree {0}")]
    NegativeDegree(i64),

    #[error("negative bound {0}")]
    NegativeBound(i64),

    #[error("matrix is not invertible over Z (|det| = {det})")]
    NotInvertible { det: String },

    #[error("matrix is not unimodular (|det| = {det})")]
    NotUnimodular { det: String },

    #[error("matrix has no finite order <= {bound}")]
    NotFiniteOrder { bound: u64 },

    #[error("A^{m} is not the identity")]
    OrderMismatch { m: u64 },

    #[error("prime {p} does not divide the group order {m}")]
    PrimeDoesNotDivideOrder { p: u64, m: u64 },

    #[error("group order {m} is not square-free")]
    NotSquareFree { m: u64 },

    #[error("generator action does not have order 1 or {p} (or {p} is not prime)")]
    OrderNotPrime { p: u64 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("group is not a counterexample at p = {p}")]
    NotACounterexample { p: u64 },

    #[error("no witness classes at p = {p}: {detail}")]
    WitnessUnavailable { p: u64, detail: String },

    #[error("arithmetic overflow computing {0}")]
    Overflow(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
