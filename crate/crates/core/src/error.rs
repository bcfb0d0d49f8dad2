use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("matrix must have at least one row")]
    Empty,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("matrix is not invertible over {0}")]
    NotInvertible(String),

    #[error("symplectic form is degenerate or not alternating")]
    DegenerateForm,

    #[error("exterior power k = {k} is out of range for dimension {dim}")]
    WedgeOutOfRange { k: usize, dim: usize },

    #[error("group closure exceeded the cap of {cap} elements; increase cap")]
    ClosureCap { cap: usize },

    #[error("operator is not unipotent modulo {0}")]
    NotUnipotentMod(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
