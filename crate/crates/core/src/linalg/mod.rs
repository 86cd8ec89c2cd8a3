//! Exact scalars and matrices over `Q` and `GF(p)`.

mod elimination;
mod field;
mod matrix;
mod scalar;

use thiserror::Error;

pub use field::{is_prime, FieldDescriptor, MAX_MODULUS};
pub use matrix::{rref_rows, ExactMatrix, RankAccumulator, RankStrategy};
pub use scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch {
        expected: FieldDescriptor,
        found: FieldDescriptor,
    },
    #[error("index ({row}, {col}) out of range for a {rows}x{cols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("denominator divisible by {p}")]
    DenominatorDivisibleByP { p: u32 },
    #[error("{0} is not a prime below 2^31")]
    InvalidModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("sparse vector indices must be strictly increasing")]
    UnsortedVector,
}
