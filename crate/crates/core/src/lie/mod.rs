//! Structure constants, validated Lie algebras, and their classical
//! subspaces: derived subalgebra, center, lower central series.

mod algebra;
mod structure;
mod subspace;

use thiserror::Error;

use crate::linalg::{FieldDescriptor, LinalgError, Scalar};

pub use algebra::{direct_sum, validate, LieAlgebra};
pub use structure::{Coefficients, StructureConstants};
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: Vec<Scalar>,
    },
    #[error("bracket pair ({i}, {j}) must satisfy i < j")]
    UnorderedPair { i: usize, j: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch {
        expected: FieldDescriptor,
        found: FieldDescriptor,
    },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
    #[error("vectors do not form a basis")]
    SingularBasis,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
