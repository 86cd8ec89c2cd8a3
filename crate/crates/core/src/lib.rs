//! Exact Schur multiplier computations for finite-dimensional Lie algebras.
//!
//! The multiplier `M(L)` is computed as the second homology of the
//! Chevalley–Eilenberg complex with trivial coefficients, using exact
//! arithmetic over `Q` (or `GF(p)`). On top of that the [`theorems`] module
//! evaluates the classical dimension bounds for nilpotent algebras.

pub mod linalg;
pub mod lie;
pub mod theorems;
pub mod multiplier;
pub mod catalog;
pub mod report;
