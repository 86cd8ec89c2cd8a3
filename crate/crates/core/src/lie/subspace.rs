use crate::linalg::{rref_rows, ExactMatrix, FieldDescriptor, Scalar};

use super::LieError;

/// A subspace of `F^n` stored as the nonzero rows of its reduced row echelon
/// form. Two subspaces are equal iff their stored data is equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldDescriptor,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldDescriptor, ambient_dim: usize) -> Self {
        Self {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldDescriptor, ambient_dim: usize) -> Self {
        let vectors = (0..ambient_dim).map(|i| unit(field, ambient_dim, i)).collect();
        Self::span(field, ambient_dim, vectors).expect("unit vectors have the ambient length")
    }

    /// Span of arbitrary vectors of length `ambient_dim`.
    pub fn span(field: FieldDescriptor, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self, LieError> {
        for v in &vectors {
            check_vector(field, ambient_dim, v)?;
        }
        let (basis, pivots) = rref_rows(field, ambient_dim, vectors);
        Ok(Self {
            field,
            ambient_dim,
            basis,
            pivots,
        })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after subtracting its component along the pivot
    /// coordinates. Zero iff `v` lies in the subspace; otherwise it is
    /// supported on non-pivot coordinates only.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = &*x - &(&f * b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient_dim && self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    /// Coordinates of a member of the subspace in the echelon basis. The
    /// coordinate along a basis row is the entry at that row's pivot.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LieError> {
        self.check_compatible(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient_dim, all)
    }

    /// `U ∩ W` from the kernel of `[U^T | -W^T]`: a kernel vector `(a, b)`
    /// gives the common element `sum a_i u_i`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LieError> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient_dim));
        }
        let (du, dw) = (self.dim(), other.dim());
        let mut stacked = ExactMatrix::zeros(self.field, self.ambient_dim, du + dw);
        for (c, u) in self.basis.iter().enumerate() {
            for (r, x) in u.iter().enumerate() {
                stacked.set(r, c, x.clone())?;
            }
        }
        for (c, w) in other.basis.iter().enumerate() {
            for (r, x) in w.iter().enumerate() {
                stacked.set(r, du + c, -x)?;
            }
        }
        let common = stacked
            .kernel_basis()
            .into_iter()
            .map(|k| self.combine(&k[..du]))
            .collect();
        Subspace::span(self.field, self.ambient_dim, common)
    }

    /// `sum_i coeffs[i] * basis[i]`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.field); self.ambient_dim];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = &*x + &(c * y);
                }
            }
        }
        out
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LieError> {
        if self.field != other.field {
            return Err(LieError::FieldMismatch {
                expected: self.field,
                found: other.field,
            });
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(LieError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }
}

pub(crate) fn unit(field: FieldDescriptor, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(field); n];
    v[i] = Scalar::one(field);
    v
}

pub(crate) fn check_vector(field: FieldDescriptor, n: usize, v: &[Scalar]) -> Result<(), LieError> {
    if v.len() != n {
        return Err(LieError::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    if let Some(bad) = v.iter().find(|x| x.field() != field) {
        return Err(LieError::FieldMismatch {
            expected: field,
            found: bad.field(),
        });
    }
    Ok(())
}
