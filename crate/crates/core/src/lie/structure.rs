use std::collections::BTreeMap;

use crate::linalg::{FieldDescriptor, Scalar};

use super::LieError;

/// Sparse coefficient vector `k -> c^k`.
pub type Coefficients = BTreeMap<usize, Scalar>;

/// The raw bracket table `[e_i, e_j] = sum_k c^k_ij e_k`, stored for `i < j`
/// only. Brackets that are absent are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    field: FieldDescriptor,
    table: BTreeMap<(usize, usize), Coefficients>,
}

impl StructureConstants {
    /// The zero (abelian) table.
    pub fn new(dim: usize, field: FieldDescriptor) -> Self {
        Self {
            dim,
            field,
            table: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    /// Sets `[e_i, e_j]`. Requires `i < j`; zero coefficients are dropped,
    /// and an all-zero bracket removes the entry.
    pub fn set_bracket<I>(&mut self, i: usize, j: usize, coeffs: I) -> Result<(), LieError>
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        if i >= j {
            return Err(LieError::UnorderedPair { i, j });
        }
        if j >= self.dim {
            return Err(LieError::IndexOutOfRange { index: j, dim: self.dim });
        }
        let mut out = Coefficients::new();
        for (k, c) in coeffs {
            if k >= self.dim {
                return Err(LieError::IndexOutOfRange { index: k, dim: self.dim });
            }
            if c.field() != self.field {
                return Err(LieError::FieldMismatch {
                    expected: self.field,
                    found: c.field(),
                });
            }
            if !c.is_zero() {
                out.insert(k, c);
            }
        }
        if out.is_empty() {
            self.table.remove(&(i, j));
        } else {
            self.table.insert((i, j), out);
        }
        Ok(())
    }

    /// Integer-coefficient shorthand for [`set_bracket`](Self::set_bracket).
    pub fn set_bracket_i64(&mut self, i: usize, j: usize, coeffs: &[(usize, i64)]) -> Result<(), LieError> {
        let field = self.field;
        self.set_bracket(i, j, coeffs.iter().map(|&(k, c)| (k, Scalar::from_i64(field, c))))
    }

    /// Stored coefficients of `[e_i, e_j]` for `i < j`.
    pub fn get(&self, i: usize, j: usize) -> Option<&Coefficients> {
        self.table.get(&(i, j))
    }

    /// Nonzero brackets in `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Coefficients)> {
        self.table.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    /// `[e_i, e_j]` for any ordered pair as a sparse vector, using
    /// antisymmetry for `i > j`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<(usize, Scalar)> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => Vec::new(),
            Ordering::Less => self
                .table
                .get(&(i, j))
                .map(|c| c.iter().map(|(&k, v)| (k, v.clone())).collect())
                .unwrap_or_default(),
            Ordering::Greater => self
                .table
                .get(&(j, i))
                .map(|c| c.iter().map(|(&k, v)| (k, -v)).collect())
                .unwrap_or_default(),
        }
    }

    /// Image of a rational table in `GF(p)`.
    pub fn reduce_mod(&self, field: FieldDescriptor) -> Result<Self, LieError> {
        let FieldDescriptor::PrimeField(p) = field else {
            return Err(LieError::FieldMismatch {
                expected: field,
                found: self.field,
            });
        };
        if self.field == field {
            return Ok(self.clone());
        }
        let mut out = StructureConstants::new(self.dim, field);
        for (i, j, coeffs) in self.iter() {
            let reduced = coeffs
                .iter()
                .map(|(&k, c)| c.reduce_mod(p).map(|r| (k, r)))
                .collect::<Result<Vec<_>, _>>()?;
            out.set_bracket(i, j, reduced)?;
        }
        Ok(out)
    }
}
