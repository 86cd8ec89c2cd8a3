use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::elimination::{self, EchelonAccumulator, Integers, Residues, SparseVec};
use super::{FieldDescriptor, LinalgError, Scalar};

/// How [`ExactMatrix::rank_with`] eliminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankStrategy {
    /// Sparse fraction-free elimination, dense fallback once it fills in.
    #[default]
    Auto,
    /// Dense Bareiss (over `Q`) or dense Gaussian elimination (over `GF(p)`).
    Dense,
}

/// A sparse matrix over an exact field. Absent entries are zero; stored
/// entries are never zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl ExactMatrix {
    pub fn zeros(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries.insert((i, i), Scalar::one(field));
        }
        m
    }

    /// Builds a matrix from dense rows; every row must have `cols` entries.
    pub fn from_rows(field: FieldDescriptor, cols: usize, rows: &[Vec<Scalar>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, v.clone())?;
            }
        }
        Ok(m)
    }

    /// Builds a matrix over `Q` from small integers. Convenient in tests.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(FieldDescriptor::Rationals, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.entries.insert((r, c), Scalar::from_i64(FieldDescriptor::Rationals, v));
                }
            }
        }
        m
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Writes an entry; writing zero clears it.
    pub fn set(&mut self, row: usize, col: usize, value: Scalar) -> Result<(), LinalgError> {
        if row >= self.rows || col >= self.cols {
            return Err(LinalgError::IndexOutOfRange {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if value.field() != self.field {
            return Err(LinalgError::FieldMismatch {
                expected: self.field,
                found: value.field(),
            });
        }
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    /// Adds `value` to an entry.
    pub fn add_to(&mut self, row: usize, col: usize, value: &Scalar) -> Result<(), LinalgError> {
        let sum = &self.get(row, col) + value;
        self.set(row, col, sum)
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// Nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> Self {
        Self {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(r, c), v)| ((c, r), v.clone())).collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(self.field); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.field != rhs.field {
            return Err(LinalgError::FieldMismatch {
                expected: self.field,
                found: rhs.field,
            });
        }
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut rhs_rows: Vec<Vec<(usize, &Scalar)>> = vec![Vec::new(); rhs.rows];
        for (&(r, c), v) in &rhs.entries {
            rhs_rows[r].push((c, v));
        }
        let mut out = ExactMatrix::zeros(self.field, self.rows, rhs.cols);
        for (&(r, k), a) in &self.entries {
            for &(c, b) in &rhs_rows[k] {
                out.add_to(r, c, &(a * b))?;
            }
        }
        Ok(out)
    }

    /// Rank over the matrix's own field.
    pub fn rank(&self) -> usize {
        self.rank_with(RankStrategy::Auto)
    }

    pub fn rank_with(&self, strategy: RankStrategy) -> usize {
        // Eliminate along the shorter side: vectors are indexed by it.
        let lines = if self.rows <= self.cols { self.line_vectors(true) } else { self.line_vectors(false) };
        let width = self.rows.min(self.cols);
        match self.field {
            FieldDescriptor::Rationals => {
                let rows: Vec<_> = lines.into_iter().filter_map(|l| integer_line(&l)).collect();
                match strategy {
                    RankStrategy::Auto => elimination::batch_rank(Integers, width, rows),
                    RankStrategy::Dense => elimination::EliminationRing::dense_rank(&Integers, rows, width),
                }
            }
            FieldDescriptor::PrimeField(p) => {
                let rows: Vec<_> = lines.into_iter().filter_map(|l| residue_line(&l)).collect();
                let ring = Residues { p: p as u64 };
                match strategy {
                    RankStrategy::Auto => elimination::batch_rank(ring, width, rows),
                    RankStrategy::Dense => elimination::EliminationRing::dense_rank(&ring, rows, width),
                }
            }
        }
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Rank of the image of a rational matrix in `GF(p)`. The result never
    /// exceeds the rational rank; for a random large prime it almost surely
    /// equals it.
    pub fn modular_rank_crosscheck(&self, p: u32) -> Result<usize, LinalgError> {
        if self.field != FieldDescriptor::Rationals {
            return Err(LinalgError::FieldMismatch {
                expected: FieldDescriptor::Rationals,
                found: self.field,
            });
        }
        let field = FieldDescriptor::prime_field(p as u64)?;
        Ok(self.reduce_mod(field)?.rank())
    }

    /// Image of a rational matrix in `GF(p)`.
    pub fn reduce_mod(&self, field: FieldDescriptor) -> Result<ExactMatrix, LinalgError> {
        let FieldDescriptor::PrimeField(p) = field else {
            return Err(LinalgError::FieldMismatch {
                expected: FieldDescriptor::PrimeField(0),
                found: field,
            });
        };
        let mut out = ExactMatrix::zeros(field, self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            out.set(r, c, v.reduce_mod(p)?)?;
        }
        Ok(out)
    }

    /// Reduced row echelon form: the nonzero rows and their pivot columns.
    pub fn rref(&self) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        rref_rows(self.field, self.cols, self.to_dense())
    }

    /// A basis of the right kernel, itself in reduced row echelon form (so
    /// every vector has leading entry 1 and the output is canonical).
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let null: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(self.field); self.cols];
                v[f] = Scalar::one(self.field);
                for (row, &p) in reduced.iter().zip(&pivots) {
                    v[p] = -&row[f];
                }
                v
            })
            .collect();
        rref_rows(self.field, self.cols, null).0
    }

    fn line_vectors(&self, by_column: bool) -> Vec<Vec<(u32, &Scalar)>> {
        if by_column {
            let mut cols: Vec<Vec<(u32, &Scalar)>> = vec![Vec::new(); self.cols];
            for (&(r, c), v) in &self.entries {
                cols[c].push((r as u32, v));
            }
            cols
        } else {
            let mut rows: Vec<Vec<(u32, &Scalar)>> = vec![Vec::new(); self.rows];
            for (&(r, c), v) in &self.entries {
                rows[r].push((c as u32, v));
            }
            rows
        }
    }
}

/// Gauss-Jordan over dynamic scalars. Small inputs only (center and subspace
/// computations); the rank kernels handle the big matrices.
pub fn rref_rows(field: FieldDescriptor, cols: usize, mut a: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == a.len() {
            break;
        }
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = a[rank][col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for v in a[rank].iter_mut().skip(col) {
                *v = &*v * &inv;
            }
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in col..cols {
                if !pivot_row[j].is_zero() {
                    row[j] = &row[j] - &(&f * &pivot_row[j]);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    a.truncate(rank);
    debug_assert!(a.iter().all(|r| r.iter().all(|v| v.field() == field)));
    (a, pivots)
}

/// Scales a rational sparse vector to a primitive integer vector.
fn integer_line(line: &[(u32, &Scalar)]) -> Option<SparseVec<BigInt>> {
    if line.is_empty() {
        return None;
    }
    let mut lcm = BigInt::one();
    for (_, v) in line {
        let q = v.as_rational().expect("rational entry");
        if !q.denom().is_one() {
            lcm = lcm.lcm(q.denom());
        }
    }
    Some(
        line.iter()
            .map(|(c, v)| {
                let q = v.as_rational().expect("rational entry");
                let scaled = if lcm.is_one() { q.numer().clone() } else { q.numer() * (&lcm / q.denom()) };
                (*c, scaled)
            })
            .collect(),
    )
}

fn residue_line(line: &[(u32, &Scalar)]) -> Option<SparseVec<u64>> {
    if line.is_empty() {
        return None;
    }
    Some(
        line.iter()
            .map(|(c, v)| match v {
                Scalar::Residue { value, .. } => (*c, *value as u64),
                Scalar::Rational(_) => unreachable!("field checked on insert"),
            })
            .collect(),
    )
}

enum AccumulatorKind {
    Integer(EchelonAccumulator<Integers>),
    Residue(EchelonAccumulator<Residues>),
}

/// Streaming rank: vectors are pushed one at a time and never stored beyond
/// the echelon basis they contribute to.
pub struct RankAccumulator {
    field: FieldDescriptor,
    width: usize,
    inner: AccumulatorKind,
}

impl RankAccumulator {
    pub fn new(field: FieldDescriptor, width: usize) -> Self {
        let inner = match field {
            FieldDescriptor::Rationals => AccumulatorKind::Integer(EchelonAccumulator::new(Integers, width)),
            FieldDescriptor::PrimeField(p) => {
                AccumulatorKind::Residue(EchelonAccumulator::new(Residues { p: p as u64 }, width))
            }
        };
        Self { field, width, inner }
    }

    /// Pushes a sparse vector given as `(index, value)` pairs with strictly
    /// increasing indices. Zero values are skipped. Returns whether the rank
    /// grew.
    pub fn push(&mut self, entries: &[(usize, Scalar)]) -> Result<bool, LinalgError> {
        let mut line = Vec::with_capacity(entries.len());
        let mut last = None;
        for (idx, v) in entries {
            if *idx >= self.width {
                return Err(LinalgError::IndexOutOfRange {
                    row: 0,
                    col: *idx,
                    rows: 1,
                    cols: self.width,
                });
            }
            if last.is_some_and(|l| l >= *idx) {
                return Err(LinalgError::UnsortedVector);
            }
            last = Some(*idx);
            if v.field() != self.field {
                return Err(LinalgError::FieldMismatch {
                    expected: self.field,
                    found: v.field(),
                });
            }
            if !v.is_zero() {
                line.push((*idx as u32, v));
            }
        }
        Ok(match &mut self.inner {
            AccumulatorKind::Integer(acc) => integer_line(&line).is_some_and(|l| acc.push(l)),
            AccumulatorKind::Residue(acc) => residue_line(&line).is_some_and(|l| acc.push(l)),
        })
    }

    pub fn rank(&self) -> usize {
        match &self.inner {
            AccumulatorKind::Integer(acc) => acc.rank(),
            AccumulatorKind::Residue(acc) => acc.rank(),
        }
    }
}
