//! Rank kernels over the integers and over `GF(p)`.
//!
//! Rational input is scaled row-by-row to integers before it reaches these
//! kernels (scaling a row by a nonzero constant does not change rank).
//! Rows are sparse vectors sorted by column index with no stored zeros.
//!
//! Pivoting is positional and deterministic: a row is reduced at its leading
//! column against the pivot row that owns that column, and becomes a new
//! pivot row for its leading column if nothing owns it yet.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::mod_inv;

pub(crate) type SparseVec<T> = Vec<(u32, T)>;

/// Fraction of a dense block above which the sparse kernel hands over to the
/// dense one.
pub(crate) const DENSE_FALLBACK_DENSITY: f64 = 0.5;
/// The fill-in check only kicks in once this many pivot rows exist.
const DENSE_FALLBACK_MIN_PIVOTS: usize = 8;

pub(crate) trait EliminationRing {
    type Elem: Clone;

    /// Puts a freshly accepted pivot row into canonical shape.
    fn normalize(&self, row: &mut SparseVec<Self::Elem>);

    /// Cancels the leading entry of `row` using `pivot`; both share the same
    /// leading column.
    fn eliminate(&self, row: &SparseVec<Self::Elem>, pivot: &SparseVec<Self::Elem>) -> SparseVec<Self::Elem>;

    /// Dense rank of the given rows.
    fn dense_rank(&self, rows: Vec<SparseVec<Self::Elem>>, width: usize) -> usize;
}

/// Fraction-free integer elimination. Pivot rows are primitive with a
/// positive leading entry.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Integers;

/// Elimination modulo a prime below 2^31. Pivot rows are monic.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Residues {
    pub p: u64,
}

fn make_primitive(row: &mut SparseVec<BigInt>) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v /= &g;
    }
}

impl EliminationRing for Integers {
    type Elem = BigInt;

    fn normalize(&self, row: &mut SparseVec<BigInt>) {
        make_primitive(row);
        if row.first().is_some_and(|(_, v)| v.is_negative()) {
            for (_, v) in row.iter_mut() {
                *v = -&*v;
            }
        }
    }

    fn eliminate(&self, row: &SparseVec<BigInt>, pivot: &SparseVec<BigInt>) -> SparseVec<BigInt> {
        let lead_row = &row[0].1;
        let lead_pivot = &pivot[0].1;
        let g = lead_row.gcd(lead_pivot);
        // result = a * row - b * pivot
        let a = lead_pivot / &g;
        let b = lead_row / &g;
        let unit_scale = a.is_one();
        let mut out = Vec::with_capacity(row.len() + pivot.len());
        let (mut i, mut j) = (1, 1);
        while i < row.len() || j < pivot.len() {
            let ci = row.get(i).map_or(u32::MAX, |e| e.0);
            let cj = pivot.get(j).map_or(u32::MAX, |e| e.0);
            if ci < cj {
                let v = if unit_scale { row[i].1.clone() } else { &a * &row[i].1 };
                out.push((ci, v));
                i += 1;
            } else if cj < ci {
                out.push((cj, -(&b * &pivot[j].1)));
                j += 1;
            } else {
                let v = &a * &row[i].1 - &b * &pivot[j].1;
                if !v.is_zero() {
                    out.push((ci, v));
                }
                i += 1;
                j += 1;
            }
        }
        if !unit_scale {
            make_primitive(&mut out);
        }
        out
    }

    fn dense_rank(&self, rows: Vec<SparseVec<BigInt>>, width: usize) -> usize {
        bareiss_rank(densify(rows, width, BigInt::zero()))
    }
}

impl EliminationRing for Residues {
    type Elem = u64;

    fn normalize(&self, row: &mut SparseVec<u64>) {
        let Some(&(_, lead)) = row.first() else { return };
        if lead == 1 {
            return;
        }
        let inv = mod_inv(lead, self.p);
        for (_, v) in row.iter_mut() {
            *v = *v * inv % self.p;
        }
    }

    fn eliminate(&self, row: &SparseVec<u64>, pivot: &SparseVec<u64>) -> SparseVec<u64> {
        let p = self.p;
        // pivot is monic: result = row - lead * pivot
        let factor = p - row[0].1;
        let mut out = Vec::with_capacity(row.len() + pivot.len());
        let (mut i, mut j) = (1, 1);
        while i < row.len() || j < pivot.len() {
            let ci = row.get(i).map_or(u32::MAX, |e| e.0);
            let cj = pivot.get(j).map_or(u32::MAX, |e| e.0);
            if ci < cj {
                out.push(row[i]);
                i += 1;
            } else if cj < ci {
                out.push((cj, factor * pivot[j].1 % p));
                j += 1;
            } else {
                let v = (row[i].1 + factor * pivot[j].1) % p;
                if v != 0 {
                    out.push((ci, v));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    fn dense_rank(&self, rows: Vec<SparseVec<u64>>, width: usize) -> usize {
        gauss_rank_mod(densify(rows, width, 0), self.p)
    }
}

fn densify<T: Clone>(rows: Vec<SparseVec<T>>, width: usize, zero: T) -> Vec<Vec<T>> {
    rows.into_iter()
        .map(|row| {
            let mut dense = vec![zero.clone(); width];
            for (c, v) in row {
                dense[c as usize] = v;
            }
            dense
        })
        .collect()
}

/// Incremental row echelon form. Rows are pushed one at a time; the number of
/// accepted rows is the rank of everything pushed so far.
pub(crate) struct EchelonAccumulator<R: EliminationRing> {
    ring: R,
    width: usize,
    owner: Vec<Option<u32>>,
    pivots: Vec<SparseVec<R::Elem>>,
    stored: usize,
}

impl<R: EliminationRing> EchelonAccumulator<R> {
    pub fn new(ring: R, width: usize) -> Self {
        Self {
            ring,
            width,
            owner: vec![None; width],
            pivots: Vec::new(),
            stored: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Stored nonzeros divided by the size of the pivot block.
    pub fn density(&self) -> f64 {
        if self.pivots.is_empty() || self.width == 0 {
            return 0.0;
        }
        self.stored as f64 / (self.pivots.len() * self.width) as f64
    }

    /// Reduces `row` and keeps it if it is independent. Returns whether the
    /// rank grew.
    pub fn push(&mut self, mut row: SparseVec<R::Elem>) -> bool {
        if self.pivots.len() == self.width {
            return false;
        }
        loop {
            let Some(&(lead, _)) = row.first() else { return false };
            match self.owner[lead as usize] {
                Some(idx) => row = self.ring.eliminate(&row, &self.pivots[idx as usize]),
                None => {
                    self.ring.normalize(&mut row);
                    self.owner[lead as usize] = Some(self.pivots.len() as u32);
                    self.stored += row.len();
                    self.pivots.push(row);
                    return true;
                }
            }
        }
    }

    pub fn into_pivots(self) -> Vec<SparseVec<R::Elem>> {
        self.pivots
    }
}

/// Rank of a batch of rows: sparse elimination first, switching to the dense
/// kernel for the whole remaining problem once the pivot block fills in past
/// [`DENSE_FALLBACK_DENSITY`].
pub(crate) fn batch_rank<R: EliminationRing>(ring: R, width: usize, rows: Vec<SparseVec<R::Elem>>) -> usize
where
    R: Copy,
{
    let mut acc = EchelonAccumulator::new(ring, width);
    let mut rows = rows.into_iter();
    while let Some(row) = rows.next() {
        acc.push(row);
        if acc.rank() >= DENSE_FALLBACK_MIN_PIVOTS && acc.density() > DENSE_FALLBACK_DENSITY {
            let rest: Vec<_> = rows.collect();
            if rest.is_empty() {
                break;
            }
            let mut all = acc.into_pivots();
            all.extend(rest);
            return ring.dense_rank(all, width);
        }
    }
    acc.rank()
}

/// Bareiss fraction-free elimination. Pivot: first nonzero entry of the
/// current column among the remaining rows, in row order.
pub(crate) fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, p);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

/// Plain Gaussian elimination modulo `p`, same pivot rule as [`bareiss_rank`].
pub(crate) fn gauss_rank_mod(mut a: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, piv);
        let inv = mod_inv(a[rank][col], p);
        for j in col..cols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let f = p - f;
            for j in col..cols {
                row[j] = (row[j] + f * pivot_row[j]) % p;
            }
        }
        rank += 1;
    }
    rank
}
