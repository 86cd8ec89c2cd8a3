//! `dim M(L)` as the dimension of `H_2(L; F)`, from the Chevalley–Eilenberg
//! complex `Λ³L --d3--> Λ²L --d2--> L` with trivial coefficients:
//!
//! ```text
//! d2(x ∧ y)     = [x, y]
//! d3(x ∧ y ∧ z) = [x, y] ∧ z - [x, z] ∧ y + [y, z] ∧ x
//! dim H_2       = dim ker d2 - rank d3 = C(n,2) - rank d2 - rank d3
//! ```

use crate::lie::LieAlgebra;
use crate::linalg::{ExactMatrix, RankAccumulator, Scalar};

/// Above this dimension `d3` is streamed column by column into the rank
/// accumulator instead of being materialized.
pub const STREAMING_THRESHOLD: usize = 24;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Lexicographic indexing of the strictly increasing `degree`-tuples drawn
/// from `0..n`, e.g. `(0,1) < (0,2) < ... < (1,2) < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WedgeBasis {
    n: usize,
    degree: usize,
}

impl WedgeBasis {
    pub fn new(n: usize, degree: usize) -> Self {
        Self { n, degree }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        binomial(self.n, self.degree)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Position of an increasing tuple.
    pub fn index_of(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.degree);
        debug_assert!(tuple.windows(2).all(|w| w[0] < w[1]));
        let mut idx = 0;
        let mut start = 0;
        for (slot, &t) in tuple.iter().enumerate() {
            let remaining = self.degree - slot - 1;
            // tuples whose entry at `slot` is smaller than t
            for v in start..t {
                idx += binomial(self.n - 1 - v, remaining);
            }
            start = t + 1;
        }
        idx
    }

    /// Index of the pair `(i, j)`, `i < j`, in closed form.
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(self.degree == 2 && i < j && j < self.n);
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    /// All tuples in index order.
    pub fn tuples(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.len());
        let mut current = Vec::with_capacity(self.degree);
        self.enumerate(0, &mut current, &mut out);
        out
    }

    fn enumerate(&self, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == self.degree {
            out.push(current.clone());
            return;
        }
        for v in start..self.n {
            current.push(v);
            self.enumerate(v + 1, current, out);
            current.pop();
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiplierResult {
    pub n: usize,
    /// `dim L²`
    pub m: usize,
    pub rank_d2: usize,
    pub rank_d3: usize,
    pub dim_multiplier: usize,
}

/// The `n x C(n,2)` matrix of `e_i ∧ e_j -> [e_i, e_j]`.
pub fn boundary_d2(l: &LieAlgebra) -> ExactMatrix {
    let n = l.dim();
    let pairs = WedgeBasis::new(n, 2);
    let mut d2 = ExactMatrix::zeros(l.field(), n, pairs.len());
    for (i, j, coeffs) in l.structure_constants().iter() {
        let col = pairs.pair_index(i, j);
        for (&k, c) in coeffs {
            d2.set(k, col, c.clone()).expect("in range");
        }
    }
    d2
}

/// The `C(n,2) x C(n,3)` matrix of `d3`.
pub fn boundary_d3(l: &LieAlgebra) -> ExactMatrix {
    let n = l.dim();
    let triples = WedgeBasis::new(n, 3);
    let mut d3 = ExactMatrix::zeros(l.field(), binomial(n, 2), triples.len());
    for (col, column) in d3_columns(l).enumerate() {
        for (row, v) in column {
            d3.set(row, col, v).expect("in range");
        }
    }
    d3
}

/// Columns of `d3` in wedge order as sparse vectors over the pair basis,
/// indices increasing, zeros dropped.
pub fn d3_columns(l: &LieAlgebra) -> impl Iterator<Item = Vec<(usize, Scalar)>> + '_ {
    let n = l.dim();
    let pairs = WedgeBasis::new(n, 2);
    let sc = l.structure_constants();
    let field = l.field();
    (0..n).flat_map(move |i| {
        (i + 1..n).flat_map(move |j| {
            (j + 1..n).map(move |k| {
                let mut acc: std::collections::BTreeMap<usize, Scalar> = std::collections::BTreeMap::new();
                let mut wedge = |bracket: Vec<(usize, Scalar)>, z: usize, sign_negative: bool| {
                    for (a, c) in bracket {
                        // c e_a ∧ e_z
                        if a == z {
                            continue;
                        }
                        let (idx, negate) = if a < z {
                            (pairs.pair_index(a, z), sign_negative)
                        } else {
                            (pairs.pair_index(z, a), !sign_negative)
                        };
                        let term = if negate { -c } else { c };
                        let slot = acc.entry(idx).or_insert_with(|| Scalar::zero(field));
                        *slot = &*slot + &term;
                    }
                };
                wedge(sc.basis_bracket(i, j), k, false);
                wedge(sc.basis_bracket(i, k), j, true);
                wedge(sc.basis_bracket(j, k), i, false);
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
        })
    })
}

/// `dim M(L) = C(n,2) - rank d2 - rank d3`. Deterministic for a fixed table.
pub fn schur_multiplier_dim(l: &LieAlgebra) -> MultiplierResult {
    let n = l.dim();
    let rank_d2 = boundary_d2(l).rank();
    let rank_d3 = if n > STREAMING_THRESHOLD {
        streamed_rank_d3(l)
    } else {
        boundary_d3(l).rank()
    };
    let m = l.derived_subalgebra().dim();
    debug_assert_eq!(rank_d2, m, "image of d2 is L²");
    MultiplierResult {
        n,
        m,
        rank_d2,
        rank_d3,
        dim_multiplier: binomial(n, 2) - rank_d2 - rank_d3,
    }
}

/// Rank of `d3` without materializing it.
pub fn streamed_rank_d3(l: &LieAlgebra) -> usize {
    let width = binomial(l.dim(), 2);
    let mut acc = RankAccumulator::new(l.field(), width);
    for column in d3_columns(l) {
        if column.is_empty() {
            continue;
        }
        acc.push(&column).expect("columns are sorted and in range");
        if acc.rank() == width {
            break;
        }
    }
    acc.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::StructureConstants;
    use crate::linalg::FieldDescriptor;

    const Q: FieldDescriptor = FieldDescriptor::Rationals;

    fn heisenberg(m: usize) -> LieAlgebra {
        let mut sc = StructureConstants::new(2 * m + 1, Q);
        for i in 0..m {
            sc.set_bracket_i64(2 * i, 2 * i + 1, &[(2 * m, 1)]).unwrap();
        }
        LieAlgebra::new(sc).unwrap()
    }

    #[test]
    fn wedge_indexing_is_lexicographic() {
        for n in 0..9 {
            for degree in 1..4 {
                let w = WedgeBasis::new(n, degree);
                let tuples = w.tuples();
                assert_eq!(tuples.len(), w.len());
                for (idx, t) in tuples.iter().enumerate() {
                    assert_eq!(w.index_of(t), idx);
                    if degree == 2 {
                        assert_eq!(w.pair_index(t[0], t[1]), idx);
                    }
                }
                assert!(tuples.windows(2).all(|p| p[0] < p[1]));
            }
        }
        assert_eq!(WedgeBasis::new(30, 3).len(), 4060);
    }

    #[test]
    fn heisenberg_one_boundaries() {
        let l = heisenberg(1);
        let d2 = boundary_d2(&l);
        assert_eq!((d2.rows(), d2.cols()), (3, 3));
        let nonzero: Vec<_> = d2.iter().map(|(r, c, v)| (r, c, v.clone())).collect();
        assert_eq!(nonzero, vec![(2, 0, Scalar::one(Q))]);
        let d3 = boundary_d3(&l);
        assert_eq!((d3.rows(), d3.cols()), (3, 1));
        assert!(d3.is_zero());
        let r = schur_multiplier_dim(&l);
        assert_eq!(r.dim_multiplier, 2);
        assert_eq!(r.rank_d2, 1);
    }

    #[test]
    fn abelian_boundaries_vanish() {
        let l = LieAlgebra::new(StructureConstants::new(4, Q)).unwrap();
        assert!(boundary_d2(&l).is_zero());
        assert!(boundary_d3(&l).is_zero());
        assert_eq!(schur_multiplier_dim(&l).dim_multiplier, 6);
    }

    #[test]
    fn d2_after_d3_vanishes() {
        for m in 1..4 {
            let l = heisenberg(m);
            assert!(boundary_d2(&l).mul(&boundary_d3(&l)).unwrap().is_zero());
        }
    }

    #[test]
    fn streamed_rank_matches_materialized() {
        for m in 1..5 {
            let l = heisenberg(m);
            assert_eq!(streamed_rank_d3(&l), boundary_d3(&l).rank());
        }
    }
}
