use std::sync::OnceLock;

use crate::linalg::{rref_rows, ExactMatrix, FieldDescriptor, Scalar};
use crate::theorems::InvariantsReport;

use super::subspace::{check_vector, unit};
use super::{LieError, StructureConstants, Subspace};

/// A finite-dimensional Lie algebra whose bracket table satisfies the Jacobi
/// identity. Immutable once built; the invariants report is computed at most
/// once and shared by all readers.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    sc: StructureConstants,
    report: OnceLock<InvariantsReport>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.sc == other.sc
    }
}

impl Eq for LieAlgebra {}

/// Checks the Jacobi identity on every basis triple `i < j < k`.
pub fn validate(sc: StructureConstants) -> Result<LieAlgebra, LieError> {
    LieAlgebra::new(sc)
}

impl LieAlgebra {
    pub fn new(sc: StructureConstants) -> Result<Self, LieError> {
        let n = sc.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let residual = jacobi_sum(&sc, i, j, k);
                    if residual.iter().any(|x| !x.is_zero()) {
                        return Err(LieError::JacobiViolation { i, j, k, residual });
                    }
                }
            }
        }
        Ok(Self {
            sc,
            report: OnceLock::new(),
        })
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.sc
    }

    pub fn dim(&self) -> usize {
        self.sc.dim()
    }

    pub fn field(&self) -> FieldDescriptor {
        self.sc.field()
    }

    pub(crate) fn report_cell(&self) -> &OnceLock<InvariantsReport> {
        &self.report
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![Scalar::zero(self.field()); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit(self.field(), self.dim(), i)
    }

    /// `[e_i, e_j]` as a dense vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (k, c) in self.sc.basis_bracket(i, j) {
            out[k] = c;
        }
        out
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, LieError> {
        check_vector(self.field(), self.dim(), x)?;
        check_vector(self.field(), self.dim(), y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (i, j, coeffs) in self.sc.iter() {
            // coefficient of [e_i, e_j] in [x, y]
            let w = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if w.is_zero() {
                continue;
            }
            for (&k, c) in coeffs {
                out[k] = &out[k] + &(&w * c);
            }
        }
        out
    }

    /// `L² = [L, L]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let vectors = self
            .sc
            .iter()
            .map(|(_, _, coeffs)| {
                let mut v = self.zero_vector();
                for (&k, c) in coeffs {
                    v[k] = c.clone();
                }
                v
            })
            .collect();
        self.span(vectors)
    }

    /// `Z(L)`: kernel of `x -> ([x, e_0], ..., [x, e_{n-1}])`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut ad = ExactMatrix::zeros(self.field(), n * n, n);
        for i in 0..n {
            for y in 0..n {
                for (k, c) in self.sc.basis_bracket(i, y) {
                    ad.set(y * n + k, i, c).expect("indices in range");
                }
            }
        }
        self.span(ad.kernel_basis())
    }

    /// `[A, B]` for subspaces of `L`.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vectors = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis() {
            for y in b.basis() {
                vectors.push(self.bracket_unchecked(x, y));
            }
        }
        self.span(vectors)
    }

    /// `L = L^1 ⊇ L^2 ⊇ ...` until the chain stabilizes. Consecutive terms are
    /// strictly decreasing; the last term is the stable one.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let whole = Subspace::full(self.field(), self.dim());
        let mut series = vec![whole.clone()];
        loop {
            let last = series.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = self.bracket_subspaces(&whole, last);
            if next.dim() == last.dim() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(Subspace::is_zero)
    }

    /// Smallest `c` with `L^{c+1} = 0`, or `None` if `L` is not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        series.last().is_some_and(Subspace::is_zero).then(|| series.len() - 1)
    }

    pub fn is_ideal(&self, k: &Subspace) -> bool {
        if k.ambient_dim() != self.dim() || k.field() != self.field() {
            return false;
        }
        (0..self.dim()).all(|i| {
            let e = self.basis_vector(i);
            k.basis().iter().all(|v| k.contains(&self.bracket_unchecked(&e, v)))
        })
    }

    pub fn is_central(&self, k: &Subspace) -> bool {
        k.is_subspace_of(&self.center())
    }

    /// `L / K` on the complement spanned by the non-pivot basis vectors of
    /// `K`, in increasing index order.
    pub fn quotient(&self, k: &Subspace) -> Result<LieAlgebra, LieError> {
        self.check_subspace(k)?;
        if !self.is_ideal(k) {
            return Err(LieError::NotAnIdeal);
        }
        let mut is_pivot = vec![false; self.dim()];
        for &p in k.pivots() {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..self.dim()).filter(|&i| !is_pivot[i]).collect();
        let mut sc = StructureConstants::new(complement.len(), self.field());
        for (a, &i) in complement.iter().enumerate() {
            for (b, &j) in complement.iter().enumerate().skip(a + 1) {
                let reduced = k.reduce(&self.basis_bracket(i, j));
                let coeffs = complement.iter().enumerate().map(|(c, &idx)| (c, reduced[idx].clone()));
                sc.set_bracket(a, b, coeffs)?;
            }
        }
        LieAlgebra::new(sc)
    }

    /// The subalgebra `K` in the echelon basis of `K`.
    pub fn subalgebra(&self, k: &Subspace) -> Result<LieAlgebra, LieError> {
        self.check_subspace(k)?;
        let mut sc = StructureConstants::new(k.dim(), self.field());
        for (a, x) in k.basis().iter().enumerate() {
            for (b, y) in k.basis().iter().enumerate().skip(a + 1) {
                let coords = k
                    .coordinates(&self.bracket_unchecked(x, y))
                    .ok_or(LieError::NotASubalgebra)?;
                sc.set_bracket(a, b, coords.into_iter().enumerate())?;
            }
        }
        LieAlgebra::new(sc)
    }

    /// Structure constants with respect to another basis of `L` (given as
    /// coordinate vectors in the current basis).
    pub fn in_basis(&self, basis: &[Vec<Scalar>]) -> Result<StructureConstants, LieError> {
        let n = self.dim();
        if basis.len() != n {
            return Err(LieError::DimensionMismatch {
                expected: n,
                found: basis.len(),
            });
        }
        for v in basis {
            check_vector(self.field(), n, v)?;
        }
        let inverse = invert_columns(self.field(), basis).ok_or(LieError::SingularBasis)?;
        let mut sc = StructureConstants::new(n, self.field());
        for a in 0..n {
            for b in a + 1..n {
                let br = self.bracket_unchecked(&basis[a], &basis[b]);
                let coords = (0..n).map(|r| {
                    let mut acc = Scalar::zero(self.field());
                    for (c, x) in br.iter().enumerate() {
                        if !x.is_zero() {
                            acc = &acc + &(&inverse[r][c] * x);
                        }
                    }
                    (r, acc)
                });
                sc.set_bracket(a, b, coords)?;
            }
        }
        Ok(sc)
    }

    fn span(&self, vectors: Vec<Vec<Scalar>>) -> Subspace {
        Subspace::span(self.field(), self.dim(), vectors).expect("vectors built in the algebra")
    }

    fn check_subspace(&self, k: &Subspace) -> Result<(), LieError> {
        if k.field() != self.field() {
            return Err(LieError::FieldMismatch {
                expected: self.field(),
                found: k.field(),
            });
        }
        if k.ambient_dim() != self.dim() {
            return Err(LieError::DimensionMismatch {
                expected: self.dim(),
                found: k.ambient_dim(),
            });
        }
        Ok(())
    }
}

/// `A ⊕ B` with the basis of `A` first; cross brackets vanish.
pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> Result<LieAlgebra, LieError> {
    if a.field() != b.field() {
        return Err(LieError::FieldMismatch {
            expected: a.field(),
            found: b.field(),
        });
    }
    let shift = a.dim();
    let mut sc = StructureConstants::new(a.dim() + b.dim(), a.field());
    for (i, j, coeffs) in a.sc.iter() {
        sc.set_bracket(i, j, coeffs.iter().map(|(&k, c)| (k, c.clone())))?;
    }
    for (i, j, coeffs) in b.sc.iter() {
        sc.set_bracket(i + shift, j + shift, coeffs.iter().map(|(&k, c)| (k + shift, c.clone())))?;
    }
    // Both summands already satisfy Jacobi and the cross terms are zero.
    Ok(LieAlgebra {
        sc,
        report: OnceLock::new(),
    })
}

/// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` as a dense vector.
fn jacobi_sum(sc: &StructureConstants, i: usize, j: usize, k: usize) -> Vec<Scalar> {
    let field = sc.field();
    let mut out = vec![Scalar::zero(field); sc.dim()];
    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
        for (m, coeff) in sc.basis_bracket(a, b) {
            for (t, inner) in sc.basis_bracket(m, c) {
                out[t] = &out[t] + &(&coeff * &inner);
            }
        }
    }
    out
}

/// Inverse of the matrix whose columns are `basis`, as dense rows.
fn invert_columns(field: FieldDescriptor, basis: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = basis.len();
    let augmented: Vec<Vec<Scalar>> = (0..n)
        .map(|r| {
            let mut row: Vec<Scalar> = basis.iter().map(|col| col[r].clone()).collect();
            row.extend(unit(field, n, r));
            row
        })
        .collect();
    let (reduced, pivots) = rref_rows(field, 2 * n, augmented);
    if pivots.len() < n || pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(reduced.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldDescriptor = FieldDescriptor::Rationals;

    fn table(n: usize, brackets: &[(usize, usize, &[(usize, i64)])]) -> StructureConstants {
        let mut sc = StructureConstants::new(n, Q);
        for &(i, j, c) in brackets {
            sc.set_bracket_i64(i, j, c).unwrap();
        }
        sc
    }

    fn h1() -> LieAlgebra {
        LieAlgebra::new(table(3, &[(0, 1, &[(2, 1)])])).unwrap()
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [e1,e2]=e1, [e1,e3]=e3 (1-based)
        let sc = table(3, &[(0, 1, &[(0, 1)]), (0, 2, &[(2, 1)])]);
        match LieAlgebra::new(sc) {
            Err(LieError::JacobiViolation { i, j, k, residual }) => {
                assert_eq!((i, j, k), (0, 1, 2));
                // [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1]
                //   = [e0,e2] + 0 + [-e2,e1] = e2 + 0 = e2
                assert_eq!(residual, vec![Scalar::zero(Q), Scalar::zero(Q), Scalar::one(Q)]);
            }
            other => panic!("expected JacobiViolation, got {other:?}"),
        }
    }

    #[test]
    fn heisenberg_bracket() {
        let l = h1();
        let e = |i| l.basis_vector(i);
        assert_eq!(l.bracket(&e(0), &e(1)).unwrap(), e(2));
        assert_eq!(l.bracket(&e(1), &e(0)).unwrap(), (0..3).map(|i| -&e(2)[i]).collect::<Vec<_>>());
        assert_eq!(l.bracket(&e(0), &e(0)).unwrap(), l.zero_vector());
        assert!(matches!(l.bracket(&e(0)[..2], &e(1)), Err(LieError::DimensionMismatch { .. })));
    }

    #[test]
    fn invariants_of_heisenberg() {
        let l = h1();
        assert_eq!(l.derived_subalgebra().dim(), 1);
        assert_eq!(l.center(), l.derived_subalgebra());
        let dims: Vec<usize> = l.lower_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![3, 1, 0]);
        assert_eq!(l.nilpotency_class(), Some(2));
    }

    #[test]
    fn non_nilpotent_series_stabilizes() {
        // [e1,e2]=e2
        let l = LieAlgebra::new(table(3, &[(0, 1, &[(1, 1)])])).unwrap();
        let dims: Vec<usize> = l.lower_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![3, 1]);
        assert!(!l.is_nilpotent());
        assert_eq!(l.nilpotency_class(), None);
    }

    #[test]
    fn quotients() {
        let l = h1();
        let z = l.center();
        let q = l.quotient(&z).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.structure_constants().is_abelian());

        let same = l.quotient(&Subspace::zero(Q, 3)).unwrap();
        assert_eq!(same.structure_constants(), l.structure_constants());

        let all = l.quotient(&Subspace::full(Q, 3)).unwrap();
        assert_eq!(all.dim(), 0);

        let not_ideal = Subspace::span(Q, 3, vec![l.basis_vector(0)]).unwrap();
        assert!(matches!(l.quotient(&not_ideal), Err(LieError::NotAnIdeal)));
    }

    #[test]
    fn direct_sum_is_blockwise() {
        let a = h1();
        let b = LieAlgebra::new(StructureConstants::new(2, Q)).unwrap();
        let s = direct_sum(&a, &b).unwrap();
        assert_eq!(s.dim(), 5);
        assert_eq!(s.derived_subalgebra().dim(), 1);
        assert_eq!(s.center().dim(), 3);
        let hh = direct_sum(&a, &a).unwrap();
        assert_eq!(hh.derived_subalgebra().dim(), 2);
        let empty = LieAlgebra::new(StructureConstants::new(0, Q)).unwrap();
        assert_eq!(direct_sum(&a, &empty).unwrap(), a);
        let gf = LieAlgebra::new(StructureConstants::new(1, FieldDescriptor::PrimeField(5))).unwrap();
        assert!(matches!(direct_sum(&a, &gf), Err(LieError::FieldMismatch { .. })));
    }

    #[test]
    fn change_of_basis_round_trip() {
        let l = h1();
        let q = |v| Scalar::from_i64(Q, v);
        // v1 = e0 + e1, v2 = e1, v3 = 2 e2  =>  [v1, v2] = e2 = v3 / 2
        let basis = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(0)], vec![q(0), q(0), q(2)]];
        let sc = l.in_basis(&basis).unwrap();
        let half = Scalar::from_ratio(Q, &1.into(), &2.into()).unwrap();
        assert_eq!(sc.basis_bracket(0, 1), vec![(2, half)]);
        let singular = vec![basis[0].clone(), basis[0].clone(), basis[2].clone()];
        assert!(matches!(l.in_basis(&singular), Err(LieError::SingularBasis)));
    }
}
