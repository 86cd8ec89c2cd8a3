//! Worked examples for every public operation.

mod common;

use common::*;
use schurlie::catalog::{
    builtin_catalog, deserialize, lookup, make_abelian, make_filiform, make_heisenberg, serialize, FormatError,
};
use schurlie::lie::{direct_sum, validate, LieAlgebra, LieError, StructureConstants, Subspace};
use schurlie::linalg::{ExactMatrix, FieldDescriptor, LinalgError, Scalar};
use schurlie::multiplier::{boundary_d2, boundary_d3, schur_multiplier_dim};
use schurlie::theorems::*;

fn s(v: i64) -> Scalar {
    Scalar::from_i64(q(), v)
}

fn h_plus_a(h: usize, k: usize) -> LieAlgebra {
    direct_sum(&make_heisenberg(h).unwrap(), &make_abelian(k)).unwrap()
}

fn dim_m(l: &LieAlgebra) -> usize {
    schur_multiplier_dim(l).dim_multiplier
}

// exact linear algebra

#[test]
fn rank_examples() {
    assert_eq!(ExactMatrix::zeros(q(), 0, 0).rank(), 0);
    assert_eq!(ExactMatrix::identity(q(), 3).rank(), 3);
    let d3 = boundary_d3(&make_heisenberg(1).unwrap());
    assert_eq!(d3.rank(), 0);
    assert_eq!(naive_rank(d3.to_dense().iter().map(|r| r.iter().map(to_rational).collect()).collect()), 0);
}

#[test]
fn rank_rejects_mixed_fields() {
    let mut m = ExactMatrix::zeros(q(), 2, 2);
    let err = m.set(0, 0, Scalar::from_i64(FieldDescriptor::PrimeField(5), 1));
    assert!(matches!(err, Err(LinalgError::FieldMismatch { .. })));
}

#[test]
fn kernel_dim_examples() {
    assert_eq!(ExactMatrix::identity(q(), 3).kernel_dim(), 0);
    assert_eq!(ExactMatrix::zeros(q(), 2, 5).kernel_dim(), 5);
    assert_eq!(boundary_d2(&make_heisenberg(1).unwrap()).kernel_dim(), 2);
}

#[test]
fn kernel_basis_examples() {
    assert!(ExactMatrix::identity(q(), 4).kernel_basis().is_empty());
    let m = ExactMatrix::from_i64_rows(&[&[1, 1]]);
    assert_eq!(m.kernel_basis(), vec![vec![s(1), s(-1)]]);
    let zero = boundary_d2(&make_abelian(3));
    assert_eq!(
        zero.kernel_basis(),
        vec![vec![s(1), s(0), s(0)], vec![s(0), s(1), s(0)], vec![s(0), s(0), s(1)]]
    );
}

#[test]
fn modular_crosscheck_examples() {
    assert_eq!(ExactMatrix::identity(q(), 4).modular_rank_crosscheck(101).unwrap(), 4);
    assert_eq!(ExactMatrix::zeros(q(), 3, 3).modular_rank_crosscheck(7).unwrap(), 0);
    let d3 = boundary_d3(&make_heisenberg(2).unwrap());
    assert_eq!(d3.modular_rank_crosscheck(10007).unwrap(), d3.rank());
    let mut m = ExactMatrix::zeros(q(), 1, 1);
    m.set(0, 0, Scalar::from_ratio(q(), &3.into(), &7.into()).unwrap()).unwrap();
    assert_eq!(m.modular_rank_crosscheck(7), Err(LinalgError::DenominatorDivisibleByP { p: 7 }));
}

// structure constants and algebras

#[test]
fn validate_examples() {
    assert!(validate(StructureConstants::new(5, q())).is_ok());
    assert!(validate(make_heisenberg(1).unwrap().structure_constants().clone()).is_ok());
    let mut sc = StructureConstants::new(3, q());
    sc.set_bracket_i64(0, 1, &[(0, 1)]).unwrap();
    sc.set_bracket_i64(0, 2, &[(2, 1)]).unwrap();
    match validate(sc) {
        Err(LieError::JacobiViolation { i, j, k, residual }) => {
            assert_eq!((i, j, k), (0, 1, 2));
            // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = [e1,e3] + 0 + [-e3,e2] = e3
            assert_eq!(residual, vec![s(0), s(0), s(1)]);
        }
        other => panic!("expected a Jacobi violation, got {other:?}"),
    }
}

#[test]
fn bracket_examples() {
    let h = make_heisenberg(1).unwrap();
    let x = vec![s(2), s(-1), s(5)];
    assert_eq!(h.bracket(&x, &x).unwrap(), h.zero_vector());
    assert_eq!(h.bracket(&h.basis_vector(0), &h.basis_vector(1)).unwrap(), h.basis_vector(2));
    let a = make_abelian(4);
    let y = vec![s(1), s(2), s(3), s(4)];
    let z = vec![s(-1), s(0), s(7), s(1)];
    assert_eq!(a.bracket(&y, &z).unwrap(), a.zero_vector());
    assert!(matches!(h.bracket(&y, &x), Err(LieError::DimensionMismatch { .. })));
}

#[test]
fn derived_subalgebra_examples() {
    assert_eq!(make_abelian(5).derived_subalgebra().dim(), 0);
    for m in 1..=5 {
        assert_eq!(make_heisenberg(m).unwrap().derived_subalgebra().dim(), 1);
    }
    assert_eq!(h_plus_a(1, 2).derived_subalgebra().dim(), 1);
}

#[test]
fn center_examples() {
    assert_eq!(make_abelian(4).center().dim(), 4);
    let h = make_heisenberg(3).unwrap();
    assert_eq!(h.center(), Subspace::span(q(), 7, vec![h.basis_vector(6)]).unwrap());
    for k in 0..4 {
        let l = h_plus_a(1, k);
        assert_eq!(l.center().dim(), k + 1);
        assert_eq!(naive_center_dim(l.structure_constants()), k + 1);
    }
}

#[test]
fn lower_central_series_examples() {
    let dims = |l: &LieAlgebra| l.lower_central_series().iter().map(|s| s.dim()).collect::<Vec<_>>();
    assert_eq!(dims(&make_abelian(3)), vec![3, 0]);
    assert_eq!(dims(&make_heisenberg(2).unwrap()), vec![5, 1, 0]);
    let mut sc = StructureConstants::new(3, q());
    sc.set_bracket_i64(0, 1, &[(1, 1)]).unwrap();
    let l = LieAlgebra::new(sc).unwrap();
    assert_eq!(dims(&l), vec![3, 1]);
    assert!(!l.is_nilpotent());
    assert!(make_heisenberg(2).unwrap().is_nilpotent());
    assert!(make_abelian(2).is_nilpotent());
}

#[test]
fn quotient_examples() {
    let f = make_filiform(5).unwrap();
    assert_eq!(f.quotient(&Subspace::zero(q(), 5)).unwrap(), f);
    let h = make_heisenberg(1).unwrap();
    assert_eq!(h.quotient(&h.center()).unwrap(), make_abelian(2));
    assert_eq!(f.quotient(&Subspace::full(q(), 5)).unwrap(), make_abelian(0));
    let x = Subspace::span(q(), 3, vec![h.basis_vector(0)]).unwrap();
    assert_eq!(h.quotient(&x), Err(LieError::NotAnIdeal));
}

#[test]
fn direct_sum_examples() {
    let f = make_filiform(4).unwrap();
    assert_eq!(direct_sum(&f, &make_abelian(0)).unwrap(), f);
    let l = h_plus_a(1, 1);
    assert_eq!(l.dim(), 4);
    assert_eq!(invariants_report(&l).t, 2);
    let hh = direct_sum(&make_heisenberg(1).unwrap(), &make_heisenberg(1).unwrap()).unwrap();
    assert_eq!(hh.derived_subalgebra().dim(), 2);
    let gf = schurlie::catalog::abelian(1, FieldDescriptor::PrimeField(3));
    assert!(matches!(direct_sum(&f, &gf), Err(LieError::FieldMismatch { .. })));
}

// multiplier

#[test]
fn boundary_d2_examples() {
    assert!(boundary_d2(&make_abelian(4)).is_zero());
    let d2 = boundary_d2(&make_heisenberg(1).unwrap());
    let entries: Vec<(usize, usize, Scalar)> = d2.iter().map(|(r, c, v)| (r, c, v.clone())).collect();
    assert_eq!(entries, vec![(2, 0, s(1))]);
    for e in builtin_catalog() {
        assert_eq!(boundary_d2(&e.algebra).rank(), e.algebra.derived_subalgebra().dim(), "{}", e.key);
    }
}

#[test]
fn boundary_d3_examples() {
    assert!(boundary_d3(&make_abelian(5)).is_zero());
    assert!(boundary_d3(&make_heisenberg(1).unwrap()).is_zero());
    for e in builtin_catalog() {
        let l = &e.algebra;
        assert!(boundary_d2(l).mul(&boundary_d3(l)).unwrap().is_zero(), "{}", e.key);
    }
}

#[test]
fn multiplier_examples() {
    assert_eq!(dim_m(&make_abelian(4)), 6);
    assert_eq!(dim_m(&make_heisenberg(1).unwrap()), 2);
    assert_eq!(dim_m(&make_heisenberg(3).unwrap()), 14);
    assert_eq!(dim_m(&h_plus_a(1, 3)), 11);
}

#[test]
fn multiplier_result_invariants() {
    for e in builtin_catalog() {
        let r = schur_multiplier_dim(&e.algebra);
        assert_eq!(r.rank_d2, r.m);
        assert_eq!(r.dim_multiplier + r.m + r.rank_d3, r.n * r.n.saturating_sub(1) / 2);
    }
}

// theorems

#[test]
fn invariants_report_examples() {
    let r = invariants_report(&make_heisenberg(1).unwrap()).clone();
    assert_eq!((r.n, r.m, r.dim_multiplier, r.t, r.main_bound), (3, 1, 2, 1, Some(2)));
    assert!(check_main_bound(&make_heisenberg(1).unwrap()).unwrap().equality);
    let r = invariants_report(&make_abelian(4)).clone();
    assert_eq!((r.n, r.m, r.dim_multiplier, r.t, r.main_bound), (4, 0, 6, 0, None));
    let r = invariants_report(&make_heisenberg(2).unwrap()).clone();
    assert_eq!((r.n, r.m, r.dim_multiplier, r.t, r.main_bound), (5, 1, 5, 5, Some(7)));
    assert!(!check_main_bound(&make_heisenberg(2).unwrap()).unwrap().equality);
}

#[test]
fn check_main_bound_examples() {
    let v = check_main_bound(&make_heisenberg(1).unwrap()).unwrap();
    assert_eq!((v.lhs, v.rhs, v.holds, v.equality), (2, 2, true, true));
    let v = check_main_bound(&h_plus_a(1, 3)).unwrap();
    assert_eq!((v.lhs, v.rhs, v.holds, v.equality), (11, 11, true, true));
    let v = check_main_bound(&h_plus_a(2, 1)).unwrap();
    assert_eq!((v.lhs, v.rhs, v.holds, v.equality), (9, 11, true, false));
    assert_eq!(check_main_bound(&make_abelian(2)), Err(TheoremError::DerivedTrivial));
}

#[test]
fn check_batten_bound_examples() {
    let v = check_batten_bound(&make_heisenberg(1).unwrap()).unwrap();
    assert_eq!((v.lhs, v.rhs, v.equality), (3, 3, true));
    let v = check_batten_bound(&make_abelian(5)).unwrap();
    assert_eq!((v.lhs, v.rhs, v.equality), (10, 10, true));
    let v = check_batten_bound(&make_heisenberg(2).unwrap()).unwrap();
    assert_eq!((v.lhs, v.rhs, v.equality), (6, 10, false));
}

#[test]
fn verify_kunneth_examples() {
    let v = verify_kunneth(&make_abelian(2), &make_abelian(3)).unwrap();
    assert_eq!((v.lhs, v.rhs, v.holds), (10, 10, true));
    let v = verify_kunneth(&make_heisenberg(1).unwrap(), &make_abelian(1)).unwrap();
    assert_eq!((v.lhs, v.rhs, v.holds), (4, 4, true));
    let h1 = make_heisenberg(1).unwrap();
    let v = verify_kunneth(&h1, &h1).unwrap();
    assert_eq!((v.lhs, v.rhs, v.holds), (8, 8, true));
    assert_eq!(naive_multiplier(direct_sum(&h1, &h1).unwrap().structure_constants()), 8);
}

#[test]
fn check_corollary_sr_examples() {
    let f = make_filiform(5).unwrap();
    let v = check_corollary_sr(&f, &Subspace::zero(q(), 5)).unwrap();
    assert_eq!(v.lhs, v.rhs);
    assert_eq!(v.lhs as usize, dim_m(&f));
    let h = make_heisenberg(1).unwrap();
    let v = check_corollary_sr_central(&h, &h.center()).unwrap();
    assert_eq!((v.lhs, v.rhs, v.equality), (3, 3, true));
    let l = h_plus_a(1, 1);
    let summand = Subspace::span(q(), 4, vec![l.basis_vector(3)]).unwrap();
    let v = check_corollary_sr_central(&l, &summand).unwrap();
    assert_eq!((v.lhs, v.rhs, v.equality), (4, 4, true));
}

#[test]
fn classify_equality_case_examples() {
    let c = classify_equality_case(&make_heisenberg(1).unwrap()).unwrap();
    assert_eq!((c.heisenberg_rank, c.abelian_dim, c.h1_plus_abelian), (1, 0, true));
    let c = classify_equality_case(&h_plus_a(1, 4)).unwrap();
    assert_eq!((c.heisenberg_rank, c.abelian_dim, c.h1_plus_abelian), (1, 4, true));
    let h3 = make_heisenberg(3).unwrap();
    let c = classify_equality_case(&h3).unwrap();
    assert_eq!((c.heisenberg_rank, c.abelian_dim, c.h1_plus_abelian), (3, 0, false));
    let v = check_main_bound(&h3).unwrap();
    assert_eq!((v.lhs, v.rhs), (14, 16));
}

#[test]
fn classify_small_t_examples() {
    assert_eq!(classify_small_t(&make_abelian(6)).unwrap(), Some(SmallT::Abelian));
    assert_eq!(classify_small_t(&make_heisenberg(1).unwrap()).unwrap(), Some(SmallT::H1));
    assert_eq!(classify_small_t(&h_plus_a(1, 1)).unwrap(), Some(SmallT::H1PlusLine));
}

// catalog

#[test]
fn constructor_examples() {
    assert_eq!(dim_m(&make_abelian(0)), 0);
    assert_eq!(dim_m(&make_abelian(1)), 0);
    assert_eq!(dim_m(&make_abelian(7)), 21);
    let h1 = make_heisenberg(1).unwrap();
    assert_eq!((h1.dim(), dim_m(&h1)), (3, 2));
    let h4 = make_heisenberg(4).unwrap();
    assert_eq!((h4.dim(), dim_m(&h4)), (9, 27));
}

#[test]
fn catalog_examples() {
    assert_eq!(lookup("heisenberg_1").unwrap().expected.unwrap().dim_multiplier, 2);
    let f4 = &lookup("filiform_4").unwrap().algebra;
    let r = invariants_report(f4);
    assert!(r.nilpotent);
    assert_eq!((r.m, r.main_bound), (2, Some(3)));
    assert_eq!(r.dim_multiplier, naive_multiplier(f4.structure_constants()));
    for e in builtin_catalog() {
        if invariants_report(&e.algebra).m >= 1 {
            assert!(check_main_bound(&e.algebra).unwrap().holds, "{}", e.key);
        }
        assert!(check_batten_bound(&e.algebra).unwrap().holds, "{}", e.key);
    }
}

#[test]
fn serialization_examples() {
    let h2 = make_heisenberg(2).unwrap();
    assert_eq!(&deserialize(&serialize(&h2)).unwrap(), h2.structure_constants());
    let diagonal = "dim 3\n1 1 -> 2:1\n";
    assert!(matches!(deserialize(diagonal), Err(FormatError::Parse { line: 2, .. })));
    let sc = deserialize("dim 3\nfield Q\n0 1 -> 2:2/4\n").unwrap();
    assert_eq!(sc.get(0, 1).unwrap()[&2], Scalar::from_ratio(q(), &1.into(), &2.into()).unwrap());
    let l = LieAlgebra::new(sc).unwrap();
    assert!(serialize(&l).contains("0 1 -> 2:1/2"));
}
