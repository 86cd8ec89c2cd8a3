//! Dimension bounds and characterizations for nilpotent Lie algebras,
//! evaluated against computed invariants.
//!
//! With `n = dim L`, `m = dim L²` and `t(L) = n(n-1)/2 - dim M(L)`:
//!
//! ```text
//! main bound      dim M(L) <= (n+m-2)(n-m-1)/2 + 1          (m >= 1)
//! batten bound    m + dim M(L) <= n(n-1)/2
//! kunneth         dim M(A⊕B) = dim M(A) + dim M(B) + dim(A/A² ⊗ B/B²)
//! ideal bound     dim M(L) + dim(L² ∩ K)
//!                     <= dim M(L/K) + dim M(K) + dim((L/K)/(L/K)² ⊗ K/K²)
//! ```
//!
//! For `m = 1` the main bound is attained exactly when `L ≅ H(1) ⊕ A` with
//! `A` abelian.

use std::fmt;

use thiserror::Error;

use crate::catalog::{abelian, heisenberg};
use crate::lie::{direct_sum, LieAlgebra, LieError, Subspace};
use crate::linalg::{FieldDescriptor, Scalar};
use crate::multiplier::{binomial, schur_multiplier_dim};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("derived subalgebra is zero; the bound does not apply")]
    DerivedTrivial,
    #[error("derived subalgebra has dimension {m}, expected 1")]
    DerivedDimNotOne { m: usize },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("ideal is not central")]
    NotCentral,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),
    #[error("inconsistent classification: {0}")]
    InconsistentClassification(String),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Invariants of a single algebra. Bound quantities are exact integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantsReport {
    pub field: FieldDescriptor,
    pub n: usize,
    pub m: usize,
    pub dim_center: usize,
    pub dim_derived_cap_center: usize,
    pub dim_multiplier: usize,
    pub rank_d3: usize,
    /// `n(n-1)/2 - dim M(L)`
    pub t: i64,
    /// `(n+m-2)(n-m-1)/2 + 1`, only when `m >= 1`.
    pub main_bound: Option<u64>,
    /// `m + dim M(L)`
    pub batten_lhs: u64,
    /// `n(n-1)/2`
    pub batten_rhs: u64,
    pub nilpotent: bool,
    pub nilpotency_class: Option<usize>,
}

/// Computed once per algebra and cached on it.
pub fn invariants_report(l: &LieAlgebra) -> &InvariantsReport {
    l.report_cell().get_or_init(|| compute_report(l))
}

fn compute_report(l: &LieAlgebra) -> InvariantsReport {
    let mult = schur_multiplier_dim(l);
    let derived = l.derived_subalgebra();
    let center = l.center();
    let cap = derived.intersection(&center).expect("same ambient space");
    let n = l.dim();
    let m = derived.dim();
    let pairs = binomial(n, 2) as u64;
    InvariantsReport {
        field: l.field(),
        n,
        m,
        dim_center: center.dim(),
        dim_derived_cap_center: cap.dim(),
        dim_multiplier: mult.dim_multiplier,
        rank_d3: mult.rank_d3,
        t: pairs as i64 - mult.dim_multiplier as i64,
        main_bound: main_bound(n, m),
        batten_lhs: (m + mult.dim_multiplier) as u64,
        batten_rhs: pairs,
        nilpotent: l.is_nilpotent(),
        nilpotency_class: l.nilpotency_class(),
    }
}

/// `(n+m-2)(n-m-1)/2 + 1`. Undefined for `m = 0` and for `m >= n`.
pub fn main_bound(n: usize, m: usize) -> Option<u64> {
    if m == 0 || m >= n {
        return None;
    }
    let product = ((n + m - 2) * (n - m - 1)) as u64;
    // the factors sum to 2n - 3, so one of them is even
    assert_eq!(product % 2, 0, "odd product in main bound");
    Some(product / 2 + 1)
}

/// `(n(n-1)/2 - m) - main_bound(n, m)`: how far the main bound improves on
/// the batten bound.
pub fn batten_gap(n: usize, m: usize) -> Option<i64> {
    main_bound(n, m).map(|b| binomial(n, 2) as i64 - m as i64 - b as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundName {
    MainTheorem,
    BattenProposition,
    Kunneth,
    CorollarySR,
}

impl BoundName {
    pub fn label(self) -> &'static str {
        match self {
            BoundName::MainTheorem => "main",
            BoundName::BattenProposition => "batten",
            BoundName::Kunneth => "kunneth",
            BoundName::CorollarySR => "sr",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            BoundName::MainTheorem => "main bound",
            BoundName::BattenProposition => "batten bound",
            BoundName::Kunneth => "kunneth formula",
            BoundName::CorollarySR => "ideal bound",
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundVerdict {
    pub bound: BoundName,
    pub holds: bool,
    pub lhs: u64,
    pub rhs: u64,
    pub equality: bool,
}

impl BoundVerdict {
    /// `lhs <= rhs`.
    pub fn inequality(bound: BoundName, lhs: u64, rhs: u64) -> Self {
        Self {
            bound,
            holds: lhs <= rhs,
            lhs,
            rhs,
            equality: lhs == rhs,
        }
    }

    /// `lhs = rhs`.
    pub fn identity(bound: BoundName, lhs: u64, rhs: u64) -> Self {
        Self {
            bound,
            holds: lhs == rhs,
            lhs,
            rhs,
            equality: lhs == rhs,
        }
    }

    pub fn slack(&self) -> i64 {
        self.rhs as i64 - self.lhs as i64
    }
}

fn require_nilpotent(l: &LieAlgebra) -> Result<&InvariantsReport, TheoremError> {
    let report = invariants_report(l);
    if !report.nilpotent {
        return Err(TheoremError::NotNilpotent);
    }
    Ok(report)
}

pub fn check_main_bound(l: &LieAlgebra) -> Result<BoundVerdict, TheoremError> {
    let report = require_nilpotent(l)?;
    let rhs = report.main_bound.ok_or(TheoremError::DerivedTrivial)?;
    Ok(BoundVerdict::inequality(
        BoundName::MainTheorem,
        report.dim_multiplier as u64,
        rhs,
    ))
}

pub fn check_batten_bound(l: &LieAlgebra) -> Result<BoundVerdict, TheoremError> {
    let report = require_nilpotent(l)?;
    Ok(BoundVerdict::inequality(
        BoundName::BattenProposition,
        report.batten_lhs,
        report.batten_rhs,
    ))
}

fn codim_derived(report: &InvariantsReport) -> u64 {
    (report.n - report.m) as u64
}

/// Left side from the multiplier of the constructed sum, right side from
/// the factors.
pub fn verify_kunneth(a: &LieAlgebra, b: &LieAlgebra) -> Result<BoundVerdict, TheoremError> {
    if a.field() != b.field() {
        return Err(TheoremError::FieldMismatch(a.field(), b.field()));
    }
    let sum = direct_sum(a, b)?;
    let lhs = schur_multiplier_dim(&sum).dim_multiplier as u64;
    let ra = invariants_report(a);
    let rb = invariants_report(b);
    let rhs = ra.dim_multiplier as u64 + rb.dim_multiplier as u64 + codim_derived(ra) * codim_derived(rb);
    Ok(BoundVerdict::identity(BoundName::Kunneth, lhs, rhs))
}

/// The ideal bound for an arbitrary ideal `K`, with `M(K)` computed from the
/// subalgebra structure of `K`.
pub fn check_corollary_sr(l: &LieAlgebra, k: &Subspace) -> Result<BoundVerdict, TheoremError> {
    if !l.is_ideal(k) {
        return Err(TheoremError::NotAnIdeal);
    }
    let h = l.quotient(k)?;
    let k_alg = l.subalgebra(k)?;
    let rk = invariants_report(&k_alg);
    sr_verdict(l, k, &h, rk.dim_multiplier as u64, codim_derived(rk))
}

/// The ideal bound for a central ideal `K`, using `dim M(K) = k(k-1)/2`.
pub fn check_corollary_sr_central(l: &LieAlgebra, k: &Subspace) -> Result<BoundVerdict, TheoremError> {
    if k.field() != l.field() {
        return Err(TheoremError::FieldMismatch(l.field(), k.field()));
    }
    if k.ambient_dim() != l.dim() {
        return Err(LieError::DimensionMismatch {
            expected: l.dim(),
            found: k.ambient_dim(),
        }
        .into());
    }
    if !l.is_central(k) {
        return Err(TheoremError::NotCentral);
    }
    let h = l.quotient(k)?;
    sr_verdict(l, k, &h, binomial(k.dim(), 2) as u64, k.dim() as u64)
}

fn sr_verdict(
    l: &LieAlgebra,
    k: &Subspace,
    h: &LieAlgebra,
    dim_mk: u64,
    codim_k: u64,
) -> Result<BoundVerdict, TheoremError> {
    let rl = invariants_report(l);
    let rh = invariants_report(h);
    let cap = l.derived_subalgebra().intersection(k)?;
    let lhs = rl.dim_multiplier as u64 + cap.dim() as u64;
    let rhs = rh.dim_multiplier as u64 + dim_mk + codim_derived(rh) * codim_k;
    Ok(BoundVerdict::inequality(BoundName::CorollarySR, lhs, rhs))
}

/// One-dimensional subspaces of `L² ∩ Z(L)` used to exercise the ideal
/// bound. With `d = dim(L² ∩ Z(L))`: for `d <= 3`, every line spanned by a
/// combination of the echelon basis with coefficients in `{-1, 0, 1}`
/// (leading coefficient 1); for larger `d`, the basis lines and the line
/// through the sum of the basis.
pub fn central_lines(l: &LieAlgebra) -> Vec<Subspace> {
    let cap = l
        .derived_subalgebra()
        .intersection(&l.center())
        .expect("same ambient space");
    let d = cap.dim();
    let field = l.field();
    let mut combos: Vec<Vec<i64>> = Vec::new();
    if d <= 3 {
        for code in 1..3usize.pow(d as u32) {
            let mut c = Vec::with_capacity(d);
            let mut x = code;
            for _ in 0..d {
                c.push((x % 3) as i64 - 1);
                x /= 3;
            }
            if c.iter().find(|&&v| v != 0) == Some(&1) {
                combos.push(c);
            }
        }
    } else {
        for i in 0..d {
            let mut c = vec![0; d];
            c[i] = 1;
            combos.push(c);
        }
        combos.push(vec![1; d]);
    }
    combos.sort();
    combos
        .into_iter()
        .map(|c| {
            let coeffs: Vec<Scalar> = c.iter().map(|&v| Scalar::from_i64(field, v)).collect();
            let v = cap.combine(&coeffs);
            Subspace::span(field, l.dim(), vec![v]).expect("vector in the algebra")
        })
        .collect()
}

/// A certified isomorphism `L ≅ H(h) ⊕ A(k)` for an algebra with
/// one-dimensional derived subalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeisenbergDecomposition {
    pub heisenberg_rank: usize,
    pub abelian_dim: usize,
    /// New basis `u_1, w_1, ..., u_h, w_h, z, a_1, ..., a_k` in the old
    /// coordinates; in it the table of `L` equals that of `H(h) ⊕ A(k)`.
    pub basis: Vec<Vec<Scalar>>,
}

/// Splits a nilpotent algebra with `dim L² = 1` into Heisenberg and abelian
/// parts by a symplectic reduction of the bracket modulo the center.
pub fn decompose_derived_dim_one(l: &LieAlgebra) -> Result<HeisenbergDecomposition, TheoremError> {
    let report = require_nilpotent(l)?;
    if report.m != 1 {
        return Err(TheoremError::DerivedDimNotOne { m: report.m });
    }
    let field = l.field();
    let derived = l.derived_subalgebra();
    let center = l.center();
    let z = derived.basis()[0].clone();
    let z_pivot = derived.pivots()[0];
    let omega = |x: &[Scalar], y: &[Scalar]| l.bracket(x, y).expect("vectors of the algebra")[z_pivot].clone();
    let inconsistent = |what: &str| TheoremError::InconsistentClassification(what.to_string());
    if !center.contains(&z) {
        return Err(inconsistent("derived subalgebra is not central"));
    }

    let mut is_pivot = vec![false; l.dim()];
    for &p in center.pivots() {
        is_pivot[p] = true;
    }
    let mut rest: Vec<Vec<Scalar>> = (0..l.dim())
        .filter(|&i| !is_pivot[i])
        .map(|i| l.basis_vector(i))
        .collect();
    let mut symplectic = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let u = rest.remove(0);
        let partner = rest
            .iter()
            .position(|w| !omega(&u, w).is_zero())
            .ok_or_else(|| inconsistent("bracket form is degenerate modulo the center"))?;
        let w = rest.remove(partner);
        let scale = omega(&u, &w).inv().expect("nonzero");
        let w: Vec<Scalar> = w.iter().map(|x| x * &scale).collect();
        for r in rest.iter_mut() {
            let a = omega(r, &w);
            let b = omega(r, &u);
            for ((ri, ui), wi) in r.iter_mut().zip(&u).zip(&w) {
                *ri = &(&*ri - &(&a * ui)) + &(&b * wi);
            }
        }
        symplectic.push(u);
        symplectic.push(w);
    }
    let h = symplectic.len() / 2;

    let mut basis = symplectic;
    basis.push(z.clone());
    let mut chosen = derived.clone();
    for c in center.basis() {
        if !chosen.contains(c) {
            chosen = chosen.sum(&Subspace::span(field, l.dim(), vec![c.clone()])?)?;
            basis.push(c.clone());
        }
    }
    let k = center.dim() - 1;
    let model = direct_sum(
        &heisenberg(h, field).map_err(|e| inconsistent(&e.to_string()))?,
        &abelian(k, field),
    )?;
    let table = l.in_basis(&basis)?;
    if &table != model.structure_constants() {
        return Err(inconsistent("basis change does not reproduce H(h) ⊕ A(k)"));
    }
    Ok(HeisenbergDecomposition {
        heisenberg_rank: h,
        abelian_dim: k,
        basis,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityCase {
    pub heisenberg_rank: usize,
    pub abelian_dim: usize,
    /// `L ≅ H(1) ⊕ A`
    pub h1_plus_abelian: bool,
}

/// Decomposes an algebra with `m = 1` and checks that the decomposition is
/// of type `H(1) ⊕ A` exactly when the main bound is attained.
pub fn classify_equality_case(l: &LieAlgebra) -> Result<EqualityCase, TheoremError> {
    let d = decompose_derived_dim_one(l)?;
    let report = invariants_report(l);
    if 2 * d.heisenberg_rank != report.n - report.dim_center {
        return Err(TheoremError::InconsistentClassification(format!(
            "heisenberg rank {} but center codimension {}",
            d.heisenberg_rank,
            report.n - report.dim_center
        )));
    }
    let flag = d.heisenberg_rank == 1;
    let equality = check_main_bound(l)?.equality;
    if flag != equality {
        return Err(TheoremError::InconsistentClassification(format!(
            "H({}) ⊕ A({}) but main bound equality is {equality}",
            d.heisenberg_rank, d.abelian_dim
        )));
    }
    Ok(EqualityCase {
        heisenberg_rank: d.heisenberg_rank,
        abelian_dim: d.abelian_dim,
        h1_plus_abelian: flag,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallT {
    Abelian,
    H1,
    H1PlusLine,
}

impl fmt::Display for SmallT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SmallT::Abelian => "abelian",
            SmallT::H1 => "H(1)",
            SmallT::H1PlusLine => "H(1)+A(1)",
        })
    }
}

/// Labels `t(L) = 0, 1, 2` and checks the label against the structure of
/// `L`. Returns `None` for larger `t`.
pub fn classify_small_t(l: &LieAlgebra) -> Result<Option<SmallT>, TheoremError> {
    let report = require_nilpotent(l)?;
    let label = match report.t {
        0 => SmallT::Abelian,
        1 => SmallT::H1,
        2 => SmallT::H1PlusLine,
        _ => return Ok(None),
    };
    let inconsistent = |why: String| Err(TheoremError::InconsistentClassification(why));
    match label {
        SmallT::Abelian if report.m != 0 => inconsistent(format!("t = 0 but dim L² = {}", report.m)),
        SmallT::Abelian => Ok(Some(label)),
        _ => {
            if report.m != 1 {
                return inconsistent(format!("t = {} but dim L² = {}", report.t, report.m));
            }
            let d = decompose_derived_dim_one(l)?;
            let expected_k = if label == SmallT::H1 { 0 } else { 1 };
            if d.heisenberg_rank != 1 || d.abelian_dim != expected_k {
                return inconsistent(format!(
                    "t = {} but L ≅ H({}) ⊕ A({})",
                    report.t, d.heisenberg_rank, d.abelian_dim
                ));
            }
            Ok(Some(label))
        }
    }
}
