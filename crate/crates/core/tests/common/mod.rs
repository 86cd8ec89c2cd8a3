//! Reference implementations used as oracles. They share no code with the
//! library beyond the structure-constant table itself: dense rational
//! matrices, textbook Gaussian elimination, and boundary maps built from the
//! generic alternating-sum formula.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use schurlie::lie::{LieAlgebra, StructureConstants};
use schurlie::linalg::{is_prime, FieldDescriptor, Scalar};

pub type Dense = Vec<Vec<BigRational>>;

pub fn q() -> FieldDescriptor {
    FieldDescriptor::Rationals
}

pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn to_rational(s: &Scalar) -> BigRational {
    s.as_rational().expect("rational scalar").clone()
}

/// Plain Gaussian elimination over `Q`: first nonzero pivot, full row
/// reduction below it.
pub fn naive_rank(mut a: Dense) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in rank + 1..rows {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &pivot;
            for k in c..cols {
                let d = &f * &a[rank][k];
                a[r][k] -= d;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// `[e_i, e_j]` as a dense rational vector, for any `i`, `j`.
pub fn bracket(sc: &StructureConstants, i: usize, j: usize) -> Vec<BigRational> {
    let n = sc.dim();
    let mut v = vec![BigRational::zero(); n];
    if i == j {
        return v;
    }
    let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
    if let Some(coeffs) = sc.get(a, b) {
        for (&k, c) in coeffs {
            v[k] = to_rational(c) * rat(sign);
        }
    }
    v
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Images of `e_i ∧ e_j` (one vector per pair).
pub fn naive_d2(sc: &StructureConstants) -> Dense {
    pairs(sc.dim()).into_iter().map(|(i, j)| bracket(sc, i, j)).collect()
}

/// Images of `x_0 ∧ x_1 ∧ x_2` under
/// `sum_{a<b} (-1)^(a+b+1) [x_a, x_b] ∧ x_c`, one vector per triple, as
/// coordinates on the pairs `e_p ∧ e_q` (`p < q`).
pub fn naive_d3(sc: &StructureConstants) -> Dense {
    let n = sc.dim();
    let pair_list = pairs(n);
    let index = |p: usize, q: usize| pair_list.iter().position(|&x| x == (p, q)).unwrap();
    triples(n)
        .into_iter()
        .map(|(i, j, k)| {
            let x = [i, j, k];
            let mut out = vec![BigRational::zero(); pair_list.len()];
            for (a, b, c) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
                let sign = if (a + b) % 2 == 1 { 1 } else { -1 };
                for (p, coeff) in bracket(sc, x[a], x[b]).into_iter().enumerate() {
                    let z = x[c];
                    if coeff.is_zero() || p == z {
                        continue;
                    }
                    // e_p ∧ e_z = -(e_z ∧ e_p)
                    let (slot, s) = if p < z { (index(p, z), 1) } else { (index(z, p), -1) };
                    out[slot] += coeff * rat(sign * s);
                }
            }
            out
        })
        .collect()
}

pub fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `C(n,2) - rank d2 - rank d3` with the naive oracle.
pub fn naive_multiplier(sc: &StructureConstants) -> usize {
    let n = sc.dim();
    binomial2(n) - naive_rank(naive_d2(sc)) - naive_rank(naive_d3(sc))
}

/// Dimension of the center: kernel of `x -> ([x, e_y])_y`.
pub fn naive_center_dim(sc: &StructureConstants) -> usize {
    let n = sc.dim();
    let mut rows = Vec::new();
    for y in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|i| bracket(sc, i, y)[k].clone()).collect());
        }
    }
    n - naive_rank(rows)
}

/// Random table on `n` generators whose brackets only reach higher indices
/// (`[e_i, e_j]` in the span of `e_k`, `k > j`), kept once it satisfies
/// Jacobi. Such tables are nilpotent.
pub fn random_nilpotent<R: Rng>(rng: &mut R, n: usize) -> LieAlgebra {
    loop {
        let mut sc = StructureConstants::new(n, q());
        for i in 0..n {
            for j in i + 1..n {
                let mut coeffs = Vec::new();
                for k in j + 1..n {
                    if rng.gen_bool(0.35) {
                        coeffs.push((k, rng.gen_range(-2i64..=2)));
                    }
                }
                sc.set_bracket_i64(i, j, &coeffs).unwrap();
            }
        }
        if let Ok(l) = LieAlgebra::new(sc) {
            return l;
        }
    }
}

/// Uniform-ish prime in `[2^29, 2^30)`.
pub fn random_prime_30<R: Rng>(rng: &mut R) -> u32 {
    loop {
        let c = rng.gen_range((1u32 << 29)..(1u32 << 30)) | 1;
        if is_prime(c as u64) {
            return c;
        }
    }
}

/// Algebra in a new basis given by integer rows (each row a new basis
/// vector in old coordinates).
pub fn rebase(l: &LieAlgebra, rows: &[Vec<i64>]) -> LieAlgebra {
    let basis: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| Scalar::from_i64(l.field(), v)).collect())
        .collect();
    LieAlgebra::new(l.in_basis(&basis).unwrap()).unwrap()
}

/// A unimodular integer basis change built from `ops` elementary row
/// additions chosen by a small LCG, so it is reproducible without a RNG
/// crate.
pub fn unimodular(n: usize, ops: usize, seed: u64) -> Vec<Vec<i64>> {
    let mut s = seed;
    let mut next = || {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (s >> 33) as usize
    };
    let mut rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..ops {
        let (i, j) = (next() % n, next() % n);
        if i == j {
            continue;
        }
        let sign = if next() % 2 == 0 { 1 } else { -1 };
        for c in 0..n {
            rows[i][c] += sign * rows[j][c];
        }
    }
    rows
}
