//! Nilpotent Lie algebras of dimension at most 6 over `Q`, following the
//! naming of W. A. de Graaf, "Classification of 6-dimensional nilpotent Lie
//! algebras over fields of characteristic not 2", J. Algebra 309 (2007).
//!
//! Brackets are transcribed with 1-based indices `[x_i, x_j] = sum c x_k`.
//! The one-parameter families `L6_19`, `L6_21`, `L6_22` and `L6_24` are
//! instantiated at `eps = 0, 1, -1`, each treated as a single algebra.

/// `(i, j, [(k, c), ...])`, 1-based.
pub type Bracket = (usize, usize, &'static [(usize, i64)]);

pub struct TableEntry {
    pub key: String,
    pub dim: usize,
    /// `(i, j, [(k, c), ...])`, 1-based.
    pub brackets: Vec<(usize, usize, Vec<(usize, i64)>)>,
    pub citation: String,
}

const CITATION: &str = "de Graaf 2007, J. Algebra 309";

/// All algebras of dimension <= 5.
const SMALL: &[(&str, usize, &[Bracket])] = &[
    ("L1_1", 1, &[]),
    ("L2_1", 2, &[]),
    ("L3_1", 3, &[]),
    ("L3_2", 3, &[(1, 2, &[(3, 1)])]),
    ("L4_1", 4, &[]),
    ("L4_2", 4, &[(1, 2, &[(3, 1)])]),
    ("L4_3", 4, &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)])]),
    ("L5_1", 5, &[]),
    ("L5_2", 5, &[(1, 2, &[(3, 1)])]),
    ("L5_3", 5, &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)])]),
    ("L5_4", 5, &[(1, 2, &[(5, 1)]), (3, 4, &[(5, 1)])]),
    ("L5_5", 5, &[(1, 2, &[(3, 1)]), (1, 3, &[(5, 1)]), (2, 4, &[(5, 1)])]),
    (
        "L5_6",
        5,
        &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(5, 1)]), (2, 3, &[(5, 1)])],
    ),
    ("L5_7", 5, &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(5, 1)])]),
    ("L5_8", 5, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)])]),
    ("L5_9", 5, &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (2, 3, &[(5, 1)])]),
];

/// Indecomposable 6-dimensional algebras without parameters.
const SIX: &[(&str, &[Bracket])] = &[
    ("L6_10", &[(1, 2, &[(3, 1)]), (1, 3, &[(6, 1)]), (4, 5, &[(6, 1)])]),
    (
        "L6_11",
        &[
            (1, 2, &[(3, 1)]),
            (1, 3, &[(4, 1)]),
            (1, 4, &[(6, 1)]),
            (2, 3, &[(6, 1)]),
            (2, 5, &[(6, 1)]),
        ],
    ),
    (
        "L6_12",
        &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(6, 1)]), (2, 5, &[(6, 1)])],
    ),
    (
        "L6_13",
        &[
            (1, 2, &[(3, 1)]),
            (1, 3, &[(5, 1)]),
            (2, 4, &[(5, 1)]),
            (1, 5, &[(6, 1)]),
            (3, 4, &[(6, 1)]),
        ],
    ),
    (
        "L6_14",
        &[
            (1, 2, &[(3, 1)]),
            (1, 3, &[(4, 1)]),
            (1, 4, &[(5, 1)]),
            (2, 3, &[(5, 1)]),
            (2, 5, &[(6, 1)]),
            (3, 4, &[(6, -1)]),
        ],
    ),
    (
        "L6_15",
        &[
            (1, 2, &[(3, 1)]),
            (1, 3, &[(4, 1)]),
            (1, 4, &[(5, 1)]),
            (2, 3, &[(5, 1)]),
            (1, 5, &[(6, 1)]),
            (2, 4, &[(6, 1)]),
        ],
    ),
    (
        "L6_16",
        &[
            (1, 2, &[(3, 1)]),
            (1, 3, &[(4, 1)]),
            (1, 4, &[(5, 1)]),
            (2, 5, &[(6, 1)]),
            (3, 4, &[(6, -1)]),
        ],
    ),
    (
        "L6_17",
        &[
            (1, 2, &[(3, 1)]),
            (1, 3, &[(4, 1)]),
            (1, 4, &[(5, 1)]),
            (1, 5, &[(6, 1)]),
            (2, 3, &[(6, 1)]),
        ],
    ),
    (
        "L6_18",
        &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(5, 1)]), (1, 5, &[(6, 1)])],
    ),
    (
        "L6_20",
        &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (1, 5, &[(6, 1)]), (2, 4, &[(6, 1)])],
    ),
    (
        "L6_23",
        &[(1, 2, &[(3, 1)]), (1, 3, &[(5, 1)]), (1, 4, &[(6, 1)]), (2, 4, &[(5, 1)])],
    ),
    ("L6_25", &[(1, 2, &[(3, 1)]), (1, 3, &[(5, 1)]), (1, 4, &[(6, 1)])]),
    ("L6_26", &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (2, 3, &[(6, 1)])]),
];

/// Parameter values used for the one-parameter families.
pub const EPSILONS: [i64; 3] = [0, 1, -1];

/// 6-dimensional one-parameter families. The `eps` coefficient is written as
/// the placeholder `EPS` in the tables below.
const EPS: i64 = i64::MIN;

const FAMILIES: &[(&str, &[Bracket])] = &[
    (
        "L6_19",
        &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (2, 4, &[(6, 1)]), (3, 5, &[(6, EPS)])],
    ),
    (
        "L6_21",
        &[
            (1, 2, &[(3, 1)]),
            (1, 3, &[(4, 1)]),
            (2, 3, &[(5, 1)]),
            (1, 4, &[(6, 1)]),
            (2, 5, &[(6, EPS)]),
        ],
    ),
    (
        "L6_22",
        &[(1, 2, &[(5, 1)]), (1, 3, &[(6, 1)]), (2, 4, &[(6, EPS)]), (3, 4, &[(5, 1)])],
    ),
    (
        "L6_24",
        &[
            (1, 2, &[(3, 1)]),
            (1, 3, &[(5, 1)]),
            (1, 4, &[(6, EPS)]),
            (2, 3, &[(6, 1)]),
            (2, 4, &[(5, 1)]),
        ],
    ),
];

fn eps_suffix(eps: i64) -> String {
    if eps < 0 {
        format!("em{}", -eps)
    } else {
        format!("e{eps}")
    }
}

fn instantiate(brackets: &[Bracket], eps: i64) -> Vec<(usize, usize, Vec<(usize, i64)>)> {
    brackets
        .iter()
        .map(|&(i, j, coeffs)| {
            let coeffs = coeffs.iter().map(|&(k, c)| (k, if c == EPS { eps } else { c })).collect();
            (i, j, coeffs)
        })
        .collect()
}

/// The full table list: dimensions 1 to 5, the decomposable 6-dimensional
/// algebras `L6_k = L5_k ⊕ L1_1` (k = 1..9), the indecomposable ones, and
/// the family members.
pub fn classification_tables() -> Vec<TableEntry> {
    let mut out: Vec<TableEntry> = SMALL
        .iter()
        .map(|&(key, dim, brackets)| TableEntry {
            key: key.to_string(),
            dim,
            brackets: instantiate(brackets, 0),
            citation: CITATION.to_string(),
        })
        .collect();
    for k in 1..=9 {
        let base = SMALL
            .iter()
            .find(|(key, _, _)| *key == format!("L5_{k}"))
            .expect("L5_k present");
        out.push(TableEntry {
            key: format!("L6_{k}"),
            dim: 6,
            brackets: instantiate(base.2, 0),
            citation: format!("{CITATION}; L5_{k} plus a 1-dimensional abelian summand"),
        });
    }
    for &(key, brackets) in SIX {
        out.push(TableEntry {
            key: key.to_string(),
            dim: 6,
            brackets: instantiate(brackets, 0),
            citation: CITATION.to_string(),
        });
    }
    for &(key, brackets) in FAMILIES {
        for eps in EPSILONS {
            out.push(TableEntry {
                key: format!("{key}_{}", eps_suffix(eps)),
                dim: 6,
                brackets: instantiate(brackets, eps),
                citation: format!("{CITATION}; family member eps = {eps}"),
            });
        }
    }
    out
}
