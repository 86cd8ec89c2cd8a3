//! Frozen `(n, m, dim Z, dim M)` for every built-in entry over `Q`, checked
//! against an independent brute-force rank computation before freezing.

use super::Golden;

/// `(key, n, m, dim Z, dim M)`, sorted by key.
const TABLE: &[(&str, usize, usize, usize, usize)] = &[
    ("L1_1", 1, 0, 1, 0),
    ("L2_1", 2, 0, 2, 1),
    ("L3_1", 3, 0, 3, 3),
    ("L3_2", 3, 1, 1, 2),
    ("L4_1", 4, 0, 4, 6),
    ("L4_2", 4, 1, 2, 4),
    ("L4_3", 4, 2, 1, 2),
    ("L5_1", 5, 0, 5, 10),
    ("L5_2", 5, 1, 3, 7),
    ("L5_3", 5, 2, 2, 4),
    ("L5_4", 5, 1, 1, 5),
    ("L5_5", 5, 2, 1, 4),
    ("L5_6", 5, 3, 1, 3),
    ("L5_7", 5, 3, 1, 3),
    ("L5_8", 5, 2, 2, 6),
    ("L5_9", 5, 3, 2, 3),
    ("L6_1", 6, 0, 6, 15),
    ("L6_10", 6, 2, 1, 6),
    ("L6_11", 6, 3, 1, 5),
    ("L6_12", 6, 3, 1, 5),
    ("L6_13", 6, 3, 1, 4),
    ("L6_14", 6, 4, 1, 2),
    ("L6_15", 6, 4, 1, 3),
    ("L6_16", 6, 4, 1, 2),
    ("L6_17", 6, 4, 1, 3),
    ("L6_18", 6, 4, 1, 3),
    ("L6_19_e0", 6, 3, 2, 6),
    ("L6_19_e1", 6, 3, 1, 5),
    ("L6_19_em1", 6, 3, 1, 5),
    ("L6_2", 6, 1, 4, 11),
    ("L6_20", 6, 3, 1, 5),
    ("L6_21_e0", 6, 4, 2, 4),
    ("L6_21_e1", 6, 4, 1, 4),
    ("L6_21_em1", 6, 4, 1, 4),
    ("L6_22_e0", 6, 2, 2, 8),
    ("L6_22_e1", 6, 2, 2, 8),
    ("L6_22_em1", 6, 2, 2, 8),
    ("L6_23", 6, 3, 2, 6),
    ("L6_24_e0", 6, 3, 2, 5),
    ("L6_24_e1", 6, 3, 2, 5),
    ("L6_24_em1", 6, 3, 2, 5),
    ("L6_25", 6, 3, 2, 6),
    ("L6_26", 6, 3, 3, 8),
    ("L6_3", 6, 2, 3, 7),
    ("L6_4", 6, 1, 2, 9),
    ("L6_5", 6, 2, 2, 7),
    ("L6_6", 6, 3, 2, 5),
    ("L6_7", 6, 3, 2, 5),
    ("L6_8", 6, 2, 3, 9),
    ("L6_9", 6, 3, 3, 5),
    ("abelian_0", 0, 0, 0, 0),
    ("abelian_1", 1, 0, 1, 0),
    ("abelian_2", 2, 0, 2, 1),
    ("abelian_3", 3, 0, 3, 3),
    ("abelian_4", 4, 0, 4, 6),
    ("abelian_5", 5, 0, 5, 10),
    ("abelian_6", 6, 0, 6, 15),
    ("abelian_7", 7, 0, 7, 21),
    ("abelian_8", 8, 0, 8, 28),
    ("filiform_3", 3, 1, 1, 2),
    ("filiform_4", 4, 2, 1, 2),
    ("filiform_5", 5, 3, 1, 3),
    ("filiform_6", 6, 4, 1, 3),
    ("filiform_7", 7, 5, 1, 4),
    ("heisenberg_1", 3, 1, 1, 2),
    ("heisenberg_1+abelian_1", 4, 1, 2, 4),
    ("heisenberg_1+abelian_2", 5, 1, 3, 7),
    ("heisenberg_1+abelian_3", 6, 1, 4, 11),
    ("heisenberg_1+abelian_4", 7, 1, 5, 16),
    ("heisenberg_1+abelian_5", 8, 1, 6, 22),
    ("heisenberg_1+abelian_6", 9, 1, 7, 29),
    ("heisenberg_2", 5, 1, 1, 5),
    ("heisenberg_2+abelian_1", 6, 1, 2, 9),
    ("heisenberg_2+abelian_2", 7, 1, 3, 14),
    ("heisenberg_2+abelian_3", 8, 1, 4, 20),
    ("heisenberg_2+abelian_4", 9, 1, 5, 27),
    ("heisenberg_3", 7, 1, 1, 14),
    ("heisenberg_3+abelian_1", 8, 1, 2, 20),
    ("heisenberg_3+abelian_2", 9, 1, 3, 27),
    ("heisenberg_4", 9, 1, 1, 27),
    ("heisenberg_5", 11, 1, 1, 44),
];

pub fn lookup(key: &str) -> Option<Golden> {
    TABLE
        .binary_search_by(|row| row.0.cmp(key))
        .ok()
        .map(|idx| {
            let (_, n, m, dim_center, dim_multiplier) = TABLE[idx];
            Golden {
                n,
                m,
                dim_center,
                dim_multiplier,
            }
        })
}
