//! Line-oriented structure-constants text format.
//!
//! ```text
//! # Heisenberg algebra H(1)
//! dim 3
//! field Q
//! 0 1 -> 2:1
//! ```
//!
//! `dim` comes first, `field` (`Q` or `GF(p)`) is optional and defaults to
//! `Q`. Each bracket line `i j -> k:c ...` gives `[e_i, e_j]` for `i < j`
//! with 0-based indices; coefficients are integers or `p/q`. Brackets that
//! are not listed are zero, and `#` starts a comment.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::lie::{LieAlgebra, LieError, StructureConstants};
use crate::linalg::{is_prime, FieldDescriptor, Scalar, MAX_MODULUS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: index {index} out of range for dimension {dim}")]
    IndexOutOfRange { line: usize, index: usize, dim: usize },
    #[error("line {line}: `{token}` is not a rational number")]
    NonRationalScalar { line: usize, token: String },
}

/// Failure to load a file into a validated algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Invalid(#[from] LieError),
}

pub fn serialize(l: &LieAlgebra) -> String {
    serialize_table(l.structure_constants(), &[])
}

/// Serializes a table with leading `#` comment lines.
pub fn serialize_table(sc: &StructureConstants, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "dim {}", sc.dim());
    let _ = writeln!(out, "field {}", sc.field());
    for (i, j, coeffs) in sc.iter() {
        let _ = write!(out, "{i} {j} ->");
        for (k, c) in coeffs {
            let _ = write!(out, " {k}:{c}");
        }
        out.push('\n');
    }
    out
}

/// Parses a table without checking the Jacobi identity.
pub fn deserialize(text: &str) -> Result<StructureConstants, FormatError> {
    let mut sc: Option<StructureConstants> = None;
    let mut field_seen = false;
    let mut seen_pairs = BTreeSet::new();

    for (line_idx, raw) in text.lines().enumerate() {
        let line = line_idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(content);
        let Some(&(first_col, first)) = tokens.first() else { continue };
        let err = |column: usize, message: &str| FormatError::Parse {
            line,
            column,
            message: message.to_string(),
        };

        match first {
            "dim" => {
                if sc.is_some() {
                    return Err(err(first_col, "duplicate `dim` header"));
                }
                let &[_, (col, value)] = tokens.as_slice() else {
                    return Err(err(first_col, "expected `dim <n>`"));
                };
                let dim: usize = value.parse().map_err(|_| err(col, "dimension must be a natural number"))?;
                sc = Some(StructureConstants::new(dim, FieldDescriptor::Rationals));
            }
            "field" => {
                let Some(table) = sc.as_mut() else {
                    return Err(err(first_col, "`field` must follow `dim`"));
                };
                if field_seen || !table.is_abelian() {
                    return Err(err(first_col, "`field` must appear once, before any bracket"));
                }
                let &[_, (col, value)] = tokens.as_slice() else {
                    return Err(err(first_col, "expected `field Q` or `field GF(p)`"));
                };
                let field = parse_field(value).ok_or_else(|| err(col, "expected `Q` or `GF(p)` with p a prime below 2^31"))?;
                *table = StructureConstants::new(table.dim(), field);
                field_seen = true;
            }
            _ => {
                let Some(table) = sc.as_mut() else {
                    return Err(err(first_col, "missing `dim` header"));
                };
                parse_bracket(line, &tokens, table, &mut seen_pairs)?;
            }
        }
    }
    sc.ok_or(FormatError::Parse {
        line: text.lines().count().max(1),
        column: 1,
        message: "missing `dim` header".into(),
    })
}

/// Parses and validates.
pub fn load_algebra(text: &str) -> Result<LieAlgebra, LoadError> {
    Ok(LieAlgebra::new(deserialize(text)?)?)
}

fn parse_bracket(
    line: usize,
    tokens: &[(usize, &str)],
    table: &mut StructureConstants,
    seen_pairs: &mut BTreeSet<(usize, usize)>,
) -> Result<(), FormatError> {
    let err = |column: usize, message: &str| FormatError::Parse {
        line,
        column,
        message: message.to_string(),
    };
    let dim = table.dim();
    if tokens.len() < 3 || tokens[2].1 != "->" {
        return Err(err(tokens[0].0, "expected `i j -> k:c ...`"));
    }
    let index = |(col, tok): (usize, &str)| -> Result<usize, FormatError> {
        let idx: usize = tok.parse().map_err(|_| err(col, "basis index must be a natural number"))?;
        if idx >= dim {
            return Err(FormatError::IndexOutOfRange { line, index: idx, dim });
        }
        Ok(idx)
    };
    let i = index(tokens[0])?;
    let j = index(tokens[1])?;
    if i == j {
        return Err(err(tokens[1].0, "diagonal brackets are zero and must be omitted"));
    }
    if i > j {
        return Err(err(tokens[1].0, "bracket indices must satisfy i < j"));
    }
    if !seen_pairs.insert((i, j)) {
        return Err(err(tokens[0].0, "duplicate bracket"));
    }
    let mut coeffs = Vec::new();
    let mut seen_k = BTreeSet::new();
    for &(col, tok) in &tokens[3..] {
        let Some((k_tok, c_tok)) = tok.split_once(':') else {
            return Err(err(col, "expected `k:c`"));
        };
        let k = index((col, k_tok))?;
        if !seen_k.insert(k) {
            return Err(err(col, "duplicate coefficient index"));
        }
        let c = parse_scalar(table.field(), c_tok).map_err(|e| match e {
            ScalarError::NotRational => FormatError::NonRationalScalar {
                line,
                token: c_tok.to_string(),
            },
            ScalarError::Vanishes => err(col + k_tok.len() + 1, "denominator vanishes in the field"),
        })?;
        coeffs.push((k, c));
    }
    table.set_bracket(i, j, coeffs).map_err(|e| err(tokens[0].0, &e.to_string()))
}

/// Whitespace tokens with 1-based character columns.
fn tokenize(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in s.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(st)) => {
                out.push((st, &s[st..pos]));
                start = None;
            }
            (false, None) => start = Some(pos),
            _ => {}
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out.into_iter()
        .map(|(st, tok)| (s[..st].chars().count() + 1, tok))
        .collect()
}

fn parse_field(s: &str) -> Option<FieldDescriptor> {
    if s == "Q" {
        return Some(FieldDescriptor::Rationals);
    }
    let p: u64 = s.strip_prefix("GF(")?.strip_suffix(')')?.parse().ok()?;
    (p < MAX_MODULUS && is_prime(p)).then_some(FieldDescriptor::PrimeField(p as u32))
}

enum ScalarError {
    NotRational,
    Vanishes,
}

fn parse_scalar(field: FieldDescriptor, s: &str) -> Result<Scalar, ScalarError> {
    let parse_int = |t: &str| -> Result<BigInt, ScalarError> {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ScalarError::NotRational);
        }
        t.parse().map_err(|_| ScalarError::NotRational)
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (parse_int(n)?, parse_int(d)?),
        None => (parse_int(s)?, BigInt::from(1)),
    };
    if den == BigInt::from(0) {
        return Err(ScalarError::NotRational);
    }
    Scalar::from_ratio(field, &num, &den).map_err(|_| ScalarError::Vanishes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_abelian, make_heisenberg};
    use proptest::prelude::*;

    #[test]
    fn heisenberg_text() {
        let text = serialize(&make_heisenberg(1).unwrap());
        assert_eq!(text, "dim 3\nfield Q\n0 1 -> 2:1\n");
        assert_eq!(serialize(&make_abelian(0)), "dim 0\nfield Q\n");
    }

    #[test]
    fn round_trip_heisenberg_two() {
        let h = make_heisenberg(2).unwrap();
        let sc = deserialize(&serialize(&h)).unwrap();
        assert_eq!(&sc, h.structure_constants());
    }

    #[test]
    fn fractions_are_normalized() {
        let sc = deserialize("dim 3\n0 1 -> 2:2/4\n").unwrap();
        assert_eq!(serialize_table(&sc, &[]), "dim 3\nfield Q\n0 1 -> 2:1/2\n");
    }

    #[test]
    fn comments_and_blank_lines() {
        let sc = deserialize("# hello\n\ndim 3   # three\nfield Q\n  0 1 -> 2:1 # v\n").unwrap();
        assert_eq!(sc.get(0, 1).unwrap().len(), 1);
    }

    #[test]
    fn prime_field_header() {
        let sc = deserialize("dim 3\nfield GF(7)\n0 1 -> 2:1/2 0:-1\n").unwrap();
        assert_eq!(sc.field(), FieldDescriptor::PrimeField(7));
        assert_eq!(serialize_table(&sc, &[]), "dim 3\nfield GF(7)\n0 1 -> 0:6 2:4\n");
        assert!(matches!(deserialize("dim 3\nfield GF(8)\n"), Err(FormatError::Parse { line: 2, column: 7, .. })));
        assert!(matches!(
            deserialize("dim 3\nfield GF(7)\n0 1 -> 2:1/7\n"),
            Err(FormatError::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            deserialize("dim 3\n1 1 -> 2:1\n"),
            Err(FormatError::Parse { line: 2, column: 3, .. })
        ));
        assert!(matches!(deserialize("dim 3\n1 0 -> 2:1\n"), Err(FormatError::Parse { line: 2, .. })));
        assert!(matches!(
            deserialize("dim 3\n0 1 -> 3:1\n"),
            Err(FormatError::IndexOutOfRange { line: 2, index: 3, dim: 3 })
        ));
        assert!(matches!(
            deserialize("dim 3\n0 1 -> 2:1.5\n"),
            Err(FormatError::NonRationalScalar { line: 2, .. })
        ));
        assert!(matches!(deserialize("dim 3\n0 1 -> 2:1/0\n"), Err(FormatError::NonRationalScalar { .. })));
        assert!(matches!(deserialize("0 1 -> 2:1\n"), Err(FormatError::Parse { line: 1, .. })));
        assert!(matches!(deserialize(""), Err(FormatError::Parse { .. })));
        assert!(matches!(deserialize("dim 3\n0 1 -> 2:1\n0 1 -> 2:1\n"), Err(FormatError::Parse { line: 3, .. })));
        assert!(matches!(deserialize("dim 3\n0 1 2:1\n"), Err(FormatError::Parse { .. })));
        assert!(matches!(deserialize("dim 3\n0 1 -> 2:1 2:3\n"), Err(FormatError::Parse { .. })));
        assert!(matches!(deserialize("dim 3\n0 1 -> 2:1\nfield Q\n"), Err(FormatError::Parse { line: 3, .. })));
    }

    #[test]
    fn load_reports_jacobi() {
        let err = load_algebra("dim 3\n0 1 -> 0:1\n0 2 -> 2:1\n").unwrap_err();
        assert!(matches!(err, LoadError::Invalid(LieError::JacobiViolation { .. })));
    }

    proptest! {
        #[test]
        fn text_round_trip(entries in proptest::collection::vec((0usize..5, 0usize..5, 0usize..5, -20i64..20, 1i64..9), 0..12)) {
            let mut sc = StructureConstants::new(5, FieldDescriptor::Rationals);
            for (a, b, k, num, den) in entries {
                if a == b { continue; }
                let (i, j) = (a.min(b), a.max(b));
                let c = Scalar::from_ratio(FieldDescriptor::Rationals, &num.into(), &den.into()).unwrap();
                sc.set_bracket(i, j, [(k, c)]).unwrap();
            }
            let text = serialize_table(&sc, &["generated"]);
            let back = deserialize(&text).unwrap();
            prop_assert_eq!(&back, &sc);
            prop_assert_eq!(serialize_table(&back, &["generated"]), text);
        }
    }
}
