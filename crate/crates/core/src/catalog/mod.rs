//! Algebra families, the built-in corpus of nilpotent Lie algebras, and the
//! structure-constants text format.

mod classification;
pub mod format;
mod golden;

use std::sync::OnceLock;

use thiserror::Error;

use crate::lie::{direct_sum, LieAlgebra, LieError, StructureConstants};
use crate::linalg::FieldDescriptor;

pub use classification::EPSILONS;
pub use format::{deserialize, load_algebra, serialize, serialize_table, FormatError, LoadError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Constructed,
    ClassificationTable,
}

/// Frozen reference values for a catalog entry over `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Golden {
    pub n: usize,
    pub m: usize,
    pub dim_center: usize,
    pub dim_multiplier: usize,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: String,
    pub algebra: LieAlgebra,
    pub source: Source,
    pub citation: Option<String>,
    pub expected: Option<Golden>,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

pub fn abelian(n: usize, field: FieldDescriptor) -> LieAlgebra {
    LieAlgebra::new(StructureConstants::new(n, field)).expect("abelian tables satisfy Jacobi")
}

/// `H(m)` of dimension `2m + 1` on `v_1, ..., v_{2m}, v` with
/// `[v_{2i-1}, v_{2i}] = v`; `v` is the last basis vector.
pub fn heisenberg(m: usize, field: FieldDescriptor) -> Result<LieAlgebra, CatalogError> {
    if m == 0 {
        return Err(CatalogError::InvalidParameter("heisenberg rank must be at least 1".into()));
    }
    let mut sc = StructureConstants::new(2 * m + 1, field);
    for i in 0..m {
        sc.set_bracket_i64(2 * i, 2 * i + 1, &[(2 * m, 1)])?;
    }
    Ok(LieAlgebra::new(sc)?)
}

/// Standard filiform algebra: `[e_1, e_i] = e_{i+1}` for `2 <= i <= n-1`
/// (1-based).
pub fn filiform(n: usize, field: FieldDescriptor) -> Result<LieAlgebra, CatalogError> {
    if n < 3 {
        return Err(CatalogError::InvalidParameter("filiform dimension must be at least 3".into()));
    }
    let mut sc = StructureConstants::new(n, field);
    for i in 1..n - 1 {
        sc.set_bracket_i64(0, i, &[(i + 1, 1)])?;
    }
    Ok(LieAlgebra::new(sc)?)
}

pub fn make_abelian(n: usize) -> LieAlgebra {
    abelian(n, FieldDescriptor::Rationals)
}

pub fn make_heisenberg(m: usize) -> Result<LieAlgebra, CatalogError> {
    heisenberg(m, FieldDescriptor::Rationals)
}

pub fn make_filiform(n: usize) -> Result<LieAlgebra, CatalogError> {
    filiform(n, FieldDescriptor::Rationals)
}

/// The built-in corpus over `Q`, sorted by key:
///
/// * `abelian_n` for `n <= 8`
/// * `heisenberg_m` for `m <= 5`
/// * `heisenberg_h+abelian_k` for `k >= 1` and total dimension `<= 9`
/// * `filiform_n` for `3 <= n <= 7`
/// * the classification tables `L{n}_{k}` of dimension `<= 6`
pub fn builtin_catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| build_catalog(FieldDescriptor::Rationals).expect("built-in tables are valid"))
}

/// The corpus rebuilt over another field. Golden values are only attached
/// over `Q`.
pub fn catalog_over(field: FieldDescriptor) -> Result<Vec<CatalogEntry>, CatalogError> {
    if field == FieldDescriptor::Rationals {
        return Ok(builtin_catalog().to_vec());
    }
    build_catalog(field)
}

pub fn lookup(key: &str) -> Option<&'static CatalogEntry> {
    let catalog = builtin_catalog();
    catalog
        .binary_search_by(|e| e.key.as_str().cmp(key))
        .ok()
        .map(|idx| &catalog[idx])
}

/// Resolves a key over the given field.
pub fn lookup_over(key: &str, field: FieldDescriptor) -> Result<LieAlgebra, CatalogError> {
    let entry = lookup(key).ok_or_else(|| CatalogError::UnknownKey(key.to_string()))?;
    if field == FieldDescriptor::Rationals {
        return Ok(entry.algebra.clone());
    }
    let sc = entry.algebra.structure_constants().reduce_mod(field)?;
    Ok(LieAlgebra::new(sc)?)
}

fn build_catalog(field: FieldDescriptor) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut out = Vec::new();
    let constructed = |key: String, algebra: LieAlgebra| CatalogEntry {
        key,
        algebra,
        source: Source::Constructed,
        citation: None,
        expected: None,
    };
    for n in 0..=8 {
        out.push(constructed(format!("abelian_{n}"), abelian(n, field)));
    }
    for m in 1..=5 {
        out.push(constructed(format!("heisenberg_{m}"), heisenberg(m, field)?));
    }
    for h in 1..=4 {
        for k in 1..=(9usize.saturating_sub(2 * h + 1)) {
            let sum = direct_sum(&heisenberg(h, field)?, &abelian(k, field))?;
            out.push(constructed(format!("heisenberg_{h}+abelian_{k}"), sum));
        }
    }
    for n in 3..=7 {
        out.push(constructed(format!("filiform_{n}"), filiform(n, field)?));
    }
    for table in classification::classification_tables() {
        let mut sc = StructureConstants::new(table.dim, field);
        for (i, j, coeffs) in &table.brackets {
            let coeffs: Vec<(usize, i64)> = coeffs.iter().map(|&(k, c)| (k - 1, c)).collect();
            sc.set_bracket_i64(i - 1, j - 1, &coeffs)?;
        }
        out.push(CatalogEntry {
            key: table.key,
            algebra: LieAlgebra::new(sc)?,
            source: Source::ClassificationTable,
            citation: Some(table.citation),
            expected: None,
        });
    }
    if field == FieldDescriptor::Rationals {
        for entry in &mut out {
            entry.expected = golden::lookup(&entry.key);
        }
    }
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}
