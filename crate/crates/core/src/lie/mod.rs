//! Lie algebras given by exact structure constants.

mod catalog;
mod exponential;
mod structure;

pub use catalog::{catalog, catalog_schemas, direct_sum, CatalogEntry};
pub use exponential::{
    characteristic_polynomial, exponentiality_check, has_nonzero_imaginary_root,
    ExponentialityStatus, ExponentialityVerdict,
};
pub use structure::{
    abelianization_dim, ad_matrix, annihilator_of_derived, center, derived_series, is_nilpotent,
    is_solvable, lower_central_series, structure_report, StructureReport,
};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{Mat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: Vec<Rat>,
    },
    #[error("duplicate basis name `{0}`")]
    DuplicateBasisName(String),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("bracket of basis pair ({0}, {1}) given twice")]
    DuplicateBracket(usize, usize),
    #[error("bracket of basis vector {0} with itself must vanish")]
    SelfBracket(usize),
    #[error("change-of-basis matrix is singular")]
    SingularBasisChange,
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogName(String),
    #[error("invalid parameters for catalog entry `{name}`: {reason}")]
    InvalidCatalogParams { name: String, reason: String },
}

/// One entry of a raw bracket table: `[X_left, X_right] = Σ value[l] X_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketEntry {
    pub left: usize,
    pub right: usize,
    pub value: Vec<Rat>,
}

impl BracketEntry {
    pub fn new(left: usize, right: usize, value: Vec<Rat>) -> Self {
        Self { left, right, value }
    }
}

/// A validated finite-dimensional real Lie algebra.
///
/// Only brackets `[X_j, X_k]` with `j < k` are stored; antisymmetry is
/// structural. Construction goes through [`LieAlgebra::validate`], so every
/// value satisfies the Jacobi identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    names: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<Rat>>,
}

impl LieAlgebra {
    pub fn validate(
        dim: usize,
        names: Vec<String>,
        table: Vec<BracketEntry>,
    ) -> Result<Self, LieError> {
        if names.len() != dim {
            return Err(LieError::DimensionMismatch {
                expected: dim,
                found: names.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(LieError::DuplicateBasisName(name.clone()));
            }
        }
        let mut brackets = BTreeMap::new();
        let mut given = BTreeSet::new();
        for BracketEntry { left, right, value } in table {
            for index in [left, right] {
                if index >= dim {
                    return Err(LieError::IndexOutOfRange { index, dim });
                }
            }
            if value.len() != dim {
                return Err(LieError::DimensionMismatch {
                    expected: dim,
                    found: value.len(),
                });
            }
            let zero = value.iter().all(Zero::is_zero);
            if left == right {
                if zero {
                    continue;
                }
                return Err(LieError::SelfBracket(left));
            }
            let key = (left.min(right), left.max(right));
            if !given.insert(key) {
                return Err(LieError::DuplicateBracket(key.0, key.1));
            }
            if zero {
                continue;
            }
            let value = if left < right {
                value
            } else {
                value.into_iter().map(|c| -c).collect()
            };
            brackets.insert(key, value);
        }
        let algebra = Self { names, brackets };
        algebra.check_jacobi()?;
        Ok(algebra)
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let residual = self.jacobi_residual(i, j, k);
                    if residual.iter().any(|c| !c.is_zero()) {
                        return Err(LieError::JacobiViolation { i, j, k, residual });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j]`.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vec<Rat> {
        let e = |a: usize| self.unit(a);
        let mut acc = vec![Rat::zero(); self.dim()];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let inner = self.basis_bracket(a, b);
            for (s, t) in acc.iter_mut().zip(self.bracket_unchecked(&inner, &e(c))) {
                *s += t;
            }
        }
        acc
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Nonzero structure constants, `(j, k) → [X_j, X_k]` with `j < k`.
    pub fn brackets(&self) -> &BTreeMap<(usize, usize), Vec<Rat>> {
        &self.brackets
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    pub fn unit(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim()];
        v[i] = num_traits::One::one();
        v
    }

    /// `[X_j, X_k]` in basis coordinates.
    pub fn basis_bracket(&self, j: usize, k: usize) -> Vec<Rat> {
        use core::cmp::Ordering::*;
        match j.cmp(&k) {
            Less => self
                .brackets
                .get(&(j, k))
                .cloned()
                .unwrap_or_else(|| vec![Rat::zero(); self.dim()]),
            Greater => self.basis_bracket(k, j).into_iter().map(|c| -c).collect(),
            Equal => vec![Rat::zero(); self.dim()],
        }
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>, LieError> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(LieError::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
        }
        Ok(self.bracket_unchecked(x, y))
    }

    fn bracket_unchecked(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (&(j, k), c) in &self.brackets {
            let w = &x[j] * &y[k] - &x[k] * &y[j];
            if w.is_zero() {
                continue;
            }
            for (o, cl) in out.iter_mut().zip(c) {
                if !cl.is_zero() {
                    *o += &w * cl;
                }
            }
        }
        out
    }

    /// The same algebra in the basis given by the columns of `t` (old
    /// coordinates), keeping the basis names.
    pub fn change_basis(&self, t: &Mat) -> Result<Self, LieError> {
        let n = self.dim();
        if t.rows() != n || t.cols() != n {
            return Err(LieError::DimensionMismatch {
                expected: n,
                found: t.rows(),
            });
        }
        let inv = t.inverse().ok_or(LieError::SingularBasisChange)?;
        let cols: Vec<Vec<Rat>> = (0..n).map(|c| t.column(c)).collect();
        let mut table = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let v = self.bracket_unchecked(&cols[a], &cols[b]);
                let w = inv.mul_vec(&v).expect("square inverse");
                table.push(BracketEntry::new(a, b, w));
            }
        }
        Self::validate(n, self.names.clone(), table)
    }
}
