use alloc::vec::Vec;

use num_traits::Zero;

use super::{LieAlgebra, LieError};
use crate::linalg::{Mat, Rat, Subspace};

/// Summary of the structural invariants used downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub dim: usize,
    pub derived_series_dims: Vec<usize>,
    pub lower_central_series_dims: Vec<usize>,
    pub solvable: bool,
    pub nilpotent: bool,
    pub abelianization_dim: usize,
    pub center_dim: usize,
}

fn bracket_span(l: &LieAlgebra, left: &Subspace, right: &Subspace) -> Subspace {
    let lv = left.basis_vectors();
    let rv = right.basis_vectors();
    let mut out = Vec::new();
    for x in &lv {
        for y in &rv {
            let b = l.bracket(x, y).expect("ambient dimension matches");
            if b.iter().any(|c| !c.is_zero()) {
                out.push(b);
            }
        }
    }
    Subspace::span(l.dim(), &out).expect("bracket vectors have ambient length")
}

/// Iterates `next(current)` from `g` until it hits zero or stops shrinking.
/// A non-zero stable tail appears twice at the end of the list.
fn iterate_series(l: &LieAlgebra, next: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
    let mut series = alloc::vec![Subspace::full(l.dim())];
    loop {
        let current = series.last().expect("nonempty series");
        if current.dim() == 0 {
            break;
        }
        let n = next(current);
        let stable = n == *current;
        series.push(n);
        if stable {
            break;
        }
    }
    series
}

/// `g⁽⁰⁾ = g`, `g⁽ᵏ⁺¹⁾ = [g⁽ᵏ⁾, g⁽ᵏ⁾]`.
pub fn derived_series(l: &LieAlgebra) -> Vec<Subspace> {
    iterate_series(l, |s| bracket_span(l, s, s))
}

/// `g, [g,g], [g,[g,g]], …`.
pub fn lower_central_series(l: &LieAlgebra) -> Vec<Subspace> {
    let full = Subspace::full(l.dim());
    iterate_series(l, |s| bracket_span(l, &full, s))
}

pub fn is_solvable(l: &LieAlgebra) -> bool {
    derived_series(l).last().is_some_and(|s| s.dim() == 0)
}

pub fn is_nilpotent(l: &LieAlgebra) -> bool {
    lower_central_series(l).last().is_some_and(|s| s.dim() == 0)
}

fn derived_algebra(l: &LieAlgebra) -> Subspace {
    let full = Subspace::full(l.dim());
    bracket_span(l, &full, &full)
}

/// `r = dim g − dim [g,g]`.
pub fn abelianization_dim(l: &LieAlgebra) -> usize {
    l.dim() - derived_algebra(l).dim()
}

/// `[g,g]^⊥ ⊂ g*`, in dual-basis coordinates.
pub fn annihilator_of_derived(l: &LieAlgebra) -> Subspace {
    derived_algebra(l).annihilator()
}

/// Matrix of `Y ↦ [X, Y]`; column `k` holds `[X, X_k]`.
pub fn ad_matrix(l: &LieAlgebra, x: &[Rat]) -> Result<Mat, LieError> {
    let n = l.dim();
    if x.len() != n {
        return Err(LieError::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    let mut m = Mat::zeros(n, n);
    for k in 0..n {
        let col = l.bracket(x, &l.unit(k))?;
        for (r, v) in col.into_iter().enumerate() {
            m.set(r, k, v);
        }
    }
    Ok(m)
}

pub fn center(l: &LieAlgebra) -> Subspace {
    let n = l.dim();
    // Row (k, m) of the system: Σ_j x_j c_{jk}^m = 0.
    let mut rows = Vec::with_capacity(n * n);
    for k in 0..n {
        let cols: Vec<Vec<Rat>> = (0..n).map(|j| l.basis_bracket(j, k)).collect();
        for m in 0..n {
            rows.push(cols.iter().map(|c| c[m].clone()).collect());
        }
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    Mat::from_rows(n, &rows)
        .expect("rows have length dim")
        .kernel_basis()
}

pub fn structure_report(l: &LieAlgebra) -> StructureReport {
    let derived: Vec<usize> = derived_series(l).iter().map(Subspace::dim).collect();
    let lower: Vec<usize> = lower_central_series(l).iter().map(Subspace::dim).collect();
    StructureReport {
        dim: l.dim(),
        solvable: derived.last() == Some(&0),
        nilpotent: lower.last() == Some(&0),
        abelianization_dim: abelianization_dim(l),
        center_dim: center(l).dim(),
        derived_series_dims: derived,
        lower_central_series_dims: lower,
    }
}
