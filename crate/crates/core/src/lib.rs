//! Exact structural analysis of finite-dimensional real Lie algebras given by
//! rational structure constants, together with the C*-algebraic invariants of
//! the associated exponential solvable Lie groups.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is computed over
//! arbitrary-precision rationals; no floating point enters any verdict.
//!
//! Layout:
//! - [`linalg`]: rationals, dense matrices, subspaces, sparse multivariate and
//!   univariate polynomials, Sturm root counting, symbolic Pfaffians.
//! - [`lie`]: the algebra model, validation, structure theory, the
//!   exponentiality screen and a catalog of named algebras.
//! - [`coadjoint`]: the skew form `B_ξ`, its determinant polynomial and the
//!   open-orbit analysis.
//! - [`invariants`]: closed-form real rank, stable rank and projection verdicts.
//! - [`inference`]: a forward-chaining rule engine over annotated ideal
//!   filtrations that re-derives the rank values independently.
#![no_std]
#![warn(rust_2018_idioms, unused_qualifications)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod coadjoint;
pub mod inference;
pub mod invariants;
pub mod lie;
pub mod linalg;
mod sampling;

pub use linalg::{Mat, MPoly, Rat, Subspace, UPoly};
pub use lie::LieAlgebra;
