//! Exact linear and polynomial algebra over arbitrary-precision rationals.

mod matrix;
mod mpoly;
mod pfaffian;
mod rational;
mod sturm;
mod upoly;

pub use matrix::{Mat, Subspace};
pub use mpoly::{Exponents, MPoly};
pub use pfaffian::{sym_det, sym_pfaffian, PolyMatrix};
pub use rational::{int, parse_rat, rat, Rat};
pub use sturm::{real_root_count, sturm_root_count, sturm_sequence};
pub use upoly::UPoly;

use alloc::boxed::Box;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkew { row: usize, col: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("the zero polynomial has infinitely many roots")]
    ZeroPolynomial,
    #[error("empty interval: lower endpoint {lo} is not below upper endpoint {hi}")]
    EmptyInterval { lo: Box<Rat>, hi: Box<Rat> },
    #[error("malformed rational `{0}`")]
    BadRational(alloc::string::String),
}
