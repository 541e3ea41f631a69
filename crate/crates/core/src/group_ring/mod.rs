//! The integral group ring of a finite group, matrices over it, and linear
//! systems over it.

mod element;
mod matrix;
mod solve;

use thiserror::Error;

use crate::linalg::LinalgError;

pub use element::GroupRingElement;
pub use matrix::GroupRingMatrix;
pub use solve::{solve_gr_system, GrSolution, Side};

/// Convolution product; fails when the operands live over different groups.
pub fn gr_multiply(
    x: &GroupRingElement,
    y: &GroupRingElement,
) -> Result<GroupRingElement, GroupRingError> {
    x.mul(y)
}

pub fn regular_rep_expand(m: &GroupRingMatrix) -> crate::linalg::IntMatrix {
    m.expand()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupRingError {
    #[error("operands use different group models")]
    ModelMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("solution failed exact re-verification")]
    VerificationFailed,
}
