//! Algebraic n-complexes `F_n → … → F_1 → F_0 (→ ℤ)` over `ℤG`.
//!
//! In finite mode each boundary is a [`GroupRingMatrix`] over a
//! [`FiniteGroupModel`]; in symbolic mode only the augmentation shadow of each
//! boundary is kept, which is all that χ and trivial-coefficient homology
//! need. Boundary `d_i : F_i → F_{i-1}` is stored as an `f_{i-1} × f_i`
//! matrix acting on column vectors.
//!
//! [`FiniteGroupModel`]: crate::coset::FiniteGroupModel

mod acx;
mod complex;
mod equivalence;
mod fox;
mod split;

use thiserror::Error;

use crate::group_ring::{GroupRingError, GroupRingMatrix};
use crate::linalg::LinalgError;

pub use acx::{read_acx, write_acx};
pub use complex::{
    attach_three_cells, euler_char, homology_over_field, stabilize_wedge, validate_complex,
    validate_complex_with, AlgebraicComplex, Boundary, ComplexGroup, ValidationReport,
};
pub use equivalence::{
    certify_chain_equivalence, CertificateMethod, EquivalenceCertificate, EquivalenceOutcome,
    InvariantMismatch,
};
pub use fox::{
    fox_derivative, presentation_complex, presentation_complex_with_images, FreeGroupRingElement,
    GroupSpec,
};
pub use split::{quotient_by_split_summand, split_test, SplitReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("group models differ")]
    ModelMismatch,
    #[error("d{degree} ∘ d{} ≠ 0", degree + 1)]
    NotAChainComplex { degree: usize },
    #[error("d2 ∘ d3 ≠ 0")]
    NotAChainMap,
    #[error("expected a complex of top degree {expected}, found {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("d3 does not split")]
    NotSplit,
    #[error("no coordinate complement to the image of d3 was found")]
    NoFreeComplement,
    #[error("operation needs a finite group model")]
    RequiresFiniteMode,
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    GroupRing(#[from] GroupRingError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub(crate) fn finite_boundaries(
    f: &AlgebraicComplex,
) -> Result<Vec<GroupRingMatrix>, ChainError> {
    (1..=f.top_degree())
        .map(|i| f.matrix(i).cloned().ok_or(ChainError::RequiresFiniteMode))
        .collect()
}
