//! Numerical invariants of a group and checks relating them: bounds on the
//! partial Euler characteristic μ₂, Swan's inequality, an upper bound for
//! the D(2,n) index, and realization checks for complexes and
//! sub-presentations. Every number carries a [`Provenance`].

mod analyze;
mod bounds;
mod realization;

use std::fmt;

use thiserror::Error;

use crate::chain::ChainError;
use crate::fp::FpError;

pub use analyze::{analyze, AnalysisReport};
pub use bounds::{
    certified_order, d2n_estimate, mu2_lower_bound, mu2_sandwich, swan_check_from, swan_inequality_check,
    D2nEstimate, Mu2Sandwich, SwanReport,
};
pub use realization::{realization_check, subcomplex_realization_report, RealizationReport, SubcomplexReport};

/// Which operation produced a number, and from what.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub op: &'static str,
    pub detail: String,
}

impl Provenance {
    pub fn new(op: &'static str, detail: impl Into<String>) -> Self {
        Provenance {
            op,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.op, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bound {
    pub value: i64,
    pub provenance: Provenance,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.value, self.provenance)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantsError {
    #[error("group is not certified finite within {max_cosets} cosets")]
    NotCertifiedFinite { max_cosets: usize },
    #[error("not a sub-presentation: {0}")]
    NotASubpresentation(FpError),
    #[error(transparent)]
    Fp(#[from] FpError),
    #[error(transparent)]
    Chain(#[from] ChainError),
}
