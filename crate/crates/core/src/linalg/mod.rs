//! Exact integer linear algebra: Smith and Hermite normal forms with
//! unimodular certificates, integer system solving, and ranks over ℚ and 𝔽ₚ.

mod hnf;
mod matrix;
mod rank;
mod snf;
mod solve;

use thiserror::Error;

pub use hnf::{hermite_normal_form, integer_kernel, HnfResult};
pub use matrix::IntMatrix;
pub use rank::{is_prime, rank_over_field, Field};
pub use snf::{smith_normal_form, InvariantFactors, SnfResult};
pub use solve::{snf_solvable, solve_integer_system, Infeasibility, IntSolution};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
}
