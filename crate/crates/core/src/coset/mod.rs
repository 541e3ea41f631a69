//! Coset enumeration, finite group models and quotient-triviality searches.

mod enumerate;
mod model;
mod normal;

use thiserror::Error;

pub use enumerate::{todd_coxeter, todd_coxeter_with, CosetTable, Strategy, TableStatus};
pub use model::{group_model, FiniteGroupModel};
pub use normal::{
    find_normal_generator, is_trivial_quotient, NormalGeneratorOptions, NormalGeneratorOutcome,
    NormalGeneratorSearch, QuotientTriviality, SearchWarning,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CosetError {
    #[error("coset enumeration did not close ({cosets_used} cosets in use)")]
    NotFinitelyEnumerated { cosets_used: usize },
    #[error("invalid group table: {0}")]
    InvalidTable(String),
}
