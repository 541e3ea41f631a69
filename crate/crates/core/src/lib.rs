//! Exact computations for finitely presented groups and algebraic
//! 2-complexes: presentations and Tietze moves, integer normal forms,
//! coset enumeration, integral group rings of finite groups, chain
//! complexes built by Fox calculus, and the invariants derived from them.

pub mod coset;
pub mod fp;
pub mod linalg;
pub mod par;
pub mod group_ring;
pub mod chain;
pub mod invariants;
