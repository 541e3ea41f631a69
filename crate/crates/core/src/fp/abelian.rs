use crate::linalg::{smith_normal_form, IntMatrix, InvariantFactors, SnfResult};

use super::Presentation;

/// `H₁` of a presented group from its exponent-sum matrix.
#[derive(Clone, Debug)]
pub struct Abelianization {
    /// `k × d`, entry `(j, i)` is the exponent sum of generator `i` in relator `j`.
    pub matrix: IntMatrix,
    pub snf: SnfResult,
    pub invariants: InvariantFactors,
}

impl Abelianization {
    pub fn betti_number(&self) -> usize {
        self.invariants.free_rank
    }
}

pub fn abelianization(p: &Presentation) -> Abelianization {
    let d = p.generator_count();
    let rows: Vec<Vec<i64>> = p
        .relators()
        .iter()
        .map(|r| (0..d).map(|g| r.exponent_sum(g)).collect())
        .collect();
    let matrix = IntMatrix::from_rows(d, &rows);
    let snf = smith_normal_form(&matrix);
    let invariants = InvariantFactors::from_snf(&snf);
    Abelianization {
        matrix,
        snf,
        invariants,
    }
}

pub fn is_perfect(p: &Presentation) -> bool {
    abelianization(p).invariants.is_trivial()
}
