//! Smith normal form with unimodular certificates.
//!
//! For an integer matrix `A` we compute unimodular `U`, `V` and a diagonal
//! `D = U·A·V` whose nonzero diagonal entries are positive and satisfy
//! `d₁ | d₂ | …`. Pivots are chosen with minimal absolute value (ties broken
//! by row, then column) which keeps intermediate entries small at the sizes
//! this crate works with.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries `d₁, d₂, …` up to `min(rows, cols)`, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Checks `U·A·V = D`, unimodularity of `U` and `V`, diagonal shape and the
    /// divisibility chain. Used by tests and by callers who want to re-verify.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        let Ok(ua) = self.u.mul(a) else { return false };
        let Ok(uav) = ua.mul(&self.v) else { return false };
        if uav != self.d {
            return false;
        }
        if !self.u.is_unimodular() || !self.v.is_unimodular() {
            return false;
        }
        for i in 0..self.d.rows() {
            for j in 0..self.d.cols() {
                if i != j && !self.d[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        let diag = self.diagonal();
        if diag.iter().any(|x| x.is_negative()) {
            return false;
        }
        diag.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                (&w[1] % &w[0]).is_zero()
            }
        })
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let m = a.rows();
    let n = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = min_pivot(&d, t) else {
                return SnfResult { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&p);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&p);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Pivot must divide the remaining block for the divisibility chain.
            if let Some(i) = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&d[(i, j)] % &p).is_zero())) {
                let one = BigInt::one();
                d.add_row_multiple(t, i, &one);
                u.add_row_multiple(t, i, &one);
                continue;
            }
            break;
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { u, d, v }
}

fn min_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(b, _, _)| ax < *b) {
                best = Some((ax, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Invariant factors of the abelian group `ℤ^cols / rowspace(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFactors {
    pub free_rank: usize,
    /// Torsion coefficients `> 1`, in divisibility order.
    pub torsion: Vec<BigInt>,
}

impl InvariantFactors {
    pub fn from_snf(snf: &SnfResult) -> Self {
        let diag = snf.diagonal();
        let rank = diag.iter().filter(|x| !x.is_zero()).count();
        let torsion = diag
            .into_iter()
            .filter(|x| !x.is_zero() && !x.is_one())
            .collect();
        InvariantFactors {
            free_rank: snf.d.cols() - rank,
            torsion,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
