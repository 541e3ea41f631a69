use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::hnf::hermite_normal_form;
use super::{IntMatrix, LinalgError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntSolution {
    Solution(IntMatrix),
    Infeasible(Infeasibility),
}

impl IntSolution {
    pub fn solution(self) -> Option<IntMatrix> {
        match self {
            IntSolution::Solution(x) => Some(x),
            IntSolution::Infeasible(_) => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, IntSolution::Solution(_))
    }
}

/// Why `A·X = B` has no integer solution, read off the column-echelon form of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Infeasibility {
    /// Pivot `pivot` does not divide the residual in row `row` of right-hand side `rhs`.
    Divisibility {
        rhs: usize,
        row: usize,
        pivot: BigInt,
        residual: BigInt,
    },
    /// Row `row` of right-hand side `rhs` lies outside the ℚ-span of `A`'s columns.
    Inconsistent { rhs: usize, row: usize },
}

/// Solves `A·X = B` over ℤ.
///
/// With `A·Uᵀ = Hᵀ` (`H` the Hermite form of `Aᵀ`) the system becomes the
/// triangular `Hᵀ·Y = B`; the pivot variables are determined by forward
/// substitution and free variables are set to zero, so the returned solution
/// is canonical for the pair `(A, B)`.
pub fn solve_integer_system(a: &IntMatrix, b: &IntMatrix) -> Result<IntSolution, LinalgError> {
    if a.rows() != b.rows() {
        return Err(LinalgError::DimensionMismatch(format!(
            "A has {} rows but B has {}",
            a.rows(),
            b.rows()
        )));
    }
    let n = a.cols();
    let k = b.cols();
    let hnf = hermite_normal_form(&a.transpose());
    let h = &hnf.h; // n x m
    let r = hnf.rank();

    let mut y = IntMatrix::zeros(n, k);
    for c in 0..k {
        for i in 0..r {
            let prow = hnf.pivots[i];
            let mut residual = b[(prow, c)].clone();
            for ii in 0..i {
                let coeff = &h[(ii, prow)];
                if !coeff.is_zero() {
                    residual -= coeff * &y[(ii, c)];
                }
            }
            let pivot = &h[(i, prow)];
            let (q, rem) = residual.div_rem(pivot);
            if !rem.is_zero() {
                return Ok(IntSolution::Infeasible(Infeasibility::Divisibility {
                    rhs: c,
                    row: prow,
                    pivot: pivot.clone(),
                    residual,
                }));
            }
            y[(i, c)] = q;
        }
        // remaining rows must agree with the triangular solution
        for row in 0..a.rows() {
            let mut acc = BigInt::zero();
            for i in 0..r {
                let coeff = &h[(i, row)];
                if !coeff.is_zero() {
                    acc += coeff * &y[(i, c)];
                }
            }
            if acc != b[(row, c)] {
                return Ok(IntSolution::Infeasible(Infeasibility::Inconsistent { rhs: c, row }));
            }
        }
    }
    let x = hnf.u.transpose().mul(&y)?;
    debug_assert_eq!(a.mul(&x).ok().as_ref(), Some(b));
    Ok(IntSolution::Solution(x))
}

/// Decides solvability of `A·X = B` from the Smith form alone. Independent of
/// the Hermite route above; used to cross-check infeasibility verdicts.
pub fn snf_solvable(a: &IntMatrix, b: &IntMatrix) -> Result<bool, LinalgError> {
    let snf = super::smith_normal_form(a);
    let ub = snf.u.mul(b)?;
    let diag = snf.diagonal();
    for i in 0..ub.rows() {
        for c in 0..ub.cols() {
            let v = &ub[(i, c)];
            match diag.get(i) {
                Some(dii) if !dii.is_zero() => {
                    if !(v % dii).is_zero() {
                        return Ok(false);
                    }
                }
                _ => {
                    if !v.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
