use num_bigint::BigInt;

use super::element::same_model;
use super::{GroupRingElement, GroupRingError, GroupRingMatrix};
use crate::linalg::{solve_integer_system, Infeasibility, IntMatrix, IntSolution};

/// Which side the unknown sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `X ∘ A = B`.
    Left,
    /// `A ∘ X = B`.
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrSolution {
    Solution(GroupRingMatrix),
    /// No solution over `ℤG`; carries the certificate from the coefficient
    /// system.
    Infeasible(Infeasibility),
}

impl GrSolution {
    pub fn solution(self) -> Option<GroupRingMatrix> {
        match self {
            GrSolution::Solution(x) => Some(x),
            GrSolution::Infeasible(_) => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, GrSolution::Solution(_))
    }
}

/// Solves `X ∘ A = B` or `A ∘ X = B` over `ℤG`.
///
/// The unknowns are the group-ring coefficients of `X`, so the integer
/// system is equivariant by construction. The returned solution is the
/// canonical one of [`solve_integer_system`] and is re-checked by exact
/// multiplication.
pub fn solve_gr_system(
    a: &GroupRingMatrix,
    b: &GroupRingMatrix,
    side: Side,
) -> Result<GrSolution, GroupRingError> {
    if !same_model(a.model(), b.model()) {
        return Err(GroupRingError::ModelMismatch);
    }
    let model = a.model();
    let n = model.order();
    let (lhs, rhs, x_rows, x_cols) = match side {
        Side::Left => {
            // X is r×p, A is p×q, B is r×q
            let (p, q, r) = (a.rows(), a.cols(), b.rows());
            if b.cols() != q {
                return Err(dims(a, b));
            }
            let mut lhs = IntMatrix::zeros(q * n, p * n);
            for k in 0..q {
                for j in 0..p {
                    let entry = a.get(j, k);
                    for e in 0..n {
                        for g in 0..n {
                            // coefficient of e in A[j][k]·g is A[j][k]_{e g⁻¹}
                            lhs[(k * n + e, j * n + g)] =
                                entry.coeff(model.mul(e, model.inv(g))).clone();
                        }
                    }
                }
            }
            let mut rhs = IntMatrix::zeros(q * n, r);
            for i in 0..r {
                for k in 0..q {
                    for e in 0..n {
                        rhs[(k * n + e, i)] = b.get(i, k).coeff(e).clone();
                    }
                }
            }
            (lhs, rhs, r, p)
        }
        Side::Right => {
            // A is p×q, X is q×r, B is p×r
            let (p, q, r) = (a.rows(), a.cols(), b.cols());
            if b.rows() != p {
                return Err(dims(a, b));
            }
            let mut lhs = IntMatrix::zeros(p * n, q * n);
            for i in 0..p {
                for j in 0..q {
                    let entry = a.get(i, j);
                    for e in 0..n {
                        for g in 0..n {
                            // coefficient of e in g·A[i][j] is A[i][j]_{g⁻¹ e}
                            lhs[(i * n + e, j * n + g)] =
                                entry.coeff(model.mul(model.inv(g), e)).clone();
                        }
                    }
                }
            }
            let mut rhs = IntMatrix::zeros(p * n, r);
            for i in 0..p {
                for k in 0..r {
                    for e in 0..n {
                        rhs[(i * n + e, k)] = b.get(i, k).coeff(e).clone();
                    }
                }
            }
            (lhs, rhs, q, r)
        }
    };

    let y = match solve_integer_system(&lhs, &rhs)? {
        IntSolution::Solution(y) => y,
        IntSolution::Infeasible(cert) => return Ok(GrSolution::Infeasible(cert)),
    };

    let mut entries = Vec::with_capacity(x_rows * x_cols);
    for i in 0..x_rows {
        for j in 0..x_cols {
            let coeffs: Vec<BigInt> = match side {
                Side::Left => (0..n).map(|g| y[(j * n + g, i)].clone()).collect(),
                Side::Right => (0..n).map(|g| y[(i * n + g, j)].clone()).collect(),
            };
            entries.push(GroupRingElement::from_coeffs(model, coeffs)?);
        }
    }
    let x = GroupRingMatrix::from_entries(model, x_rows, x_cols, entries)?;
    let check = match side {
        Side::Left => x.compose(a)?,
        Side::Right => a.compose(&x)?,
    };
    if &check != b {
        return Err(GroupRingError::VerificationFailed);
    }
    Ok(GrSolution::Solution(x))
}

fn dims(a: &GroupRingMatrix, b: &GroupRingMatrix) -> GroupRingError {
    GroupRingError::DimensionMismatch(format!(
        "incompatible shapes {}×{} and {}×{}",
        a.rows(),
        a.cols(),
        b.rows(),
        b.cols()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::{group_model, FiniteGroupModel};
    use std::sync::Arc;

    fn model(s: &str) -> Arc<FiniteGroupModel> {
        Arc::new(group_model(&s.parse().unwrap(), 200).unwrap())
    }

    fn one_by_one(m: &Arc<FiniteGroupModel>, terms: &[(usize, i64)]) -> GroupRingMatrix {
        let x = GroupRingElement::from_sparse(m, terms).unwrap();
        GroupRingMatrix::from_rows(m, 1, vec![vec![x]]).unwrap()
    }

    #[test]
    fn norm_has_no_inverse() {
        let m = model("gens: t\nrels: t^2");
        let n = one_by_one(&m, &[(0, 1), (1, 1)]);
        let one = GroupRingMatrix::identity(&m, 1);
        for side in [Side::Left, Side::Right] {
            assert!(!solve_gr_system(&n, &one, side).unwrap().is_feasible());
        }
    }

    #[test]
    fn unit_coefficient() {
        let m = model("gens: t\nrels: t^2");
        let one = GroupRingMatrix::identity(&m, 1);
        let n = one_by_one(&m, &[(0, 1), (1, 1)]);
        let x = solve_gr_system(&one, &n, Side::Left).unwrap().solution().unwrap();
        assert_eq!(x, n);
    }

    #[test]
    fn retraction_of_inclusion() {
        let m = model("gens: t\nrels: t^2");
        let z = GroupRingElement::zero(&m);
        let o = GroupRingElement::one(&m);
        let d = GroupRingMatrix::from_rows(&m, 1, vec![vec![z.clone()], vec![o.clone()]]).unwrap();
        let x = solve_gr_system(&d, &GroupRingMatrix::identity(&m, 1), Side::Left)
            .unwrap()
            .solution()
            .unwrap();
        assert_eq!(x, GroupRingMatrix::from_rows(&m, 2, vec![vec![z, o]]).unwrap());
    }

    #[test]
    fn noncommutative_sides_differ() {
        // In ℤ[S3], solve X∘A = B and A∘X = B with A = a, B = a·b (ring product).
        let m = model("gens: a b\nrels: a^2, b^2, (a b)^3");
        let (a, b) = (m.generator_images()[0], m.generator_images()[1]);
        let am = one_by_one(&m, &[(a, 1)]);
        let bm = one_by_one(&m, &[(m.mul(a, b), 1)]);
        let left = solve_gr_system(&am, &bm, Side::Left).unwrap().solution().unwrap();
        assert_eq!(left.compose(&am).unwrap(), bm);
        let right = solve_gr_system(&am, &bm, Side::Right).unwrap().solution().unwrap();
        assert_eq!(am.compose(&right).unwrap(), bm);
        assert_ne!(left, right);
    }
}
