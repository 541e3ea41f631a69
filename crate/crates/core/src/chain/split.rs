use crate::group_ring::{solve_gr_system, GrSolution, GroupRingMatrix, Side};
use crate::linalg::Infeasibility;

use super::{finite_boundaries, AlgebraicComplex, ChainError};

/// Row subsets tried before giving up on a coordinate complement.
const MAX_SUBSETS: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReport {
    pub splits: bool,
    /// `R` with `R∘d₃ = id`, present exactly when `splits`.
    pub retraction: Option<GroupRingMatrix>,
    /// Why `R∘d₃ = id` has no solution, when it does not split.
    pub obstruction: Option<Infeasibility>,
}

fn three_complex(f: &AlgebraicComplex) -> Result<Vec<GroupRingMatrix>, ChainError> {
    if f.top_degree() != 3 {
        return Err(ChainError::WrongDegree {
            expected: 3,
            found: f.top_degree(),
        });
    }
    finite_boundaries(f)
}

/// Decides whether `d₃` is split injective by solving `R∘d₃ = id` over `ℤG`.
pub fn split_test(f: &AlgebraicComplex) -> Result<SplitReport, ChainError> {
    let d = three_complex(f)?;
    let d3 = &d[2];
    let id = GroupRingMatrix::identity(d3.model(), d3.cols());
    Ok(match solve_gr_system(d3, &id, Side::Left)? {
        GrSolution::Solution(r) => SplitReport {
            splits: true,
            retraction: Some(r),
            obstruction: None,
        },
        GrSolution::Infeasible(cert) => SplitReport {
            splits: false,
            retraction: None,
            obstruction: Some(cert),
        },
    })
}

/// Replaces `F₃ → F₂` by `F₂ / im d₃` when `d₃` splits.
///
/// The complement is spanned by coordinate vectors: the first set `S` of
/// `f₃` rows (in lexicographic order) on which `d₃` restricts to an
/// invertible matrix gives `F₂ = im d₃ ⊕ ℤG^T` with `T` the remaining rows,
/// and the induced `d₂` is `d₂` restricted to the columns `T`.
pub fn quotient_by_split_summand(
    f: &AlgebraicComplex,
    report: &SplitReport,
) -> Result<AlgebraicComplex, ChainError> {
    let d = three_complex(f)?;
    let d3 = &d[2];
    let r = match (&report.retraction, report.splits) {
        (Some(r), true) => r,
        _ => return Err(ChainError::NotSplit),
    };
    if r.rows() != d3.cols() || r.cols() != d3.rows() || !r.compose(d3)?.is_identity() {
        return Err(ChainError::NotSplit);
    }
    let (f2, f3) = (d3.rows(), d3.cols());
    if f3 > f2 {
        return Err(ChainError::NoFreeComplement);
    }
    let all_cols: Vec<usize> = (0..f3).collect();
    let mut subset: Vec<usize> = (0..f3).collect();
    for _ in 0..MAX_SUBSETS {
        let block = d3.submatrix(&subset, &all_cols);
        if f3 == 0 || is_invertible(&block)? {
            let rest: Vec<usize> = (0..f2).filter(|i| !subset.contains(i)).collect();
            let rows: Vec<usize> = (0..d[1].rows()).collect();
            let d2 = d[1].submatrix(&rows, &rest);
            return AlgebraicComplex::from_matrices(
                d3.model(),
                vec![f.rank(0), f.rank(1), rest.len()],
                vec![d[0].clone(), d2],
            );
        }
        if !next_combination(&mut subset, f2) {
            break;
        }
    }
    Err(ChainError::NoFreeComplement)
}

fn is_invertible(a: &GroupRingMatrix) -> Result<bool, ChainError> {
    // a unit over ℤG has a unit augmentation determinant
    let det = a.augment().determinant()?;
    if det.magnitude() != &num_bigint::BigUint::from(1u8) {
        return Ok(false);
    }
    let id = GroupRingMatrix::identity(a.model(), a.rows());
    Ok(match solve_gr_system(a, &id, Side::Right)? {
        GrSolution::Solution(x) => x.compose(a)?.is_identity(),
        GrSolution::Infeasible(_) => false,
    })
}

/// Advances `c` to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::chain::{attach_three_cells, presentation_complex, stabilize_wedge, Boundary, GroupSpec};
    use crate::coset::{group_model, FiniteGroupModel};
    use crate::fp::Presentation;
    use crate::group_ring::GroupRingElement;

    fn complex(s: &str) -> (AlgebraicComplex, Arc<FiniteGroupModel>) {
        let p: Presentation = s.parse().unwrap();
        let m = Arc::new(group_model(&p, 1000).unwrap());
        (presentation_complex(&p, &GroupSpec::Finite(m.clone())).unwrap(), m)
    }

    fn column(m: &Arc<FiniteGroupModel>, entries: Vec<GroupRingElement>) -> Boundary {
        Boundary::Matrix(GroupRingMatrix::from_rows(m, 1, entries.into_iter().map(|e| vec![e]).collect()).unwrap())
    }

    #[test]
    fn inclusion_splits_and_quotients_back() {
        let (f, m) = complex("gens: x\nrels: x^2");
        let w = stabilize_wedge(&f, 1).unwrap();
        let g = attach_three_cells(&w, &column(&m, vec![GroupRingElement::zero(&m), GroupRingElement::one(&m)])).unwrap();
        let report = split_test(&g).unwrap();
        assert!(report.splits);
        let r = report.retraction.clone().unwrap();
        assert_eq!(
            r,
            GroupRingMatrix::from_rows(&m, 2, vec![vec![GroupRingElement::zero(&m), GroupRingElement::one(&m)]]).unwrap()
        );
        assert_eq!(quotient_by_split_summand(&g, &report).unwrap(), f);
    }

    #[test]
    fn augmentation_ideal_and_norm_do_not_split() {
        let (f, m) = complex("gens: x\nrels: x^2");
        let x = m.generator_images()[0];
        let el = |t: &[(usize, i64)]| GroupRingElement::from_sparse(&m, t).unwrap();
        let ideal = attach_three_cells(&f, &column(&m, vec![el(&[(x, 1), (0, -1)])])).unwrap();
        // the norm cell goes into the sphere slot, since N·N ≠ 0
        let w = stabilize_wedge(&f, 1).unwrap();
        let norm = attach_three_cells(&w, &column(&m, vec![el(&[]), el(&[(x, 1), (0, 1)])])).unwrap();
        assert_eq!(
            attach_three_cells(&f, &column(&m, vec![el(&[(x, 1), (0, 1)])])),
            Err(ChainError::NotAChainMap)
        );
        for g in [ideal, norm] {
            let report = split_test(&g).unwrap();
            assert!(!report.splits);
            assert!(report.obstruction.is_some());
            assert_eq!(quotient_by_split_summand(&g, &report), Err(ChainError::NotSplit));
        }
    }

    #[test]
    fn identity_cell_leaves_nothing() {
        let m = Arc::new(FiniteGroupModel::trivial());
        let f = presentation_complex(&Presentation::trivial(), &GroupSpec::Finite(m.clone())).unwrap();
        let w = stabilize_wedge(&f, 1).unwrap();
        let g = attach_three_cells(&w, &column(&m, vec![GroupRingElement::one(&m)])).unwrap();
        let q = quotient_by_split_summand(&g, &split_test(&g).unwrap()).unwrap();
        assert_eq!(q.ranks(), &[1, 0, 0]);
    }

    #[test]
    fn combinations_in_order() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
