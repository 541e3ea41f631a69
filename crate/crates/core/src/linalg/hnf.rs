use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form `H = U·A` with `U` unimodular.
///
/// The first `rank` rows of `H` are nonzero with strictly increasing pivot
/// columns; pivots are positive and entries above a pivot lie in `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfResult {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub pivots: Vec<usize>,
}

impl HnfResult {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn hermite_normal_form(a: &IntMatrix) -> HnfResult {
    let m = a.rows();
    let n = a.cols();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut pivots = Vec::new();
    let mut row = 0;

    for col in 0..n {
        if row == m {
            break;
        }
        loop {
            // smallest nonzero |entry| at or below `row`; first row wins ties
            let mut best: Option<usize> = None;
            for i in row..m {
                if h[(i, col)].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| h[(i, col)].abs() < h[(b, col)].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(row, b);
            u.swap_rows(row, b);
            let p = h[(row, col)].clone();
            let mut done = true;
            for i in row + 1..m {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = -h[(i, col)].div_floor(&p);
                h.add_row_multiple(i, row, &q);
                u.add_row_multiple(i, row, &q);
                if !h[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            h.negate_row(row);
            u.negate_row(row);
        }
        let p = h[(row, col)].clone();
        for r in 0..row {
            let q = -h[(r, col)].div_floor(&p);
            h.add_row_multiple(r, row, &q);
            u.add_row_multiple(r, row, &q);
        }
        pivots.push(col);
        row += 1;
    }
    HnfResult { h, u, pivots }
}

/// A ℤ-basis of `{x ∈ ℤⁿ : A·x = 0}`, returned as the columns of an `n × k` matrix.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let hnf = hermite_normal_form(&a.transpose());
    let n = a.cols();
    let r = hnf.rank();
    let mut out = IntMatrix::zeros(n, n - r);
    for (k, i) in (r..n).enumerate() {
        for j in 0..n {
            out[(j, k)] = hnf.u[(i, j)].clone();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_shape() {
        let a = IntMatrix::from_rows(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let r = hermite_normal_form(&a);
        assert_eq!(r.u.mul(&a).unwrap(), r.h);
        assert!(r.u.is_unimodular());
        assert_eq!(r.pivots, vec![0, 1, 2]);
        for (k, &c) in r.pivots.iter().enumerate() {
            assert!(r.h[(k, c)] > Zero::zero());
            for above in 0..k {
                assert!(r.h[(above, c)] >= Zero::zero() && r.h[(above, c)] < r.h[(k, c)]);
            }
        }
    }

    #[test]
    fn kernel_of_rank_deficient() {
        let a = IntMatrix::from_rows(3, &[vec![1, 2, 3], vec![2, 4, 6]]);
        let k = integer_kernel(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).unwrap().is_zero());
    }
}
