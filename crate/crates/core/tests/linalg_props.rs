use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use d2kit_core::linalg::{
    rank_over_field, smith_normal_form, snf_solvable, solve_integer_system, Field, IntMatrix, IntSolution,
};

fn matrix(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(c).map(|x| x.to_vec()).collect();
            IntMatrix::from_rows(c, &rows)
        })
    })
}

/// Rank over ℚ by fraction-free elimination; independent of the SNF code.
fn rational_rank(a: &IntMatrix) -> usize {
    let mut m: Vec<Vec<BigInt>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
    let (rows, cols) = (a.rows(), a.cols());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..rows {
            let (f, g) = (m[r][c].clone(), m[rank][c].clone());
            for k in 0..cols {
                m[r][k] = &m[r][k] * &g - &m[rank][k] * &f;
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn snf_certificate(a in matrix(8)) {
        let snf = smith_normal_form(&a);
        prop_assert!(snf.verify(&a));
        prop_assert_eq!(snf.u.mul(&a).unwrap().mul(&snf.v).unwrap(), snf.d.clone());
        prop_assert_eq!(snf.u.determinant().unwrap().abs(), BigInt::from(1));
        prop_assert_eq!(snf.v.determinant().unwrap().abs(), BigInt::from(1));
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            prop_assert!(divides);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rational_rank_matches_snf(a in matrix(7)) {
        let r = rank_over_field(&a, Field::Rationals).unwrap();
        prop_assert_eq!(r, smith_normal_form(&a).rank());
        prop_assert_eq!(r, rational_rank(&a));
    }

    #[test]
    fn prime_rank_is_at_most_rational(a in matrix(6), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let rp = rank_over_field(&a, Field::Prime(p)).unwrap();
        let snf = smith_normal_form(&a);
        let expected = snf.diagonal().iter().filter(|d| !(*d % BigInt::from(p)).is_zero()).count();
        prop_assert_eq!(rp, expected);
    }

    #[test]
    fn solutions_verify_and_infeasibility_agrees(a in matrix(5), x in proptest::collection::vec(-4i64..=4, 5), perturb in -2i64..=2) {
        let cols = a.cols();
        let xm = IntMatrix::from_rows(1, &x[..cols].iter().map(|v| vec![*v]).collect::<Vec<_>>());
        let mut b = a.mul(&xm).unwrap();
        b[(0, 0)] += perturb;
        match solve_integer_system(&a, &b).unwrap() {
            IntSolution::Solution(s) => {
                prop_assert_eq!(a.mul(&s).unwrap(), b.clone());
                prop_assert!(snf_solvable(&a, &b).unwrap());
            }
            IntSolution::Infeasible(_) => {
                prop_assert!(perturb != 0);
                prop_assert!(!snf_solvable(&a, &b).unwrap());
            }
        }
    }
}
