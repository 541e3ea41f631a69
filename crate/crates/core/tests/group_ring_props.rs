mod common;

use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::*;
use d2kit_core::coset::FiniteGroupModel;
use d2kit_core::group_ring::{solve_gr_system, GrSolution, GroupRingElement, GroupRingMatrix, Side};

fn s3() -> Arc<FiniteGroupModel> {
    model(S3)
}

fn element(m: Arc<FiniteGroupModel>) -> impl Strategy<Value = GroupRingElement> {
    proptest::collection::vec(-5i64..=5, m.order())
        .prop_map(move |c| GroupRingElement::from_coeffs(&m, c.into_iter().map(BigInt::from).collect()).unwrap())
}

fn gr_matrix(m: Arc<FiniteGroupModel>, rows: usize, cols: usize) -> impl Strategy<Value = GroupRingMatrix> {
    proptest::collection::vec(element(m.clone()), rows * cols)
        .prop_map(move |e| GroupRingMatrix::from_entries(&m, rows, cols, e).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn augmentation_is_multiplicative(x in element(s3()), y in element(s3())) {
        prop_assert_eq!(x.mul(&y).unwrap().augmentation(), x.augmentation() * y.augmentation());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn expansion_is_injective_and_multiplicative(
        a in gr_matrix(s3(), 2, 3),
        b in gr_matrix(s3(), 3, 2),
        c in gr_matrix(s3(), 2, 3),
    ) {
        prop_assert_eq!(a.compose(&b).unwrap().expand(), a.expand().mul(&b.expand()).unwrap());
        prop_assert_eq!(a == c, a.expand() == c.expand());
        prop_assert_eq!(a.compose(&b).unwrap().augment(), a.augment().mul(&b.augment()).unwrap());
    }

    #[test]
    fn element_products_expand_consistently(x in element(s3()), y in element(s3())) {
        let m = s3();
        let one = |e: &GroupRingElement| GroupRingMatrix::from_entries(&m, 1, 1, vec![e.clone()]).unwrap();
        let composed = one(&x).compose(&one(&y)).unwrap();
        prop_assert_eq!(composed.expand(), one(&x).expand().mul(&one(&y).expand()).unwrap());
        prop_assert_eq!(composed.get(0, 0), &y.mul(&x).unwrap());
    }

    #[test]
    fn solutions_reverify(a in gr_matrix(s3(), 2, 2), x in gr_matrix(s3(), 2, 1), noise in element(s3())) {
        let b = a.compose(&x).unwrap();
        match solve_gr_system(&a, &b, Side::Right).unwrap() {
            GrSolution::Solution(s) => prop_assert_eq!(a.compose(&s).unwrap(), b.clone()),
            GrSolution::Infeasible(_) => prop_assert!(false, "A∘X = B is solvable by construction"),
        }
        let left = x.compose(&a.submatrix(&[0], &[0, 1])).unwrap();
        if let GrSolution::Solution(s) = solve_gr_system(&a.submatrix(&[0], &[0, 1]), &left, Side::Left).unwrap() {
            prop_assert_eq!(s.compose(&a.submatrix(&[0], &[0, 1])).unwrap(), left);
        }
        let mut perturbed = b.clone();
        perturbed.set(0, 0, b.get(0, 0).add(&noise).unwrap()).unwrap();
        if let GrSolution::Solution(s) = solve_gr_system(&a, &perturbed, Side::Right).unwrap() {
            prop_assert_eq!(a.compose(&s).unwrap(), perturbed);
        }
    }
}
