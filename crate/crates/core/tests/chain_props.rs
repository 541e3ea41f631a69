mod common;

use num_traits::Zero;
use proptest::prelude::*;

use common::*;
use d2kit_core::chain::{
    attach_three_cells, certify_chain_equivalence, euler_char, homology_over_field, presentation_complex,
    presentation_complex_with_images, quotient_by_split_summand, split_test, stabilize_wedge, validate_complex,
    AlgebraicComplex, Boundary, EquivalenceOutcome, GroupSpec,
};
use d2kit_core::group_ring::{GroupRingElement, GroupRingMatrix};
use d2kit_core::linalg::Field;

const FIELDS: [Field; 4] = [Field::Rationals, Field::Prime(2), Field::Prime(3), Field::Prime(5)];
const BUDGET: usize = 2000;

fn alternating(v: &[usize]) -> i64 {
    v.iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// The 3-cell glued onto the last sphere of a wedge.
fn inclusion_cell(w: &AlgebraicComplex, slot: usize) -> Boundary {
    let m = w.model().unwrap();
    let mut col = vec![vec![GroupRingElement::zero(m)]; w.rank(2)];
    col[slot] = vec![GroupRingElement::one(m)];
    Boundary::Matrix(GroupRingMatrix::from_rows(m, 1, col).unwrap())
}

#[test]
fn boundaries_compose_to_zero_on_the_corpus() {
    for (name, text, order) in CORPUS {
        let f = corpus_complex(text, order);
        assert_eq!(f.is_finite(), order.is_some(), "{name}");
        if let (Some(d1), Some(d2)) = (f.matrix(1), f.matrix(2)) {
            assert!(d1.compose(d2).unwrap().is_zero(), "{name}");
            let report = validate_complex(&f).unwrap();
            assert!(report.augmentation_kills_d1 && report.nonzero_composite.is_none(), "{name}");
        }
        let (s1, s2) = (f.shadow(1), f.shadow(2));
        assert!(s1.mul(&s2).unwrap().is_zero(), "{name}");
        // ε∘d₁ = 0: every column of the shadow of d₁ sums to zero.
        assert!((0..s1.cols()).all(|c| s1.column(c).iter().fold(num_bigint::BigInt::zero(), |a, b| a + b).is_zero()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn euler_poincare_on_stabilized_complexes(entry in 0usize..9, n in 0usize..4, attach in any::<bool>()) {
        let (_, text, order) = CORPUS[entry];
        let f = corpus_complex(text, order);
        let mut g = stabilize_wedge(&f, n).unwrap();
        prop_assert_eq!(euler_char(&g), euler_char(&f) + n as i64);
        if attach && n > 0 && g.is_finite() {
            let slot = g.rank(2) - 1;
            g = attach_three_cells(&g, &inclusion_cell(&g, slot)).unwrap();
        }
        for field in FIELDS {
            let h = homology_over_field(&g, field).unwrap();
            prop_assert_eq!(alternating(&h), alternating(g.ranks()));
        }
    }
}

#[test]
fn split_quotient_certify_round_trip() {
    for text in [Z2, Z5, S3] {
        let f = finite_complex(text);
        let w = stabilize_wedge(&f, 1).unwrap();
        let g = attach_three_cells(&w, &inclusion_cell(&w, w.rank(2) - 1)).unwrap();
        let report = split_test(&g).unwrap();
        assert!(report.splits);
        let q = quotient_by_split_summand(&g, &report).unwrap();
        let outcome = certify_chain_equivalence(&q, &f, BUDGET).unwrap();
        let cert = outcome.certificate().expect("round trip certifies");
        cert.verify(&q, &f).unwrap();
    }
}

fn verdict(o: &EquivalenceOutcome) -> &'static str {
    match o {
        EquivalenceOutcome::Certificate(_) => "certificate",
        EquivalenceOutcome::NotEquivalent(_) => "not-equivalent",
        EquivalenceOutcome::Unknown { .. } => "unknown",
    }
}

#[test]
fn certification_is_symmetric() {
    let m5 = model(Z5);
    let f5 = finite_complex(Z5);
    let wedge5 = stabilize_wedge(&f5, 1).unwrap();
    let doubled = presentation_complex(&pres("gens: x\nrels: x^5, x^10"), &GroupSpec::Finite(m5.clone())).unwrap();
    let extra = presentation_complex_with_images(&pres("gens: x y\nrels: x^5, y"), &m5, &[m5.generator_images()[0], 0]).unwrap();
    let pairs = [
        (f5.clone(), wedge5.clone()),
        (wedge5.clone(), doubled),
        (wedge5.clone(), stabilize_wedge(&extra, 1).unwrap()),
        (f5.clone(), extra),
        (finite_complex(S3), finite_complex(S3)),
    ];
    for (a, b) in &pairs {
        let ab = certify_chain_equivalence(a, b, BUDGET).unwrap();
        let ba = certify_chain_equivalence(b, a, BUDGET).unwrap();
        assert_eq!(verdict(&ab), verdict(&ba), "{:?} vs {:?}", a.ranks(), b.ranks());
        if let (Some(x), Some(y)) = (ab.certificate(), ba.certificate()) {
            x.verify(a, b).unwrap();
            y.verify(b, a).unwrap();
        }
    }
}
