mod common;

use common::*;
use d2kit_core::coset::{
    find_normal_generator, group_model, is_trivial_quotient, todd_coxeter, todd_coxeter_with,
    NormalGeneratorOptions, NormalGeneratorOutcome, QuotientTriviality, Strategy,
};
use d2kit_core::fp::{extend_sub_presentation, Word};

#[test]
fn strategies_agree_on_the_corpus() {
    for (name, text, order) in CORPUS {
        let p = pres(text);
        let hlt = todd_coxeter_with(&p, MAX_COSETS, Strategy::Hlt).order();
        let felsch = todd_coxeter_with(&p, MAX_COSETS, Strategy::Felsch).order();
        assert_eq!(hlt, felsch, "{name}");
        if order.is_some() {
            assert_eq!(hlt, order, "{name}");
        }
    }
}

#[test]
fn orders_match_permutation_oracles() {
    let s3 = [vec![1, 0, 2], vec![1, 2, 0]];
    let a5 = [vec![1, 0, 3, 2, 4], vec![2, 1, 4, 3, 0]];
    for (text, gens, expected) in [(S3, &s3[..], 6), (A5, &a5[..], 60)] {
        let p = pres(text);
        let n = gens[0].len();
        for r in p.relators() {
            assert_eq!(permutation_of_word(gens, r), (0..n).collect::<Vec<_>>(), "{r:?}");
        }
        let oracle = permutation_group_order(gens);
        assert_eq!(oracle, expected);
        assert_eq!(todd_coxeter(&p, MAX_COSETS).order(), Some(oracle));
    }
}

#[test]
fn model_tables_are_groups_satisfying_the_relators() {
    for (name, text, order) in CORPUS {
        let Some(order) = order else { continue };
        let p = pres(text);
        let m = group_model(&p, MAX_COSETS).unwrap();
        assert_eq!(m.order(), order);
        for a in 0..order {
            assert_eq!((m.mul(0, a), m.mul(a, 0)), (a, a), "{name}");
            let mut row: Vec<usize> = m.table_row(a).to_vec();
            row.sort_unstable();
            assert_eq!(row, (0..order).collect::<Vec<_>>(), "{name}");
            let mut col: Vec<usize> = (0..order).map(|b| m.mul(b, a)).collect();
            col.sort_unstable();
            assert_eq!(col, (0..order).collect::<Vec<_>>(), "{name}");
        }
        assert!(m.satisfies(&p), "{name}");
        assert!(m.verify().is_ok(), "{name}");
    }
}

#[test]
fn found_normal_generators_reverify() {
    let p = pres(A5);
    let search = find_normal_generator(&p, NormalGeneratorOptions::new(3, MAX_COSETS));
    let NormalGeneratorOutcome::Found(w) = search.outcome else { panic!("A5 is normally generated by one element") };
    assert_eq!(w, Word::generator(0));
    assert_eq!(is_trivial_quotient(&p, &[w], MAX_COSETS), QuotientTriviality::True);
}

#[test]
fn sub_presentation_extension_preserves_order() {
    // S3 with ⟨a | a²⟩ replaced by ⟨c, d | c², d c^-1⟩, lifting a ↦ c.
    let p = pres(S3);
    let alt = pres("gens: c d\nrels: c^2, d c^-1");
    let ext = extend_sub_presentation(&p, &[0], &[0], &alt, &[Word::generator(0)], MAX_COSETS).unwrap();
    assert_eq!(ext.presentation.generator_count(), 2 + 1);
    assert_eq!(ext.presentation.relator_count(), 2 + 2);
    assert_eq!(todd_coxeter(&ext.presentation, MAX_COSETS).order(), Some(6));
}
