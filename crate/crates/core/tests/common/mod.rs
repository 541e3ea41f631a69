#![allow(dead_code)]

use std::sync::Arc;

use d2kit_core::chain::{presentation_complex, AlgebraicComplex, GroupSpec};
use d2kit_core::coset::{group_model, FiniteGroupModel};
use d2kit_core::fp::Presentation;

pub const TRIVIAL: &str = "gens:\nrels:";
pub const Z: &str = "gens: x\nrels:";
pub const Z2: &str = "gens: x\nrels: x^2";
pub const Z5: &str = "gens: x\nrels: x^5";
pub const S3: &str = "gens: a b\nrels: a^2, b^3, (a b)^2";
pub const Q8: &str = "gens: a b\nrels: a^2 b^-2, a b a b^-1";
pub const A5: &str = "gens: a b\nrels: a^2, b^3, (a b)^5";
pub const F2: &str = "gens: x y\nrels:";
pub const TREFOIL: &str = "gens: x y\nrels: x^2 y^-3";

/// `(name, text, order)` with `order` known independently.
pub const CORPUS: [(&str, &str, Option<usize>); 9] = [
    ("trivial", TRIVIAL, Some(1)),
    ("z", Z, None),
    ("z2", Z2, Some(2)),
    ("z5", Z5, Some(5)),
    ("s3", S3, Some(6)),
    ("q8", Q8, Some(8)),
    ("a5", A5, Some(60)),
    ("f2", F2, None),
    ("trefoil", TREFOIL, None),
];

pub const MAX_COSETS: usize = 5000;

pub fn pres(s: &str) -> Presentation {
    s.parse().unwrap()
}

pub fn model(s: &str) -> Arc<FiniteGroupModel> {
    Arc::new(group_model(&pres(s), MAX_COSETS).unwrap())
}

pub fn finite_complex(s: &str) -> AlgebraicComplex {
    presentation_complex(&pres(s), &GroupSpec::Finite(model(s))).unwrap()
}

/// Finite mode for finite groups, exponent shadow otherwise.
pub fn corpus_complex(s: &str, order: Option<usize>) -> AlgebraicComplex {
    match order {
        Some(_) => finite_complex(s),
        None => presentation_complex(&pres(s), &GroupSpec::Symbolic).unwrap(),
    }
}

/// Size of the permutation group generated by `gens`, by orbit closure.
pub fn permutation_group_order(gens: &[Vec<usize>]) -> usize {
    use std::collections::HashSet;
    let n = gens[0].len();
    let identity: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
    let mut stack = vec![identity];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q: Vec<usize> = (0..n).map(|i| g[p[i]]).collect();
            if seen.insert(q.clone()) {
                stack.push(q);
            }
        }
    }
    seen.len()
}

/// Image of a word under generator permutations, composed left to right.
pub fn permutation_of_word(gens: &[Vec<usize>], w: &d2kit_core::fp::Word) -> Vec<usize> {
    let n = gens[0].len();
    let inverse = |g: &Vec<usize>| {
        let mut inv = vec![0; n];
        for (i, &j) in g.iter().enumerate() {
            inv[j] = i;
        }
        inv
    };
    w.letters().iter().fold((0..n).collect(), |acc: Vec<usize>, l| {
        let g = if l.inverse { inverse(&gens[l.generator]) } else { gens[l.generator].clone() };
        (0..n).map(|i| g[acc[i]]).collect()
    })
}
