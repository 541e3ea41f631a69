use std::collections::HashSet;

use super::{group_model, todd_coxeter};
use crate::fp::{is_perfect, Presentation, ReducedWords, Word};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuotientTriviality {
    True,
    /// The enumeration closed with this many cosets.
    False(usize),
    Unknown,
}

/// Decides whether `p` with `extra` relators added presents the trivial
/// group, as far as a closed coset table can certify it.
pub fn is_trivial_quotient(
    p: &Presentation,
    extra: &[Word],
    max_cosets: usize,
) -> QuotientTriviality {
    let Ok(q) = p.with_extra_relators(extra) else {
        return QuotientTriviality::Unknown;
    };
    match todd_coxeter(&q, max_cosets).order() {
        Some(1) => QuotientTriviality::True,
        Some(n) => QuotientTriviality::False(n),
        None => QuotientTriviality::Unknown,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchWarning {
    /// `H₁ ≠ 0`; the search was skipped unless explicitly requested.
    NonPerfect,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalGeneratorOutcome {
    Found(Word),
    NotFoundWithinBounds,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalGeneratorSearch {
    pub outcome: NormalGeneratorOutcome,
    pub warnings: Vec<SearchWarning>,
    pub candidates_tested: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalGeneratorOptions {
    pub max_len: usize,
    pub max_cosets: usize,
    /// Search even when the group is not perfect.
    pub search_non_perfect: bool,
}

impl NormalGeneratorOptions {
    pub fn new(max_len: usize, max_cosets: usize) -> Self {
        NormalGeneratorOptions {
            max_len,
            max_cosets,
            search_non_perfect: false,
        }
    }
}

const BATCH: usize = 64;

/// Looks for a word whose normal closure is the whole group.
///
/// Candidates are reduced words in shortlex order. When the group itself
/// enumerates, words conjugate to an already tested word (or its inverse)
/// are skipped. The first success in candidate order is returned, after
/// re-checking it.
pub fn find_normal_generator(p: &Presentation, opts: NormalGeneratorOptions) -> NormalGeneratorSearch {
    let mut warnings = Vec::new();
    if !is_perfect(p) {
        warnings.push(SearchWarning::NonPerfect);
        if !opts.search_non_perfect {
            return NormalGeneratorSearch {
                outcome: NormalGeneratorOutcome::NotFoundWithinBounds,
                warnings,
                candidates_tested: 0,
            };
        }
    }
    let model = group_model(p, opts.max_cosets).ok();
    let mut seen_classes = HashSet::new();
    let mut tested = 0;
    let mut words = ReducedWords::new(p.generator_count(), opts.max_len).peekable();

    while words.peek().is_some() {
        let mut batch = Vec::with_capacity(BATCH);
        for w in words.by_ref() {
            if let Some(m) = &model {
                let e = m.evaluate(&w);
                let class = m.class_representative(e);
                let inv_class = m.class_representative(m.inv(e));
                if !seen_classes.insert(class.min(inv_class)) {
                    continue;
                }
            }
            batch.push(w);
            if batch.len() == BATCH {
                break;
            }
        }
        let hit = par::find_first(&batch, |w| {
            (is_trivial_quotient(p, std::slice::from_ref(w), opts.max_cosets)
                == QuotientTriviality::True)
                .then_some(())
        });
        match hit {
            Some((i, ())) => {
                tested += i + 1;
                let w = batch.swap_remove(i);
                assert_eq!(
                    is_trivial_quotient(p, std::slice::from_ref(&w), opts.max_cosets),
                    QuotientTriviality::True
                );
                return NormalGeneratorSearch {
                    outcome: NormalGeneratorOutcome::Found(w),
                    warnings,
                    candidates_tested: tested,
                };
            }
            None => tested += batch.len(),
        }
    }
    NormalGeneratorSearch {
        outcome: NormalGeneratorOutcome::NotFoundWithinBounds,
        warnings,
        candidates_tested: tested,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_quotients() {
        let a5 = p("gens: a b\nrels: a^2, b^3, (a b)^5");
        assert_eq!(
            is_trivial_quotient(&a5, &[Word::generator(0)], 1000),
            QuotientTriviality::True
        );
        let z4 = p("gens: x\nrels: x^4");
        assert_eq!(
            is_trivial_quotient(&z4, &[Word::from_powers(&[(0, 2)])], 1000),
            QuotientTriviality::False(2)
        );
        let trefoil = p("gens: x y\nrels: x^2 y^-3");
        assert_eq!(is_trivial_quotient(&trefoil, &[], 200), QuotientTriviality::Unknown);
    }

    #[test]
    fn a5_normally_generated_by_a() {
        let a5 = p("gens: a b\nrels: a^2, b^3, (a b)^5");
        let s = find_normal_generator(&a5, NormalGeneratorOptions::new(3, 1000));
        assert_eq!(s.outcome, NormalGeneratorOutcome::Found(Word::generator(0)));
        assert!(s.warnings.is_empty());
    }

    #[test]
    fn trivial_group_uses_identity() {
        let s = find_normal_generator(&Presentation::trivial(), NormalGeneratorOptions::new(2, 10));
        assert_eq!(s.outcome, NormalGeneratorOutcome::Found(Word::identity()));
    }

    #[test]
    fn non_perfect_short_circuits() {
        let trefoil = p("gens: x y\nrels: x^2 y^-3");
        let s = find_normal_generator(&trefoil, NormalGeneratorOptions::new(3, 500));
        assert_eq!(s.outcome, NormalGeneratorOutcome::NotFoundWithinBounds);
        assert_eq!(s.warnings, vec![SearchWarning::NonPerfect]);
        assert_eq!(s.candidates_tested, 0);
    }

    #[test]
    fn non_perfect_search_on_request() {
        // Z/6 is normally generated by its generator
        let z6 = p("gens: x\nrels: x^6");
        let mut opts = NormalGeneratorOptions::new(2, 100);
        opts.search_non_perfect = true;
        let s = find_normal_generator(&z6, opts);
        assert_eq!(s.outcome, NormalGeneratorOutcome::Found(Word::generator(0)));
        assert_eq!(s.warnings, vec![SearchWarning::NonPerfect]);
    }
}
