//! Deficiency search by verified Tietze moves.
//!
//! A state is first simplified greedily (cyclic reduction, dropping trivial
//! and duplicate relators, eliminating generators that occur exactly once in
//! some relator). Then a bounded breadth-first exploration replaces a relator
//! `rᵢ` by `rᵢ · (c rⱼ c⁻¹)^±1` whenever that product cancels, simplifying
//! after each step.

use std::collections::{HashSet, VecDeque};

use super::tietze::{ConjugateFactor, Derivation, TietzeMove};
use super::{FpError, Presentation, Word};
use crate::par;

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub best: Presentation,
    pub deficiency: i64,
    /// Moves taking the input to `best`; all carry checked derivations.
    pub moves: Vec<TietzeMove>,
    pub states_expanded: usize,
    pub budget_exhausted: bool,
}

/// A presentation together with the moves that produced it.
#[derive(Clone, Debug)]
struct Traced {
    p: Presentation,
    moves: Vec<TietzeMove>,
}

impl Traced {
    fn step(&mut self, mv: TietzeMove) -> Result<(), FpError> {
        self.p = mv.apply(&self.p)?;
        self.moves.push(mv);
        Ok(())
    }

    /// Replaces relator `i` by `new`, given `new` as a product of conjugates
    /// of the current relators and `rᵢ` as a product over the relators after
    /// `new` has been appended.
    fn replace(
        &mut self,
        i: usize,
        new: Word,
        new_from_old: Vec<ConjugateFactor>,
        old_from_new: Vec<ConjugateFactor>,
    ) -> Result<(), FpError> {
        self.step(TietzeMove::AddRedundantRelator {
            relator: new,
            derivation: Derivation::Conjugates(new_from_old),
        })?;
        self.step(TietzeMove::RemoveRedundantRelator {
            index: i,
            derivation: Derivation::Conjugates(old_from_new),
        })
    }
}

/// Greedy simplification; never lowers the deficiency.
pub fn simplify(p: &Presentation) -> Result<(Presentation, Vec<TietzeMove>), FpError> {
    let mut t = Traced {
        p: p.clone(),
        moves: Vec::new(),
    };
    simplify_traced(&mut t)?;
    Ok((t.p, t.moves))
}

fn simplify_traced(t: &mut Traced) -> Result<(), FpError> {
    while simplify_once(t)? {}
    Ok(())
}

fn simplify_once(t: &mut Traced) -> Result<bool, FpError> {
    let rels = t.p.relators().to_vec();

    if let Some(i) = rels.iter().position(Word::is_empty) {
        t.step(TietzeMove::RemoveRedundantRelator {
            index: i,
            derivation: Derivation::Conjugates(Vec::new()),
        })?;
        return Ok(true);
    }

    if let Some(i) = rels.iter().position(|r| !r.is_cyclically_reduced()) {
        let (u, s) = rels[i].cyclic_decomposition();
        let m = rels.len();
        t.replace(
            i,
            s,
            vec![ConjugateFactor::new(u.inverse(), i, false)],
            vec![ConjugateFactor::new(u, m, false)],
        )?;
        return Ok(true);
    }

    for j in 0..rels.len() {
        for i in 0..j {
            if let Some((c, inv)) = find_rotation(&rels[j], &rels[i]) {
                t.step(TietzeMove::RemoveRedundantRelator {
                    index: j,
                    derivation: Derivation::Conjugates(vec![ConjugateFactor::new(c, i, inv)]),
                })?;
                return Ok(true);
            }
        }
    }

    for g in 0..t.p.generator_count() {
        let via = rels
            .iter()
            .enumerate()
            .filter(|(_, r)| r.occurrences(g) == 1)
            .min_by_key(|(i, r)| (r.len(), *i))
            .map(|(i, _)| i);
        if let Some(via_relator) = via {
            t.step(TietzeMove::RemoveGenerator {
                generator: g,
                via_relator,
            })?;
            return Ok(true);
        }
    }
    Ok(false)
}

/// If `target = c · source^±1 · c⁻¹` with `target` a rotation of `source` or
/// of its inverse, returns `(c, inverted)`.
fn find_rotation(target: &Word, source: &Word) -> Option<(Word, bool)> {
    if target.len() != source.len() {
        return None;
    }
    for inv in [false, true] {
        let s = if inv { source.inverse() } else { source.clone() };
        for k in 0..s.len().max(1) {
            if s.rotate(k) == *target {
                // rotate(k) = u⁻¹ s u with u the first k letters
                let u = Word::from_letters(s.letters()[..k].to_vec());
                return Some((u.inverse(), inv));
            }
        }
    }
    None
}

fn state_key(p: &Presentation) -> (usize, Vec<Word>) {
    let mut keys: Vec<Word> = p.relators().iter().map(Word::cyclic_class_key).collect();
    keys.sort();
    (p.generator_count(), keys)
}

fn total_length(p: &Presentation) -> usize {
    p.relators().iter().map(Word::len).sum()
}

/// `(i, j, inverse, k)`: multiply `rᵢ` by the `k`-th rotation of `rⱼ^±1`.
type Product = (usize, usize, bool, usize);

fn candidate_products(p: &Presentation) -> Vec<Product> {
    let rels = p.relators();
    let mut out = Vec::new();
    for i in 0..rels.len() {
        for j in 0..rels.len() {
            if i == j {
                continue;
            }
            for inv in [false, true] {
                for k in 0..rels[j].len().max(1) {
                    out.push((i, j, inv, k));
                }
            }
        }
    }
    out
}

fn expand(state: &Traced, (i, j, inv, k): Product, max_len: usize) -> Option<Traced> {
    let rels = state.p.relators();
    let rj = if inv { rels[j].inverse() } else { rels[j].clone() };
    let conj = Word::from_letters(rj.letters()[..k].to_vec()).inverse();
    let factor = rj.rotate(k);
    let new = rels[i].mul(&factor);
    if new.len() >= rels[i].len() + rels[j].len() {
        return None;
    }
    let m = rels.len();
    let mut next = state.clone();
    next.replace(
        i,
        new,
        vec![
            ConjugateFactor::plain(i),
            ConjugateFactor::new(conj.clone(), j, inv),
        ],
        vec![ConjugateFactor::plain(m), ConjugateFactor::new(conj, j, !inv)],
    )
    .ok()?;
    simplify_traced(&mut next).ok()?;
    (total_length(&next.p) <= max_len).then_some(next)
}

fn better(a: &Presentation, b: &Presentation) -> bool {
    match a.deficiency().cmp(&b.deficiency()) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => a.to_fp_string() < b.to_fp_string(),
    }
}

/// Searches for a presentation of the same group with larger deficiency.
///
/// `budget` bounds the number of states expanded. The result is deterministic.
pub fn deficiency_search(p: &Presentation, budget: usize) -> Result<SearchOutcome, FpError> {
    if budget == 0 {
        return Err(FpError::InvalidBudget);
    }
    let mut start = Traced {
        p: p.clone(),
        moves: Vec::new(),
    };
    simplify_traced(&mut start)?;
    let max_len = 2 * total_length(&start.p).max(total_length(p)) + 8;

    let mut best = start.clone();
    let mut seen = HashSet::new();
    seen.insert(state_key(&start.p));
    let mut queue = VecDeque::from([start]);
    let mut expanded = 0;

    while expanded < budget {
        let Some(state) = queue.pop_front() else {
            break;
        };
        expanded += 1;
        let products = candidate_products(&state.p);
        let children = par::map(&products, |&prod| expand(&state, prod, max_len));
        for child in children.into_iter().flatten() {
            if !seen.insert(state_key(&child.p)) {
                continue;
            }
            if better(&child.p, &best.p) {
                best = child.clone();
            }
            queue.push_back(child);
        }
    }

    Ok(SearchOutcome {
        deficiency: best.p.deficiency(),
        best: best.p,
        moves: best.moves,
        states_expanded: expanded,
        budget_exhausted: !queue.is_empty(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    fn replay(start: &Presentation, moves: &[TietzeMove]) -> Presentation {
        moves
            .iter()
            .fold(start.clone(), |acc, mv| {
                assert!(mv.is_verified());
                mv.apply(&acc).unwrap()
            })
    }

    #[test]
    fn drops_defining_generator() {
        let start = p("gens: x y\nrels: x^5, y");
        let out = deficiency_search(&start, 50).unwrap();
        assert_eq!(out.best, p("gens: x\nrels: x^5"));
        assert_eq!(out.deficiency, 0);
        assert_eq!(replay(&start, &out.moves), out.best);
    }

    #[test]
    fn trefoil_stays_at_one() {
        let out = deficiency_search(&p("gens: x y\nrels: x^2 y^-3"), 50).unwrap();
        assert_eq!(out.deficiency, 1);
    }

    #[test]
    fn a5_best_found() {
        let start = p("gens: a b\nrels: a^2, b^3, (a b)^5");
        let out = deficiency_search(&start, 30).unwrap();
        assert_eq!(out.deficiency, -1);
        assert_eq!(replay(&start, &out.moves), out.best);
    }

    #[test]
    fn duplicates_and_conjugates_removed() {
        let start = p("gens: a b\nrels: a b a^-1 b^-1, b a b^-1 a^-1, a^-1 b^3 a, b^3");
        let (s, moves) = simplify(&start).unwrap();
        assert_eq!(s.relator_count(), 2);
        assert_eq!(replay(&start, &moves), s);
    }

    #[test]
    fn collapses_to_trivial() {
        let out = deficiency_search(&p("gens: a b\nrels: a, b, a b"), 10).unwrap();
        assert_eq!(out.best, Presentation::trivial());
    }

    #[test]
    fn zero_budget_rejected() {
        assert_eq!(
            deficiency_search(&Presentation::trivial(), 0).unwrap_err(),
            FpError::InvalidBudget
        );
    }
}
