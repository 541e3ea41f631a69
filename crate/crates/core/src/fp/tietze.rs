//! Tietze transformations with checkable derivations.

use super::{FpError, Presentation, Word};

/// One factor `c · rᵢ^±1 · c⁻¹` of a consequence of the relators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConjugateFactor {
    pub conjugator: Word,
    pub relator: usize,
    pub inverse: bool,
}

impl ConjugateFactor {
    pub fn plain(relator: usize) -> Self {
        ConjugateFactor {
            conjugator: Word::identity(),
            relator,
            inverse: false,
        }
    }

    pub fn new(conjugator: Word, relator: usize, inverse: bool) -> Self {
        ConjugateFactor {
            conjugator,
            relator,
            inverse,
        }
    }
}

/// Evidence that a word lies in the normal closure of the relators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Derivation {
    /// The word equals, in the free group, the product of these factors.
    Conjugates(Vec<ConjugateFactor>),
    Unverified,
}

impl Derivation {
    /// Evaluates the product of the factors against `relators`.
    pub fn evaluate(&self, relators: &[Word]) -> Result<Option<Word>, FpError> {
        let Derivation::Conjugates(factors) = self else {
            return Ok(None);
        };
        let mut acc = Word::identity();
        for f in factors {
            let r = relators.get(f.relator).ok_or(FpError::IndexOutOfRange {
                what: "relator",
                index: f.relator,
                len: relators.len(),
            })?;
            let r = if f.inverse { r.inverse() } else { r.clone() };
            acc = acc.mul(&r.conjugate_by(&f.conjugator));
        }
        Ok(Some(acc))
    }

    fn references(&self, idx: usize) -> bool {
        match self {
            Derivation::Conjugates(fs) => fs.iter().any(|f| f.relator == idx),
            Derivation::Unverified => false,
        }
    }

    fn reindexed(&self, f: impl Fn(usize) -> usize) -> Derivation {
        match self {
            Derivation::Conjugates(fs) => Derivation::Conjugates(
                fs.iter()
                    .map(|x| ConjugateFactor {
                        relator: f(x.relator),
                        ..x.clone()
                    })
                    .collect(),
            ),
            Derivation::Unverified => Derivation::Unverified,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TietzeMove {
    /// Adds a generator `t` together with the relator `w · t⁻¹`.
    AddGenerator { defining_word: Word },
    /// Solves `via_relator` for `generator` (which must occur exactly once in
    /// it), substitutes into the other relators and drops both.
    RemoveGenerator { generator: usize, via_relator: usize },
    AddRedundantRelator { relator: Word, derivation: Derivation },
    RemoveRedundantRelator { index: usize, derivation: Derivation },
}

impl TietzeMove {
    pub fn is_verified(&self) -> bool {
        match self {
            TietzeMove::AddRedundantRelator { derivation, .. }
            | TietzeMove::RemoveRedundantRelator { derivation, .. } => {
                !matches!(derivation, Derivation::Unverified)
            }
            _ => true,
        }
    }

    pub fn apply(&self, p: &Presentation) -> Result<Presentation, FpError> {
        let gens = p.generators();
        let rels = p.relators();
        match self {
            TietzeMove::AddGenerator { defining_word } => {
                check_word(defining_word, gens.len())?;
                let t = gens.len();
                let mut g = gens.to_vec();
                g.push(fresh_name(gens));
                let mut r = rels.to_vec();
                r.push(defining_word.mul(&Word::generator(t).inverse()));
                Presentation::new(g, r)
            }
            TietzeMove::RemoveGenerator {
                generator,
                via_relator,
            } => {
                let (g, rel) = (*generator, *via_relator);
                bounds("generator", g, gens.len())?;
                bounds("relator", rel, rels.len())?;
                let image = solve_for_generator(&rels[rel], g)?;
                let mut images: Vec<Word> = (0..gens.len()).map(Word::generator).collect();
                images[g] = image;
                let shift = |i: usize| if i > g { i - 1 } else { i };
                let new_rels = rels
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != rel)
                    .map(|(_, r)| r.substitute(&images).relabel(shift))
                    .collect();
                let mut new_gens = gens.to_vec();
                new_gens.remove(g);
                Presentation::new(new_gens, new_rels)
            }
            TietzeMove::AddRedundantRelator {
                relator,
                derivation,
            } => {
                check_word(relator, gens.len())?;
                if let Some(w) = derivation.evaluate(rels)? {
                    if w != relator.reduced() {
                        return Err(FpError::InvalidDerivation(
                            "product of conjugates differs from the new relator".into(),
                        ));
                    }
                }
                let mut r = rels.to_vec();
                r.push(relator.clone());
                Presentation::new(gens.to_vec(), r)
            }
            TietzeMove::RemoveRedundantRelator { index, derivation } => {
                bounds("relator", *index, rels.len())?;
                if derivation.references(*index) {
                    return Err(FpError::InvalidDerivation(
                        "derivation uses the relator being removed".into(),
                    ));
                }
                if let Some(w) = derivation.evaluate(rels)? {
                    if w != rels[*index] {
                        return Err(FpError::InvalidDerivation(
                            "product of conjugates differs from the removed relator".into(),
                        ));
                    }
                }
                let mut r = rels.to_vec();
                r.remove(*index);
                Presentation::new(gens.to_vec(), r)
            }
        }
    }

    /// A move that undoes `self` when applied to `self.apply(before)`.
    ///
    /// Exact for additions and for relator removal up to relator order; for
    /// generator removal the restored presentation is the substituted one,
    /// which presents the same group.
    pub fn inverse(&self, before: &Presentation) -> Result<TietzeMove, FpError> {
        match self {
            TietzeMove::AddGenerator { .. } => Ok(TietzeMove::RemoveGenerator {
                generator: before.generator_count(),
                via_relator: before.relator_count(),
            }),
            TietzeMove::AddRedundantRelator { derivation, .. } => {
                Ok(TietzeMove::RemoveRedundantRelator {
                    index: before.relator_count(),
                    derivation: derivation.clone(),
                })
            }
            TietzeMove::RemoveRedundantRelator { index, derivation } => {
                let idx = *index;
                bounds("relator", idx, before.relator_count())?;
                Ok(TietzeMove::AddRedundantRelator {
                    relator: before.relators()[idx].clone(),
                    derivation: derivation.reindexed(|i| if i > idx { i - 1 } else { i }),
                })
            }
            TietzeMove::RemoveGenerator {
                generator,
                via_relator,
            } => {
                bounds("relator", *via_relator, before.relator_count())?;
                let g = *generator;
                let image = solve_for_generator(&before.relators()[*via_relator], g)?;
                let shift = |i: usize| if i > g { i - 1 } else { i };
                Ok(TietzeMove::AddGenerator {
                    defining_word: image.relabel(shift),
                })
            }
        }
    }
}

/// For a relator `A · g^ε · B` with a single occurrence of `g`, returns the
/// word for `g` implied by the relation.
fn solve_for_generator(r: &Word, g: usize) -> Result<Word, FpError> {
    if r.occurrences(g) != 1 {
        return Err(FpError::NotEliminable {
            generator: g,
            reason: format!("occurs {} times in the chosen relator", r.occurrences(g)),
        });
    }
    let letters = r.letters();
    let pos = letters.iter().position(|l| l.generator == g).unwrap();
    let a = Word::from_letters(letters[..pos].to_vec());
    let b = Word::from_letters(letters[pos + 1..].to_vec());
    // A g B = 1  =>  g = A⁻¹ B⁻¹;   A g⁻¹ B = 1  =>  g = B A
    Ok(if letters[pos].inverse {
        b.mul(&a)
    } else {
        a.inverse().mul(&b.inverse())
    })
}

fn check_word(w: &Word, gens: usize) -> Result<(), FpError> {
    match w.max_generator() {
        Some(m) if m >= gens => Err(FpError::IndexOutOfRange {
            what: "generator",
            index: m,
            len: gens,
        }),
        _ => Ok(()),
    }
}

fn bounds(what: &'static str, index: usize, len: usize) -> Result<(), FpError> {
    if index >= len {
        Err(FpError::IndexOutOfRange { what, index, len })
    } else {
        Ok(())
    }
}

fn fresh_name(existing: &[String]) -> String {
    (0..)
        .map(|i| format!("t{i}"))
        .find(|n| !existing.contains(n))
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn add_then_remove_generator_restores() {
        let before = p("gens: a b\nrels: a^2, b^3, (a b)^5");
        let mv = TietzeMove::AddGenerator {
            defining_word: Word::from_powers(&[(0, 1), (1, 1)]),
        };
        let after = mv.apply(&before).unwrap();
        assert_eq!(after.generator_count(), 3);
        assert_eq!(after.deficiency(), before.deficiency());
        let back = mv.inverse(&before).unwrap().apply(&after).unwrap();
        assert_eq!(back, before);
    }

    #[test]
    fn redundant_relator_round_trip() {
        let before = p("gens: x\nrels: x^5");
        let w = Word::from_powers(&[(0, 10)]);
        let mv = TietzeMove::AddRedundantRelator {
            relator: w,
            derivation: Derivation::Conjugates(vec![
                ConjugateFactor::plain(0),
                ConjugateFactor::plain(0),
            ]),
        };
        let after = mv.apply(&before).unwrap();
        assert_eq!(after.deficiency(), before.deficiency() - 1);
        let back = mv.inverse(&before).unwrap().apply(&after).unwrap();
        assert_eq!(back, before);
    }

    #[test]
    fn bad_derivation_rejected() {
        let before = p("gens: x\nrels: x^5");
        let mv = TietzeMove::AddRedundantRelator {
            relator: Word::generator(0),
            derivation: Derivation::Conjugates(vec![ConjugateFactor::plain(0)]),
        };
        assert!(matches!(mv.apply(&before), Err(FpError::InvalidDerivation(_))));
        let mv = TietzeMove::RemoveRedundantRelator {
            index: 0,
            derivation: Derivation::Conjugates(vec![ConjugateFactor::plain(0)]),
        };
        assert!(matches!(mv.apply(&before), Err(FpError::InvalidDerivation(_))));
    }

    #[test]
    fn remove_generator_substitutes() {
        // y = x^-2 from x^2 y; substituting into y^3 gives x^-6
        let before = p("gens: x y\nrels: x^2 y, y^3");
        let mv = TietzeMove::RemoveGenerator {
            generator: 1,
            via_relator: 0,
        };
        let after = mv.apply(&before).unwrap();
        assert_eq!(after, p("gens: x\nrels: x^-6"));
        let err = TietzeMove::RemoveGenerator {
            generator: 1,
            via_relator: 1,
        }
        .apply(&before);
        assert!(matches!(err, Err(FpError::NotEliminable { .. })));
    }

    #[test]
    fn inverse_letter_elimination() {
        // x y^-1 x = 1  =>  y = x x
        let before = p("gens: x y\nrels: x y^-1 x, y^2");
        let after = TietzeMove::RemoveGenerator {
            generator: 1,
            via_relator: 0,
        }
        .apply(&before)
        .unwrap();
        assert_eq!(after, p("gens: x\nrels: x^4"));
    }
}
