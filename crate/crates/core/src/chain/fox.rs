use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{AlgebraicComplex, Boundary, ChainError, ComplexGroup};
use crate::coset::FiniteGroupModel;
use crate::fp::{Presentation, Word};
use crate::group_ring::{GroupRingElement, GroupRingMatrix};
use crate::linalg::IntMatrix;

/// Which group ring a presentation complex is built over.
#[derive(Clone, Debug)]
pub enum GroupSpec {
    /// Keep only exponent-sum shadows.
    Symbolic,
    /// A model whose generator images correspond to the presentation's generators.
    Finite(Arc<FiniteGroupModel>),
}

/// An element of the integral free group ring, as reduced words with
/// nonzero coefficients in shortlex order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreeGroupRingElement {
    terms: Vec<(Word, BigInt)>,
}

impl FreeGroupRingElement {
    fn collect(acc: HashMap<Word, BigInt>) -> Self {
        let mut terms: Vec<(Word, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| a.0.length_lex_cmp(&b.0));
        FreeGroupRingElement { terms }
    }

    pub fn terms(&self) -> &[(Word, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn augmentation(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Image in `ℤG` with generator `i` sent to `images[i]`.
    pub fn evaluate(&self, model: &Arc<FiniteGroupModel>, images: &[usize]) -> GroupRingElement {
        let terms: Vec<(usize, BigInt)> = self
            .terms
            .iter()
            .map(|(w, c)| (evaluate_word(model, images, w), c.clone()))
            .collect();
        GroupRingElement::from_sparse(model, &terms).expect("evaluated indices are in range")
    }
}

impl fmt::Display for FreeGroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{w:?}")?;
        }
        Ok(())
    }
}

fn evaluate_word(model: &FiniteGroupModel, images: &[usize], w: &Word) -> usize {
    w.letters().iter().fold(0, |acc, l| {
        let g = images[l.generator];
        model.mul(acc, if l.inverse { model.inv(g) } else { g })
    })
}

/// `∂w/∂x_g` in the left convention: `∂(uv) = ∂u + u·∂v`, `∂x⁻¹ = −x⁻¹`.
pub fn fox_derivative(w: &Word, g: usize) -> FreeGroupRingElement {
    let letters = w.letters();
    let mut acc: HashMap<Word, BigInt> = HashMap::new();
    for (k, l) in letters.iter().enumerate() {
        if l.generator != g {
            continue;
        }
        if l.inverse {
            *acc.entry(Word::reduce_from(letters[..=k].iter().copied())).or_default() -= 1;
        } else {
            *acc.entry(Word::reduce_from(letters[..k].iter().copied())).or_default() += 1;
        }
    }
    FreeGroupRingElement::collect(acc)
}

/// Cellular chain complex of the universal cover of the presentation
/// 2-complex: ranks `(1, d, k)`, `d₁ = (x_i − 1)`, `d₂[i][j] = ∂r_j/∂x_i`.
pub fn presentation_complex(p: &Presentation, group: &GroupSpec) -> Result<AlgebraicComplex, ChainError> {
    match group {
        GroupSpec::Finite(model) => {
            if model.generator_count() != p.generator_count() {
                return Err(ChainError::ModelMismatch);
            }
            presentation_complex_with_images(p, model, model.generator_images())
        }
        GroupSpec::Symbolic => {
            let (d, k) = (p.generator_count(), p.relator_count());
            let mut d2 = IntMatrix::zeros(d, k);
            for (j, r) in p.relators().iter().enumerate() {
                for i in 0..d {
                    d2[(i, j)] = BigInt::from(r.exponent_sum(i));
                }
            }
            AlgebraicComplex::new(
                ComplexGroup::Symbolic(p.clone()),
                vec![1, d, k],
                vec![Boundary::ExponentOnly(IntMatrix::zeros(1, d)), Boundary::ExponentOnly(d2)],
            )
        }
    }
}

/// Finite-mode presentation complex with generator `i` of `p` sent to
/// `images[i]`. The images must satisfy the relators and generate the group.
pub fn presentation_complex_with_images(
    p: &Presentation,
    model: &Arc<FiniteGroupModel>,
    images: &[usize],
) -> Result<AlgebraicComplex, ChainError> {
    let (d, k) = (p.generator_count(), p.relator_count());
    if images.len() != d || images.iter().any(|&g| g >= model.order()) {
        return Err(ChainError::ModelMismatch);
    }
    if p.relators().iter().any(|r| evaluate_word(model, images, r) != 0)
        || model.subgroup_closure(images).len() != model.order()
    {
        return Err(ChainError::ModelMismatch);
    }
    let one = GroupRingElement::one(model);
    let d1: Vec<GroupRingElement> = images
        .iter()
        .map(|&g| GroupRingElement::basis(model, g).sub(&one))
        .collect::<Result<_, _>>()?;
    let mut d2 = Vec::with_capacity(d * k);
    for i in 0..d {
        for r in p.relators() {
            d2.push(fox_derivative(r, i).evaluate(model, images));
        }
    }
    AlgebraicComplex::from_matrices(
        model,
        vec![1, d, k],
        vec![
            GroupRingMatrix::from_entries(model, 1, d, d1)?,
            GroupRingMatrix::from_entries(model, d, k, d2)?,
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::group_model;
    use crate::fp::parse_word;

    fn word(s: &str, gens: &[&str]) -> Word {
        let names: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        parse_word(s, &names).unwrap()
    }

    #[test]
    fn fox_rules() {
        let g = ["x", "y"];
        let d = fox_derivative(&word("x^-1", &g), 0);
        assert_eq!(d.terms(), &[(word("x^-1", &g), BigInt::from(-1))]);
        // x y x⁻¹: 1 − x y x⁻¹
        let d = fox_derivative(&word("x y x^-1", &g), 0);
        assert_eq!(
            d.terms(),
            &[(Word::identity(), BigInt::from(1)), (word("x y x^-1", &g), BigInt::from(-1))]
        );
        assert_eq!(fox_derivative(&word("x y x^-1", &g), 1).terms(), &[(word("x", &g), BigInt::from(1))]);
    }

    #[test]
    fn trefoil_shadow() {
        let g = ["x", "y"];
        let r = word("x^2 y^-3", &g);
        assert_eq!(fox_derivative(&r, 0).augmentation(), BigInt::from(2));
        let dy = fox_derivative(&r, 1);
        assert_eq!(dy.augmentation(), BigInt::from(-3));
        assert_eq!(
            dy.terms().iter().map(|(w, _)| w.clone()).collect::<Vec<_>>(),
            vec![word("x^2 y^-1", &g), word("x^2 y^-2", &g), word("x^2 y^-3", &g)]
        );
        let f = presentation_complex(&"gens: x y\nrels: x^2 y^-3".parse().unwrap(), &GroupSpec::Symbolic).unwrap();
        assert_eq!(f.shadow(2), IntMatrix::from_rows(1, &[vec![2], vec![-3]]));
    }

    #[test]
    fn cyclic_complex() {
        let p: Presentation = "gens: x\nrels: x^5".parse().unwrap();
        let m = Arc::new(group_model(&p, 100).unwrap());
        let f = presentation_complex(&p, &GroupSpec::Finite(m.clone())).unwrap();
        let x = m.generator_images()[0];
        assert_eq!(f.matrix(2).unwrap().get(0, 0), &GroupRingElement::norm_of(&m, x));
        assert_eq!(
            f.matrix(1).unwrap().get(0, 0),
            &GroupRingElement::from_sparse(&m, &[(x, 1), (0, -1)]).unwrap()
        );
        assert!(f.matrix(1).unwrap().compose(f.matrix(2).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn empty_presentation() {
        let f = presentation_complex(&Presentation::trivial(), &GroupSpec::Symbolic).unwrap();
        assert_eq!(f.ranks(), &[1, 0, 0]);
    }

    #[test]
    fn mismatched_model() {
        let m = Arc::new(group_model(&"gens: x\nrels: x^5".parse().unwrap(), 100).unwrap());
        let p: Presentation = "gens: x y\nrels: x^5, y".parse().unwrap();
        assert_eq!(
            presentation_complex(&p, &GroupSpec::Finite(m.clone())),
            Err(ChainError::ModelMismatch)
        );
        let x = m.generator_images()[0];
        assert!(presentation_complex_with_images(&p, &m, &[x, 0]).is_ok());
        assert_eq!(
            presentation_complex_with_images(&p, &m, &[x, x]),
            Err(ChainError::ModelMismatch)
        );
    }
}
