//! Replacing a sub-presentation by another presentation of the same group.
//!
//! Given `P = ⟨x₁…xₙ | r₁…rₘ⟩` with a sub-presentation `P′` on some of the
//! generators and relators, and another presentation `P″` of the group of
//! `P′` together with words `ωᵢ` over `P″` for the generators of `P′`, the
//! result keeps all of `P″` and adds the remaining generators of `P` and the
//! remaining relators rewritten through `xᵢ ↦ ωᵢ`.

use std::collections::HashSet;

use super::{FpError, Presentation, Word};
use crate::coset::group_model;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftingCheck {
    /// Both groups enumerated; the lifting is an isomorphism onto a group
    /// of this order.
    Verified { order: usize },
    /// Not checkable within the coset limit; accepted on the caller's word.
    CallerAsserted { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubPresentationExtension {
    pub presentation: Presentation,
    pub lifting_check: LiftingCheck,
    pub generators_added: usize,
    pub relators_added: usize,
}

/// The presentation on generators `sub_gens` (renumbered in the given
/// order) with relators `sub_rels`, which may only involve those generators.
pub fn sub_presentation(p: &Presentation, sub_gens: &[usize], sub_rels: &[usize]) -> Result<Presentation, FpError> {
    check_indices("generator", sub_gens, p.generator_count())?;
    check_indices("relator", sub_rels, p.relator_count())?;
    let in_sub: HashSet<usize> = sub_gens.iter().copied().collect();
    for &r in sub_rels {
        if let Some(l) = p.relators()[r].letters().iter().find(|l| !in_sub.contains(&l.generator)) {
            return Err(FpError::NotASubpresentation(format!(
                "relator {r} involves generator `{}` outside the sub-presentation",
                p.generators()[l.generator]
            )));
        }
    }
    let position = |g: usize| sub_gens.iter().position(|&s| s == g).unwrap();
    Presentation::new(
        sub_gens.iter().map(|&g| p.generators()[g].clone()).collect(),
        sub_rels.iter().map(|&r| p.relators()[r].relabel(position)).collect(),
    )
}

pub fn extend_sub_presentation(
    p: &Presentation,
    sub_gens: &[usize],
    sub_rels: &[usize],
    alt: &Presentation,
    lifting: &[Word],
    max_cosets: usize,
) -> Result<SubPresentationExtension, FpError> {
    let (n, m) = (p.generator_count(), p.relator_count());
    let sub = sub_presentation(p, sub_gens, sub_rels)?;
    let in_sub: HashSet<usize> = sub_gens.iter().copied().collect();
    if lifting.len() != sub_gens.len() {
        return Err(FpError::NotASubpresentation(format!(
            "{} lifting words for {} generators",
            lifting.len(),
            sub_gens.len()
        )));
    }
    for w in lifting {
        if let Some(g) = w.max_generator().filter(|&g| g >= alt.generator_count()) {
            return Err(FpError::IndexOutOfRange {
                what: "generator",
                index: g,
                len: alt.generator_count(),
            });
        }
    }

    let kept: Vec<usize> = (0..n).filter(|g| !in_sub.contains(g)).collect();
    let mut images = vec![Word::identity(); n];
    for (&g, w) in sub_gens.iter().zip(lifting) {
        images[g] = w.reduced();
    }
    for (k, &g) in kept.iter().enumerate() {
        images[g] = Word::generator(alt.generator_count() + k);
    }

    let lifting_check = check_lifting(p, &sub, sub_gens, sub_rels, alt, &images, max_cosets)?;

    let mut names = alt.generators().to_vec();
    for &g in &kept {
        names.push(fresh(&p.generators()[g], &names));
    }
    let in_sub_rels: HashSet<usize> = sub_rels.iter().copied().collect();
    let mut rels = alt.relators().to_vec();
    rels.extend(
        (0..m)
            .filter(|r| !in_sub_rels.contains(r))
            .map(|r| p.relators()[r].substitute(&images)),
    );
    let presentation = Presentation::new(names, rels)?;
    Ok(SubPresentationExtension {
        presentation,
        lifting_check,
        generators_added: kept.len(),
        relators_added: m - sub_rels.len(),
    })
}

fn check_lifting(
    p: &Presentation,
    sub: &Presentation,
    sub_gens: &[usize],
    sub_rels: &[usize],
    alt: &Presentation,
    images: &[Word],
    max_cosets: usize,
) -> Result<LiftingCheck, FpError> {
    let Ok(alt_model) = group_model(alt, max_cosets) else {
        return Ok(LiftingCheck::CallerAsserted {
            reason: "target presentation did not enumerate".into(),
        });
    };
    for &r in sub_rels {
        if alt_model.evaluate(&p.relators()[r].substitute(images)) != 0 {
            return Err(FpError::LiftingViolatesRelator { relator: r });
        }
    }
    let gen_images: Vec<usize> = sub_gens.iter().map(|&g| alt_model.evaluate(&images[g])).collect();
    if alt_model.subgroup_closure(&gen_images).len() != alt_model.order() {
        return Err(FpError::LiftingNotBijective(
            "images do not generate the target group".into(),
        ));
    }
    match group_model(sub, max_cosets) {
        Ok(m) if m.order() == alt_model.order() => Ok(LiftingCheck::Verified {
            order: m.order(),
        }),
        Ok(m) => Err(FpError::LiftingNotBijective(format!(
            "sub-presentation has order {}, target has order {}",
            m.order(),
            alt_model.order()
        ))),
        Err(_) => Ok(LiftingCheck::CallerAsserted {
            reason: "sub-presentation did not enumerate".into(),
        }),
    }
}

fn check_indices(what: &'static str, idx: &[usize], len: usize) -> Result<(), FpError> {
    let mut seen = HashSet::new();
    for &i in idx {
        if i >= len {
            return Err(FpError::IndexOutOfRange { what, index: i, len });
        }
        if !seen.insert(i) {
            return Err(FpError::NotASubpresentation(format!("{what} {i} listed twice")));
        }
    }
    Ok(())
}

fn fresh(name: &str, taken: &[String]) -> String {
    if !taken.iter().any(|t| t == name) {
        return name.to_string();
    }
    (1..)
        .map(|i| format!("{name}_{i}"))
        .find(|c| !taken.contains(c))
        .unwrap()
}
