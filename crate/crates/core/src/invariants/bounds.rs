use super::{Bound, InvariantsError, Provenance};
use crate::chain::{euler_char, AlgebraicComplex};
use crate::coset::todd_coxeter;
use crate::fp::{abelianization, deficiency_of, deficiency_search, Presentation};

/// The group order when coset enumeration closes within `max_cosets`.
pub fn certified_order(p: &Presentation, max_cosets: usize) -> Option<usize> {
    todd_coxeter(p, max_cosets).order()
}

/// A lower bound for μ₂ of the group of `p`: 1 for a finite group, else
/// `1 − b₁` with `b₁` the rank of the abelianization (the `b₂` term of
/// Swan's bound is dropped, which only weakens it).
pub fn mu2_lower_bound(p: &Presentation, finite_order: Option<usize>) -> Bound {
    if let Some(n) = finite_order {
        return Bound {
            value: 1,
            provenance: Provenance::new(
                "mu2_lower_bound",
                format!("finite group of order {n}: rational homology vanishes in degrees 1 and 2"),
            ),
        };
    }
    let b1 = abelianization(p).betti_number() as i64;
    Bound {
        value: 1 - b1,
        provenance: Provenance::new("mu2_lower_bound", format!("1 − b1 with b1 = {b1} from the abelianization")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mu2Sandwich {
    pub lower: Bound,
    /// `1 − d + k` for the best presentation found.
    pub upper: Bound,
    pub tight: bool,
    pub best: Presentation,
    pub deficiency_found: Bound,
    pub order: Option<usize>,
}

impl Mu2Sandwich {
    /// μ₂ of the group, when the bounds meet.
    pub fn mu2(&self) -> Option<i64> {
        self.tight.then_some(self.lower.value)
    }

    /// `def = 1 − μ₂`, when the bounds meet.
    pub fn deficiency(&self) -> Option<i64> {
        self.tight.then_some(self.deficiency_found.value)
    }
}

pub fn mu2_sandwich(p: &Presentation, budget: usize, max_cosets: usize) -> Result<Mu2Sandwich, InvariantsError> {
    let order = certified_order(p, max_cosets);
    let lower = mu2_lower_bound(p, order);
    let search = deficiency_search(p, budget)?;
    let deficiency_found = Bound {
        value: search.deficiency,
        provenance: Provenance::new(
            "deficiency_search",
            format!(
                "best presentation {} after {} states{}",
                search.best.inline(),
                search.states_expanded,
                if search.budget_exhausted { ", budget exhausted" } else { "" }
            ),
        ),
    };
    let upper = Bound {
        value: 1 - search.deficiency,
        provenance: Provenance::new(
            "mu2_sandwich",
            format!("χ of the presentation complex of {} = 1 − def", search.best.inline()),
        ),
    };
    Ok(Mu2Sandwich {
        tight: lower.value == upper.value,
        lower,
        upper,
        best: search.best,
        deficiency_found,
        order,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwanReport {
    pub deficiency: i64,
    pub mu2_lower: Bound,
    /// `def(P) ≤ 1 − μ₂` with the lower bound in place of μ₂.
    pub holds: bool,
    pub order: Option<usize>,
    /// `def(P) ≤ 0`, checked for finite groups.
    pub finite_nonpositive: Option<bool>,
    /// μ₂ of the supplied complex is at least the lower bound.
    pub complex_consistent: Option<bool>,
    /// Room for `def ≥ −μ₂` (conditional on the single-normal-generator
    /// conjecture): `−upper ≤ 1 − lower`.
    pub conditional_bound_consistent: Option<bool>,
    pub notes: Vec<String>,
}

impl SwanReport {
    pub fn violated(&self) -> bool {
        !self.holds || self.finite_nonpositive == Some(false) || self.complex_consistent == Some(false)
    }
}

pub fn swan_inequality_check(
    p: &Presentation,
    complex: Option<&AlgebraicComplex>,
    max_cosets: usize,
) -> SwanReport {
    let order = certified_order(p, max_cosets);
    let lower = mu2_lower_bound(p, order);
    let mut report = swan_check_from(deficiency_of(p), lower, order);
    if let Some(f) = complex {
        let chi = euler_char(f);
        let ok = f.top_degree() != 2 || chi >= report.mu2_lower.value;
        report.complex_consistent = Some(ok);
        report
            .notes
            .push(format!("supplied complex has μ = {chi}, lower bound {}", report.mu2_lower.value));
    }
    report
}

/// The Swan check on given numbers; used directly to test the violation path.
pub fn swan_check_from(deficiency: i64, mu2_lower: Bound, order: Option<usize>) -> SwanReport {
    let holds = deficiency <= 1 - mu2_lower.value;
    let mut notes = vec![format!(
        "Swan: def ≤ 1 − μ₂; {deficiency} ≤ 1 − {} {}",
        mu2_lower.value,
        if holds { "holds" } else { "VIOLATED" }
    )];
    let finite_nonpositive = order.map(|n| {
        let ok = deficiency <= 0;
        notes.push(format!(
            "finite group of order {n}: def ≤ 0 {}",
            if ok { "holds" } else { "VIOLATED" }
        ));
        ok
    });
    SwanReport {
        deficiency,
        mu2_lower,
        holds,
        order,
        finite_nonpositive,
        complex_consistent: None,
        conditional_bound_consistent: None,
        notes,
    }
}

impl SwanReport {
    /// Records whether `def(G) ≥ −μ₂(G)` leaves room inside a sandwich.
    pub fn with_sandwich(mut self, s: &Mu2Sandwich) -> Self {
        let ok = -s.upper.value <= 1 - s.lower.value;
        self.conditional_bound_consistent = Some(ok);
        self.notes.push(format!(
            "conditional (single normal generator conjecture): def ≥ −μ₂ ≥ {} is {} with def ≤ {}",
            -s.upper.value,
            if ok { "consistent" } else { "inconsistent" },
            1 - s.lower.value
        ));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D2nEstimate {
    pub n_upper: i64,
    pub deficiency_found: Bound,
    pub mu2_lower: Bound,
    pub statement: String,
}

/// `n ≤ 2 − def − μ₂` with the best deficiency found and the μ₂ lower bound;
/// both substitutions only raise the value, so it stays an upper bound.
pub fn d2n_estimate(p: &Presentation, budget: usize, max_cosets: usize) -> Result<D2nEstimate, InvariantsError> {
    if certified_order(p, max_cosets).is_none() {
        return Err(InvariantsError::NotCertifiedFinite { max_cosets });
    }
    let s = mu2_sandwich(p, budget, max_cosets)?;
    let n_upper = 2 - s.deficiency_found.value - s.lower.value;
    Ok(D2nEstimate {
        n_upper,
        statement: format!(
            "every finite 3-complex chain over G of cd ≤ 2 becomes chain-equivalent to a presentation complex after wedging ≤ {n_upper} spheres"
        ),
        deficiency_found: s.deficiency_found,
        mu2_lower: s.lower,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    const A5: &str = "gens: a b\nrels: a^2, b^3, (a b)^5";
    const TREFOIL: &str = "gens: x y\nrels: x^2 y^-3";

    #[test]
    fn lower_bounds() {
        assert_eq!(mu2_lower_bound(&p(A5), certified_order(&p(A5), 1000)).value, 1);
        assert_eq!(mu2_lower_bound(&p(TREFOIL), certified_order(&p(TREFOIL), 1000)).value, 0);
        assert_eq!(mu2_lower_bound(&p("gens: x y\nrels:"), None).value, -1);
    }

    #[test]
    fn sandwiches() {
        let t = mu2_sandwich(&p(TREFOIL), 200, 1000).unwrap();
        assert!(t.tight);
        assert_eq!((t.mu2(), t.deficiency()), (Some(0), Some(1)));
        let z5 = mu2_sandwich(&p("gens: x\nrels: x^5"), 200, 1000).unwrap();
        assert_eq!((z5.lower.value, z5.upper.value, z5.tight), (1, 1, true));
        let a5 = mu2_sandwich(&p(A5), 200, 1000).unwrap();
        assert_eq!((a5.lower.value, a5.upper.value, a5.tight), (1, 2, false));
        assert_eq!(a5.mu2(), None);
    }

    #[test]
    fn swan() {
        let r = swan_inequality_check(&p(TREFOIL), None, 1000);
        assert!(r.holds && !r.violated());
        assert_eq!(r.deficiency, 1 - r.mu2_lower.value);
        let r = swan_inequality_check(&p(A5), None, 1000);
        assert_eq!(r.finite_nonpositive, Some(true));
        let fake = swan_check_from(1, mu2_lower_bound(&p(A5), Some(60)), Some(60));
        assert!(fake.violated());
        assert_eq!(fake.finite_nonpositive, Some(false));
    }

    #[test]
    fn d2n() {
        assert_eq!(d2n_estimate(&p("gens: x\nrels: x^5"), 200, 1000).unwrap().n_upper, 1);
        assert_eq!(d2n_estimate(&Presentation::trivial(), 200, 1000).unwrap().n_upper, 1);
        assert_eq!(
            d2n_estimate(&p(TREFOIL), 200, 1000),
            Err(InvariantsError::NotCertifiedFinite { max_cosets: 1000 })
        );
    }
}
