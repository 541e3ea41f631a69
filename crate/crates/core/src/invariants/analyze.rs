use std::fmt;

use super::{mu2_sandwich, swan_inequality_check, Bound, InvariantsError, Provenance};
use crate::fp::{abelianization, Presentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub order: Option<usize>,
    /// Invariant-factor form, e.g. `Z + Z/2`, or `0`.
    pub h1: String,
    pub perfect: bool,
    pub def_found: Bound,
    pub mu2_lower: Bound,
    pub mu2_upper: Bound,
    pub tight: bool,
    pub d2n_upper: Option<Bound>,
    pub notes: Vec<String>,
}

fn h1_string(p: &Presentation) -> String {
    let inv = abelianization(p).invariants;
    let mut parts: Vec<String> = inv.torsion.iter().map(|t| format!("Z/{t}")).collect();
    parts.extend(std::iter::repeat_n("Z".to_string(), inv.free_rank));
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// The full invariants pipeline for one presentation.
pub fn analyze(p: &Presentation, budget: usize, max_cosets: usize) -> Result<AnalysisReport, InvariantsError> {
    let s = mu2_sandwich(p, budget, max_cosets)?;
    let swan = swan_inequality_check(p, None, max_cosets).with_sandwich(&s);
    let h1 = h1_string(p);
    let d2n_upper = s.order.map(|_| {
        let n = 2 - s.deficiency_found.value - s.lower.value;
        Bound {
            value: n,
            provenance: Provenance::new("d2n_estimate", format!("2 − def − μ₂ lower = 2 − ({}) − {}", s.deficiency_found.value, s.lower.value)),
        }
    });
    let mut notes = swan.notes;
    if s.order.is_none() {
        notes.push(format!("order unknown: coset enumeration did not close within {max_cosets} cosets"));
    }
    if !s.tight {
        notes.push(format!(
            "μ₂ undetermined between {} and {}",
            s.lower.value, s.upper.value
        ));
    }
    Ok(AnalysisReport {
        order: s.order,
        perfect: h1 == "0",
        h1,
        def_found: s.deficiency_found,
        mu2_lower: s.lower,
        mu2_upper: s.upper,
        tight: s.tight,
        d2n_upper,
        notes,
    })
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            Some(n) => writeln!(f, "order: {n}")?,
            None => writeln!(f, "order: unknown")?,
        }
        writeln!(f, "h1: {}", self.h1)?;
        writeln!(f, "perfect: {}", self.perfect)?;
        for (name, b) in [
            ("def_found", &self.def_found),
            ("mu2_lower", &self.mu2_lower),
            ("mu2_upper", &self.mu2_upper),
        ] {
            writeln!(f, "{name}: {}  # {}", b.value, b.provenance)?;
        }
        writeln!(f, "tight: {}", self.tight)?;
        match &self.d2n_upper {
            Some(b) => writeln!(f, "d2n_upper: {}  # {}", b.value, b.provenance.op)?,
            None => writeln!(f, "d2n_upper: n/a")?,
        }
        writeln!(f, "notes:")?;
        for n in &self.notes {
            writeln!(f, "  - {}", quoted(n))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_and_a5() {
        let t = analyze(&"gens: x y\nrels: x^2 y^-3".parse().unwrap(), 200, 1000).unwrap();
        assert_eq!((t.order, t.h1.as_str(), t.perfect), (None, "Z", false));
        assert_eq!((t.mu2_lower.value, t.mu2_upper.value, t.tight), (0, 0, true));
        assert!(t.d2n_upper.is_none());
        let text = t.to_string();
        assert!(text.contains("order: unknown") && text.contains("d2n_upper: n/a"));

        let a5 = analyze(&"gens: a b\nrels: a^2, b^3, (a b)^5".parse().unwrap(), 200, 1000).unwrap();
        assert_eq!((a5.order, a5.perfect, a5.tight), (Some(60), true, false));
        assert_eq!(a5.d2n_upper.map(|b| b.value), Some(2));
    }

    #[test]
    fn h1_forms() {
        assert_eq!(h1_string(&"gens: x y\nrels: x^2".parse().unwrap()), "Z/2 + Z");
        assert_eq!(h1_string(&Presentation::trivial()), "0");
    }
}
