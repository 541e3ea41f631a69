use super::{mu2_sandwich, InvariantsError, Mu2Sandwich};
use crate::chain::{euler_char, validate_complex_with, AlgebraicComplex};
use crate::fp::{deficiency_of, sub_presentation, FpError, Presentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationReport {
    pub chi: i64,
    /// μ₂ of the group, when the sandwich determines it.
    pub mu2: Option<i64>,
    pub realizes: bool,
    /// Emitted for groups not certified finite; the asphericity hypothesis
    /// is the caller's.
    pub bg_conclusion: Option<String>,
    pub bg_suppressed: Option<String>,
    /// `dim_ℚ ker d₂` after expansion, in finite mode.
    pub kernel_d2_dim_q: Option<usize>,
    pub conflicts: Vec<String>,
    pub notes: Vec<String>,
}

/// Whether a 2-complex attains μ₂ of its group, and what follows from it.
pub fn realization_check(f: &AlgebraicComplex, sandwich: &Mu2Sandwich) -> Result<RealizationReport, InvariantsError> {
    let chi = euler_char(f);
    let mut report = RealizationReport {
        chi,
        mu2: sandwich.mu2(),
        realizes: false,
        bg_conclusion: None,
        bg_suppressed: None,
        kernel_d2_dim_q: None,
        conflicts: Vec::new(),
        notes: Vec::new(),
    };
    if f.top_degree() != 2 {
        report
            .notes
            .push(format!("complex has top degree {}, not a 2-complex", f.top_degree()));
        return Ok(report);
    }
    match sandwich.mu2() {
        None => report.notes.push(format!(
            "μ₂ not determined: {} ≤ μ₂ ≤ {}",
            sandwich.lower.value, sandwich.upper.value
        )),
        Some(mu2) if mu2 == chi => report.realizes = true,
        Some(mu2) => report.notes.push(format!("χ = {chi} differs from μ₂ = {mu2}")),
    }
    if f.is_finite() {
        let v = validate_complex_with(f, false)?;
        report.kernel_d2_dim_q = v.kernel_d2_dim_q;
        report.notes.push(
            "ℚ-kernel of d₂ is a shadow of asphericity only; it does not certify it".to_string(),
        );
    }
    if report.realizes {
        report.notes.push(format!("realizes μ₂^g(G) = {chi}"));
        match sandwich.order {
            Some(n) if n > 1 => {
                report.bg_suppressed = Some(format!(
                    "G has order {n}; a nontrivial finite group cannot have a finite dimensional BG"
                ));
            }
            _ => {
                report.bg_conclusion = Some(
                    "the complex is homotopy equivalent to BG, assuming G admits a finite 2-dimensional BG (caller-asserted)"
                        .to_string(),
                );
                if let Some(k) = report.kernel_d2_dim_q.filter(|&k| k > 0) {
                    report
                        .conflicts
                        .push(format!("ker d₂ has ℚ-dimension {k}, so the cover is not acyclic"));
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcomplexReport {
    pub sub_presentation: Presentation,
    /// χ of the sub-presentation complex, `1 − def`.
    pub sub_chi: i64,
    /// The caller's sandwich shows that the full presentation attains μ₂.
    pub evidence_accepted: bool,
    pub conclusion: String,
    pub sub_sandwich: Mu2Sandwich,
    /// The sub-presentation's own sandwich is tight at `sub_chi`.
    pub cross_check_tight: bool,
    /// Search beat `sub_chi`, contradicting the caller's evidence.
    pub inconsistent_evidence: bool,
    pub notes: Vec<String>,
}

/// If `p` realizes μ₂^g of its group, so does any sub-presentation; this
/// reports the conclusion and cross-checks it by searching the
/// sub-presentation.
pub fn subcomplex_realization_report(
    p: &Presentation,
    sub_gens: &[usize],
    sub_rels: &[usize],
    evidence: &Mu2Sandwich,
    budget: usize,
    max_cosets: usize,
) -> Result<SubcomplexReport, InvariantsError> {
    let sub = sub_presentation(p, sub_gens, sub_rels).map_err(|e| match e {
        e @ (FpError::IndexOutOfRange { .. } | FpError::NotASubpresentation(_)) => InvariantsError::NotASubpresentation(e),
        e => InvariantsError::Fp(e),
    })?;
    let chi_p = 1 - deficiency_of(p);
    let evidence_accepted = evidence.tight && evidence.lower.value == chi_p;
    let sub_chi = 1 - deficiency_of(&sub);
    let sub_sandwich = mu2_sandwich(&sub, budget, max_cosets)?;
    let inconsistent_evidence = sub_sandwich.upper.value < sub_chi;
    let cross_check_tight = sub_sandwich.tight && sub_sandwich.lower.value == sub_chi;
    let mut notes = Vec::new();
    if !evidence_accepted {
        notes.push(format!(
            "evidence does not show χ(P) = {chi_p} equals μ₂: sandwich [{}, {}]",
            evidence.lower.value, evidence.upper.value
        ));
    }
    if inconsistent_evidence {
        notes.push(format!(
            "InconsistentEvidence: search found χ = {} below the inherited {sub_chi}",
            sub_sandwich.upper.value
        ));
    }
    let conclusion = if evidence_accepted {
        format!("the sub-presentation {} realizes μ₂^g of its group, value {sub_chi}", sub.inline())
    } else {
        "no conclusion: the hypothesis is not supported by the evidence".to_string()
    };
    Ok(SubcomplexReport {
        sub_presentation: sub,
        sub_chi,
        evidence_accepted,
        conclusion,
        sub_sandwich,
        cross_check_tight,
        inconsistent_evidence,
        notes,
    })
}
