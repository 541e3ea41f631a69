use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::ChainError;
use crate::coset::FiniteGroupModel;
use crate::fp::Presentation;
use crate::group_ring::GroupRingMatrix;
use crate::linalg::{rank_over_field, smith_normal_form, Field, IntMatrix};

#[derive(Clone, Debug, PartialEq)]
pub enum ComplexGroup {
    Finite(Arc<FiniteGroupModel>),
    /// A group known only through a presentation.
    Symbolic(Presentation),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Boundary {
    Matrix(GroupRingMatrix),
    /// The augmentation (exponent-sum) shadow.
    ExponentOnly(IntMatrix),
}

impl Boundary {
    pub fn rows(&self) -> usize {
        match self {
            Boundary::Matrix(m) => m.rows(),
            Boundary::ExponentOnly(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            Boundary::Matrix(m) => m.cols(),
            Boundary::ExponentOnly(m) => m.cols(),
        }
    }

    pub fn shadow(&self) -> IntMatrix {
        match self {
            Boundary::Matrix(m) => m.augment(),
            Boundary::ExponentOnly(m) => m.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicComplex {
    group: ComplexGroup,
    ranks: Vec<usize>,
    boundaries: Vec<Boundary>,
}

impl AlgebraicComplex {
    /// `boundaries[i - 1]` is `d_i`, of shape `f_{i-1} × f_i`. Checks the
    /// shapes, `f₀ ≥ 1`, `n ≤ 3` and `d∘d = 0`.
    pub fn new(
        group: ComplexGroup,
        ranks: Vec<usize>,
        boundaries: Vec<Boundary>,
    ) -> Result<Self, ChainError> {
        let f = Self::from_parts_unvalidated(group, ranks, boundaries)?;
        if let Some(degree) = f.first_nonzero_composite()? {
            return Err(ChainError::NotAChainComplex { degree });
        }
        Ok(f)
    }

    /// Like [`AlgebraicComplex::new`] but without the `d∘d = 0` check, so
    /// that [`validate_complex`] can diagnose broken input.
    pub fn from_parts_unvalidated(
        group: ComplexGroup,
        ranks: Vec<usize>,
        boundaries: Vec<Boundary>,
    ) -> Result<Self, ChainError> {
        if ranks.is_empty() || ranks.len() > 4 {
            return Err(ChainError::InvalidComplex(format!(
                "{} ranks given; need between 1 and 4",
                ranks.len()
            )));
        }
        if ranks[0] == 0 {
            return Err(ChainError::InvalidComplex("f0 must be at least 1".into()));
        }
        if boundaries.len() + 1 != ranks.len() {
            return Err(ChainError::InvalidComplex(format!(
                "{} boundaries for {} ranks",
                boundaries.len(),
                ranks.len()
            )));
        }
        for (i, d) in boundaries.iter().enumerate() {
            if (d.rows(), d.cols()) != (ranks[i], ranks[i + 1]) {
                return Err(ChainError::InvalidComplex(format!(
                    "d{} is {}×{}, expected {}×{}",
                    i + 1,
                    d.rows(),
                    d.cols(),
                    ranks[i],
                    ranks[i + 1]
                )));
            }
            match (&group, d) {
                (ComplexGroup::Finite(model), Boundary::Matrix(m)) => {
                    if !model.same_group(m.model()) {
                        return Err(ChainError::ModelMismatch);
                    }
                }
                (ComplexGroup::Symbolic(_), Boundary::ExponentOnly(_)) => {}
                _ => {
                    return Err(ChainError::InvalidComplex(format!(
                        "d{} does not match the group mode",
                        i + 1
                    )))
                }
            }
        }
        let boundaries = match &group {
            ComplexGroup::Finite(model) => boundaries
                .into_iter()
                .map(|d| match d {
                    Boundary::Matrix(m) => Ok(Boundary::Matrix(m.with_model(model)?)),
                    other => Ok(other),
                })
                .collect::<Result<_, ChainError>>()?,
            ComplexGroup::Symbolic(_) => boundaries,
        };
        Ok(AlgebraicComplex {
            group,
            ranks,
            boundaries,
        })
    }

    pub(crate) fn from_matrices(
        model: &Arc<FiniteGroupModel>,
        ranks: Vec<usize>,
        d: Vec<GroupRingMatrix>,
    ) -> Result<Self, ChainError> {
        Self::new(
            ComplexGroup::Finite(model.clone()),
            ranks,
            d.into_iter().map(Boundary::Matrix).collect(),
        )
    }

    /// Degree of the first `d_i ∘ d_{i+1}` that is nonzero.
    fn first_nonzero_composite(&self) -> Result<Option<usize>, ChainError> {
        for i in 1..self.top_degree() {
            let zero = match (&self.boundaries[i - 1], &self.boundaries[i]) {
                (Boundary::Matrix(a), Boundary::Matrix(b)) => a.compose(b)?.is_zero(),
                (a, b) => a.shadow().mul(&b.shadow())?.is_zero(),
            };
            if !zero {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn group(&self) -> &ComplexGroup {
        &self.group
    }

    pub fn model(&self) -> Option<&Arc<FiniteGroupModel>> {
        match &self.group {
            ComplexGroup::Finite(m) => Some(m),
            ComplexGroup::Symbolic(_) => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.model().is_some()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks.get(i).copied().unwrap_or(0)
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `d_i` for `1 ≤ i ≤ n`.
    pub fn boundary(&self, i: usize) -> Option<&Boundary> {
        i.checked_sub(1).and_then(|k| self.boundaries.get(k))
    }

    pub fn boundaries(&self) -> &[Boundary] {
        &self.boundaries
    }

    pub fn matrix(&self, i: usize) -> Option<&GroupRingMatrix> {
        match self.boundary(i)? {
            Boundary::Matrix(m) => Some(m),
            Boundary::ExponentOnly(_) => None,
        }
    }

    /// Augmentation shadow of `d_i`; the zero map outside `1..=n`.
    pub fn shadow(&self, i: usize) -> IntMatrix {
        match self.boundary(i) {
            Some(d) => d.shadow(),
            None => IntMatrix::zeros(self.rank(i.saturating_sub(1)), self.rank(i)),
        }
    }

    /// Pads with zero modules up to top degree `n`.
    pub(crate) fn padded(&self, n: usize) -> Self {
        let mut out = self.clone();
        while out.top_degree() < n {
            let k = out.top_degree();
            let d = match &out.group {
                ComplexGroup::Finite(m) => Boundary::Matrix(GroupRingMatrix::zeros(m, out.ranks[k], 0)),
                ComplexGroup::Symbolic(_) => Boundary::ExponentOnly(IntMatrix::zeros(out.ranks[k], 0)),
            };
            out.ranks.push(0);
            out.boundaries.push(d);
        }
        out
    }
}

/// `μ_n(F) = f_n − f_{n−1} + ⋯ ± f₀`, top rank with positive sign.
pub fn euler_char(f: &AlgebraicComplex) -> i64 {
    let n = f.top_degree();
    f.ranks
        .iter()
        .enumerate()
        .map(|(i, &r)| if (n - i).is_multiple_of(2) { r as i64 } else { -(r as i64) })
        .sum()
}

/// Dimensions `h₀ … h_n` of the homology of `F ⊗_{ℤG} k` for trivial
/// coefficients, with `h₀ = f₀ − rank(d₁ ⊗ k)`.
pub fn homology_over_field(f: &AlgebraicComplex, field: Field) -> Result<Vec<usize>, ChainError> {
    let field = field.validate()?;
    let n = f.top_degree();
    let mut ranks = vec![0usize; n + 2];
    for (i, r) in ranks.iter_mut().enumerate().take(n + 1).skip(1) {
        *r = rank_over_field(&f.shadow(i), field)?;
    }
    Ok((0..=n).map(|i| f.ranks[i] - ranks[i] - ranks[i + 1]).collect())
}

/// Wedge with `n` two-spheres: `n` zero columns appended to `d₂`.
pub fn stabilize_wedge(f: &AlgebraicComplex, n: usize) -> Result<AlgebraicComplex, ChainError> {
    if f.top_degree() != 2 {
        return Err(ChainError::WrongDegree {
            expected: 2,
            found: f.top_degree(),
        });
    }
    let mut out = f.clone();
    out.ranks[2] += n;
    out.boundaries[1] = match &f.boundaries[1] {
        Boundary::Matrix(m) => {
            Boundary::Matrix(m.hstack(&GroupRingMatrix::zeros(m.model(), m.rows(), n))?)
        }
        Boundary::ExponentOnly(m) => Boundary::ExponentOnly(m.hstack(&IntMatrix::zeros(m.rows(), n))?),
    };
    Ok(out)
}

/// Extends a 2-complex by `d₃`; fails with `NotAChainMap` unless `d₂∘d₃ = 0`.
pub fn attach_three_cells(f: &AlgebraicComplex, d3: &Boundary) -> Result<AlgebraicComplex, ChainError> {
    if f.top_degree() != 2 {
        return Err(ChainError::WrongDegree {
            expected: 2,
            found: f.top_degree(),
        });
    }
    if d3.rows() != f.ranks[2] {
        return Err(ChainError::InvalidComplex(format!(
            "d3 has {} rows but f2 = {}",
            d3.rows(),
            f.ranks[2]
        )));
    }
    let mut ranks = f.ranks.clone();
    ranks.push(d3.cols());
    let mut boundaries = f.boundaries.clone();
    boundaries.push(d3.clone());
    match AlgebraicComplex::new(f.group.clone(), ranks, boundaries) {
        Err(ChainError::NotAChainComplex { degree: 2 }) => Err(ChainError::NotAChainMap),
        other => other,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Degree `i` with `d_i ∘ d_{i+1} ≠ 0`, if any.
    pub nonzero_composite: Option<usize>,
    pub augmentation_kills_d1: bool,
    /// `im d₁` equals the augmentation ideal; `None` in symbolic mode.
    pub exact_at_f0: Option<bool>,
    /// `im d₂ = ker d₁`; `None` when not requested or in symbolic mode.
    pub exact_at_f1: Option<bool>,
    /// `dim_ℚ ker d₂` of the expanded map.
    pub kernel_d2_dim_q: Option<usize>,
    /// `rank_ℚ` of the expanded `d₂`.
    pub image_d2_rank_q: Option<usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.nonzero_composite.is_none()
            && self.augmentation_kills_d1
            && self.exact_at_f0 != Some(false)
            && self.exact_at_f1 != Some(false)
    }
}

pub fn validate_complex(f: &AlgebraicComplex) -> Result<ValidationReport, ChainError> {
    validate_complex_with(f, true)
}

pub fn validate_complex_with(
    f: &AlgebraicComplex,
    check_f1: bool,
) -> Result<ValidationReport, ChainError> {
    let nonzero_composite = f.first_nonzero_composite()?;
    let augmentation_kills_d1 = f.shadow(1).is_zero();
    let mut report = ValidationReport {
        nonzero_composite,
        augmentation_kills_d1,
        exact_at_f0: None,
        exact_at_f1: None,
        kernel_d2_dim_q: None,
        image_d2_rank_q: None,
    };
    let Some(model) = f.model() else {
        return Ok(report);
    };
    let order = model.order();
    let e1 = expanded(f, 1, order);
    let e2 = expanded(f, 2, order);
    let rank1 = rank_over_field(&e1, Field::Rationals)?;
    let rank2 = rank_over_field(&e2, Field::Rationals)?;
    report.exact_at_f0 = Some(augmentation_kills_d1 && rank1 + 1 == order * f.rank(0) && saturated(&e1));
    if check_f1 {
        report.exact_at_f1 = Some(rank1 + rank2 == order * f.rank(1) && saturated(&e2));
    }
    if f.top_degree() >= 2 {
        report.kernel_d2_dim_q = Some(order * f.rank(2) - rank2);
        report.image_d2_rank_q = Some(rank2);
    }
    Ok(report)
}

fn expanded(f: &AlgebraicComplex, i: usize, order: usize) -> IntMatrix {
    match f.matrix(i) {
        Some(m) => m.expand(),
        None => IntMatrix::zeros(order * f.rank(i.saturating_sub(1)), order * f.rank(i)),
    }
}

/// The column lattice is a direct summand: every nonzero invariant factor is 1.
fn saturated(a: &IntMatrix) -> bool {
    smith_normal_form(a)
        .diagonal()
        .iter()
        .all(|d| num_traits::Zero::is_zero(d) || d == &BigInt::one() || d == &-BigInt::one())
}
