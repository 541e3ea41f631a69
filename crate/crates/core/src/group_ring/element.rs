use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::GroupRingError;
use crate::coset::FiniteGroupModel;
use crate::fp::Word;
use crate::linalg::IntMatrix;

/// An element of `ℤG` as a dense coefficient vector indexed by the
/// elements of a finite group model.
#[derive(Clone)]
pub struct GroupRingElement {
    model: Arc<FiniteGroupModel>,
    coeffs: Vec<BigInt>,
}

pub(crate) fn same_model(a: &Arc<FiniteGroupModel>, b: &Arc<FiniteGroupModel>) -> bool {
    Arc::ptr_eq(a, b) || a.same_group(b)
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_model(&self.model, &other.model)
    }
}

impl Eq for GroupRingElement {}

impl std::hash::Hash for GroupRingElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl GroupRingElement {
    pub fn zero(model: &Arc<FiniteGroupModel>) -> Self {
        GroupRingElement {
            model: model.clone(),
            coeffs: vec![BigInt::zero(); model.order()],
        }
    }

    pub fn one(model: &Arc<FiniteGroupModel>) -> Self {
        Self::basis(model, 0)
    }

    /// The group element `g` as a ring element.
    pub fn basis(model: &Arc<FiniteGroupModel>, g: usize) -> Self {
        Self::monomial(model, g, BigInt::one())
    }

    pub fn monomial(model: &Arc<FiniteGroupModel>, g: usize, c: impl Into<BigInt>) -> Self {
        let mut x = Self::zero(model);
        x.coeffs[g] = c.into();
        x
    }

    pub fn from_coeffs(
        model: &Arc<FiniteGroupModel>,
        coeffs: Vec<BigInt>,
    ) -> Result<Self, GroupRingError> {
        if coeffs.len() != model.order() {
            return Err(GroupRingError::DimensionMismatch(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                model.order()
            )));
        }
        Ok(GroupRingElement {
            model: model.clone(),
            coeffs,
        })
    }

    /// Builds from `(element, coefficient)` pairs; repeated indices add up.
    pub fn from_sparse<C: Into<BigInt> + Clone>(
        model: &Arc<FiniteGroupModel>,
        terms: &[(usize, C)],
    ) -> Result<Self, GroupRingError> {
        let mut x = Self::zero(model);
        for (g, c) in terms {
            if *g >= model.order() {
                return Err(GroupRingError::DimensionMismatch(format!(
                    "element index {g} out of range for order {}",
                    model.order()
                )));
            }
            x.coeffs[*g] += c.clone().into();
        }
        Ok(x)
    }

    /// The image of a word over the model's generators.
    pub fn from_word(model: &Arc<FiniteGroupModel>, w: &Word) -> Self {
        Self::basis(model, model.evaluate(w))
    }

    /// `Σ_{k<n} gᵏ` for an element `g` of order dividing `n`.
    pub fn norm_of(model: &Arc<FiniteGroupModel>, g: usize) -> Self {
        let mut x = Self::zero(model);
        let mut h = 0;
        loop {
            x.coeffs[h] += 1;
            h = model.mul(h, g);
            if h == 0 {
                return x;
            }
        }
    }

    pub fn model(&self) -> &Arc<FiniteGroupModel> {
        &self.model
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> &BigInt {
        &self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// `ε(x)`, the sum of the coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Nonzero terms in increasing element order.
    pub fn to_sparse(&self) -> Vec<(usize, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| (g, c.clone()))
            .collect()
    }

    fn check(&self, other: &Self) -> Result<(), GroupRingError> {
        if same_model(&self.model, &other.model) {
            Ok(())
        } else {
            Err(GroupRingError::ModelMismatch)
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let m = &self.model;
        let mut out = Self::zero(m);
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let row = m.table_row(a);
            for (b, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out.coeffs[row[b]] += x * y;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GroupRingElement {
            model: self.model.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GroupRingElement {
            model: self.model.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Matrix of `v ↦ v·self` on coefficient vectors; entry `(k, g)` is the
    /// coefficient of `g⁻¹k`. Note `regular(x·y) = regular(y) · regular(x)`.
    pub fn right_regular(&self) -> IntMatrix {
        let n = self.model.order();
        let mut out = IntMatrix::zeros(n, n);
        for g in 0..n {
            let ginv = self.model.inv(g);
            for k in 0..n {
                out[(k, g)] = self.coeffs[self.model.mul(ginv, k)].clone();
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    /// Sparse `[(index,coeff),…]` form, `[]` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (g, c)) in self.to_sparse().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({g},{c})")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
