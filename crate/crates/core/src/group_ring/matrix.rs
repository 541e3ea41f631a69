use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::element::same_model;
use super::{GroupRingElement, GroupRingError};
use crate::coset::FiniteGroupModel;
use crate::linalg::IntMatrix;
use crate::par;

/// A homomorphism `ℤG^cols → ℤG^rows` of left modules.
///
/// A column vector `v` is sent to `w` with `wᵢ = Σⱼ vⱼ · M[i][j]`, so entries
/// act by right multiplication and composition reads
/// `(M ∘ N)[i][k] = Σⱼ N[j][k] · M[i][j]`.
#[derive(Clone)]
pub struct GroupRingMatrix {
    model: Arc<FiniteGroupModel>,
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElement>,
}

impl PartialEq for GroupRingMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && same_model(&self.model, &other.model)
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a.coeffs() == b.coeffs())
    }
}

impl Eq for GroupRingMatrix {}

impl std::hash::Hash for GroupRingMatrix {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.rows, self.cols).hash(state);
        self.entries.hash(state);
    }
}

impl GroupRingMatrix {
    pub fn zeros(model: &Arc<FiniteGroupModel>, rows: usize, cols: usize) -> Self {
        GroupRingMatrix {
            model: model.clone(),
            rows,
            cols,
            entries: vec![GroupRingElement::zero(model); rows * cols],
        }
    }

    pub fn identity(model: &Arc<FiniteGroupModel>, n: usize) -> Self {
        let mut m = Self::zeros(model, n, n);
        for i in 0..n {
            m.entries[i * n + i] = GroupRingElement::one(model);
        }
        m
    }

    /// Row-major entries; all must share `model`.
    pub fn from_entries(
        model: &Arc<FiniteGroupModel>,
        rows: usize,
        cols: usize,
        entries: Vec<GroupRingElement>,
    ) -> Result<Self, GroupRingError> {
        if entries.len() != rows * cols {
            return Err(GroupRingError::DimensionMismatch(format!(
                "{} entries for a {rows}×{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| !same_model(e.model(), model)) {
            return Err(GroupRingError::ModelMismatch);
        }
        Ok(GroupRingMatrix {
            model: model.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(
        model: &Arc<FiniteGroupModel>,
        cols: usize,
        rows: Vec<Vec<GroupRingElement>>,
    ) -> Result<Self, GroupRingError> {
        let r = rows.len();
        if rows.iter().any(|row| row.len() != cols) {
            return Err(GroupRingError::DimensionMismatch("ragged rows".into()));
        }
        Self::from_entries(model, r, cols, rows.concat())
    }

    pub fn model(&self) -> &Arc<FiniteGroupModel> {
        &self.model
    }

    /// Rebinds the matrix to another model with the same multiplication table.
    pub fn with_model(&self, model: &Arc<FiniteGroupModel>) -> Result<Self, GroupRingError> {
        if !same_model(&self.model, model) {
            return Err(GroupRingError::ModelMismatch);
        }
        let entries = self
            .entries
            .iter()
            .map(|e| GroupRingElement::from_coeffs(model, e.coeffs().to_vec()))
            .collect::<Result<_, _>>()?;
        Self::from_entries(model, self.rows, self.cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: GroupRingElement) -> Result<(), GroupRingError> {
        if !same_model(x.model(), &self.model) {
            return Err(GroupRingError::ModelMismatch);
        }
        self.entries[i * self.cols + j] = x;
        Ok(())
    }

    pub fn entries(&self) -> &[GroupRingElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GroupRingElement::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    fn check_model(&self, other: &Self) -> Result<(), GroupRingError> {
        if same_model(&self.model, &other.model) {
            Ok(())
        } else {
            Err(GroupRingError::ModelMismatch)
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.check_model(other)?;
        if self.cols != other.rows {
            return Err(GroupRingError::DimensionMismatch(format!(
                "cannot compose {}×{} after {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let cells: Vec<(usize, usize)> = (0..self.rows)
            .flat_map(|i| (0..other.cols).map(move |k| (i, k)))
            .collect();
        let entries = par::map(&cells, |&(i, k)| {
            let mut acc = GroupRingElement::zero(&self.model);
            for j in 0..self.cols {
                let (n, m) = (other.get(j, k), self.get(i, j));
                if !n.is_zero() && !m.is_zero() {
                    acc.add_assign_unchecked(&n.mul_unchecked(m));
                }
            }
            acc
        });
        Ok(GroupRingMatrix {
            model: self.model.clone(),
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// Applies the map to a column vector.
    pub fn apply(&self, v: &[GroupRingElement]) -> Result<Vec<GroupRingElement>, GroupRingError> {
        let col = Self::from_entries(&self.model, v.len(), 1, v.to_vec())?;
        Ok(self.compose(&col)?.entries)
    }

    pub fn add(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.zip(other, |a, b| {
            let mut c = a.clone();
            c.add_assign_unchecked(b);
            c
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.zip(other, |a, b| {
            let mut c = a.clone();
            c.add_assign_unchecked(&b.neg());
            c
        })
    }

    fn zip(
        &self,
        other: &Self,
        f: impl Fn(&GroupRingElement, &GroupRingElement) -> GroupRingElement,
    ) -> Result<Self, GroupRingError> {
        self.check_model(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(GroupRingError::DimensionMismatch(format!(
                "{}×{} vs {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(GroupRingMatrix {
            model: self.model.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        GroupRingMatrix {
            model: self.model.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(GroupRingElement::neg).collect(),
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        GroupRingMatrix {
            model: self.model.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.check_model(other)?;
        if self.rows != other.rows {
            return Err(GroupRingError::DimensionMismatch("row counts differ".into()));
        }
        let mut entries = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for i in 0..self.rows {
            entries.extend_from_slice(&self.entries[i * self.cols..(i + 1) * self.cols]);
            entries.extend_from_slice(&other.entries[i * other.cols..(i + 1) * other.cols]);
        }
        Ok(GroupRingMatrix {
            model: self.model.clone(),
            rows: self.rows,
            cols: self.cols + other.cols,
            entries,
        })
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.check_model(other)?;
        if self.cols != other.cols {
            return Err(GroupRingError::DimensionMismatch("column counts differ".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(GroupRingMatrix {
            model: self.model.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Integer matrix of the underlying map of free abelian groups, in the
    /// basis `(module coordinate, group element)`.
    pub fn expand(&self) -> IntMatrix {
        let n = self.model.order();
        let mut out = IntMatrix::zeros(self.rows * n, self.cols * n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let block = self.get(i, j).right_regular();
                for a in 0..n {
                    for b in 0..n {
                        out[(i * n + a, j * n + b)] = block[(a, b)].clone();
                    }
                }
            }
        }
        out
    }

    /// Entrywise augmentation: the induced map on `ℤ^cols → ℤ^rows`.
    pub fn augment(&self) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).augmentation()).collect())
            .collect();
        IntMatrix::from_rows(self.cols, &rows)
    }
}

impl fmt::Display for GroupRingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingMatrix {}×{}\n{self}", self.rows, self.cols)
    }
}
