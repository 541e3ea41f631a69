use std::fmt;

use super::{todd_coxeter, CosetError, CosetTable};
use crate::fp::{Presentation, Word};

/// A finite group as an explicit multiplication table.
///
/// Element `0` is the identity. When built from a coset table, element `i`
/// is the group element carrying coset `0` to coset `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroupModel {
    order: usize,
    mult: Vec<usize>,
    inverse: Vec<usize>,
    generator_images: Vec<usize>,
}

impl FiniteGroupModel {
    /// Builds the regular model from a complete coset table.
    pub fn from_coset_table(table: &CosetTable) -> Result<Self, CosetError> {
        let n = table
            .order()
            .ok_or(CosetError::NotFinitelyEnumerated {
                cosets_used: table.coset_count(),
            })?;
        let width = 2 * table.generator_count();
        // spanning-tree word for each element, as columns
        let mut words: Vec<Option<Vec<usize>>> = vec![None; n];
        words[0] = Some(Vec::new());
        let mut queue = vec![0];
        let mut i = 0;
        while i < queue.len() {
            let c = queue[i];
            i += 1;
            for x in 0..width {
                let d = table.action(c, x).expect("complete table");
                if words[d].is_none() {
                    let mut w = words[c].clone().unwrap();
                    w.push(x);
                    words[d] = Some(w);
                    queue.push(d);
                }
            }
        }
        let words: Vec<Vec<usize>> = words.into_iter().map(|w| w.unwrap()).collect();
        let mut mult = vec![0; n * n];
        for a in 0..n {
            for (b, w) in words.iter().enumerate() {
                mult[a * n + b] = w
                    .iter()
                    .fold(a, |c, &x| table.action(c, x).expect("complete table"));
            }
        }
        let generator_images = (0..table.generator_count())
            .map(|g| table.action(0, 2 * g).unwrap())
            .collect();
        Self::from_parts(n, mult, generator_images)
    }

    /// Builds a model from an explicit table, validating the group axioms.
    pub fn from_table(table: &[Vec<usize>], generator_images: Vec<usize>) -> Result<Self, CosetError> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n) {
            return Err(CosetError::InvalidTable("table must be square and nonempty".into()));
        }
        let mult = table.concat();
        let model = Self::from_parts(n, mult, generator_images)?;
        model.verify()?;
        Ok(model)
    }

    fn from_parts(
        order: usize,
        mult: Vec<usize>,
        generator_images: Vec<usize>,
    ) -> Result<Self, CosetError> {
        if mult.iter().chain(&generator_images).any(|&x| x >= order) {
            return Err(CosetError::InvalidTable("entry out of range".into()));
        }
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            if let Some(b) = (0..order).find(|&b| mult[a * order + b] == 0) {
                inverse[a] = b;
            } else {
                return Err(CosetError::InvalidTable(format!("element {a} has no inverse")));
            }
        }
        Ok(FiniteGroupModel {
            order,
            mult,
            inverse,
            generator_images,
        })
    }

    /// The trivial group on no generators.
    pub fn trivial() -> Self {
        FiniteGroupModel {
            order: 1,
            mult: vec![0],
            inverse: vec![0],
            generator_images: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Equal multiplication tables; generator labels are ignored.
    pub fn same_group(&self, other: &Self) -> bool {
        self.order == other.order && self.mult == other.mult
    }

    /// The same table with different generator images.
    pub fn with_generator_images(&self, images: Vec<usize>) -> Result<Self, CosetError> {
        if let Some(&g) = images.iter().find(|&&g| g >= self.order) {
            return Err(CosetError::InvalidTable(format!("generator image {g} out of range")));
        }
        Ok(FiniteGroupModel {
            generator_images: images,
            ..self.clone()
        })
    }

    pub fn generator_images(&self) -> &[usize] {
        &self.generator_images
    }

    pub fn generator_count(&self) -> usize {
        self.generator_images.len()
    }

    pub fn table_row(&self, a: usize) -> &[usize] {
        &self.mult[a * self.order..(a + 1) * self.order]
    }

    /// Evaluates a word over the generators.
    pub fn evaluate(&self, w: &Word) -> usize {
        w.letters().iter().fold(0, |acc, l| {
            let g = self.generator_images[l.generator];
            self.mul(acc, if l.inverse { self.inv(g) } else { g })
        })
    }

    /// Elements of the subgroup generated by `gens`, sorted.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(a) = stack.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        (0..self.order).filter(|&a| seen[a]).collect()
    }

    /// Index of the conjugacy class of `a`, as its smallest member.
    pub fn class_representative(&self, a: usize) -> usize {
        (0..self.order)
            .map(|g| self.mul(self.mul(g, a), self.inv(g)))
            .min()
            .unwrap_or(0)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether every relator of `p` evaluates to the identity.
    pub fn satisfies(&self, p: &Presentation) -> bool {
        p.generator_count() == self.generator_count()
            && p.relators().iter().all(|r| self.evaluate(r) == 0)
    }

    /// Checks identity, inverses, associativity and that the generator
    /// images generate. Associativity is exhaustive up to order 64 and
    /// sampled on a fixed grid beyond.
    pub fn verify(&self) -> Result<(), CosetError> {
        let n = self.order;
        let bad = |m: &str| Err(CosetError::InvalidTable(m.to_string()));
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return bad("element 0 is not an identity");
            }
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[self.mul(a, b)] = true;
                col[self.mul(b, a)] = true;
            }
            if row.contains(&false) || col.contains(&false) {
                return bad("table is not a Latin square");
            }
        }
        let step = if n <= 64 { 1 } else { n / 64 + 1 };
        for a in (0..n).step_by(step) {
            for b in (0..n).step_by(step) {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return bad("multiplication is not associative");
                    }
                }
            }
        }
        if self.subgroup_closure(&self.generator_images).len() != n {
            return bad("generator images do not generate");
        }
        Ok(())
    }
}

impl fmt::Debug for FiniteGroupModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroupModel")
            .field("order", &self.order)
            .field("generator_images", &self.generator_images)
            .finish()
    }
}

/// Enumerates `p` and returns its regular model.
pub fn group_model(p: &Presentation, max_cosets: usize) -> Result<FiniteGroupModel, CosetError> {
    FiniteGroupModel::from_coset_table(&todd_coxeter(p, max_cosets))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn cyclic_two() {
        let m = group_model(&p("gens: x\nrels: x^2"), 100).unwrap();
        assert_eq!(m.order(), 2);
        assert_eq!(m.table_row(0), &[0, 1]);
        assert_eq!(m.table_row(1), &[1, 0]);
    }

    #[test]
    fn s3_is_nonabelian() {
        let s3 = p("gens: a b\nrels: a^2, b^2, (a b)^3");
        let m = group_model(&s3, 100).unwrap();
        assert_eq!(m.order(), 6);
        let [a, b] = [m.generator_images()[0], m.generator_images()[1]];
        assert_ne!(m.mul(a, b), m.mul(b, a));
        assert!(m.verify().is_ok());
        assert!(m.satisfies(&s3));
    }

    #[test]
    fn trivial_group() {
        let m = group_model(&Presentation::trivial(), 10).unwrap();
        assert_eq!(m, FiniteGroupModel::trivial());
    }

    #[test]
    fn infinite_rejected() {
        assert!(matches!(
            group_model(&p("gens: x y\nrels: x^2 y^-3"), 200),
            Err(CosetError::NotFinitelyEnumerated { .. })
        ));
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(FiniteGroupModel::from_table(&[vec![0, 1], vec![1, 1]], vec![1]).is_err());
        assert!(FiniteGroupModel::from_table(&[vec![0, 1], vec![1, 0]], vec![0]).is_err());
        assert!(FiniteGroupModel::from_table(&[vec![0, 1], vec![1, 0]], vec![1]).is_ok());
    }
}
