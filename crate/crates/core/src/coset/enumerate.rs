//! Todd–Coxeter enumeration of the cosets of the trivial subgroup.
//!
//! Coincidences are processed with a union-find forest in which the smaller
//! index always survives, so coset 0 stays the identity coset. Finished
//! tables are renumbered in breadth-first order of first appearance, which
//! makes the numbering independent of the strategy.

use crate::fp::{Presentation, Word};

const NONE: usize = usize::MAX;

/// How new cosets are defined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// Scan each relator from each coset in turn, defining as needed.
    #[default]
    Hlt,
    /// Fill the first empty table slot, then propagate its consequences
    /// through all cyclic conjugates of the relators.
    Felsch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableStatus {
    Complete,
    /// The coset limit was hit; `cosets_used` live cosets at that point.
    Incomplete { cosets_used: usize },
}

/// Right action of the generators on cosets. Column `2g` is generator `g`,
/// column `2g + 1` its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    generators: usize,
    rows: Vec<Vec<Option<usize>>>,
    status: TableStatus,
}

impl CosetTable {
    pub fn status(&self) -> TableStatus {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == TableStatus::Complete
    }

    /// `|G|` when the table closed.
    pub fn order(&self) -> Option<usize> {
        self.is_complete().then_some(self.rows.len())
    }

    pub fn coset_count(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn rows(&self) -> &[Vec<Option<usize>>] {
        &self.rows
    }

    pub fn action(&self, coset: usize, column: usize) -> Option<usize> {
        self.rows.get(coset)?.get(column).copied().flatten()
    }

    /// Image of `coset` under a word, if every step is defined.
    pub fn trace(&self, coset: usize, w: &Word) -> Option<usize> {
        w.letters()
            .iter()
            .try_fold(coset, |c, l| self.action(c, l.column()))
    }

    /// Checks that every column is a permutation and every relator fixes
    /// every coset. Meaningful only for complete tables.
    pub fn verify(&self, p: &Presentation) -> bool {
        if !self.is_complete() || self.generators != p.generator_count() {
            return false;
        }
        let n = self.rows.len();
        for col in 0..2 * self.generators {
            let mut hit = vec![false; n];
            for c in 0..n {
                let Some(d) = self.action(c, col) else {
                    return false;
                };
                if hit[d] || self.action(d, col ^ 1) != Some(c) {
                    return false;
                }
                hit[d] = true;
            }
        }
        (0..n).all(|c| p.relators().iter().all(|r| self.trace(c, r) == Some(c)))
    }
}

/// Enumerates with the default strategy.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> CosetTable {
    todd_coxeter_with(p, max_cosets, Strategy::default())
}

pub fn todd_coxeter_with(p: &Presentation, max_cosets: usize, strategy: Strategy) -> CosetTable {
    let mut e = Enumerator::new(p, max_cosets);
    let finished = match strategy {
        Strategy::Hlt => e.run_hlt(),
        Strategy::Felsch => e.run_felsch(),
    };
    match finished {
        Ok(()) => e.standardized(),
        Err(Full) => e.incomplete(),
    }
}

/// Raised when a definition is needed but no room is left.
#[derive(Debug)]
struct Full;

struct Enumerator {
    width: usize,
    max: usize,
    table: Vec<usize>,
    parent: Vec<usize>,
    live: usize,
    relators: Vec<Vec<usize>>,
    /// Cyclic conjugates of relators and their inverses, by first column.
    conjugates: Vec<Vec<Vec<usize>>>,
    merge_queue: Vec<usize>,
    deductions: Vec<(usize, usize)>,
    changes: u64,
}

impl Enumerator {
    fn new(p: &Presentation, max: usize) -> Self {
        let width = 2 * p.generator_count();
        let relators: Vec<Vec<usize>> = p
            .relators()
            .iter()
            .map(|r| r.letters().iter().map(|l| l.column()).collect())
            .collect();
        let mut conjugates = vec![Vec::new(); width];
        for r in p.relators() {
            let s = r.cyclically_reduced();
            for w in [s.clone(), s.inverse()] {
                for k in 0..w.len() {
                    let rot: Vec<usize> = w.rotate(k).letters().iter().map(|l| l.column()).collect();
                    if !conjugates[rot[0]].contains(&rot) {
                        conjugates[rot[0]].push(rot);
                    }
                }
            }
        }
        let mut e = Enumerator {
            width,
            max,
            table: Vec::new(),
            parent: Vec::new(),
            live: 0,
            relators,
            conjugates,
            merge_queue: Vec::new(),
            deductions: Vec::new(),
            changes: 0,
        };
        if max > 0 {
            e.push_row();
        }
        e
    }

    fn push_row(&mut self) -> usize {
        let n = self.parent.len();
        self.table.extend(std::iter::repeat_n(NONE, self.width));
        self.parent.push(n);
        self.live += 1;
        n
    }

    fn get(&self, c: usize, x: usize) -> usize {
        self.table[c * self.width + x]
    }

    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.table[c * self.width + x] = d;
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn allocated(&self) -> usize {
        self.parent.len()
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize, Full> {
        if self.allocated() >= self.max {
            return Err(Full);
        }
        let d = self.push_row();
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        self.deductions.push((c, x));
        self.changes += 1;
        Ok(d)
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = c;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (keep, drop) = (a.min(b), a.max(b));
            self.parent[drop] = keep;
            self.live -= 1;
            self.merge_queue.push(drop);
            self.changes += 1;
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge_queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.merge_queue.len() {
            let g = self.merge_queue[i];
            i += 1;
            for x in 0..self.width {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != NONE {
                    self.merge(nu, mx);
                } else {
                    let nx = self.get(nu, x ^ 1);
                    if nx != NONE {
                        self.merge(mu, nx);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                        self.deductions.push((mu, x));
                    }
                }
            }
        }
    }

    /// Scans `w` from `a`; fills with new cosets when `fill`, otherwise only
    /// records deductions and coincidences.
    fn scan(&mut self, a: usize, w: &[usize], fill: bool) -> Result<(), Full> {
        let mut f = a;
        let mut b = a;
        let mut i = 0usize;
        let mut j = w.len();
        loop {
            while i < j {
                let next = self.get(f, w[i]);
                if next == NONE {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let next = self.get(b, w[j - 1] ^ 1);
                if next == NONE {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                self.deductions.push((f, w[i]));
                self.changes += 1;
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    /// Renumbers live cosets contiguously, preserving their order.
    /// Returns the old-to-new map.
    fn compact(&mut self) -> Vec<usize> {
        let n = self.allocated();
        let mut map = vec![NONE; n];
        let mut next = 0;
        for c in 0..n {
            if self.is_live(c) {
                map[c] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next * self.width);
        for c in 0..n {
            if !self.is_live(c) {
                continue;
            }
            for x in 0..self.width {
                let d = self.get(c, x);
                table.push(if d == NONE { NONE } else { map[self.rep(d)] });
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        self.live = next;
        self.deductions = self
            .deductions
            .iter()
            .filter(|(c, _)| map[*c] != NONE)
            .map(|&(c, x)| (map[c], x))
            .collect();
        map
    }

    /// Runs `op`, compacting once and retrying if the table is full but
    /// holds dead rows. `cursor` is remapped on compaction.
    fn with_room<T>(
        &mut self,
        cursor: &mut usize,
        mut op: impl FnMut(&mut Self, usize) -> Result<T, Full>,
    ) -> Result<T, Full> {
        match op(self, *cursor) {
            Ok(v) => Ok(v),
            Err(Full) if self.live < self.allocated() => {
                let map = self.compact();
                *cursor = map[*cursor];
                op(self, *cursor)
            }
            Err(Full) => Err(Full),
        }
    }

    fn run_hlt(&mut self) -> Result<(), Full> {
        if self.max == 0 {
            return Err(Full);
        }
        let mut c = 0;
        while c < self.allocated() {
            if self.is_live(c) {
                for r in 0..self.relators.len() {
                    let w = self.relators[r].clone();
                    self.with_room(&mut c, |e, c| e.scan(c, &w, true))?;
                    if !self.is_live(c) {
                        break;
                    }
                }
                for x in 0..self.width {
                    if !self.is_live(c) {
                        break;
                    }
                    if self.get(c, x) == NONE {
                        self.with_room(&mut c, |e, c| e.define(c, x).map(|_| ()))?;
                    }
                }
            }
            c += 1;
        }
        self.deductions.clear();
        self.close()
    }

    fn run_felsch(&mut self) -> Result<(), Full> {
        if self.max == 0 {
            return Err(Full);
        }
        self.close()
    }

    /// Felsch-style loop: propagate deductions, fill the first empty slot,
    /// and finally confirm every relator from every coset.
    fn close(&mut self) -> Result<(), Full> {
        let mut start = 0;
        loop {
            self.process_deductions();
            match self.first_gap(start) {
                Some((c, x)) => {
                    let mut c = c;
                    self.with_room(&mut c, |e, c| e.define(c, x).map(|_| ()))?;
                    start = c;
                }
                None => {
                    let before = self.changes;
                    for c in 0..self.allocated() {
                        for r in 0..self.relators.len() {
                            if !self.is_live(c) {
                                break;
                            }
                            let w = self.relators[r].clone();
                            self.scan(c, &w, false)?;
                        }
                    }
                    if self.changes == before {
                        return Ok(());
                    }
                    start = 0;
                }
            }
        }
    }

    fn first_gap(&self, start: usize) -> Option<(usize, usize)> {
        (start..self.allocated())
            .chain(0..start)
            .filter(|&c| self.is_live(c))
            .find_map(|c| (0..self.width).find(|&x| self.get(c, x) == NONE).map(|x| (c, x)))
    }

    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            if !self.is_live(c) {
                continue;
            }
            let d = self.get(c, x);
            for (from, col) in [(c, x), (d, x ^ 1)] {
                if from == NONE || !self.is_live(from) {
                    continue;
                }
                for k in 0..self.conjugates[col].len() {
                    if !self.is_live(from) {
                        break;
                    }
                    let w = self.conjugates[col][k].clone();
                    // never defines, so cannot overflow
                    let _ = self.scan(from, &w, false);
                }
            }
        }
    }

    fn standardized(&mut self) -> CosetTable {
        let n = self.allocated();
        let mut order = vec![NONE; n];
        let mut seq = vec![0usize];
        order[0] = 0;
        let mut i = 0;
        while i < seq.len() {
            let c = seq[i];
            i += 1;
            for x in 0..self.width {
                let d = self.get(c, x);
                if order[d] == NONE {
                    order[d] = seq.len();
                    seq.push(d);
                }
            }
        }
        let rows = seq
            .iter()
            .map(|&c| (0..self.width).map(|x| Some(order[self.get(c, x)])).collect())
            .collect();
        CosetTable {
            generators: self.width / 2,
            rows,
            status: TableStatus::Complete,
        }
    }

    fn incomplete(&mut self) -> CosetTable {
        self.compact();
        let rows = (0..self.allocated())
            .map(|c| {
                (0..self.width)
                    .map(|x| {
                        let d = self.get(c, x);
                        (d != NONE).then_some(d)
                    })
                    .collect()
            })
            .collect();
        CosetTable {
            generators: self.width / 2,
            rows,
            status: TableStatus::Incomplete {
                cosets_used: self.live,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn small_orders() {
        for strategy in [Strategy::Hlt, Strategy::Felsch] {
            let order = |s: &str| todd_coxeter_with(&p(s), 10_000, strategy).order();
            assert_eq!(order("gens: x\nrels: x^5"), Some(5));
            assert_eq!(order("gens: a b\nrels: a^2, b^3, (a b)^5"), Some(60));
            assert_eq!(order("gens: a b\nrels: a^2, b^2, (a b)^3"), Some(6));
            assert_eq!(order("gens:\nrels:"), Some(1));
            assert_eq!(order("gens: a b\nrels: a^2 b^-2, a b a b^-1"), Some(8));
        }
    }

    #[test]
    fn infinite_group_is_incomplete() {
        let t = todd_coxeter(&p("gens: x y\nrels: x^2 y^-3"), 5000);
        assert!(matches!(t.status(), TableStatus::Incomplete { .. }));
        assert_eq!(t.order(), None);
        let t = todd_coxeter(&p("gens: x"), 100);
        assert!(!t.is_complete());
    }

    #[test]
    fn zero_limit() {
        let t = todd_coxeter(&Presentation::trivial(), 0);
        assert_eq!(t.status(), TableStatus::Incomplete { cosets_used: 0 });
    }

    #[test]
    fn strategies_agree_on_numbering() {
        let a5 = p("gens: a b\nrels: a^2, b^3, (a b)^5");
        let h = todd_coxeter_with(&a5, 10_000, Strategy::Hlt);
        let f = todd_coxeter_with(&a5, 10_000, Strategy::Felsch);
        assert_eq!(h, f);
        assert!(h.verify(&a5));
    }

    #[test]
    fn limit_below_order() {
        let a5 = p("gens: a b\nrels: a^2, b^3, (a b)^5");
        for strategy in [Strategy::Hlt, Strategy::Felsch] {
            let t = todd_coxeter_with(&a5, 30, strategy);
            assert!(matches!(t.status(), TableStatus::Incomplete { cosets_used } if cosets_used <= 30));
        }
    }
}
