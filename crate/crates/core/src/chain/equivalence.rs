//! Chain homotopy equivalence certificates.
//!
//! The search first removes unit pivots (`±g` entries of `d_k`, `k ≥ 2`)
//! from both complexes by Gaussian elimination, which comes with explicit
//! chain maps and homotopies. If the reduced complexes coincide the
//! certificate is assembled from the two reductions. Otherwise a chain map
//! is lifted degree by degree from `e_j ↦ e′₀` in degree 0, and a
//! contraction of its mapping cone is solved for; a contraction yields the
//! inverse map and both homotopies at once. The top-degree component is
//! perturbed by kernel vectors of the target boundary when the first lift
//! is not a quasi-isomorphism.

use std::sync::Arc;

use num_traits::{One, Signed};

use super::{euler_char, homology_over_field, AlgebraicComplex, ChainError};
use crate::coset::FiniteGroupModel;
use crate::group_ring::{solve_gr_system, GrSolution, GroupRingElement, GroupRingMatrix, Side};
use crate::linalg::{integer_kernel, rank_over_field, Field};
use crate::par;

/// Fields whose trivial-coefficient homology is compared before searching.
const FIELDS: [Field; 5] = [
    Field::Rationals,
    Field::Prime(2),
    Field::Prime(3),
    Field::Prime(5),
    Field::Prime(7),
];

/// Candidate chain maps examined per parallel batch.
const BATCH: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateMethod {
    Identity,
    Reduction,
    ConeLifting,
}

/// Chain maps `f : F → F′`, `g : F′ → F` with `g∘f − 1 = d∘h + h∘d` on `F`
/// and `f∘g − 1 = d∘k + k∘d` on `F′`.
///
/// Both complexes are padded with zero modules to a common top degree `n`;
/// `forward[i]` and `backward[i]` cover degree `i ≤ n`, the homotopies
/// `source_homotopy[i] : F_i → F_{i+1}` degrees `i < n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceCertificate {
    pub forward: Vec<GroupRingMatrix>,
    pub backward: Vec<GroupRingMatrix>,
    pub source_homotopy: Vec<GroupRingMatrix>,
    pub target_homotopy: Vec<GroupRingMatrix>,
    pub method: CertificateMethod,
    pub solver_calls: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantMismatch {
    EulerCharacteristic { source: i64, target: i64 },
    FieldHomology { field: Field, source: Vec<usize>, target: Vec<usize> },
    /// `dim_ℚ` of the homology of the underlying abelian complexes.
    CoverHomology { source: Vec<usize>, target: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceOutcome {
    Certificate(EquivalenceCertificate),
    NotEquivalent(InvariantMismatch),
    Unknown { reason: String, solver_calls: usize },
}

impl EquivalenceOutcome {
    pub fn certificate(&self) -> Option<&EquivalenceCertificate> {
        match self {
            EquivalenceOutcome::Certificate(c) => Some(c),
            _ => None,
        }
    }
}

/// A complex as a list of boundary matrices over one model.
#[derive(Clone, Debug, PartialEq)]
struct Cx {
    model: Arc<FiniteGroupModel>,
    ranks: Vec<usize>,
    d: Vec<GroupRingMatrix>,
}

impl Cx {
    fn from_complex(f: &AlgebraicComplex, n: usize, model: &Arc<FiniteGroupModel>) -> Result<Self, ChainError> {
        let f = f.padded(n);
        let d = (1..=n)
            .map(|i| {
                f.matrix(i)
                    .ok_or(ChainError::RequiresFiniteMode)
                    .and_then(|m| Ok(m.with_model(model)?))
            })
            .collect::<Result<_, _>>()?;
        Ok(Cx {
            model: model.clone(),
            ranks: f.ranks().to_vec(),
            d,
        })
    }

    fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    fn rank(&self, i: usize) -> usize {
        self.ranks.get(i).copied().unwrap_or(0)
    }

    /// `d_i`, including the zero maps at `i = 0` and `i = n + 1`.
    fn d(&self, i: usize) -> GroupRingMatrix {
        if i == 0 || i > self.top() {
            GroupRingMatrix::zeros(&self.model, self.rank(i.wrapping_sub(1)), self.rank(i))
        } else {
            self.d[i - 1].clone()
        }
    }

    fn identity(&self, i: usize) -> GroupRingMatrix {
        GroupRingMatrix::identity(&self.model, self.rank(i))
    }
}

/// The data of a certificate between two `Cx`, without bookkeeping.
#[derive(Clone, Debug)]
struct Equivalence {
    f: Vec<GroupRingMatrix>,
    g: Vec<GroupRingMatrix>,
    h: Vec<GroupRingMatrix>,
    k: Vec<GroupRingMatrix>,
}

fn zeros(model: &Arc<FiniteGroupModel>, rows: usize, cols: usize) -> GroupRingMatrix {
    GroupRingMatrix::zeros(model, rows, cols)
}

impl Equivalence {
    fn identity(cx: &Cx) -> Self {
        let n = cx.top();
        Equivalence {
            f: (0..=n).map(|i| cx.identity(i)).collect(),
            g: (0..=n).map(|i| cx.identity(i)).collect(),
            h: (0..n).map(|i| zeros(&cx.model, cx.rank(i + 1), cx.rank(i))).collect(),
            k: (0..n).map(|i| zeros(&cx.model, cx.rank(i + 1), cx.rank(i))).collect(),
        }
    }

    fn reversed(self) -> Self {
        Equivalence {
            f: self.g,
            g: self.f,
            h: self.k,
            k: self.h,
        }
    }

    /// `other ∘ self` for `self : A ≃ B` and `other : B ≃ C`.
    fn then(&self, other: &Equivalence) -> Result<Equivalence, ChainError> {
        let n = self.f.len() - 1;
        let mut out = Equivalence {
            f: Vec::new(),
            g: Vec::new(),
            h: Vec::new(),
            k: Vec::new(),
        };
        for i in 0..=n {
            out.f.push(other.f[i].compose(&self.f[i])?);
            out.g.push(self.g[i].compose(&other.g[i])?);
        }
        for i in 0..n {
            let h = self.g[i + 1].compose(&other.h[i])?.compose(&self.f[i])?;
            out.h.push(self.h[i].add(&h)?);
            let k = other.f[i + 1].compose(&self.k[i])?.compose(&other.g[i])?;
            out.k.push(other.k[i].add(&k)?);
        }
        Ok(out)
    }
}

/// `A∘X = B` with empty shapes handled directly.
fn solve_right(a: &GroupRingMatrix, b: &GroupRingMatrix) -> Result<Option<GroupRingMatrix>, ChainError> {
    let m = a.model();
    if a.cols() == 0 || b.cols() == 0 || a.rows() == 0 {
        return Ok(b.is_zero().then(|| zeros(m, a.cols(), b.cols())));
    }
    Ok(match solve_gr_system(a, b, Side::Right)? {
        GrSolution::Solution(x) => Some(x),
        GrSolution::Infeasible(_) => None,
    })
}

fn unit_inverse(x: &GroupRingElement) -> Option<GroupRingElement> {
    let terms = x.to_sparse();
    match terms.as_slice() {
        [(g, c)] if c.abs().is_one() => {
            Some(GroupRingElement::monomial(x.model(), x.model().inv(*g), c.clone()))
        }
        _ => None,
    }
}

fn first_unit_pivot(cx: &Cx) -> Option<(usize, usize, usize, GroupRingElement)> {
    for k in 2..=cx.top() {
        let d = &cx.d[k - 1];
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                if let Some(inv) = unit_inverse(d.get(r, c)) {
                    return Some((k, r, c, inv));
                }
            }
        }
    }
    None
}

/// Gaussian elimination of the unit entry `d_k[r][c]` with inverse `inv`.
fn eliminate(cx: &Cx, k: usize, r: usize, c: usize, inv: GroupRingElement) -> Result<(Cx, Equivalence), ChainError> {
    let m = &cx.model;
    let (nk, nk1) = (cx.rank(k), cx.rank(k - 1));
    let keep_k: Vec<usize> = (0..nk).filter(|&i| i != c).collect();
    let keep_k1: Vec<usize> = (0..nk1).filter(|&i| i != r).collect();
    let dk = &cx.d[k - 1];
    let phi_inv = GroupRingMatrix::from_entries(m, 1, 1, vec![inv])?;
    let beta = dk.submatrix(&[r], &keep_k);
    let gamma = dk.submatrix(&keep_k1, &[c]);
    let delta = dk.submatrix(&keep_k1, &keep_k);
    let gamma_phi_inv = gamma.compose(&phi_inv)?;
    let phi_inv_beta = phi_inv.compose(&beta)?;

    let mut reduced = cx.clone();
    reduced.ranks[k] = nk - 1;
    reduced.ranks[k - 1] = nk1 - 1;
    reduced.d[k - 1] = delta.sub(&gamma_phi_inv.compose(&beta)?)?;
    if k < cx.top() {
        let all: Vec<usize> = (0..cx.rank(k + 1)).collect();
        reduced.d[k] = cx.d[k].submatrix(&keep_k, &all);
    }
    let all: Vec<usize> = (0..cx.rank(k - 2)).collect();
    reduced.d[k - 2] = cx.d[k - 2].submatrix(&all, &keep_k1);

    let mut eq = Equivalence::identity(cx);
    let id_k = cx.identity(k);
    let id_k1 = cx.identity(k - 1);
    let all_k: Vec<usize> = (0..nk).collect();
    let all_k1: Vec<usize> = (0..nk1).collect();
    eq.f[k] = id_k.submatrix(&keep_k, &all_k);
    let mut fk1 = id_k1.submatrix(&keep_k1, &all_k1);
    for (i, _) in keep_k1.iter().enumerate() {
        fk1.set(i, r, gamma_phi_inv.get(i, 0).neg())?;
    }
    eq.f[k - 1] = fk1;
    let mut gk = id_k.submatrix(&all_k, &keep_k);
    for j in 0..keep_k.len() {
        gk.set(c, j, phi_inv_beta.get(0, j).neg())?;
    }
    eq.g[k] = gk;
    eq.g[k - 1] = id_k1.submatrix(&all_k1, &keep_k1);
    let mut h = zeros(m, nk, nk1);
    h.set(c, r, phi_inv.get(0, 0).neg())?;
    eq.h[k - 1] = h;
    for i in 0..cx.top() {
        eq.k[i] = zeros(m, reduced.rank(i + 1), reduced.rank(i));
    }
    Ok((reduced, eq))
}

/// Eliminates unit pivots until none remain.
fn reduce(cx: &Cx) -> Result<(Cx, Equivalence), ChainError> {
    let mut current = cx.clone();
    let mut total = Equivalence::identity(cx);
    while let Some((k, r, c, inv)) = first_unit_pivot(&current) {
        let (next, step) = eliminate(&current, k, r, c, inv)?;
        total = total.then(&step)?;
        current = next;
    }
    Ok((current, total))
}

/// Checks every identity of `eq` between `a` and `b`.
fn check(a: &Cx, b: &Cx, eq: &Equivalence) -> Result<(), String> {
    let n = a.top();
    let shape_ok = eq.f.len() == n + 1
        && eq.g.len() == n + 1
        && eq.h.len() == n
        && eq.k.len() == n
        && (0..=n).all(|i| {
            (eq.f[i].rows(), eq.f[i].cols()) == (b.rank(i), a.rank(i))
                && (eq.g[i].rows(), eq.g[i].cols()) == (a.rank(i), b.rank(i))
        })
        && (0..n).all(|i| {
            (eq.h[i].rows(), eq.h[i].cols()) == (a.rank(i + 1), a.rank(i))
                && (eq.k[i].rows(), eq.k[i].cols()) == (b.rank(i + 1), b.rank(i))
        });
    if !shape_ok || b.top() != n {
        return Err("certificate shapes do not match the complexes".into());
    }
    let e = |r: Result<GroupRingMatrix, crate::group_ring::GroupRingError>| r.map_err(|e| e.to_string());
    for (name, map, src, dst) in [("forward", &eq.f, a, b), ("backward", &eq.g, b, a)] {
        for i in 1..=n {
            if e(dst.d(i).compose(&map[i]))? != e(map[i - 1].compose(&src.d(i)))? {
                return Err(format!("{name} map does not commute with d{i}"));
            }
        }
        let aug = map[0].augment();
        let preserves = (0..aug.cols()).all(|j| (0..aug.rows()).map(|i| aug[(i, j)].clone()).sum::<num_bigint::BigInt>().is_one());
        if !preserves {
            return Err(format!("{name} map does not preserve the augmentation"));
        }
    }
    for (name, outer, inner, hom, cx) in [
        ("source", &eq.g, &eq.f, &eq.h, a),
        ("target", &eq.f, &eq.g, &eq.k, b),
    ] {
        for i in 0..=n {
            let lhs = e(e(outer[i].compose(&inner[i]))?.sub(&cx.identity(i)))?;
            let mut rhs = zeros(&cx.model, cx.rank(i), cx.rank(i));
            if i < n {
                rhs = e(rhs.add(&e(cx.d(i + 1).compose(&hom[i]))?))?;
            }
            if i > 0 {
                rhs = e(rhs.add(&e(hom[i - 1].compose(&cx.d(i)))?))?;
            }
            if lhs != rhs {
                return Err(format!("{name} homotopy fails in degree {i}"));
            }
        }
    }
    Ok(())
}

impl EquivalenceCertificate {
    /// Re-checks every identity by exact multiplication.
    pub fn verify(&self, source: &AlgebraicComplex, target: &AlgebraicComplex) -> Result<(), String> {
        let model = source.model().ok_or("source is not in finite mode")?;
        let n = self.forward.len().checked_sub(1).ok_or("empty certificate")?;
        if source.top_degree() > n || target.top_degree() > n {
            return Err("certificate degree is below the complexes' degree".into());
        }
        let a = Cx::from_complex(source, n, model).map_err(|e| e.to_string())?;
        let b = Cx::from_complex(target, n, model).map_err(|e| e.to_string())?;
        check(&a, &b, &self.as_equivalence())
    }

    /// The same certificate with source and target exchanged.
    pub fn reversed(&self) -> Self {
        EquivalenceCertificate {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
            source_homotopy: self.target_homotopy.clone(),
            target_homotopy: self.source_homotopy.clone(),
            method: self.method,
            solver_calls: self.solver_calls,
        }
    }

    fn as_equivalence(&self) -> Equivalence {
        Equivalence {
            f: self.forward.clone(),
            g: self.backward.clone(),
            h: self.source_homotopy.clone(),
            k: self.target_homotopy.clone(),
        }
    }

    fn from_equivalence(eq: Equivalence, method: CertificateMethod, solver_calls: usize) -> Self {
        EquivalenceCertificate {
            forward: eq.f,
            backward: eq.g,
            source_homotopy: eq.h,
            target_homotopy: eq.k,
            method,
            solver_calls,
        }
    }
}

fn cover_homology(cx: &Cx) -> Result<Vec<usize>, ChainError> {
    let order = cx.model.order();
    let n = cx.top();
    let mut ranks = vec![0usize; n + 2];
    for (i, r) in ranks.iter_mut().enumerate().take(n + 1).skip(1) {
        *r = rank_over_field(&cx.d[i - 1].expand(), Field::Rationals)?;
    }
    Ok((0..=n).map(|i| order * cx.rank(i) - ranks[i] - ranks[i + 1]).collect())
}

fn compare_invariants(
    f: &AlgebraicComplex,
    g: &AlgebraicComplex,
    a: &Cx,
    b: &Cx,
) -> Result<Option<InvariantMismatch>, ChainError> {
    let n = a.top();
    let (chi_f, chi_g) = (euler_char(&f.padded(n)), euler_char(&g.padded(n)));
    if chi_f != chi_g {
        return Ok(Some(InvariantMismatch::EulerCharacteristic {
            source: chi_f,
            target: chi_g,
        }));
    }
    for field in FIELDS {
        let (hf, hg) = (homology_over_field(&f.padded(n), field)?, homology_over_field(&g.padded(n), field)?);
        if hf != hg {
            return Ok(Some(InvariantMismatch::FieldHomology {
                field,
                source: hf,
                target: hg,
            }));
        }
    }
    let (hf, hg) = (cover_homology(a)?, cover_homology(b)?);
    if hf != hg {
        return Ok(Some(InvariantMismatch::CoverHomology { source: hf, target: hg }));
    }
    Ok(None)
}

/// Decides chain homotopy equivalence of two finite-mode complexes over the
/// same group, spending at most `budget` linear solves per search direction.
pub fn certify_chain_equivalence(
    source: &AlgebraicComplex,
    target: &AlgebraicComplex,
    budget: usize,
) -> Result<EquivalenceOutcome, ChainError> {
    let (Some(model), Some(other)) = (source.model(), target.model()) else {
        return Err(ChainError::RequiresFiniteMode);
    };
    if !model.same_group(other) {
        return Err(ChainError::ModelMismatch);
    }
    let n = source.top_degree().max(target.top_degree());
    let a = Cx::from_complex(source, n, model)?;
    let b = Cx::from_complex(target, n, model)?;
    if let Some(m) = compare_invariants(source, target, &a, &b)? {
        return Ok(EquivalenceOutcome::NotEquivalent(m));
    }
    if a == b {
        let eq = Equivalence::identity(&a);
        return finish(&a, &b, eq, CertificateMethod::Identity, 0);
    }
    let (ra, ea) = reduce(&a)?;
    let (rb, eb) = reduce(&b)?;
    if ra == rb {
        let eq = ea.then(&eb.reversed())?;
        return finish(&a, &b, eq, CertificateMethod::Reduction, 0);
    }
    let mut calls = 0;
    let mut exhausted = false;
    for forward in [true, false] {
        let (from, to) = if forward { (&ra, &rb) } else { (&rb, &ra) };
        let found = lift_search(from, to, budget)?;
        calls += found.calls;
        exhausted |= found.exhausted;
        if let Some(mid) = found.equivalence {
            let mid = if forward { mid } else { mid.reversed() };
            let eq = ea.then(&mid)?.then(&eb.clone().reversed())?;
            return finish(&a, &b, eq, CertificateMethod::ConeLifting, calls);
        }
    }
    let reason = if exhausted {
        format!("solver budget of {budget} exhausted")
    } else {
        "no quasi-isomorphism among the candidate chain maps".to_string()
    };
    Ok(EquivalenceOutcome::Unknown {
        reason,
        solver_calls: calls,
    })
}

fn finish(
    a: &Cx,
    b: &Cx,
    eq: Equivalence,
    method: CertificateMethod,
    calls: usize,
) -> Result<EquivalenceOutcome, ChainError> {
    check(a, b, &eq).map_err(|e| ChainError::InvalidComplex(format!("internal certificate check failed: {e}")))?;
    Ok(EquivalenceOutcome::Certificate(EquivalenceCertificate::from_equivalence(eq, method, calls)))
}

struct SearchResult {
    equivalence: Option<Equivalence>,
    calls: usize,
    exhausted: bool,
}

/// Lifts a chain map `a → b` and searches for one whose cone contracts.
fn lift_search(a: &Cx, b: &Cx, budget: usize) -> Result<SearchResult, ChainError> {
    let m = &a.model;
    let n = a.top();
    let mut calls = 0;
    let fail = |calls, exhausted| SearchResult {
        equivalence: None,
        calls,
        exhausted,
    };

    let mut f0 = zeros(m, b.rank(0), a.rank(0));
    for j in 0..a.rank(0) {
        f0.set(0, j, GroupRingElement::one(m))?;
    }
    let mut f = vec![f0];
    for i in 1..=n {
        if calls >= budget {
            return Ok(fail(calls, true));
        }
        calls += 1;
        let rhs = f[i - 1].compose(&a.d(i))?;
        match solve_right(&b.d(i), &rhs)? {
            Some(x) => f.push(x),
            None => return Ok(fail(calls, false)),
        }
    }

    let candidates = top_candidates(a, b, &f[n])?;
    let per_candidate = n + 1;
    let affordable = budget.saturating_sub(calls) / per_candidate;
    let exhausted = affordable < candidates.len();
    let candidates = &candidates[..affordable.min(candidates.len())];
    for (batch_no, batch) in candidates.chunks(BATCH).enumerate() {
        let hit = par::find_first(batch, |top| {
            let mut maps = f.clone();
            maps[n] = top.clone();
            contract_cone(a, b, &maps).ok().flatten().map(|eq| (eq, maps))
        });
        if let Some((idx, (eq, _))) = hit {
            let used = calls + (batch_no * BATCH + idx + 1) * per_candidate;
            return Ok(SearchResult {
                equivalence: Some(eq),
                calls: used,
                exhausted: false,
            });
        }
    }
    Ok(fail(calls + candidates.len() * per_candidate, exhausted))
}

/// Top-degree maps to try, in order: the lift with zero columns of `d_n`
/// sent to zero columns of `d′_n`, the plain lift, then single kernel
/// perturbations of each column.
fn top_candidates(a: &Cx, b: &Cx, lift: &GroupRingMatrix) -> Result<Vec<GroupRingMatrix>, ChainError> {
    let m = &a.model;
    let n = a.top();
    let mut out = Vec::new();
    if n == 0 {
        out.push(lift.clone());
        return Ok(out);
    }
    let zero_cols = |d: &GroupRingMatrix| -> Vec<usize> {
        (0..d.cols()).filter(|&j| (0..d.rows()).all(|i| d.get(i, j).is_zero())).collect()
    };
    let (src_spheres, dst_spheres) = (zero_cols(&a.d(n)), zero_cols(&b.d(n)));
    let mut matched = lift.clone();
    for (&j, &t) in src_spheres.iter().zip(&dst_spheres) {
        for i in 0..matched.rows() {
            let e = if i == t { GroupRingElement::one(m) } else { GroupRingElement::zero(m) };
            matched.set(i, j, e)?;
        }
    }
    out.push(matched.clone());
    if &matched != lift {
        out.push(lift.clone());
    }
    let order = m.order();
    let kernel = integer_kernel(&b.d(n).expand());
    for j in 0..matched.cols() {
        for t in 0..kernel.cols() {
            for sign in [1i64, -1] {
                let mut c = matched.clone();
                for i in 0..c.rows() {
                    let coeffs = (0..order)
                        .map(|g| c.get(i, j).coeff(g) + kernel[(i * order + g, t)].clone() * sign)
                        .collect();
                    c.set(i, j, GroupRingElement::from_coeffs(m, coeffs)?)?;
                }
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// Mapping cone `Cone_k = F_{k−1} ⊕ F′_k`, `D(x, y) = (−d x, f x + d′ y)`.
fn cone_boundary(a: &Cx, b: &Cx, f: &[GroupRingMatrix], k: usize) -> Result<GroupRingMatrix, ChainError> {
    let m = &a.model;
    let top_left = a.d(k - 1).neg();
    let top_right = zeros(m, a.rank(k.wrapping_sub(2)), b.rank(k));
    let bottom_left = if k >= 1 && k - 1 < f.len() {
        f[k - 1].clone()
    } else {
        zeros(m, b.rank(k - 1), a.rank(k - 1))
    };
    let bottom_right = b.d(k);
    let top = top_left.hstack(&top_right)?;
    let bottom = bottom_left.hstack(&bottom_right)?;
    Ok(top.vstack(&bottom)?)
}

/// Solves for a contraction `s` of the cone of `f`; `None` when `f` is not
/// a quasi-isomorphism.
fn contract_cone(a: &Cx, b: &Cx, f: &[GroupRingMatrix]) -> Result<Option<Equivalence>, ChainError> {
    let m = &a.model;
    let n = a.top();
    let cone_rank = |k: usize| a.rank(k.wrapping_sub(1)) + b.rank(k);
    let boundaries: Vec<GroupRingMatrix> = (1..=n + 1)
        .map(|k| cone_boundary(a, b, f, k))
        .collect::<Result<_, _>>()?;
    let mut s: Vec<GroupRingMatrix> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let id = GroupRingMatrix::identity(m, cone_rank(k));
        let rhs = if k == 0 {
            id
        } else {
            id.sub(&s[k - 1].compose(&boundaries[k - 1])?)?
        };
        match solve_right(&boundaries[k], &rhs)? {
            Some(x) => s.push(x),
            None => return Ok(None),
        }
    }
    let last = GroupRingMatrix::identity(m, cone_rank(n + 1)).sub(&s[n].compose(&boundaries[n])?)?;
    if !last.is_zero() {
        return Ok(None);
    }
    let mut g = Vec::with_capacity(n + 1);
    let mut h = Vec::with_capacity(n);
    let mut k_hom = Vec::with_capacity(n);
    for (k, sk) in s.iter().enumerate() {
        let src_prev = a.rank(k.wrapping_sub(1));
        let rows_a: Vec<usize> = (0..a.rank(k)).collect();
        let rows_b: Vec<usize> = (a.rank(k)..a.rank(k) + b.rank(k + 1)).collect();
        let cols_a: Vec<usize> = (0..src_prev).collect();
        let cols_b: Vec<usize> = (src_prev..src_prev + b.rank(k)).collect();
        g.push(sk.submatrix(&rows_a, &cols_b));
        if k >= 1 {
            h.push(sk.submatrix(&rows_a, &cols_a));
        }
        if k < n {
            k_hom.push(sk.submatrix(&rows_b, &cols_b).neg());
        }
    }
    Ok(Some(Equivalence {
        f: f.to_vec(),
        g,
        h,
        k: k_hom,
    }))
}
