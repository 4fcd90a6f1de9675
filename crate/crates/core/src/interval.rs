//! Geometric intervals `[α, β]`, algebraic intervals `[α, β]_lin^B`, and a
//! scanner for pairs where the algebraic interval is strictly smaller.
//!
//! A geometric interval is computed in a normalized frame: translate the pair
//! by `u⁻¹`, where `u` is the minimal chamber in `α ∩ β`, so both roots
//! are positive. If `c` is the minimal chamber in `(-α) ∩ (-β)`, every
//! member of the interval is a positive root not containing `c`, so `Φ_c` is a
//! finite candidate set. A candidate `γ` survives when no chamber is found in
//! `(α ∩ β) \ γ` or in `γ ∩ (-α) ∩ (-β)`.
//!
//! For pairs inside a rank-2 residue the search runs over the residue alone,
//! where a finite window of chambers decides membership exactly.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::basis::RootBasis;
use crate::cartan::Order;
use crate::chambers::Chamber;
use crate::coxeter::{CoxeterSystem, Element, Gallery, Gen};
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::qfield::FieldElem;
use crate::root::{Root, Side};

pub const DEFAULT_RADIUS: usize = 8;
pub const DEFAULT_DEPTH: usize = 12;

/// Search limits: `radius` for counterexample search, `depth` for locating the
/// normalizing chambers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub radius: usize,
    pub depth: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            radius: DEFAULT_RADIUS,
            depth: DEFAULT_DEPTH,
        }
    }
}

impl Bounds {
    pub fn with_radius(radius: usize) -> Self {
        Bounds {
            radius,
            ..Bounds::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MemberStatus {
    /// Membership is decided, not just unrefuted.
    Exact,
    /// No counterexample chamber within the given radius of the normalized frame.
    Verified { radius: usize },
}

#[derive(Clone, Debug)]
pub struct Member {
    pub root: Root,
    pub status: MemberStatus,
}

#[derive(Clone, Debug)]
pub struct IntervalResult {
    pub alpha: Root,
    pub beta: Root,
    /// Sorted by root order; always contains both endpoints.
    pub members: Vec<Member>,
    /// A chamber lying in both `α` and `β`.
    pub positive_chamber: Element,
    /// A chamber lying in neither `α` nor `β`.
    pub negative_chamber: Element,
}

impl IntervalResult {
    pub fn roots(&self) -> impl Iterator<Item = &Root> {
        self.members.iter().map(|m| &m.root)
    }

    pub fn root_set(&self) -> BTreeSet<Root> {
        self.roots().cloned().collect()
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.roots().any(|r| r == root)
    }

    /// Members other than the endpoints.
    pub fn open_members(&self) -> impl Iterator<Item = &Root> {
        self.roots().filter(|r| **r != self.alpha && **r != self.beta)
    }

    pub fn is_exact(&self) -> bool {
        self.members.iter().all(|m| m.status == MemberStatus::Exact)
    }

    fn new(alpha: &Root, beta: &Root, roots: Vec<Root>, status: MemberStatus, pos: Element, neg: Element) -> Self {
        let set: BTreeSet<Root> = roots.into_iter().collect();
        IntervalResult {
            alpha: alpha.clone(),
            beta: beta.clone(),
            members: set.into_iter().map(|root| Member { root, status }).collect(),
            positive_chamber: pos,
            negative_chamber: neg,
        }
    }
}

fn require_prenilpotent(sys: &CoxeterSystem, a: &Root, b: &Root) -> Result<()> {
    if sys.is_prenilpotent(a, b) {
        Ok(())
    } else {
        Err(Error::NotPrenilpotent(sys.format_root(a), sys.format_root(b)))
    }
}

/// The normalized frame of a pair: `u` in `α ∩ β`, the translated roots
/// `a = u⁻¹α`, `b = u⁻¹β`, and `c` outside both translated roots.
struct Frame {
    u: Element,
    c: Element,
    a: Root,
    b: Root,
}

fn frame(sys: &CoxeterSystem, alpha: &Root, beta: &Root, depth: usize) -> Result<Frame> {
    let not_found = Error::ChamberNotFound { bound: depth };
    let u = sys
        .locate_chamber(alpha, beta, (Side::Inside, Side::Inside), depth)
        .ok_or(not_found)?;
    let u_inv = sys.inverse(&u);
    let a = sys.act_root(&u_inv, alpha);
    let b = sys.act_root(&u_inv, beta);
    let c = sys
        .locate_chamber(&a, &b, (Side::Outside, Side::Outside), depth)
        .ok_or(Error::ChamberNotFound { bound: depth })?;
    Ok(Frame { u, c, a, b })
}

fn single(sys: &CoxeterSystem, alpha: &Root, depth: usize) -> Result<IntervalResult> {
    let pos = sys
        .locate_chamber(alpha, alpha, (Side::Inside, Side::Inside), depth)
        .ok_or(Error::ChamberNotFound { bound: depth })?;
    let neg = sys
        .locate_chamber(alpha, alpha, (Side::Outside, Side::Outside), depth)
        .ok_or(Error::ChamberNotFound { bound: depth })?;
    Ok(IntervalResult::new(
        alpha,
        alpha,
        vec![alpha.clone()],
        MemberStatus::Exact,
        pos,
        neg,
    ))
}

/// Candidates of the frame that survive the counterexample search over the
/// chambers of length `≤ radius`, in the normalized frame.
fn search_members(sys: &CoxeterSystem, f: &Frame, radius: usize) -> Vec<Root> {
    let ball = sys.ball(radius);
    let mut both_in: Vec<&Chamber> = Vec::new();
    let mut both_out: Vec<&Chamber> = Vec::new();
    for ch in ball.iter() {
        match (f.a.contains(ch), f.b.contains(ch)) {
            (true, true) => both_in.push(ch),
            (false, false) => both_out.push(ch),
            _ => {}
        }
    }
    sys.phi_w(&f.c)
        .into_iter()
        .filter(|g| both_in.iter().all(|ch| g.contains(ch)) && both_out.iter().all(|ch| !g.contains(ch)))
        .collect()
}

/// A chamber `x` of length `≤ radius` and a pair `J` of generators with
/// `x⁻¹α, x⁻¹β ∈ Φ_J`, i.e. the pair lies in the residue `x W_J`.
fn find_residue(sys: &CoxeterSystem, alpha: &Root, beta: &Root, radius: usize) -> Option<(Element, [Gen; 2])> {
    if sys.rank() == 2 {
        return Some((Element::identity(), [0, 1]));
    }
    let support = |img: &[FieldElem]| -> Vec<Gen> { (0..img.len()).filter(|&i| !img[i].is_zero()).collect() };
    let maybe_nonzero = |(v, m): (f64, f64)| v.abs() > m * 1e-9 + 1e-300;
    let ball = sys.ball(radius);
    for ch in ball.iter() {
        let ia = ch.image_approx(alpha.approx());
        let ib = ch.image_approx(beta.approx());
        if (0..ia.len()).filter(|&i| maybe_nonzero(ia[i]) || maybe_nonzero(ib[i])).count() > 2 {
            continue;
        }
        let mut j: Vec<Gen> = support(&ch.image_exact(alpha.key()));
        j.extend(support(&ch.image_exact(beta.key())));
        j.sort_unstable();
        j.dedup();
        if j.len() == 2 {
            return Some((ch.element.clone(), [j[0], j[1]]));
        }
    }
    None
}

/// Elements of the standard parabolic `W_J`, `|J| = 2`, of length `≤ max_len`,
/// in ShortLex order.
fn dihedral_elements(sys: &CoxeterSystem, j: [Gen; 2], max_len: usize) -> Vec<Element> {
    let mut out = BTreeSet::new();
    for k in 0..=max_len {
        for start in 0..2 {
            let word: Vec<Gen> = (0..k).map(|i| j[(start + i) % 2]).collect();
            let w = sys.reduce_word(&word);
            if w.len() <= max_len {
                out.insert(w);
            }
        }
    }
    out.into_iter().collect()
}

/// Exact interval of a pair lying in the residue `x W_J`, or `None` if the
/// normalizing chambers leave `W_J`.
fn residue_interval(
    sys: &CoxeterSystem,
    x: &Element,
    j: [Gen; 2],
    alpha: &Root,
    beta: &Root,
    depth: usize,
) -> Result<Option<IntervalResult>> {
    let x_inv = sys.inverse(x);
    let a0 = sys.act_root(&x_inv, alpha);
    let b0 = sys.act_root(&x_inv, beta);
    let in_parabolic = |w: &Element| w.word().iter().all(|s| j.contains(s));
    let f = frame(sys, &a0, &b0, depth)?;
    if !in_parabolic(&f.u) || !in_parabolic(&f.c) {
        return Ok(None);
    }
    // In a finite dihedral group the window is the whole group. In the
    // infinite one every candidate wall lies between 1 and c, so chambers up
    // to one step beyond c meet every region a counterexample could occupy.
    let window = match sys.matrix().m(j[0], j[1]) {
        Order::Finite(m) => m as usize,
        Order::Infinite => f.c.len() + 1,
    };
    let sites: Vec<(Element, bool, bool)> = dihedral_elements(sys, j, window)
        .into_iter()
        .map(|w| {
            let (ia, ib) = (sys.chamber_in(&w, &f.a), sys.chamber_in(&w, &f.b));
            (w, ia, ib)
        })
        .filter(|&(_, ia, ib)| ia == ib)
        .collect();
    let xu = sys.mul(x, &f.u);
    let members = sys
        .phi_w(&f.c)
        .into_iter()
        .filter(|g| sites.iter().all(|(w, ia, _)| sys.chamber_in(w, g) == *ia))
        .map(|g| sys.act_root(&xu, &g))
        .collect();
    let neg = sys.mul(&xu, &f.c);
    Ok(Some(IntervalResult::new(alpha, beta, members, MemberStatus::Exact, xu, neg)))
}

/// `[α, β]` by bounded counterexample search only; members are reported as
/// verified at `bounds.radius` even when the pair lies in a rank-2 residue.
pub fn geometric_interval_search(
    sys: &CoxeterSystem,
    alpha: &Root,
    beta: &Root,
    bounds: &Bounds,
) -> Result<IntervalResult> {
    require_prenilpotent(sys, alpha, beta)?;
    if alpha == beta {
        return single(sys, alpha, bounds.depth);
    }
    let f = frame(sys, alpha, beta, bounds.depth)?;
    let members = search_members(sys, &f, bounds.radius)
        .into_iter()
        .map(|g| sys.act_root(&f.u, &g))
        .collect();
    let neg = sys.mul(&f.u, &f.c);
    Ok(IntervalResult::new(
        alpha,
        beta,
        members,
        MemberStatus::Verified { radius: bounds.radius },
        f.u,
        neg,
    ))
}

/// `[α, β]`: exact for pairs found to lie in a rank-2 residue (within
/// `bounds.radius`), otherwise verified by bounded search.
pub fn geometric_interval(sys: &CoxeterSystem, alpha: &Root, beta: &Root, bounds: &Bounds) -> Result<IntervalResult> {
    require_prenilpotent(sys, alpha, beta)?;
    if alpha == beta {
        return single(sys, alpha, bounds.depth);
    }
    if let Some((x, j)) = find_residue(sys, alpha, beta, bounds.radius) {
        if let Some(res) = residue_interval(sys, &x, j, alpha, beta, bounds.depth)? {
            return Ok(res);
        }
    }
    geometric_interval_search(sys, alpha, beta, bounds)
}

/// `{α_i, …, α_j}` for a gallery in a rank-2 residue, with 1-based `i ≤ j`.
pub fn rank2_interval(sys: &CoxeterSystem, gallery: &Gallery, i: usize, j: usize) -> Result<Vec<Root>> {
    let len = gallery.len();
    if i == 0 || i > j || j > len {
        return Err(Error::IndexOutOfRange { i, j, len });
    }
    let letters: BTreeSet<Gen> = gallery.type_word.iter().copied().collect();
    if letters.len() > 2 {
        return Err(Error::NotRankTwo(sys.format_word(&gallery.type_word)));
    }
    Ok(gallery.crossed[i - 1..j].to_vec())
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeFailure {
    /// `φ(γ)` is not in the span of `φ(α)` and `φ(β)`; the coordinate where
    /// the unique candidate solution fails.
    Inconsistent { coordinate: Gen },
    /// `φ(γ) = aφ(α) + bφ(β)` with a negative coefficient.
    NegativeCoefficient { a: FieldElem, b: FieldElem },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeVerdict {
    Inside { a: FieldElem, b: FieldElem },
    Outside(ConeFailure),
}

impl ConeVerdict {
    pub fn is_inside(&self) -> bool {
        matches!(self, ConeVerdict::Inside { .. })
    }
}

/// Solves `g = a·x + b·y` for linearly independent `x, y`; `None` if they are
/// dependent.
pub fn solve_cone(g: &[FieldElem], x: &[FieldElem], y: &[FieldElem]) -> Option<ConeVerdict> {
    let n = g.len();
    let (i, j, det) = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, &x[i] * &y[j] - &x[j] * &y[i]))
        .find(|(_, _, d)| !d.is_zero())?;
    let det_inv = det.inv().ok()?;
    let a = (&g[i] * &y[j] - &g[j] * &y[i]) * &det_inv;
    let b = (&x[i] * &g[j] - &x[j] * &g[i]) * &det_inv;
    if let Some(k) = (0..n).find(|&k| &a * &x[k] + &b * &y[k] != g[k]) {
        return Some(ConeVerdict::Outside(ConeFailure::Inconsistent { coordinate: k }));
    }
    if a.is_negative() || b.is_negative() {
        return Some(ConeVerdict::Outside(ConeFailure::NegativeCoefficient { a, b }));
    }
    Some(ConeVerdict::Inside { a, b })
}

/// Whether `φ(γ) ∈ R≥0 φ(α) + R≥0 φ(β)` under `basis`.
pub fn cone_membership(
    sys: &CoxeterSystem,
    basis: &RootBasis,
    gamma: &Root,
    alpha: &Root,
    beta: &Root,
) -> Result<ConeVerdict> {
    let degenerate = || Error::DegeneratePair(sys.format_root(alpha), sys.format_root(beta));
    if alpha == beta || *alpha == -beta {
        return Err(degenerate());
    }
    solve_cone(&basis.phi(gamma), &basis.phi(alpha), &basis.phi(beta)).ok_or_else(degenerate)
}

/// Fails unless `basis` is reduced and associated with the system's matrix.
pub fn require_basis(sys: &CoxeterSystem, basis: &RootBasis) -> Result<()> {
    let report = basis.check_axioms(sys.matrix());
    if report.all_pass() {
        Ok(())
    } else {
        Err(Error::InvalidBasis(format!(
            "basis {} is not reduced and associated: {:?}",
            basis.kind(),
            report.failures
        )))
    }
}

/// `[α, β]_lin^B`, exact: the candidates `u·Φ_c` contain `[α, β]`, which
/// contains the algebraic interval, and each cone test is exact.
pub fn algebraic_interval(
    sys: &CoxeterSystem,
    basis: &RootBasis,
    alpha: &Root,
    beta: &Root,
    bounds: &Bounds,
) -> Result<IntervalResult> {
    require_basis(sys, basis)?;
    require_prenilpotent(sys, alpha, beta)?;
    if alpha == beta {
        return single(sys, alpha, bounds.depth);
    }
    let f = frame(sys, alpha, beta, bounds.depth)?;
    let mut members = Vec::new();
    for g in sys.phi_w(&f.c) {
        let g = sys.act_root(&f.u, &g);
        if cone_membership(sys, basis, &g, alpha, beta)?.is_inside() {
            members.push(g);
        }
    }
    let neg = sys.mul(&f.u, &f.c);
    Ok(IntervalResult::new(alpha, beta, members, MemberStatus::Exact, f.u, neg))
}

/// `⋃_{ℓ(w) ≤ length} Φ_w ∪ -Φ_w`, sorted.
pub fn scan_roots(sys: &CoxeterSystem, length: usize) -> Vec<Root> {
    let mut roots = BTreeSet::new();
    for ch in sys.ball(length).iter() {
        for r in sys.phi_w(&ch.element) {
            roots.insert(-&r);
            roots.insert(r);
        }
    }
    roots.into_iter().collect()
}

/// Unordered prenilpotent pairs of distinct roots, `α < β`, in order.
pub fn prenilpotent_pairs(sys: &CoxeterSystem, roots: &[Root]) -> Vec<(Root, Root)> {
    let mut pairs = Vec::new();
    for (i, a) in roots.iter().enumerate() {
        for b in &roots[i + 1..] {
            if sys.is_prenilpotent(a, b) {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    pairs
}

#[derive(Clone, Debug)]
pub struct Divergence {
    pub geometric: IntervalResult,
    /// Geometric members outside the cone, with the reason for each.
    pub missing: Vec<(Root, ConeFailure)>,
}

impl Divergence {
    pub fn alpha(&self) -> &Root {
        &self.geometric.alpha
    }

    pub fn beta(&self) -> &Root {
        &self.geometric.beta
    }
}

#[derive(Clone, Debug)]
pub struct SkippedPair {
    pub alpha: Root,
    pub beta: Root,
    pub reason: String,
}

#[derive(Clone, Debug, Default)]
pub struct ScanReport {
    pub pairs: usize,
    pub divergences: Vec<Divergence>,
    pub skipped: Vec<SkippedPair>,
}

/// Members of `[α, β]` (verified at `bounds.radius`) outside the cone of
/// `φ(α), φ(β)`, for every prenilpotent pair from [`scan_roots`].
pub fn divergence_scan(
    sys: &CoxeterSystem,
    basis: &RootBasis,
    length: usize,
    bounds: &Bounds,
    exec: Execution,
) -> Result<ScanReport> {
    require_basis(sys, basis)?;
    let roots = scan_roots(sys, length);
    let pairs = prenilpotent_pairs(sys, &roots);
    let outcomes = exec.map(&pairs, |(a, b)| -> Result<Option<Divergence>> {
        let geometric = geometric_interval(sys, a, b, bounds)?;
        let mut missing = Vec::new();
        for g in geometric.roots() {
            if let ConeVerdict::Outside(why) = cone_membership(sys, basis, g, a, b)? {
                missing.push((g.clone(), why));
            }
        }
        Ok((!missing.is_empty()).then_some(Divergence { geometric, missing }))
    });
    let mut report = ScanReport {
        pairs: pairs.len(),
        ..ScanReport::default()
    };
    for ((a, b), outcome) in pairs.into_iter().zip(outcomes) {
        match outcome {
            Ok(Some(d)) => report.divergences.push(d),
            Ok(None) => {}
            Err(e) => report.skipped.push(SkippedPair {
                alpha: a,
                beta: b,
                reason: e.to_string(),
            }),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterMatrix;

    fn universal3() -> CoxeterSystem {
        CoxeterSystem::new(CoxeterMatrix::universal3())
    }

    fn set(sys: &CoxeterSystem, exprs: &[&str]) -> BTreeSet<Root> {
        exprs.iter().map(|e| sys.parse_root(e).unwrap()).collect()
    }

    #[test]
    fn singleton_interval() {
        let sys = universal3();
        let a = sys.parse_root("s t : r").unwrap();
        let res = geometric_interval(&sys, &a, &a, &Bounds::default()).unwrap();
        assert_eq!(res.root_set(), BTreeSet::from([a]));
        assert!(res.is_exact());
    }

    #[test]
    fn rank2_gallery_formula() {
        let sys = CoxeterSystem::new(CoxeterMatrix::affine_a1());
        let w = sys.parse_element("s t s").unwrap();
        let g = sys.minimal_gallery(&w);
        let got: BTreeSet<Root> = rank2_interval(&sys, &g, 1, 3).unwrap().into_iter().collect();
        assert_eq!(got, set(&sys, &["e : s", "s : t", "s t : s"]));
        assert_eq!(rank2_interval(&sys, &g, 2, 2).unwrap().len(), 1);
        assert!(matches!(rank2_interval(&sys, &g, 2, 4), Err(Error::IndexOutOfRange { .. })));
        assert!(rank2_interval(&sys, &g, 0, 1).is_err());
    }

    #[test]
    fn rank2_interval_rejects_rank3_gallery() {
        let sys = universal3();
        let g = sys.minimal_gallery(&sys.parse_element("r s t").unwrap());
        assert!(matches!(rank2_interval(&sys, &g, 1, 3), Err(Error::NotRankTwo(_))));
    }

    #[test]
    fn dihedral_longest_gallery() {
        let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(Order::Finite(4)).unwrap());
        let g = sys.minimal_gallery(&sys.parse_element("s t s t").unwrap());
        let roots = rank2_interval(&sys, &g, 1, 4).unwrap();
        let res = geometric_interval_search(&sys, &roots[0], &roots[3], &Bounds::default()).unwrap();
        assert_eq!(res.root_set(), roots.into_iter().collect());
    }

    #[test]
    fn minus_r_alpha_zero_contains_alpha_s() {
        let sys = universal3();
        let a = sys.parse_root("- e : r").unwrap();
        let b = sys.parse_root("s : t").unwrap();
        let alpha_s = sys.simple_root(1);
        let res = geometric_interval(&sys, &a, &b, &Bounds::default()).unwrap();
        assert!(res.contains(&alpha_s));
        assert!(res.contains(&a) && res.contains(&b));
    }

    #[test]
    fn non_prenilpotent_rejected() {
        let sys = universal3();
        let a = sys.simple_root(0);
        let b = sys.simple_root(1);
        let err = geometric_interval(&sys, &a, &b, &Bounds::default()).unwrap_err();
        assert!(err.is_precondition());
    }

    #[test]
    fn cone_examples() {
        let m2 = CoxeterMatrix::affine_a1();
        let sys2 = CoxeterSystem::new(m2.clone());
        let b2 = RootBasis::canonical(&m2);
        let a_s = sys2.simple_root(0);
        let sts = sys2.parse_root("s t : s").unwrap();
        let st = sys2.parse_root("s : t").unwrap();
        assert_eq!(
            cone_membership(&sys2, &b2, &a_s, &a_s, &sts).unwrap(),
            ConeVerdict::Inside {
                a: FieldElem::one(),
                b: FieldElem::zero()
            }
        );
        assert_eq!(
            cone_membership(&sys2, &b2, &st, &a_s, &sts).unwrap(),
            ConeVerdict::Inside {
                a: FieldElem::from_frac(1, 2),
                b: FieldElem::from_frac(1, 2)
            }
        );
        assert!(cone_membership(&sys2, &b2, &st, &a_s, &-&a_s).is_err());

        let m3 = CoxeterMatrix::universal3();
        let sys3 = CoxeterSystem::new(m3.clone());
        let b3 = RootBasis::canonical(&m3);
        let verdict = cone_membership(
            &sys3,
            &b3,
            &sys3.simple_root(1),
            &sys3.parse_root("- e : r").unwrap(),
            &sys3.parse_root("s : t").unwrap(),
        )
        .unwrap();
        assert!(matches!(verdict, ConeVerdict::Outside(ConeFailure::Inconsistent { .. })));
    }

    #[test]
    fn algebraic_excludes_alpha_s() {
        let m = CoxeterMatrix::universal3();
        let sys = CoxeterSystem::new(m.clone());
        let basis = RootBasis::canonical(&m);
        let a = sys.parse_root("- e : r").unwrap();
        let b = sys.parse_root("s : t").unwrap();
        let lin = algebraic_interval(&sys, &basis, &a, &b, &Bounds::default()).unwrap();
        let geo = geometric_interval(&sys, &a, &b, &Bounds::default()).unwrap();
        assert!(!lin.contains(&sys.simple_root(1)));
        assert!(lin.root_set().is_subset(&geo.root_set()));
    }

    #[test]
    fn residue_pairs_are_exact() {
        let sys = CoxeterSystem::new(CoxeterMatrix::type444());
        let a = sys.parse_root("r : s").unwrap();
        let b = sys.parse_root("r s : t").unwrap();
        let res = geometric_interval(&sys, &a, &b, &Bounds::default()).unwrap();
        assert!(res.is_exact());
        let search = geometric_interval_search(&sys, &a, &b, &Bounds::default()).unwrap();
        assert_eq!(res.root_set(), search.root_set());
    }

    #[test]
    fn rank2_scan_is_empty() {
        let m = CoxeterMatrix::affine_a1();
        let sys = CoxeterSystem::new(m.clone());
        let basis = RootBasis::canonical(&m);
        let report = divergence_scan(&sys, &basis, 5, &Bounds::default(), Execution::Sequential).unwrap();
        assert!(report.pairs > 0);
        assert!(report.divergences.is_empty());
        assert!(report.skipped.is_empty());
    }
}
