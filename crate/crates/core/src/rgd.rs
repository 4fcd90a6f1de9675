//! Commutation-relation tables of RGD systems over F₂, checks of linearity
//! against root bases, condition (nc), and non-linearity certificates.
//!
//! Over F₂ every root group has two elements, so a commutator `[U_α, U_β]` is
//! described by the set of roots whose factor is nontrivial.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::basis::RootBasis;
use crate::cartan::Order;
use crate::coxeter::{CoxeterMatrix, CoxeterSystem, Gen};
use crate::error::{Error, Result};
use crate::interval::{cone_membership, geometric_interval, require_basis, Bounds, ConeFailure, ConeVerdict};
use crate::root::{Root, Side};

/// Radius of the confirmatory search in nestedness checks.
pub const NESTING_SEARCH_RADIUS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Universal,
    Type444,
    Trivial,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Universal => "universal",
            Family::Type444 => "type444",
            Family::Trivial => "trivial",
        })
    }
}

/// `[U_α, U_β]` is the product of the root groups `U_γ`, `γ ∈ factors`.
#[derive(Clone, Debug)]
pub struct RelationEntry {
    /// Family parameter of the entry, when it belongs to an indexed family.
    pub n: Option<usize>,
    pub alpha: Root,
    pub beta: Root,
    pub factors: Vec<Root>,
}

#[derive(Clone, Debug)]
pub struct RelationTable {
    matrix: CoxeterMatrix,
    family: Family,
    k: BTreeSet<usize>,
    entries: Vec<RelationEntry>,
}

/// One serialized table row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub family: Family,
    pub n: Option<usize>,
    pub alpha: String,
    pub beta: String,
    pub factors: Vec<String>,
}

fn family_gens(sys: &CoxeterSystem) -> Result<[Gen; 3]> {
    let g = |l: &str| {
        sys.matrix()
            .gen(l)
            .map_err(|_| Error::InvalidFamily(format!("matrix has no generator labelled {l:?}")))
    };
    Ok([g("r")?, g("s")?, g("t")?])
}

fn repeat(word: &[Gen], n: usize) -> Vec<Gen> {
    word.iter().copied().cycle().take(word.len() * n).collect()
}

/// `α_n = (st)^n s α_t` in a system with generators labelled `r, s, t`.
pub fn alpha_n(sys: &CoxeterSystem, n: usize) -> Result<Root> {
    let [_, s, t] = family_gens(sys)?;
    let mut word = repeat(&[s, t], n);
    word.push(s);
    Ok(sys.root(&sys.reduce_word(&word), t, false))
}

/// `β_n = (rstst)^n α_r`.
pub fn beta_n(sys: &CoxeterSystem, n: usize) -> Result<Root> {
    let [r, s, t] = family_gens(sys)?;
    let word = repeat(&[r, s, t, s, t], n);
    Ok(sys.root(&sys.reduce_word(&word), r, false))
}

/// `γ = rststrs α_t` and `γ′ = rststrt α_s`.
pub fn gamma_pair(sys: &CoxeterSystem) -> Result<(Root, Root)> {
    let [r, s, t] = family_gens(sys)?;
    let gamma = sys.root(&sys.reduce_word(&[r, s, t, s, t, r, s]), t, false);
    let gamma_prime = sys.root(&sys.reduce_word(&[r, s, t, s, t, r, t]), s, false);
    Ok((gamma, gamma_prime))
}

impl RelationTable {
    /// A table from explicit entries; every key must be a prenilpotent pair
    /// of distinct roots.
    pub fn new(
        sys: &CoxeterSystem,
        family: Family,
        k: BTreeSet<usize>,
        entries: Vec<RelationEntry>,
    ) -> Result<Self> {
        for e in &entries {
            if e.alpha == e.beta || !sys.is_prenilpotent(&e.alpha, &e.beta) {
                return Err(Error::NotPrenilpotent(sys.format_root(&e.alpha), sys.format_root(&e.beta)));
            }
        }
        Ok(RelationTable {
            matrix: sys.matrix().clone(),
            family,
            k,
            entries,
        })
    }

    /// The table with the same keys as `other` and every commutator trivial.
    pub fn trivial_like(other: &RelationTable) -> Self {
        RelationTable {
            matrix: other.matrix.clone(),
            family: Family::Trivial,
            k: BTreeSet::new(),
            entries: other
                .entries
                .iter()
                .map(|e| RelationEntry {
                    factors: Vec::new(),
                    ..e.clone()
                })
                .collect(),
        }
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> &BTreeSet<usize> {
        &self.k
    }

    pub fn entries(&self) -> &[RelationEntry] {
        &self.entries
    }

    pub fn records(&self, sys: &CoxeterSystem) -> Vec<TableRecord> {
        self.entries
            .iter()
            .map(|e| TableRecord {
                family: self.family,
                n: e.n,
                alpha: sys.format_root(&e.alpha),
                beta: sys.format_root(&e.beta),
                factors: e.factors.iter().map(|g| sys.format_root(g)).collect(),
            })
            .collect()
    }
}

/// The universal family: `[U_{-α_r}, U_{α_n}] = U_{α_s}` for `n ∈ K` and
/// trivial for the other `n ≤ n_max`.
pub fn blueprint_universal(sys: &CoxeterSystem, k: &BTreeSet<usize>, n_max: usize) -> Result<RelationTable> {
    if !sys.matrix().is_universal() || sys.rank() < 3 {
        return Err(Error::InvalidFamily("the universal family needs a universal matrix of rank ≥ 3".into()));
    }
    if let Some(bad) = k.iter().find(|&&n| n > n_max) {
        return Err(Error::InvalidFamily(format!("K contains {bad} > n_max = {n_max}")));
    }
    let [r, s, _] = family_gens(sys)?;
    let minus_r = -sys.simple_root(r);
    let alpha_s = sys.simple_root(s);
    let entries = (0..=n_max)
        .map(|n| {
            Ok(RelationEntry {
                n: Some(n),
                alpha: minus_r.clone(),
                beta: alpha_n(sys, n)?,
                factors: if k.contains(&n) { vec![alpha_s.clone()] } else { Vec::new() },
            })
        })
        .collect::<Result<_>>()?;
    RelationTable::new(sys, Family::Universal, k.clone(), entries)
}

/// The (4,4,4) family: `[U_{α_r}, U_{β_n}] = U_γ U_{γ′}` for `n ∈ K` and
/// trivial for the other `1 ≤ n ≤ n_max`. Requires `K ⊆ {3, …, n_max}`.
pub fn blueprint_444(sys: &CoxeterSystem, k: &BTreeSet<usize>, n_max: usize) -> Result<RelationTable> {
    if !sys.matrix().is_444() {
        return Err(Error::InvalidFamily("the (4,4,4) family needs a (4,4,4) matrix".into()));
    }
    if let Some(bad) = k.iter().find(|&&n| n < 3 || n > n_max) {
        return Err(Error::InvalidFamily(format!("K must lie in {{3, …, {n_max}}}, found {bad}")));
    }
    let [r, _, _] = family_gens(sys)?;
    let alpha_r = sys.simple_root(r);
    let (gamma, gamma_prime) = gamma_pair(sys)?;
    let entries = (1..=n_max)
        .map(|n| {
            Ok(RelationEntry {
                n: Some(n),
                alpha: alpha_r.clone(),
                beta: beta_n(sys, n)?,
                factors: if k.contains(&n) {
                    vec![gamma.clone(), gamma_prime.clone()]
                } else {
                    Vec::new()
                },
            })
        })
        .collect::<Result<_>>()?;
    RelationTable::new(sys, Family::Type444, k.clone(), entries)
}

/// A nontrivial factor outside the geometric open interval of its pair.
#[derive(Clone, Debug)]
pub struct Rgd1Violation {
    pub alpha: Root,
    pub beta: Root,
    pub factor: Root,
}

/// Factors that are not members of `(α, β)` as computed by
/// [`geometric_interval`] at `bounds`.
pub fn check_rgd1(sys: &CoxeterSystem, table: &RelationTable, bounds: &Bounds) -> Result<Vec<Rgd1Violation>> {
    let mut out = Vec::new();
    for e in table.entries.iter().filter(|e| !e.factors.is_empty()) {
        let interval = geometric_interval(sys, &e.alpha, &e.beta, bounds)?;
        for g in &e.factors {
            if *g == e.alpha || *g == e.beta || !interval.contains(g) {
                out.push(Rgd1Violation {
                    alpha: e.alpha.clone(),
                    beta: e.beta.clone(),
                    factor: g.clone(),
                });
            }
        }
    }
    Ok(out)
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum LinearityVerdict {
    /// A nontrivial factor outside the algebraic interval: the RGD system is
    /// not linear with respect to the basis.
    NotLinear {
        alpha: Root,
        beta: Root,
        witness: Root,
        reason: ConeFailure,
    },
    /// Every nontrivial factor lies in its cone; this does not prove linearity.
    NoWitnessFound,
}

impl LinearityVerdict {
    pub fn is_not_linear(&self) -> bool {
        matches!(self, LinearityVerdict::NotLinear { .. })
    }
}

/// The first `(pair, γ)` in table order with `γ` a nontrivial factor outside
/// the cone of the pair under `basis`.
pub fn check_not_linear(sys: &CoxeterSystem, table: &RelationTable, basis: &RootBasis) -> Result<LinearityVerdict> {
    require_basis(sys, basis)?;
    for e in &table.entries {
        for g in &e.factors {
            if let ConeVerdict::Outside(reason) = cone_membership(sys, basis, g, &e.alpha, &e.beta)? {
                return Ok(LinearityVerdict::NotLinear {
                    alpha: e.alpha.clone(),
                    beta: e.beta.clone(),
                    witness: g.clone(),
                    reason,
                });
            }
        }
    }
    Ok(LinearityVerdict::NoWitnessFound)
}

/// Condition (nc) on the window of entries whose roots both have depth
/// `≤ length`: every pair with `o(r_α r_β) = ∞` commutes.
pub fn check_nc(sys: &CoxeterSystem, table: &RelationTable, length: usize) -> Result<bool> {
    for e in &table.entries {
        if e.alpha.depth() > length || e.beta.depth() > length || e.factors.is_empty() {
            continue;
        }
        if sys.reflection_order(&e.alpha, &e.beta)? == Order::Infinite {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A claim that a witness root avoids `[α, β]_lin^B` for every reduced basis
/// `B` associated with the system. Roots are given as root expressions and
/// generators by label, mirroring the certificate file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum NonLinCertificate {
    /// `φ(β)` lies in the span of the simple roots of the parabolic `J`, and the
    /// pair's first root is `-α_r` with `r ∉ J`, so no cone combination can
    /// produce the simple witness `α_j`, `j ∈ J`.
    SupportExclusion {
        parabolic: Vec<String>,
        excluded: String,
        alpha: String,
        beta: String,
        witness: String,
    },
    /// `α` simple, `β` positive, `α ⊊ γ`, `α ⊊ γ′` and `o(r_γ r_γ′) < ∞`: the
    /// two roots cannot both lie in the cone of `α` and `β`.
    PairExclusion {
        alpha: String,
        beta: String,
        gamma: String,
        gamma_prime: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    ParabolicNotProper,
    ExcludedInParabolic,
    AlphaNotMinusExcluded,
    WitnessNotSimpleInParabolic,
    ReflectionOutsideParabolic,
    WitnessOnPairWall,
    PairNotPrenilpotent,
    FactorsEqual,
    FactorEqualsAlpha,
    AlphaNotSimple,
    BetaNotPositive,
    FactorsShareWall,
    InfiniteOrder,
    NotNested { factor: String },
    NestingContradicted { factor: String, chamber: String },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::ParabolicNotProper => f.write_str("parabolic J is not a proper subset of S"),
            Rejection::ExcludedInParabolic => f.write_str("excluded generator lies in J"),
            Rejection::AlphaNotMinusExcluded => f.write_str("first root of the pair is not -α_r"),
            Rejection::WitnessNotSimpleInParabolic => f.write_str("witness is not a simple root of J"),
            Rejection::ReflectionOutsideParabolic => f.write_str("reflection of β is not in the parabolic subgroup of J"),
            Rejection::WitnessOnPairWall => f.write_str("β equals ± the witness"),
            Rejection::PairNotPrenilpotent => f.write_str("pair is not prenilpotent"),
            Rejection::FactorsEqual => f.write_str("γ equals γ′"),
            Rejection::FactorEqualsAlpha => f.write_str("γ or γ′ equals α"),
            Rejection::AlphaNotSimple => f.write_str("α is not a simple root"),
            Rejection::BetaNotPositive => f.write_str("β is not positive"),
            Rejection::FactorsShareWall => f.write_str("γ and γ′ share a wall"),
            Rejection::InfiniteOrder => f.write_str("o(r_γ r_γ′) is infinite"),
            Rejection::NotNested { factor } => write!(f, "α ⊊ {factor} could not be established"),
            Rejection::NestingContradicted { factor, chamber } => {
                write!(f, "chamber {chamber} lies in α but not in {factor}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateVerdict {
    /// Accepted; `bounded_checks` lists the parts confirmed only by a bounded
    /// search.
    Accepted { bounded_checks: Vec<String> },
    Rejected(Rejection),
}

impl CertificateVerdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, CertificateVerdict::Accepted { .. })
    }
}

fn parse_cert_root(sys: &CoxeterSystem, text: &str) -> Result<Root> {
    sys.parse_root(text)
        .map_err(|e| Error::MalformedCertificate(format!("root {text:?}: {e}")))
}

fn parse_cert_gen(sys: &CoxeterSystem, label: &str) -> Result<Gen> {
    sys.matrix()
        .gen(label)
        .map_err(|e| Error::MalformedCertificate(format!("generator {label:?}: {e}")))
}

/// `α ⊊ γ`, established by: `(α, γ) ≥ 1`, so the roots are nested one way or
/// the other; a chamber in `γ \ α`, which rules out `γ ⊆ α`; and a bounded
/// search finding no chamber in `α \ γ` (confirmatory).
fn check_nested(sys: &CoxeterSystem, alpha: &Root, gamma: &Root, depth: usize) -> Result<(), Rejection> {
    let name = sys.format_root(gamma);
    if sys.pairing(alpha, gamma) < crate::qfield::FieldElem::one() {
        return Err(Rejection::NotNested { factor: name });
    }
    if sys
        .locate_chamber(gamma, alpha, (Side::Inside, Side::Outside), depth)
        .is_none()
    {
        return Err(Rejection::NotNested { factor: name });
    }
    if let Some(ch) = sys.find_chamber(alpha, gamma, (Side::Inside, Side::Outside), NESTING_SEARCH_RADIUS) {
        return Err(Rejection::NestingContradicted {
            factor: name,
            chamber: sys.format_element(&ch),
        });
    }
    Ok(())
}

fn verify_support(
    sys: &CoxeterSystem,
    parabolic: &[String],
    excluded: &str,
    alpha: &str,
    beta: &str,
    witness: &str,
) -> Result<CertificateVerdict> {
    let j: BTreeSet<Gen> = parabolic.iter().map(|l| parse_cert_gen(sys, l)).collect::<Result<_>>()?;
    let r = parse_cert_gen(sys, excluded)?;
    let alpha = parse_cert_root(sys, alpha)?;
    let beta = parse_cert_root(sys, beta)?;
    let witness = parse_cert_root(sys, witness)?;
    let reject = |why| Ok(CertificateVerdict::Rejected(why));
    if j.len() >= sys.rank() {
        return reject(Rejection::ParabolicNotProper);
    }
    if j.contains(&r) {
        return reject(Rejection::ExcludedInParabolic);
    }
    if alpha != -sys.simple_root(r) {
        return reject(Rejection::AlphaNotMinusExcluded);
    }
    if !witness.is_simple() || !j.contains(&witness.witness().gen) {
        return reject(Rejection::WitnessNotSimpleInParabolic);
    }
    if !sys.reflection(&beta).word().iter().all(|s| j.contains(s)) {
        return reject(Rejection::ReflectionOutsideParabolic);
    }
    if beta == witness || beta == -&witness {
        return reject(Rejection::WitnessOnPairWall);
    }
    if !sys.is_prenilpotent(&alpha, &beta) {
        return reject(Rejection::PairNotPrenilpotent);
    }
    Ok(CertificateVerdict::Accepted {
        bounded_checks: Vec::new(),
    })
}

fn verify_pair(
    sys: &CoxeterSystem,
    alpha: &str,
    beta: &str,
    gamma: &str,
    gamma_prime: &str,
    depth: usize,
) -> Result<CertificateVerdict> {
    let alpha = parse_cert_root(sys, alpha)?;
    let beta = parse_cert_root(sys, beta)?;
    let gamma = parse_cert_root(sys, gamma)?;
    let gamma_prime = parse_cert_root(sys, gamma_prime)?;
    let reject = |why| Ok(CertificateVerdict::Rejected(why));
    if gamma == gamma_prime {
        return reject(Rejection::FactorsEqual);
    }
    if alpha == gamma || alpha == gamma_prime {
        return reject(Rejection::FactorEqualsAlpha);
    }
    if !alpha.is_simple() {
        return reject(Rejection::AlphaNotSimple);
    }
    if !beta.is_positive() {
        return reject(Rejection::BetaNotPositive);
    }
    match sys.reflection_order(&gamma, &gamma_prime) {
        Ok(Order::Finite(_)) => {}
        Ok(Order::Infinite) => return reject(Rejection::InfiniteOrder),
        Err(Error::SameWall(..)) => return reject(Rejection::FactorsShareWall),
        Err(e) => return Err(e),
    }
    let mut bounded_checks = Vec::new();
    for g in [&gamma, &gamma_prime] {
        if let Err(why) = check_nested(sys, &alpha, g, depth) {
            return reject(why);
        }
        bounded_checks.push(format!(
            "no chamber in α \\ {} within length {NESTING_SEARCH_RADIUS}",
            sys.format_root(g)
        ));
    }
    Ok(CertificateVerdict::Accepted { bounded_checks })
}

/// Checks the structural conditions under which the certificate's
/// conclusion holds for every reduced associated basis. `depth` bounds the
/// search for a chamber separating nested roots.
pub fn verify_certificate(sys: &CoxeterSystem, cert: &NonLinCertificate, depth: usize) -> Result<CertificateVerdict> {
    match cert {
        NonLinCertificate::SupportExclusion {
            parabolic,
            excluded,
            alpha,
            beta,
            witness,
        } => verify_support(sys, parabolic, excluded, alpha, beta, witness),
        NonLinCertificate::PairExclusion {
            alpha,
            beta,
            gamma,
            gamma_prime,
        } => verify_pair(sys, alpha, beta, gamma, gamma_prime, depth),
    }
}

/// The support-exclusion certificate for `α_s ∉ [-α_r, α_n]_lin`.
pub fn universal_certificate(sys: &CoxeterSystem, n: usize) -> Result<NonLinCertificate> {
    let [r, s, t] = family_gens(sys)?;
    let label = |g: Gen| sys.matrix().label(g).to_string();
    Ok(NonLinCertificate::SupportExclusion {
        parabolic: vec![label(s), label(t)],
        excluded: label(r),
        alpha: sys.format_root(&-sys.simple_root(r)),
        beta: sys.format_root(&alpha_n(sys, n)?),
        witness: sys.format_root(&sys.simple_root(s)),
    })
}

/// The pair-exclusion certificate for `{γ, γ′} ⊄ [α_r, β_n]_lin`.
pub fn type444_certificate(sys: &CoxeterSystem, n: usize) -> Result<NonLinCertificate> {
    let [r, _, _] = family_gens(sys)?;
    let (gamma, gamma_prime) = gamma_pair(sys)?;
    Ok(NonLinCertificate::PairExclusion {
        alpha: sys.format_root(&sys.simple_root(r)),
        beta: sys.format_root(&beta_n(sys, n)?),
        gamma: sys.format_root(&gamma),
        gamma_prime: sys.format_root(&gamma_prime),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::DEFAULT_DEPTH;

    fn universal() -> CoxeterSystem {
        CoxeterSystem::new(CoxeterMatrix::universal3())
    }

    fn sys444() -> CoxeterSystem {
        CoxeterSystem::new(CoxeterMatrix::type444())
    }

    fn k(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn family_roots() {
        let u = universal();
        assert_eq!(u.format_root(&alpha_n(&u, 0).unwrap()), "s : t");
        assert_eq!(u.format_root(&alpha_n(&u, 2).unwrap()), "s t s t s : t");
        let f = sys444();
        assert_eq!(f.format_root(&beta_n(&f, 1).unwrap()), "r s t s t : r");
        let (g, gp) = gamma_pair(&f).unwrap();
        assert_eq!(f.format_root(&g), "r s t s t r s : t");
        assert_eq!(f.format_root(&gp), "r s t s t r t : s");
    }

    #[test]
    fn universal_table_shape() {
        let sys = universal();
        let t = blueprint_universal(&sys, &k(&[0]), 2).unwrap();
        let recs = t.records(&sys);
        assert_eq!(recs.len(), 3);
        assert_eq!(recs[0].alpha, "- e : r");
        assert_eq!(recs[0].beta, "s : t");
        assert_eq!(recs[0].factors, vec!["e : s".to_string()]);
        assert!(recs[1].factors.is_empty() && recs[2].factors.is_empty());
        let both = blueprint_universal(&sys, &k(&[0, 1]), 2).unwrap();
        assert_eq!(both.entries().iter().filter(|e| !e.factors.is_empty()).count(), 2);
        assert!(blueprint_universal(&sys, &k(&[3]), 2).is_err());
        assert!(blueprint_universal(&sys444(), &k(&[0]), 2).is_err());
    }

    #[test]
    fn table_444_shape() {
        let sys = sys444();
        let t = blueprint_444(&sys, &k(&[3]), 4).unwrap();
        let e3 = &t.entries()[2];
        assert_eq!(e3.n, Some(3));
        assert_eq!(e3.factors.len(), 2);
        assert!(t.entries()[3].factors.is_empty());
        assert!(matches!(blueprint_444(&sys, &k(&[2]), 4), Err(Error::InvalidFamily(_))));
        assert!(blueprint_444(&sys, &BTreeSet::new(), 4)
            .unwrap()
            .entries()
            .iter()
            .all(|e| e.factors.is_empty()));
    }

    #[test]
    fn verdicts_and_nc() {
        let sys = universal();
        let basis = RootBasis::canonical(sys.matrix());
        let t = blueprint_universal(&sys, &k(&[0]), 2).unwrap();
        match check_not_linear(&sys, &t, &basis).unwrap() {
            LinearityVerdict::NotLinear { witness, beta, .. } => {
                assert_eq!(witness, sys.simple_root(1));
                assert_eq!(beta, alpha_n(&sys, 0).unwrap());
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(!check_nc(&sys, &t, 16).unwrap());
        let trivial = RelationTable::trivial_like(&t);
        assert!(!check_not_linear(&sys, &trivial, &basis).unwrap().is_not_linear());
        assert!(check_nc(&sys, &trivial, 16).unwrap());
    }

    #[test]
    fn rgd1_coherence_universal() {
        let sys = universal();
        let t = blueprint_universal(&sys, &k(&[0, 1, 2]), 2).unwrap();
        assert!(check_rgd1(&sys, &t, &Bounds::default()).unwrap().is_empty());
    }

    #[test]
    fn certificates_accept() {
        let u = universal();
        for n in 0..=3 {
            let c = universal_certificate(&u, n).unwrap();
            assert!(verify_certificate(&u, &c, DEFAULT_DEPTH).unwrap().is_accepted());
        }
        let f = sys444();
        let c = type444_certificate(&f, 3).unwrap();
        match verify_certificate(&f, &c, DEFAULT_DEPTH).unwrap() {
            CertificateVerdict::Accepted { bounded_checks } => assert_eq!(bounded_checks.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn certificate_rejections() {
        let f = sys444();
        let NonLinCertificate::PairExclusion { alpha, beta, gamma, .. } = type444_certificate(&f, 3).unwrap() else {
            unreachable!()
        };
        let same = NonLinCertificate::PairExclusion {
            alpha,
            beta,
            gamma: gamma.clone(),
            gamma_prime: gamma,
        };
        assert_eq!(
            verify_certificate(&f, &same, DEFAULT_DEPTH).unwrap(),
            CertificateVerdict::Rejected(Rejection::FactorsEqual)
        );
        let garbage = NonLinCertificate::PairExclusion {
            alpha: "x : q".into(),
            beta: "e : r".into(),
            gamma: "e : s".into(),
            gamma_prime: "e : t".into(),
        };
        assert!(matches!(
            verify_certificate(&f, &garbage, DEFAULT_DEPTH),
            Err(Error::MalformedCertificate(_))
        ));
    }

    #[test]
    fn certificate_serde_round_trip() {
        let u = universal();
        let c = universal_certificate(&u, 1).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert!(text.contains("\"variant\":\"SupportExclusion\""));
        let back: NonLinCertificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }
}
