//! Root bases presented by Cartan matrices over a free span of simple roots.
//!
//! Since Π is a basis of V, the positivity functional of RB3 always exists and
//! is not stored. A basis realizes a Coxeter matrix when the rotation order
//! read off each off-diagonal product matches `m_st`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cartan::{coherent_sign, negate, order_from_product, unit_vector, Cartan, Order, Vector};
use crate::coxeter::{CoxeterMatrix, CoxeterSystem, Gen};
use crate::error::{Error, Result};
use crate::qfield::FieldElem;
use crate::root::Root;

/// How a basis was produced; informational only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisKind {
    Canonical,
    Gcm,
    Sampled { seed: u64, index: usize },
    Custom,
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKind::Canonical => f.write_str("canonical"),
            BasisKind::Gcm => f.write_str("gcm"),
            BasisKind::Sampled { seed, index } => write!(f, "sample:{seed}#{index}"),
            BasisKind::Custom => f.write_str("custom"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBasis {
    labels: Vec<String>,
    cartan: Cartan,
    kind: BasisKind,
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomFailure {
    /// `⟨α, α^∨⟩ ≠ 2`.
    Rb1 { index: Gen, value: FieldElem },
    /// Off-diagonal pair neither both zero nor both negative with an admissible product.
    Rb2 { i: Gen, j: Gen, a_ij: FieldElem, a_ji: FieldElem },
    /// Finite odd order with `A_ij ≠ A_ji`.
    NotReduced { i: Gen, j: Gen },
    /// Derived order differs from the Coxeter matrix entry.
    NotAssociated { i: Gen, j: Gen, expected: Order, found: Option<Order> },
    /// Rank or labels differ from the Coxeter matrix.
    LabelMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOrder {
    pub i: Gen,
    pub j: Gen,
    pub order: Option<Order>,
}

/// Outcome of checking the root-basis axioms, reducedness, and association.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
    pub orders: Vec<PairOrder>,
}

impl AxiomReport {
    pub fn rb1(&self) -> bool {
        !self.failures.iter().any(|f| matches!(f, AxiomFailure::Rb1 { .. }))
    }

    pub fn rb2(&self) -> bool {
        !self.failures.iter().any(|f| matches!(f, AxiomFailure::Rb2 { .. }))
    }

    /// Π is linearly independent by construction.
    pub fn rb3(&self) -> bool {
        true
    }

    pub fn reduced(&self) -> bool {
        !self.failures.iter().any(|f| matches!(f, AxiomFailure::NotReduced { .. }))
    }

    pub fn associated(&self) -> bool {
        !self
            .failures
            .iter()
            .any(|f| matches!(f, AxiomFailure::NotAssociated { .. } | AxiomFailure::LabelMismatch))
    }

    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl RootBasis {
    pub fn new(labels: Vec<String>, entries: Vec<Vec<FieldElem>>, kind: BasisKind) -> Result<Self> {
        let n = labels.len();
        if n == 0 || entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidBasis(format!("expected a {n}x{n} Cartan matrix")));
        }
        Ok(RootBasis {
            labels,
            cartan: Cartan::new(entries),
            kind,
        })
    }

    /// The basis of the canonical linear representation: `A_ts = -2cos(π/m_st)`,
    /// and `-2` for `m_st = ∞`.
    pub fn canonical(matrix: &CoxeterMatrix) -> Self {
        let sys = CoxeterSystem::new(matrix.clone());
        RootBasis {
            labels: matrix.labels().to_vec(),
            cartan: sys.cartan().clone(),
            kind: BasisKind::Canonical,
        }
    }

    /// `B(A)` for a generalized Cartan matrix, with `⟨α_j, α_i^∨⟩ = a_ij`.
    pub fn gcm(labels: Vec<String>, a: &[Vec<i64>]) -> Result<Self> {
        let n = labels.len();
        if a.len() != n || a.iter().any(|r| r.len() != n) {
            return Err(Error::NotGcm(format!("expected a {n}x{n} matrix")));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(Error::NotGcm(format!("diagonal entry a[{i}][{i}] = {}", a[i][i])));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if a[i][j] > 0 {
                    return Err(Error::NotGcm(format!("positive off-diagonal a[{i}][{j}]")));
                }
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return Err(Error::NotGcm(format!("a[{i}][{j}] and a[{j}][{i}] disagree on zero")));
                }
            }
        }
        // our storage is A[j][i] = ⟨α_j, α_i^∨⟩ = a_ij
        let entries = (0..n)
            .map(|j| (0..n).map(|i| FieldElem::from_int(a[i][j])).collect())
            .collect();
        RootBasis::new(labels, entries, BasisKind::Gcm)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn kind(&self) -> &BasisKind {
        &self.kind
    }

    pub fn cartan(&self) -> &Cartan {
        &self.cartan
    }

    /// `A_{ij} = ⟨α_i, α_j^∨⟩`.
    pub fn entry(&self, i: Gen, j: Gen) -> &FieldElem {
        self.cartan.entry(i, j)
    }

    /// `o(r_i r_j)` from the product `A_ij A_ji`, or `None` when the product is
    /// not admissible.
    pub fn order(&self, i: Gen, j: Gen) -> Option<Order> {
        order_from_product(&(self.entry(i, j) * self.entry(j, i)))
    }

    pub fn check_axioms(&self, matrix: &CoxeterMatrix) -> AxiomReport {
        let n = self.rank();
        let mut failures = Vec::new();
        let mut orders = Vec::new();
        let two = FieldElem::from_int(2);
        for i in 0..n {
            if *self.entry(i, i) != two {
                failures.push(AxiomFailure::Rb1 {
                    index: i,
                    value: self.entry(i, i).clone(),
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (self.entry(i, j), self.entry(j, i));
                let order = self.order(i, j);
                let rb2 = (a.is_zero() && b.is_zero())
                    || (a.is_negative() && b.is_negative() && order.is_some());
                if !rb2 {
                    failures.push(AxiomFailure::Rb2 {
                        i,
                        j,
                        a_ij: a.clone(),
                        a_ji: b.clone(),
                    });
                }
                if let Some(Order::Finite(k)) = order {
                    if k % 2 == 1 && a != b {
                        failures.push(AxiomFailure::NotReduced { i, j });
                    }
                }
                orders.push(PairOrder { i, j, order });
            }
        }
        if matrix.labels() != self.labels() {
            failures.push(AxiomFailure::LabelMismatch);
        } else {
            for po in &orders {
                let expected = matrix.m(po.i, po.j);
                if po.order != Some(expected) {
                    failures.push(AxiomFailure::NotAssociated {
                        i: po.i,
                        j: po.j,
                        expected,
                        found: po.order,
                    });
                }
            }
        }
        AxiomReport { failures, orders }
    }

    pub fn is_reduced_and_associated(&self, matrix: &CoxeterMatrix) -> bool {
        self.check_axioms(matrix).all_pass()
    }

    pub fn simple(&self, s: Gen) -> Vector {
        unit_vector(self.rank(), s)
    }

    /// Left action of the word `w` on `v`, letters applied right to left.
    pub fn act(&self, w: &[Gen], v: &[FieldElem]) -> Vector {
        let mut out = v.to_vec();
        for &s in w.iter().rev() {
            self.cartan.reflect(s, &mut out);
        }
        out
    }

    /// `φ(±w·α_s) = ±w(α_s)`.
    pub fn phi(&self, root: &Root) -> Vector {
        let w = root.witness();
        let v = self.act(w.word.word(), &self.simple(w.gen));
        if w.negated {
            negate(&v)
        } else {
            v
        }
    }

    /// Inverse of [`RootBasis::phi`]. Walks a positive vector down to a simple
    /// root through reflections with positive pairing, then checks the result.
    pub fn phi_inv(&self, sys: &CoxeterSystem, v: &[FieldElem]) -> Result<Root> {
        let not_root = || Error::NotARoot(format_vector(v));
        let sign = coherent_sign(v).ok_or_else(not_root)?;
        let mut x = if sign < 0 { negate(v) } else { v.to_vec() };
        let mut word = Vec::new();
        let gen = loop {
            if let Some(t) = unit_index(&x) {
                break t;
            }
            let s = (0..self.rank())
                .find(|&s| self.cartan.pairing(&x, s).is_positive())
                .ok_or_else(not_root)?;
            self.cartan.reflect(s, &mut x);
            if coherent_sign(&x) != Some(1) || word.len() > 4096 {
                return Err(not_root());
            }
            word.push(s);
        };
        let w = sys.reduce_word(&word);
        let root = sys.root(&w, gen, sign < 0);
        if self.phi(&root) != v {
            return Err(not_root());
        }
        Ok(root)
    }

    /// File form: `rank label…`, then one row per line with entries separated
    /// by commas. Row `i` lists `⟨α_i, α_j^∨⟩` for each `j`.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("{} {}\n", self.rank(), self.labels.join(" "));
        for row in self.cartan.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&cells.join(", "));
            out.push('\n');
        }
        out
    }

    /// Integer entries as a GCM `a_ij = ⟨α_j, α_i^∨⟩`, when all entries are integers.
    pub fn as_gcm(&self) -> Option<Vec<Vec<i64>>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let q = self.entry(j, i).as_rational()?;
                        q.is_integer().then(|| num_traits::ToPrimitive::to_i64(&q.to_integer()))?
                    })
                    .collect()
            })
            .collect()
    }
}

fn unit_index(v: &[FieldElem]) -> Option<usize> {
    let mut found = None;
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if found.is_some() || !x.is_one() {
            return None;
        }
        found = Some(i);
    }
    found
}

pub fn format_vector(v: &[FieldElem]) -> String {
    let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", cells.join(", "))
}

impl FromStr for RootBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty basis file".into()))?;
        let mut head = header.split_whitespace();
        let n: usize = head
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("first token must be the rank".into()))?;
        let labels: Vec<String> = head.map(str::to_string).collect();
        if labels.len() != n {
            return Err(Error::Parse(format!("rank {n} but {} labels", labels.len())));
        }
        let rows: Vec<Vec<FieldElem>> = lines
            .map(|l| l.split(',').map(|c| c.trim().parse()).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(format!("expected {n} rows of {n} entries")));
        }
        RootBasis::new(labels, rows, BasisKind::Custom)
    }
}

fn random_positive_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let p: i64 = rng.gen_range(1..=9);
    let q: i64 = rng.gen_range(1..=9);
    BigRational::new(p.into(), q.into())
}

/// Draws a reduced root basis associated with `matrix`.
///
/// Off-diagonal pairs are `(-x, -c/x)` with `c = 4cos²(π/m)` for even finite
/// `m`, `(-1, -1)` for `m = 3`, zero for `m = 2`, and `(-x, -y)` with
/// `xy ≥ 4` for `m = ∞`.
pub fn sample_basis(matrix: &CoxeterMatrix, rng: &mut ChaCha8Rng) -> Result<RootBasis> {
    let n = matrix.rank();
    let mut entries = vec![vec![FieldElem::zero(); n]; n];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = FieldElem::from_int(2);
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = match matrix.m(i, j) {
                Order::Finite(2) => (BigRational::zero(), BigRational::zero()),
                Order::Finite(3) => {
                    let one = BigRational::from_integer((-1).into());
                    (one.clone(), one)
                }
                Order::Finite(k @ (4 | 6)) => {
                    let c = BigRational::from_integer(if k == 4 { 2.into() } else { 3.into() });
                    let x = random_positive_rational(rng);
                    let y = &c / &x;
                    (-x, -y)
                }
                Order::Infinite => {
                    let x = random_positive_rational(rng);
                    let extra = if rng.gen_bool(0.25) {
                        BigRational::zero()
                    } else {
                        random_positive_rational(rng)
                    };
                    let y = (BigRational::from_integer(4.into()) + extra) / &x;
                    (-x, -y)
                }
                Order::Finite(k) => return Err(Error::UnsupportedLabel(k.to_string())),
            };
            entries[i][j] = FieldElem::from_rational(a);
            entries[j][i] = FieldElem::from_rational(b);
        }
    }
    RootBasis::new(matrix.labels().to_vec(), entries, BasisKind::Custom)
}

/// `count` bases drawn from a ChaCha8 stream seeded with `seed`.
pub fn sample_bases(matrix: &CoxeterMatrix, seed: u64, count: usize) -> Result<Vec<RootBasis>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|index| {
            let mut b = sample_basis(matrix, &mut rng)?;
            b.kind = BasisKind::Sampled { seed, index };
            Ok(b)
        })
        .collect()
}
