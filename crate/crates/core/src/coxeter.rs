//! Coxeter matrices, group elements in ShortLex normal form, and minimal
//! galleries.
//!
//! Elements are handled through the canonical linear representation: the
//! left descents of `w` are the generators `s` for which `w⁻¹(α_s)` is a
//! negative root.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::str::FromStr;

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::cartan::{root_sign, unit_vector, Cartan, Order, Vector};
use crate::chambers::ChamberCache;
use crate::error::{Error, Result};
use crate::qfield::FieldElem;
use crate::root::Root;

/// Index of a generator in its Coxeter matrix.
pub type Gen = usize;

const SUPPORTED: [u32; 4] = [2, 3, 4, 6];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterMatrix {
    labels: Vec<String>,
    m: Vec<Vec<Order>>,
}

impl CoxeterMatrix {
    pub fn new(labels: Vec<String>, m: Vec<Vec<Order>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("rank must be positive".into()));
        }
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidMatrix(format!("expected a {n}x{n} matrix")));
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label == "e" || label.contains([':', '-']) || label.contains(char::is_whitespace) {
                return Err(Error::InvalidMatrix(format!("bad label {label:?}")));
            }
            if labels[..i].contains(label) {
                return Err(Error::InvalidMatrix(format!("duplicate label {label:?}")));
            }
        }
        for i in 0..n {
            if m[i][i] != Order::Finite(2) && m[i][i] != Order::Finite(1) {
                return Err(Error::InvalidMatrix(format!("diagonal entry m[{i}][{i}] = {}", m[i][i])));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if m[i][j] != m[j][i] {
                    return Err(Error::InvalidMatrix(format!("not symmetric at ({i}, {j})")));
                }
                if let Order::Finite(k) = m[i][j] {
                    if !SUPPORTED.contains(&k) {
                        return Err(Error::UnsupportedLabel(k.to_string()));
                    }
                }
            }
        }
        // normalize a diagonal written as 1 (the order of ss)
        let mut m = m;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Order::Finite(2);
        }
        Ok(CoxeterMatrix { labels, m })
    }

    /// Builds a matrix with the same label on every off-diagonal entry.
    pub fn uniform(labels: &[&str], m: Order) -> Result<Self> {
        let n = labels.len();
        let mat = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Order::Finite(2) } else { m }).collect())
            .collect();
        Self::new(labels.iter().map(|s| s.to_string()).collect(), mat)
    }

    pub fn universal(labels: &[&str]) -> Result<Self> {
        Self::uniform(labels, Order::Infinite)
    }

    /// Rank three, generators `r, s, t`, all `m_st = ∞`.
    pub fn universal3() -> Self {
        Self::universal(&["r", "s", "t"]).expect("valid")
    }

    /// Rank three, generators `r, s, t`, all `m_st = 4`.
    pub fn type444() -> Self {
        Self::uniform(&["r", "s", "t"], Order::Finite(4)).expect("valid")
    }

    pub fn dihedral(m: Order) -> Result<Self> {
        Self::uniform(&["s", "t"], m)
    }

    /// The affine Weyl group of type Ã₁, i.e. the infinite dihedral group.
    pub fn affine_a1() -> Self {
        Self::dihedral(Order::Infinite).expect("valid")
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, s: Gen) -> &str {
        &self.labels[s]
    }

    pub fn m(&self, s: Gen, t: Gen) -> Order {
        self.m[s][t]
    }

    pub fn gen(&self, label: &str) -> Result<Gen> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    fn off_diagonal(&self) -> impl Iterator<Item = Order> + '_ {
        let n = self.rank();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| self.m[i][j]))
    }

    pub fn is_universal(&self) -> bool {
        self.off_diagonal().all(|m| m == Order::Infinite)
    }

    pub fn is_444(&self) -> bool {
        self.rank() == 3 && self.off_diagonal().all(|m| m == Order::Finite(4))
    }

    /// File form: `rank label…` on the first line, then the strict upper
    /// triangle of `m` row by row, with `inf` for ∞.
    pub fn to_file_string(&self) -> String {
        let n = self.rank();
        let mut out = format!("{n} {}\n", self.labels.join(" "));
        for i in 0..n {
            let row: Vec<String> = (i + 1..n).map(|j| self.m[i][j].to_string()).collect();
            if !row.is_empty() {
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        out
    }
}

fn parse_order(tok: &str) -> Result<Order> {
    match tok {
        "inf" | "∞" | "infinity" => Ok(Order::Infinite),
        _ => tok
            .parse::<u32>()
            .map(Order::Finite)
            .map_err(|_| Error::Parse(format!("bad matrix entry {tok:?}"))),
    }
}

impl FromStr for CoxeterMatrix {
    type Err = Error;

    /// Accepts the strict upper triangle, or the upper triangle including the
    /// diagonal.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let mut head = header.split_whitespace();
        let n: usize = head
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("first token must be the rank".into()))?;
        let labels: Vec<String> = head.map(str::to_string).collect();
        if labels.len() != n {
            return Err(Error::Parse(format!("rank {n} but {} labels", labels.len())));
        }
        let toks: Vec<Order> = lines
            .flat_map(str::split_whitespace)
            .map(parse_order)
            .collect::<Result<_>>()?;
        let strict = n * (n - 1) / 2;
        let with_diag = n * (n + 1) / 2;
        let mut m = vec![vec![Order::Finite(2); n]; n];
        let mut it = toks.iter();
        if toks.len() == strict {
            for i in 0..n {
                for j in i + 1..n {
                    let v = *it.next().expect("counted");
                    m[i][j] = v;
                    m[j][i] = v;
                }
            }
        } else if toks.len() == with_diag {
            for i in 0..n {
                for j in i..n {
                    let v = *it.next().expect("counted");
                    m[i][j] = v;
                    m[j][i] = v;
                }
            }
        } else {
            return Err(Error::Parse(format!(
                "expected {strict} upper-triangle entries, found {}",
                toks.len()
            )));
        }
        CoxeterMatrix::new(labels, m)
    }
}

/// A group element, stored as its ShortLex-least reduced word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Element {
    word: Vec<Gen>,
}

impl Element {
    pub fn identity() -> Self {
        Element::default()
    }

    /// Wraps a word the caller knows to be ShortLex-reduced.
    pub(crate) fn from_reduced(word: Vec<Gen>) -> Self {
        Element { word }
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Same as [`Element::is_identity`].
    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Set of generators occurring in the reduced word.
    pub fn support(&self) -> Vec<Gen> {
        let mut s = self.word.clone();
        s.sort_unstable();
        s.dedup();
        s
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// ShortLex: by length, then lexicographically by generator index.
impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

/// A minimal gallery from `1_W` with the roots it crosses.
#[derive(Clone, Debug)]
pub struct Gallery {
    pub type_word: Vec<Gen>,
    pub chambers: Vec<Element>,
    pub crossed: Vec<Root>,
}

impl Gallery {
    pub fn len(&self) -> usize {
        self.type_word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.type_word.is_empty()
    }
}

/// Columns are `w⁻¹(α_j)`; this is the matrix of `w⁻¹` in the simple-root basis.
pub(crate) type InvMatrix = Vec<Vector>;

const NORMAL_FORM_CACHE_LIMIT: usize = 1 << 18;

/// A Coxeter matrix together with its canonical linear representation and
/// shared read-mostly caches.
#[derive(Debug)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    cartan: Cartan,
    normal_forms: RwLock<HashMap<Vec<Gen>, Element>>,
    pub(crate) chambers: ChamberCache,
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        let n = matrix.rank();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            FieldElem::from_int(2)
                        } else {
                            Cartan::canonical_entry(matrix.m(i, j))
                        }
                    })
                    .collect()
            })
            .collect();
        let cartan = Cartan::new(entries);
        CoxeterSystem {
            matrix,
            cartan,
            normal_forms: RwLock::new(HashMap::new()),
            chambers: ChamberCache::default(),
        }
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn generators(&self) -> std::ops::Range<Gen> {
        0..self.rank()
    }

    /// Cartan matrix of the canonical representation, `A[s][t] = 2(α_s, α_t)`.
    pub fn cartan(&self) -> &Cartan {
        &self.cartan
    }

    /// The canonical symmetric bilinear form `(u, v)`.
    pub fn form(&self, u: &[FieldElem], v: &[FieldElem]) -> FieldElem {
        let half = FieldElem::from_frac(1, 2);
        let mut acc = FieldElem::zero();
        for (s, us) in u.iter().enumerate() {
            if us.is_zero() {
                continue;
            }
            acc += &(us * &self.cartan.pairing(v, s));
        }
        acc * half
    }

    pub fn parse_word(&self, text: &str) -> Result<Vec<Gen>> {
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.is_empty() || toks == ["e"] {
            return Ok(Vec::new());
        }
        let single_char = self.matrix.labels().iter().all(|l| l.chars().count() == 1);
        let mut word = Vec::new();
        for tok in toks {
            match self.matrix.gen(tok) {
                Ok(g) => word.push(g),
                Err(_) if single_char => {
                    for ch in tok.chars() {
                        let g = self
                            .matrix
                            .gen(&ch.to_string())
                            .map_err(|_| Error::UnknownLabel(tok.to_string()))?;
                        word.push(g);
                    }
                }
                Err(e) => return Err(e),
            }
        }
        Ok(word)
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        Ok(self.reduce_word(&self.parse_word(text)?))
    }

    pub fn format_word(&self, word: &[Gen]) -> String {
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|&s| self.matrix.label(s)).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn format_element(&self, w: &Element) -> String {
        self.format_word(w.word())
    }

    /// Right-multiplies `w⁻¹` by a generator: columns `j` pick up `-A[j][s]·col_s`.
    pub(crate) fn inv_mul_gen(&self, n: &mut InvMatrix, s: Gen) {
        let col_s = n[s].clone();
        for (j, col) in n.iter_mut().enumerate() {
            let a = self.cartan.entry(j, s);
            if a.is_zero() {
                continue;
            }
            for (x, y) in col.iter_mut().zip(&col_s) {
                if !y.is_zero() {
                    *x -= &(a * y);
                }
            }
        }
    }

    /// Matrix of `w⁻¹` for the word `w`.
    pub(crate) fn inverse_matrix(&self, word: &[Gen]) -> InvMatrix {
        let n = self.rank();
        let mut m: InvMatrix = (0..n).map(|j| unit_vector(n, j)).collect();
        // w⁻¹ = s_k ⋯ s_1, built by right multiplications from the left end
        for &s in word.iter().rev() {
            self.inv_mul_gen(&mut m, s);
        }
        m
    }

    /// ShortLex normal form: repeatedly strip the least left descent.
    pub fn reduce_word(&self, word: &[Gen]) -> Element {
        if let Some(hit) = self.normal_forms.read().get(word) {
            return hit.clone();
        }
        let mut inv = self.inverse_matrix(word);
        let mut out = Vec::with_capacity(word.len());
        while let Some(s) = (0..self.rank()).find(|&s| root_sign(&inv[s]) < 0) {
            out.push(s);
            self.inv_mul_gen(&mut inv, s);
        }
        let elem = Element { word: out };
        let mut cache = self.normal_forms.write();
        if cache.len() >= NORMAL_FORM_CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(word.to_vec(), elem.clone());
        elem
    }

    pub fn element(&self, word: &[Gen]) -> Element {
        self.reduce_word(word)
    }

    pub fn length(&self, w: &Element) -> usize {
        w.len()
    }

    /// Left descents `{s : ℓ(sw) < ℓ(w)}`.
    pub fn descent_set(&self, w: &Element) -> Vec<Gen> {
        let inv = self.inverse_matrix(w.word());
        (0..self.rank()).filter(|&s| root_sign(&inv[s]) < 0).collect()
    }

    pub fn mul(&self, u: &Element, v: &Element) -> Element {
        let mut word = u.word.clone();
        word.extend_from_slice(&v.word);
        self.reduce_word(&word)
    }

    pub fn inverse(&self, w: &Element) -> Element {
        let word: Vec<Gen> = w.word.iter().rev().copied().collect();
        self.reduce_word(&word)
    }

    pub fn generator(&self, s: Gen) -> Element {
        Element { word: vec![s] }
    }

    /// Left action of `w` on a vector in the canonical representation.
    pub fn act_vector(&self, w: &[Gen], v: &[FieldElem]) -> Vector {
        let mut out = v.to_vec();
        for &s in w.iter().rev() {
            self.cartan.reflect(s, &mut out);
        }
        out
    }

    /// The gallery of type equal to `w`'s normal form, with crossed roots
    /// `α_i = s_1⋯s_{i-1} α_{s_i}`.
    pub fn minimal_gallery(&self, w: &Element) -> Gallery {
        let word = w.word().to_vec();
        let mut chambers = vec![Element::identity()];
        let mut crossed = Vec::with_capacity(word.len());
        for i in 0..word.len() {
            let prefix = Element::from_reduced(word[..i].to_vec());
            crossed.push(self.root(&prefix, word[i], false));
            chambers.push(self.reduce_word(&word[..=i]));
        }
        Gallery {
            type_word: word,
            chambers,
            crossed,
        }
    }
}
