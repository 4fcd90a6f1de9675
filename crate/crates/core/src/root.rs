//! Roots of a Coxeter system, as half-spaces keyed by their canonical vectors.
//!
//! A root `±w·α_s` is identified with the vector `±w(α_s)` in the canonical
//! representation. That representation is a reduced root basis, so the map
//! from half-spaces to vectors is a bijection and the vector is a faithful
//! key. Every root also carries a canonical witness expression obtained by
//! walking the vector down to a simple root.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::cartan::{negate, order_from_product, root_sign, unit_vector, Order, Vector};
use crate::coxeter::{CoxeterSystem, Element, Gen};
use crate::error::{Error, Result};
use crate::qfield::FieldElem;

/// `±w·α_s` with `w` in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub word: Element,
    pub gen: Gen,
    pub negated: bool,
}

#[derive(Clone, Debug)]
pub struct Root {
    key: Vector,
    approx: Vec<f64>,
    witness: Witness,
    reflection: OnceLock<Element>,
}

impl PartialEq for Root {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for Root {}

impl Hash for Root {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by depth, then witness word (ShortLex), generator, and sign. Canonical
/// witnesses are unique per root, so this is consistent with equality.
impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = &self.witness;
        let b = &other.witness;
        a.word
            .cmp(&b.word)
            .then(a.gen.cmp(&b.gen))
            .then(a.negated.cmp(&b.negated))
    }
}

impl Root {
    /// Coordinates in the canonical basis.
    pub fn key(&self) -> &[FieldElem] {
        &self.key
    }

    pub(crate) fn approx(&self) -> &[f64] {
        &self.approx
    }

    pub fn witness(&self) -> &Witness {
        &self.witness
    }

    /// Whether the root contains `1_W`; equivalently its key is nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.witness.negated
    }

    /// Minimal length of a chamber outside the positive root `±self`.
    pub fn depth(&self) -> usize {
        self.witness.word.len() + 1
    }

    pub fn is_simple(&self) -> bool {
        self.witness.word.is_identity() && !self.witness.negated
    }

    pub fn contains(&self, chamber: &crate::chambers::Chamber) -> bool {
        chamber.in_half_space(&self.key, &self.approx)
    }
}

impl std::ops::Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root {
            key: negate(&self.key),
            approx: self.approx.iter().map(|x| -x).collect(),
            witness: Witness {
                negated: !self.witness.negated,
                ..self.witness.clone()
            },
            reflection: self.reflection.clone(),
        }
    }
}

impl std::ops::Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

/// Which side of a root a chamber must lie on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Inside,
    Outside,
}

impl CoxeterSystem {
    /// The root `±w·α_s`.
    pub fn root(&self, w: &Element, s: Gen, negated: bool) -> Root {
        let mut key = self.act_vector(w.word(), &unit_vector(self.rank(), s));
        if negated {
            key = negate(&key);
        }
        self.root_from_key(key)
    }

    pub fn simple_root(&self, s: Gen) -> Root {
        self.root(&Element::identity(), s, false)
    }

    /// Builds a root from a vector that is known to be a root of the canonical
    /// representation.
    pub(crate) fn root_from_key(&self, key: Vector) -> Root {
        let negated = root_sign(&key) < 0;
        let mut v = if negated { negate(&key) } else { key.clone() };
        let mut word = Vec::new();
        // depth strictly drops along the walk, so it ends at a simple root
        let gen = loop {
            if let Some(t) = simple_index(&v) {
                break t;
            }
            let s = (0..self.rank())
                .find(|&s| self.cartan().pairing(&v, s).is_positive())
                .expect("positive non-simple root has a descent");
            self.cartan().reflect(s, &mut v);
            word.push(s);
            assert!(word.len() < 100_000, "root descent did not terminate");
        };
        let approx = key.iter().map(FieldElem::to_f64).collect();
        Root {
            key,
            approx,
            witness: Witness {
                word: self.reduce_word(&word),
                gen,
                negated,
            },
            reflection: OnceLock::new(),
        }
    }

    pub fn negate(&self, root: &Root) -> Root {
        -root
    }

    /// `w·α`.
    pub fn act_root(&self, w: &Element, root: &Root) -> Root {
        self.root_from_key(self.act_vector(w.word(), root.key()))
    }

    /// The reflection `r_α = w s w⁻¹` swapping `α` and `-α`.
    pub fn reflection(&self, root: &Root) -> Element {
        root.reflection
            .get_or_init(|| {
                let w = root.witness.word.word();
                let mut word = w.to_vec();
                word.push(root.witness.gen);
                word.extend(w.iter().rev());
                self.reduce_word(&word)
            })
            .clone()
    }

    /// `Φ_w`: positive roots not containing `w`, in gallery order.
    pub fn phi_w(&self, w: &Element) -> Vec<Root> {
        self.minimal_gallery(w).crossed
    }

    /// Value of the canonical form on the two root vectors.
    pub fn pairing(&self, a: &Root, b: &Root) -> FieldElem {
        self.form(a.key(), b.key())
    }

    /// `o(r_α r_β)`, read off from `4(α, β)²`.
    pub fn reflection_order(&self, a: &Root, b: &Root) -> Result<Order> {
        if a == b || a.key() == negate(b.key()).as_slice() {
            return Err(Error::SameWall(self.format_root(a), self.format_root(b)));
        }
        let c = self.pairing(a, b);
        let q = FieldElem::from_int(4) * c.square();
        order_from_product(&q).ok_or_else(|| Error::OrderAnomaly(q.to_string()))
    }

    /// Prenilpotency by the pairing criterion `(α, β) > -1`.
    pub fn is_prenilpotent(&self, a: &Root, b: &Root) -> bool {
        self.pairing(a, b) > FieldElem::from_int(-1)
    }

    /// The ShortLex-least chamber of length `≤ bound` on the requested side of
    /// each root.
    pub fn find_chamber(&self, a: &Root, b: &Root, sides: (Side, Side), bound: usize) -> Option<Element> {
        let want = |root: &Root, side: Side, c: &crate::chambers::Chamber| {
            root.contains(c) == (side == Side::Inside)
        };
        (0..=bound).find_map(|k| {
            self.ball(k)
                .level(k)
                .iter()
                .find(|c| want(a, sides.0, c) && want(b, sides.1, c))
                .map(|c| c.element.clone())
        })
    }

    /// The chamber nearest to `1_W` on the far side of the wall of `root`: for
    /// `±wα_s` this is `ws`.
    pub fn crossing_chamber(&self, root: &Root) -> Element {
        let w = &root.witness;
        let mut word = w.word.word().to_vec();
        word.push(w.gen);
        self.reduce_word(&word)
    }

    /// The unique chamber of minimal length in the region cut out by the two
    /// roots, or `None` if none is found.
    ///
    /// Regions are intersections of roots, hence convex, so the minimal chamber
    /// is the projection of `1_W` and every other chamber of the region reaches
    /// it by length-decreasing steps inside the region. The nearest chamber
    /// across either wall seeds the descent; BFS up to `bound` is the fallback.
    pub fn locate_chamber(&self, a: &Root, b: &Root, sides: (Side, Side), bound: usize) -> Option<Element> {
        let inside = |x: &Element| {
            self.chamber_in(x, a) == (sides.0 == Side::Inside) && self.chamber_in(x, b) == (sides.1 == Side::Inside)
        };
        let identity = Element::identity();
        if inside(&identity) {
            return Some(identity);
        }
        let seeds = [(a, sides.0), (b, sides.1)]
            .into_iter()
            .filter(|(r, side)| r.is_positive() != (*side == Side::Inside))
            .map(|(r, _)| self.crossing_chamber(r));
        let start = seeds
            .into_iter()
            .find(|x| inside(x))
            .or_else(|| self.find_chamber(a, b, sides, bound))?;
        let mut x = start;
        'descend: loop {
            let x_inv = self.inverse(&x);
            for s in self.descent_set(&x_inv) {
                let mut word = x.word().to_vec();
                word.push(s);
                let next = self.reduce_word(&word);
                if inside(&next) {
                    x = next;
                    continue 'descend;
                }
            }
            return Some(x);
        }
    }

    /// Whether chamber `w` lies in the half-space `root`.
    pub fn chamber_in(&self, w: &Element, root: &Root) -> bool {
        let inv = self.inverse(w);
        root_sign(&self.act_vector(inv.word(), root.key())) > 0
    }

    /// Root expression `[-] word : label`, e.g. `s t s : t` or `- e : r`.
    pub fn format_root(&self, root: &Root) -> String {
        let w = &root.witness;
        format!(
            "{}{} : {}",
            if w.negated { "- " } else { "" },
            self.format_element(&w.word),
            self.matrix().label(w.gen)
        )
    }

    pub fn parse_root(&self, text: &str) -> Result<Root> {
        let text = text.trim();
        let (negated, rest) = match text.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, text),
        };
        let (word, label) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("root expression {text:?} lacks ':'")))?;
        let word = self.parse_element(word)?;
        let s = self.matrix().gen(label.trim())?;
        Ok(self.root(&word, s, negated))
    }
}

fn simple_index(v: &[FieldElem]) -> Option<usize> {
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterMatrix;

    fn fe(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    #[test]
    fn simple_root_key() {
        let sys = CoxeterSystem::new(CoxeterMatrix::universal3());
        let a = sys.simple_root(1);
        assert_eq!(a.key(), unit_vector(3, 1).as_slice());
        assert!(a.is_positive());
        assert!(!(-&a).is_positive());
    }

    #[test]
    fn s_alpha_t_in_444() {
        let sys = CoxeterSystem::new(CoxeterMatrix::type444());
        let r = sys.parse_root("s : t").unwrap();
        assert_eq!(r.key(), &[FieldElem::zero(), fe("r2"), fe("1")]);
    }

    #[test]
    fn universal_alpha_zero_is_positive() {
        let sys = CoxeterSystem::new(CoxeterMatrix::universal3());
        let a0 = sys.parse_root("s : t").unwrap();
        assert_eq!(a0.key(), &[fe("0"), fe("2"), fe("1")]);
        assert!(a0.is_positive());
    }

    #[test]
    fn root_expression_round_trip() {
        let sys = CoxeterSystem::new(CoxeterMatrix::type444());
        for text in ["- e : r", "s t s : t", "r s t s t : r"] {
            let root = sys.parse_root(text).unwrap();
            let again = sys.parse_root(&sys.format_root(&root)).unwrap();
            assert_eq!(root, again);
        }
        assert_eq!(sys.format_root(&sys.parse_root("-e:r").unwrap()), "- e : r");
        assert!(sys.parse_root("s t").is_err());
        assert!(sys.parse_root("s : x").is_err());
    }

    #[test]
    fn dihedral_reexpression_gives_same_key() {
        // m = 3: s·α_t = t·α_s
        let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(Order::Finite(3)).unwrap());
        assert_eq!(sys.parse_root("s : t").unwrap(), sys.parse_root("t : s").unwrap());
    }

    #[test]
    fn orders() {
        let u = CoxeterSystem::new(CoxeterMatrix::universal3());
        let t = CoxeterSystem::new(CoxeterMatrix::type444());
        assert_eq!(t.reflection_order(&t.simple_root(1), &t.simple_root(2)).unwrap(), Order::Finite(4));
        assert_eq!(u.reflection_order(&u.simple_root(1), &u.simple_root(2)).unwrap(), Order::Infinite);
        let a = u.simple_root(0);
        assert!(matches!(u.reflection_order(&a, &-&a), Err(Error::SameWall(..))));
    }

    #[test]
    fn prenilpotency_examples() {
        let u = CoxeterSystem::new(CoxeterMatrix::universal3());
        let t = CoxeterSystem::new(CoxeterMatrix::type444());
        let a = u.simple_root(1);
        assert!(!u.is_prenilpotent(&a, &-&a));
        assert!(u.is_prenilpotent(&a, &a));
        assert!(!u.is_prenilpotent(&u.simple_root(1), &u.simple_root(2)));
        assert!(t.is_prenilpotent(&t.simple_root(1), &t.simple_root(2)));
    }

    #[test]
    fn find_chamber_examples() {
        let t = CoxeterSystem::new(CoxeterMatrix::type444());
        let (s, tt) = (t.simple_root(1), t.simple_root(2));
        let c = t.find_chamber(&s, &tt, (Side::Inside, Side::Inside), 12).unwrap();
        assert!(c.is_identity());
        let c = t.find_chamber(&s, &tt, (Side::Outside, Side::Outside), 12).unwrap();
        assert_eq!(t.format_element(&c), "s t s t");
        let u = CoxeterSystem::new(CoxeterMatrix::universal3());
        let none = u.find_chamber(&u.simple_root(1), &u.simple_root(2), (Side::Outside, Side::Outside), 8);
        assert!(none.is_none());
    }

    #[test]
    fn phi_w_examples() {
        let t = CoxeterSystem::new(CoxeterMatrix::type444());
        assert!(t.phi_w(&Element::identity()).is_empty());
        let w = t.parse_element("s t s t").unwrap();
        let got: Vec<Root> = t.phi_w(&w);
        let expect: Vec<Root> = ["e : s", "s : t", "s t : s", "s t s : t"]
            .iter()
            .map(|e| t.parse_root(e).unwrap())
            .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn reflection_of_simple_root() {
        let t = CoxeterSystem::new(CoxeterMatrix::type444());
        let r = t.reflection(&t.parse_root("s : t").unwrap());
        assert_eq!(t.format_element(&r), "s t s");
    }
}
