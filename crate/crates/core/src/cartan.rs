//! Cartan matrices over Q(√2, √3) and the reflection action they define.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::qfield::{FieldElem, Radical};

pub type Vector = Vec<FieldElem>;

/// Order of a product of two reflections, or an entry `m_st` of a Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(k) => Some(k),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

/// The values `4cos²(π/k)` that live in Q(√2, √3).
fn order_table() -> [(FieldElem, u32); 6] {
    let two = FieldElem::from_int(2);
    [
        (FieldElem::zero(), 2),
        (FieldElem::from_int(1), 3),
        (two.clone(), 4),
        (FieldElem::from_int(3), 6),
        (&two + &FieldElem::sqrt2(), 8),
        (&two + &FieldElem::sqrt3(), 12),
    ]
}

/// Decodes a Cartan product `A_{αβ} A_{βα}` (or `4B(α,β)²`) into a rotation order.
/// Returns `None` when the value is below 4 but matches no table entry.
pub fn order_from_product(q: &FieldElem) -> Option<Order> {
    if *q >= FieldElem::from_int(4) {
        return Some(Order::Infinite);
    }
    order_table()
        .into_iter()
        .find(|(v, _)| v == q)
        .map(|(_, k)| Order::Finite(k))
}

/// A square matrix `A` with `A[i][j] = ⟨α_i, α_j^∨⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cartan {
    entries: Vec<Vec<FieldElem>>,
}

impl Cartan {
    pub fn new(entries: Vec<Vec<FieldElem>>) -> Self {
        Cartan { entries }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElem {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<FieldElem>] {
        &self.entries
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(FieldElem::to_f64).collect())
            .collect()
    }

    /// `⟨v, α_s^∨⟩`.
    pub fn pairing(&self, v: &[FieldElem], s: usize) -> FieldElem {
        let mut acc = FieldElem::zero();
        for (j, vj) in v.iter().enumerate() {
            let a = &self.entries[j][s];
            if !vj.is_zero() && !a.is_zero() {
                acc += &(vj * a);
            }
        }
        acc
    }

    /// `v ↦ v - ⟨v, α_s^∨⟩ α_s`, in place. Only coordinate `s` changes.
    pub fn reflect(&self, s: usize, v: &mut [FieldElem]) {
        let p = self.pairing(v, s);
        if !p.is_zero() {
            v[s] -= &p;
        }
    }

    /// The symmetric rank-2 block for the supported finite labels and ∞.
    pub fn canonical_entry(m: Order) -> FieldElem {
        match m {
            Order::Finite(2) => FieldElem::zero(),
            Order::Finite(3) => FieldElem::from_int(-1),
            Order::Finite(4) => FieldElem::term(-1, 1, Radical::Sqrt2),
            Order::Finite(6) => FieldElem::term(-1, 1, Radical::Sqrt3),
            Order::Infinite => FieldElem::from_int(-2),
            Order::Finite(k) => panic!("unsupported Coxeter label {k}"),
        }
    }
}

pub fn unit_vector(rank: usize, i: usize) -> Vector {
    let mut v = vec![FieldElem::zero(); rank];
    v[i] = FieldElem::one();
    v
}

/// Sign of a vector known to be a root: every nonzero coordinate has the same
/// sign, so the first nonzero one decides.
pub fn root_sign(v: &[FieldElem]) -> i8 {
    v.iter().map(FieldElem::sign).find(|&s| s != 0).unwrap_or(0)
}

/// All coordinates `≥ 0` (resp. `≤ 0`), and not all zero.
pub fn coherent_sign(v: &[FieldElem]) -> Option<i8> {
    let signs: Vec<i8> = v.iter().map(FieldElem::sign).collect();
    if signs.iter().all(|&s| s >= 0) && signs.iter().any(|&s| s > 0) {
        Some(1)
    } else if signs.iter().all(|&s| s <= 0) && signs.iter().any(|&s| s < 0) {
        Some(-1)
    } else {
        None
    }
}

pub fn negate(v: &[FieldElem]) -> Vector {
    v.iter().map(|x| -x).collect()
}
