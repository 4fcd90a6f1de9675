//! Breadth-first enumeration of chambers by length, cached per system.
//!
//! Level `k` lists every element of length `k` in ShortLex order. Each chamber
//! keeps the exact matrix of its inverse plus a float shadow; half-space
//! membership `x ∈ α ⟺ x⁻¹(α) ∈ Φ₊` is decided from the shadow when the
//! float error bound allows it and exactly otherwise.

use std::collections::HashSet;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::cartan::{root_sign, Vector};
use crate::coxeter::{CoxeterSystem, Element, InvMatrix};
use crate::qfield::FieldElem;

#[derive(Debug)]
pub struct Chamber {
    pub element: Element,
    inv: InvMatrix,
    approx: Vec<Vec<f64>>,
}

impl Chamber {
    /// Whether this chamber lies in the half-space with canonical vector `key`.
    pub fn in_half_space(&self, key: &[FieldElem], key_approx: &[f64]) -> bool {
        let n = key.len();
        let mut best = (0.0f64, 0.0f64);
        for i in 0..n {
            let (mut val, mut mag) = (0.0f64, 0.0f64);
            for j in 0..n {
                let p = self.approx[j][i] * key_approx[j];
                val += p;
                mag += p.abs();
            }
            if val.abs() > best.0.abs() {
                best = (val, mag);
            }
        }
        let (val, mag) = best;
        if val.abs() > mag * 1e-9 + 1e-300 {
            return val > 0.0;
        }
        self.image_sign_exact(key) > 0
    }

    fn image_sign_exact(&self, key: &[FieldElem]) -> i8 {
        root_sign(&self.image_exact(key))
    }

    /// `x⁻¹(v)` for this chamber `x`.
    pub(crate) fn image_exact(&self, v: &[FieldElem]) -> Vector {
        let n = v.len();
        let mut image: Vector = vec![FieldElem::zero(); n];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (i, slot) in image.iter_mut().enumerate() {
                let c = &self.inv[j][i];
                if !c.is_zero() {
                    *slot += &(c * vj);
                }
            }
        }
        image
    }

    /// Float shadow of `x⁻¹(v)`: per coordinate, the value and the sum of the
    /// absolute values of its terms (a scale for rounding error).
    pub(crate) fn image_approx(&self, v: &[f64]) -> Vec<(f64, f64)> {
        let n = v.len();
        (0..n)
            .map(|i| {
                (0..n).fold((0.0, 0.0), |(val, mag), j| {
                    let p = self.approx[j][i] * v[j];
                    (val + p, mag + p.abs())
                })
            })
            .collect()
    }
}

type Level = Arc<Vec<Chamber>>;

#[derive(Debug, Default)]
pub(crate) struct ChamberCache {
    levels: RwLock<Vec<(Level, Arc<HashSet<InvMatrix>>)>>,
}

impl ChamberCache {
    fn ensure(&self, sys: &CoxeterSystem, radius: usize) {
        if self.levels.read().len() > radius {
            return;
        }
        let mut levels = self.levels.write();
        if levels.is_empty() {
            let inv = sys.inverse_matrix(&[]);
            let chamber = Chamber {
                element: Element::identity(),
                approx: approx_of(&inv),
                inv: inv.clone(),
            };
            levels.push((Arc::new(vec![chamber]), Arc::new(HashSet::from([inv]))));
        }
        while levels.len() <= radius {
            let k = levels.len();
            let (current, _) = &levels[k - 1];
            let previous_keys = if k >= 2 { Some(levels[k - 2].1.clone()) } else { None };
            let mut keys = HashSet::new();
            let mut next = Vec::new();
            for c in current.iter() {
                for s in sys.generators() {
                    let mut inv = c.inv.clone();
                    // (cs)⁻¹ = s c⁻¹
                    for col in inv.iter_mut() {
                        sys.cartan().reflect(s, col);
                    }
                    if previous_keys.as_ref().is_some_and(|p| p.contains(&inv)) || keys.contains(&inv) {
                        continue;
                    }
                    let mut word = c.element.word().to_vec();
                    word.push(s);
                    keys.insert(inv.clone());
                    next.push(Chamber {
                        element: Element::from_reduced(word),
                        approx: approx_of(&inv),
                        inv,
                    });
                }
            }
            levels.push((Arc::new(next), Arc::new(keys)));
        }
    }

    /// Levels `0..=radius`.
    pub(crate) fn levels(&self, sys: &CoxeterSystem, radius: usize) -> Vec<Level> {
        self.ensure(sys, radius);
        self.levels.read()[..=radius].iter().map(|(l, _)| l.clone()).collect()
    }
}

fn approx_of(inv: &InvMatrix) -> Vec<Vec<f64>> {
    inv.iter().map(|col| col.iter().map(FieldElem::to_f64).collect()).collect()
}

/// Read-only view of the chambers of length at most `radius`, in ShortLex order.
pub struct Ball {
    levels: Vec<Level>,
}

impl Ball {
    pub fn iter(&self) -> impl Iterator<Item = &Chamber> {
        self.levels.iter().flat_map(|l| l.iter())
    }

    pub fn level(&self, k: usize) -> &[Chamber] {
        &self.levels[k]
    }

    pub fn radius(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(|l| l.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl CoxeterSystem {
    /// All elements of length `≤ radius`, grouped by length, ShortLex within a level.
    pub fn ball(&self, radius: usize) -> Ball {
        Ball {
            levels: self.chambers.levels(self, radius),
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::cartan::Order;
    use crate::coxeter::{CoxeterMatrix, CoxeterSystem};

    #[test]
    fn dihedral_ball_sizes() {
        let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(Order::Finite(4)).unwrap());
        let ball = sys.ball(6);
        let sizes: Vec<usize> = (0..=6).map(|k| ball.level(k).len()).collect();
        assert_eq!(sizes, [1, 2, 2, 2, 1, 0, 0]);
    }

    #[test]
    fn universal_ball_sizes() {
        let sys = CoxeterSystem::new(CoxeterMatrix::universal3());
        let ball = sys.ball(5);
        let sizes: Vec<usize> = (0..=5).map(|k| ball.level(k).len()).collect();
        assert_eq!(sizes, [1, 3, 6, 12, 24, 48]);
    }

    #[test]
    fn ball_words_are_normal_forms() {
        let sys = CoxeterSystem::new(CoxeterMatrix::type444());
        for c in sys.ball(6).iter() {
            assert_eq!(sys.reduce_word(c.element.word()), c.element);
        }
    }
}
