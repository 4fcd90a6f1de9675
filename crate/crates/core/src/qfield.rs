//! Exact arithmetic in the real field Q(√2, √3).
//!
//! Every value is stored as `a + b√2 + c√3 + d√6` with rational `a, b, c, d`.
//! Since `{1, √2, √3, √6}` is a Q-basis of the field, this representation is
//! unique, so structural equality is field equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const SQRT2: f64 = std::f64::consts::SQRT_2;
const SQRT3: f64 = 1.732_050_807_568_877_2;
const SQRT6: f64 = 2.449_489_742_783_178;

/// An exact element `a + b√2 + c√3 + d√6` of Q(√2, √3).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldElem {
    coeffs: [BigRational; 4],
}

/// Basis element of Q(√2, √3) over Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Radical {
    One,
    Sqrt2,
    Sqrt3,
    Sqrt6,
}

impl Radical {
    fn index(self) -> usize {
        match self {
            Radical::One => 0,
            Radical::Sqrt2 => 1,
            Radical::Sqrt3 => 2,
            Radical::Sqrt6 => 3,
        }
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of `u + v√2` for rationals `u, v`.
fn sign_q2(u: &BigRational, v: &BigRational) -> i8 {
    let su = sign_of(u);
    let sv = sign_of(v);
    if sv == 0 {
        return su;
    }
    if su == 0 || su == sv {
        return if su == 0 { sv } else { su };
    }
    // opposite signs: compare u^2 with 2 v^2
    let lhs = u * u;
    let rhs = v * v * rat(2, 1);
    match lhs.cmp(&rhs) {
        Ordering::Greater => su,
        Ordering::Less => sv,
        Ordering::Equal => 0, // unreachable for v != 0, √2 is irrational
    }
}

fn sign_of(q: &BigRational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Elements of the subfield Q(√2), as `(u, v)` meaning `u + v√2`.
#[derive(Clone)]
struct Q2(BigRational, BigRational);

impl Q2 {
    fn mul(&self, o: &Q2) -> Q2 {
        Q2(
            &self.0 * &o.0 + &self.1 * &o.1 * rat(2, 1),
            &self.0 * &o.1 + &self.1 * &o.0,
        )
    }

    fn sign(&self) -> i8 {
        sign_q2(&self.0, &self.1)
    }
}

impl FieldElem {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        FieldElem { coeffs: [a, b, c, d] }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut x = Self::default();
        x.coeffs[0] = q;
        x
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    /// `q · radical`, e.g. `term(1, 2, Radical::Sqrt2)` is `√2/2`.
    pub fn term(n: i64, d: i64, radical: Radical) -> Self {
        let mut x = Self::default();
        x.coeffs[radical.index()] = rat(n, d);
        x
    }

    pub fn sqrt2() -> Self {
        Self::term(1, 1, Radical::Sqrt2)
    }

    pub fn sqrt3() -> Self {
        Self::term(1, 1, Radical::Sqrt3)
    }

    pub fn coeff(&self, radical: Radical) -> &BigRational {
        &self.coeffs[radical.index()]
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the irrational parts vanish.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then_some(&self.coeffs[0])
    }

    /// The integer value, if `self` is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    fn split(&self) -> (Q2, Q2) {
        let [a, b, c, d] = &self.coeffs;
        (Q2(a.clone(), b.clone()), Q2(c.clone(), d.clone()))
    }

    fn join(p: Q2, q: Q2) -> Self {
        FieldElem::new(p.0, p.1, q.0, q.1)
    }

    /// Exact sign in `{-1, 0, 1}`.
    ///
    /// Writes `x = p + q√3` with `p, q ∈ Q(√2)` and decides by comparing `p²`
    /// against `3q²` when the two parts disagree in sign.
    pub fn sign(&self) -> i8 {
        let (p, q) = self.split();
        let sp = p.sign();
        let sq = q.sign();
        if sq == 0 {
            return sp;
        }
        if sp == 0 || sp == sq {
            return if sp == 0 { sq } else { sp };
        }
        let p2 = p.mul(&p);
        let q2 = q.mul(&q);
        let diff = Q2(&p2.0 - &q2.0 * rat(3, 1), &p2.1 - &q2.1 * rat(3, 1));
        match diff.sign() {
            1 => sp,
            -1 => sq,
            _ => 0, // p² = 3q² forces p = q = 0
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// Galois conjugate `√3 ↦ -√3`.
    fn conj3(&self) -> Self {
        let [a, b, c, d] = &self.coeffs;
        FieldElem::new(a.clone(), b.clone(), -c, -d)
    }

    /// Multiplicative inverse, by rationalizing over Q(√2) then over Q.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // x⁻¹ = (p - q√3) / (p² - 3q²), and (u + v√2)⁻¹ = (u - v√2) / (u² - 2v²)
        let (p, q) = self.split();
        let p2 = p.mul(&p);
        let q2 = q.mul(&q);
        let n = Q2(&p2.0 - &q2.0 * rat(3, 1), &p2.1 - &q2.1 * rat(3, 1));
        let norm = &n.0 * &n.0 - &n.1 * &n.1 * rat(2, 1);
        let n_inv = Q2(&n.0 / &norm, -(&n.1 / &norm));
        let conj = self.conj3();
        let (cp, cq) = conj.split();
        Ok(FieldElem::join(cp.mul(&n_inv), cq.mul(&n_inv)))
    }

    pub fn checked_div(&self, rhs: &FieldElem) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Floating-point approximation.
    pub fn to_f64(&self) -> f64 {
        let f = |q: &BigRational| q.to_f64().unwrap_or(f64::NAN);
        let [a, b, c, d] = &self.coeffs;
        f(a) + f(b) * SQRT2 + f(c) * SQRT3 + f(d) * SQRT6
    }

    pub fn mul_rational(&self, q: &BigRational) -> Self {
        FieldElem {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * q),
        }
    }
}

/// `cos(π/m)` for the supported Coxeter labels; `None` stands for `m = ∞`,
/// which maps to 1.
pub fn cos_value(m: Option<u32>) -> Result<FieldElem> {
    match m {
        Some(2) => Ok(FieldElem::zero()),
        Some(3) => Ok(FieldElem::from_frac(1, 2)),
        Some(4) => Ok(FieldElem::term(1, 2, Radical::Sqrt2)),
        Some(6) => Ok(FieldElem::term(1, 2, Radical::Sqrt3)),
        None => Ok(FieldElem::one()),
        Some(other) => Err(Error::UnsupportedLabel(other.to_string())),
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem({self})")
    }
}

impl Zero for FieldElem {
    fn zero() -> Self {
        FieldElem::default()
    }

    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
}

impl One for FieldElem {
    fn one() -> Self {
        FieldElem::one()
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        FieldElem {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        FieldElem {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        // Index bit 0 marks √2 and bit 1 marks √3, so the product of basis
        // elements i and j is basis element i ^ j, scaled by 2 and/or 3 for
        // each radical they share. Zero components are skipped, which makes
        // the common rational-only case a single product.
        let mut out = FieldElem::zero();
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let mut p = x * y;
                let shared = i & j;
                if shared & 1 != 0 {
                    p *= BigInt::from(2);
                }
                if shared & 2 != 0 {
                    p *= BigInt::from(3);
                }
                out.coeffs[i ^ j] += p;
            }
        }
        out
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            coeffs: std::array::from_fn(|i| -&self.coeffs[i]),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *x += y;
        }
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *x -= y;
        }
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_int(n)
    }
}

impl From<BigRational> for FieldElem {
    fn from(q: BigRational) -> Self {
        FieldElem::from_rational(q)
    }
}

const SUFFIXES: [&str; 4] = ["", "r2", "r3", "r6"];

/// Textual form `p/q + p/q*r2 + p/q*r3 + p/q*r6`, zero terms omitted.
impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (q, suffix) in self.coeffs.iter().zip(SUFFIXES) {
            if q.is_zero() {
                continue;
            }
            let mag = q.abs();
            if first {
                if q.is_negative() {
                    f.write_str("-")?;
                }
            } else if q.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            write!(f, "{mag}")?;
            if !suffix.is_empty() {
                write!(f, "*{suffix}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl FromStr for FieldElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid field element {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let mut prev = None;
        for (i, ch) in compact.char_indices() {
            let after_sign = matches!(prev, Some('+') | Some('-'));
            if i > 0 && (ch == '+' || ch == '-') && !after_sign {
                terms.push(&compact[start..i]);
                start = i;
            }
            prev = Some(ch);
        }
        terms.push(&compact[start..]);

        let mut out = FieldElem::zero();
        for term in terms {
            let mut negative = false;
            let mut body = term;
            while let Some(rest) = body.strip_prefix(['+', '-']) {
                negative ^= body.starts_with('-');
                body = rest;
            }
            if body.is_empty() {
                return Err(bad());
            }
            let (coeff, radical) = match body.split_once('*') {
                Some((c, r)) => (c, r),
                None if body.starts_with('r') => ("1", body),
                None => (body, ""),
            };
            let idx = SUFFIXES.iter().position(|x| *x == radical).ok_or_else(bad)?;
            let mut q: BigRational = coeff.parse().map_err(|_| bad())?;
            if negative {
                q = -q;
            }
            out.coeffs[idx] += q;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    #[test]
    fn basis_products() {
        assert_eq!(FieldElem::sqrt2() * FieldElem::sqrt3(), fe("1*r6"));
        assert_eq!(FieldElem::sqrt2() * FieldElem::sqrt2(), FieldElem::from_int(2));
        assert_eq!(fe("r6") * fe("r6"), FieldElem::from_int(6));
        assert_eq!(fe("r2") * fe("r6"), fe("2*r3"));
        assert_eq!(fe("r3") * fe("r6"), fe("3*r2"));
    }

    #[test]
    fn inverse_of_one_plus_sqrt2() {
        let x = fe("1 + r2");
        let inv = x.inv().unwrap();
        assert_eq!(inv, fe("-1 + r2"));
        assert!((&x * &inv).is_one());
    }

    #[test]
    fn inverse_mixed() {
        let x = fe("1/3 - 2*r2 + 5/7*r3 - r6");
        assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn division_by_zero() {
        assert!(matches!(
            FieldElem::one().checked_div(&FieldElem::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn signs() {
        assert_eq!(FieldElem::zero().sign(), 0);
        // 1 - √2(√3 - 1) = 1 + √2 - √6 ≈ -0.035
        let x = FieldElem::one() - FieldElem::sqrt2() * (FieldElem::sqrt3() - FieldElem::one());
        assert_eq!(x.sign(), -1);
        assert_eq!(fe("3 - 2*r2").sign(), 1);
        assert_eq!(fe("-3 + 2*r2").sign(), -1);
        assert_eq!(fe("5 - 2*r6").sign(), 1); // 25 > 24
        assert_eq!(fe("r2 + r3 - r6 - 1/2").sign(), 1);
    }

    #[test]
    fn cos_values() {
        assert_eq!(cos_value(Some(2)).unwrap(), FieldElem::zero());
        assert_eq!(cos_value(Some(3)).unwrap(), fe("1/2"));
        assert_eq!(cos_value(Some(4)).unwrap(), fe("1/2*r2"));
        assert_eq!(cos_value(Some(6)).unwrap(), fe("1/2*r3"));
        assert_eq!(cos_value(None).unwrap(), FieldElem::one());
        assert!(matches!(cos_value(Some(5)), Err(Error::UnsupportedLabel(_))));
    }

    #[test]
    fn text_form() {
        let x = fe("1/2 + -3*r2 + 0*r3 + 7/4*r6");
        assert_eq!(x.to_string(), "1/2 - 3*r2 + 7/4*r6");
        assert_eq!(fe("r3").to_string(), "1*r3");
        assert_eq!(fe("-r2").to_string(), "-1*r2");
        assert_eq!(fe("0").to_string(), "0");
        assert_eq!(fe("2*r2 + r2"), fe("3*r2"));
        assert!("1 +".parse::<FieldElem>().is_err());
        assert!("1*r5".parse::<FieldElem>().is_err());
        assert!("".parse::<FieldElem>().is_err());
    }

    #[test]
    fn ordering() {
        assert!(fe("r2") < fe("3/2"));
        assert!(fe("r3") > fe("r2"));
        assert_eq!(fe("r2").abs(), fe("-r2").abs());
    }
}
