//! Exact scalars: arbitrary-precision rationals and elements of the cyclotomic
//! field generated by a primitive `r`-th root of unity.
//!
//! A [`CycElem`] of order `r` is stored as a length-`r` coefficient vector in
//! the basis `1, x, x^2, ..., x^{r-1}` where `x` stands for the fixed primitive
//! root `ξ`. The vector is kept in canonical form: it is reduced modulo the
//! cyclotomic polynomial `Φ_r(x)`, so only the first `deg Φ_r` slots can be
//! nonzero and two elements are equal exactly when their vectors agree.

mod matrix;
mod poly;

pub use matrix::CycMatrix;

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds the rational `num / den`.
///
/// Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Encodes a rational as `["num", "den"]` with decimal strings.
pub fn rational_to_json(q: &Rational) -> serde_json::Value {
    serde_json::json!([q.numer().to_string(), q.denom().to_string()])
}

pub fn rational_from_json(value: &serde_json::Value) -> Result<Rational> {
    let pair = value
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Parse(format!("expected [\"num\",\"den\"], got {value}")))?;
    let part = |v: &serde_json::Value| -> Result<BigInt> {
        match v {
            serde_json::Value::String(s) => s
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}"))),
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| Error::Parse(format!("bad integer {n}"))),
            other => Err(Error::Parse(format!("bad integer {other}"))),
        }
    };
    let num = part(&pair[0])?;
    let den = part(&pair[1])?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}

thread_local! {
    static CYCLOTOMIC: RefCell<HashMap<usize, Rc<[i64]>>> = RefCell::new(HashMap::new());
}

/// Integer coefficients (constant term first) of the cyclotomic polynomial `Φ_r`.
pub fn cyclotomic_polynomial(r: usize) -> Rc<[i64]> {
    assert!(r >= 1, "cyclotomic polynomial of order 0");
    if let Some(hit) = CYCLOTOMIC.with(|c| c.borrow().get(&r).cloned()) {
        return hit;
    }
    // x^r - 1 divided by Φ_d for every proper divisor d of r.
    let mut num = vec![0i64; r + 1];
    num[0] = -1;
    num[r] = 1;
    for d in (1..r).filter(|d| r.is_multiple_of(*d)) {
        num = poly::div_exact_monic(&num, &cyclotomic_polynomial(d));
    }
    let phi: Rc<[i64]> = num.into();
    CYCLOTOMIC.with(|c| c.borrow_mut().insert(r, phi.clone()));
    phi
}

/// Element of `ℚ(ξ)`, `ξ` a primitive `order`-th root of unity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycElem {
    order: usize,
    coeffs: Vec<Rational>,
}

/// Ring operation selector for [`cyc_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Mul,
    /// Negates the first operand; the second is only checked for order.
    Neg,
    /// Multiplies the second operand by the first, which must be rational.
    ScalarMul,
}

/// Checked ring arithmetic; rejects operands of different orders.
pub fn cyc_arith(a: &CycElem, b: &CycElem, op: CycOp) -> Result<CycElem> {
    if a.order != b.order {
        return Err(Error::OrderMismatch {
            left: a.order,
            right: b.order,
        });
    }
    Ok(match op {
        CycOp::Add => a + b,
        CycOp::Mul => a * b,
        CycOp::Neg => -a,
        CycOp::ScalarMul => {
            let q = a
                .to_rational()
                .ok_or_else(|| Error::InvalidArgument("scalar is not rational".into()))?;
            b.scale(&q)
        }
    })
}

impl CycElem {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "CycElem order must be positive");
        CycElem {
            order,
            coeffs: vec![Rational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: usize, q: Rational) -> Self {
        let mut e = Self::zero(order);
        e.coeffs[0] = q;
        e
    }

    pub fn from_int(order: usize, value: i64) -> Self {
        Self::from_rational(order, int(value))
    }

    /// Builds an element from raw coefficients of `1, x, x^2, ...`; any length
    /// is accepted and the result is reduced to canonical form.
    pub fn from_coeffs(order: usize, coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1, "CycElem order must be positive");
        let mut coeffs = coeffs;
        reduce_in_place(order, &mut coeffs);
        CycElem { order, coeffs }
    }

    /// `ξ^k`, with `k` taken modulo `r`.
    pub fn root_power(order: usize, k: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("root of unity of order 0".into()));
        }
        let e = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![Rational::zero(); order];
        raw[e] = Rational::one();
        Ok(Self::from_coeffs(order, raw))
    }

    /// `Σ_{l=0}^{r-1} ξ^{l s}`, which is `r` when `r | s` and `0` otherwise.
    pub fn sum_root_powers(order: usize, s: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("root of unity of order 0".into()));
        }
        let mut raw = vec![Rational::zero(); order];
        for l in 0..order as i64 {
            raw[(l * s).rem_euclid(order as i64) as usize] += Rational::one();
        }
        Ok(Self::from_coeffs(order, raw))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Canonical coefficient vector (length `order`).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `ℚ`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The integer value, if the element is a (small) rational integer.
    pub fn to_i64(&self) -> Option<i64> {
        self.to_rational()
            .filter(|q| q.is_integer())
            .and_then(|q| q.to_integer().to_i64())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse in `ℚ(ξ)`; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.to_rational() {
            return Some(Self::from_rational(self.order, q.recip()));
        }
        let phi: Vec<Rational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|&c| int(c))
            .collect();
        let inv = poly::inverse_mod(&self.coeffs, &phi)?;
        Some(Self::from_coeffs(self.order, inv))
    }
}

fn reduce_in_place(order: usize, coeffs: &mut Vec<Rational>) {
    let phi = cyclotomic_polynomial(order);
    let d = phi.len() - 1;
    for k in (d..coeffs.len()).rev() {
        if coeffs[k].is_zero() {
            continue;
        }
        let lead = std::mem::take(&mut coeffs[k]);
        for (j, &c) in phi[..d].iter().enumerate() {
            if c != 0 {
                coeffs[k - d + j] -= &lead * int(c);
            }
        }
    }
    coeffs.resize(order, Rational::zero());
    for c in coeffs.iter_mut().skip(d) {
        *c = Rational::zero();
    }
}

fn same_order(a: &CycElem, b: &CycElem) {
    assert_eq!(
        a.order, b.order,
        "CycElem order mismatch ({} vs {})",
        a.order, b.order
    );
}

impl<'a> Add<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn add(self, rhs: &CycElem) -> CycElem {
        same_order(self, rhs);
        CycElem {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &CycElem) -> CycElem {
        same_order(self, rhs);
        CycElem {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &CycElem) -> CycElem {
        same_order(self, rhs);
        if self.order == 1 {
            return CycElem::from_rational(1, &self.coeffs[0] * &rhs.coeffs[0]);
        }
        let d = cyclotomic_polynomial(self.order).len() - 1;
        let mut raw = vec![Rational::zero(); 2 * d];
        for (i, a) in self.coeffs[..d].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..d].iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        CycElem::from_coeffs(self.order, raw)
    }
}

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        CycElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        -&self
    }
}

impl Add for CycElem {
    type Output = CycElem;
    fn add(self, rhs: CycElem) -> CycElem {
        &self + &rhs
    }
}

impl Sub for CycElem {
    type Output = CycElem;
    fn sub(self, rhs: CycElem) -> CycElem {
        &self - &rhs
    }
}

impl Mul for CycElem {
    type Output = CycElem;
    fn mul(self, rhs: CycElem) -> CycElem {
        &self * &rhs
    }
}

impl AddAssign<&CycElem> for CycElem {
    fn add_assign(&mut self, rhs: &CycElem) {
        same_order(self, rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&CycElem> for CycElem {
    fn sub_assign(&mut self, rhs: &CycElem) {
        same_order(self, rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{a}x^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElem[r={}]({})", self.order, self)
    }
}

impl Serialize for CycElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<serde_json::Value> = self.coeffs.iter().map(rational_to_json).collect();
        serde_json::json!({ "order": self.order, "coeffs": coeffs }).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        let order = value
            .get("order")
            .and_then(|o| o.as_u64())
            .filter(|&o| o >= 1)
            .ok_or_else(|| D::Error::custom("missing positive \"order\""))? as usize;
        let coeffs = value
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(|| D::Error::custom("missing \"coeffs\""))?;
        if coeffs.len() != order {
            return Err(D::Error::custom(format!(
                "expected {order} coefficients, got {}",
                coeffs.len()
            )));
        }
        let coeffs = coeffs
            .iter()
            .map(rational_from_json)
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(CycElem::from_coeffs(order, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(r: usize, k: i64) -> CycElem {
        CycElem::root_power(r, k).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(&*cyclotomic_polynomial(1), &[-1, 1]);
        assert_eq!(&*cyclotomic_polynomial(2), &[1, 1]);
        assert_eq!(&*cyclotomic_polynomial(3), &[1, 1, 1]);
        assert_eq!(&*cyclotomic_polynomial(4), &[1, 0, 1]);
        assert_eq!(&*cyclotomic_polynomial(6), &[1, -1, 1]);
        assert_eq!(&*cyclotomic_polynomial(8), &[1, 0, 0, 0, 1]);
    }

    #[test]
    fn root_powers() {
        assert!(x(1, 5).is_one());
        assert_eq!(x(4, 6), x(4, 2));
        assert_eq!(x(4, 2), CycElem::from_int(4, -1));
        assert_eq!(x(3, -1), x(3, 2));
        assert!(CycElem::root_power(0, 1).is_err());
    }

    #[test]
    fn sums_of_root_powers() {
        assert_eq!(CycElem::sum_root_powers(3, 0).unwrap(), CycElem::from_int(3, 3));
        assert!(CycElem::sum_root_powers(3, 1).unwrap().is_zero());
        assert!(CycElem::sum_root_powers(1, 7).unwrap().is_one());
        assert!(CycElem::sum_root_powers(6, 2).unwrap().is_zero());
        assert_eq!(CycElem::sum_root_powers(6, 12).unwrap(), CycElem::from_int(6, 6));
        assert!(CycElem::sum_root_powers(0, 1).is_err());
    }

    #[test]
    fn sum_root_powers_annihilated_by_shift() {
        for r in 1..=8usize {
            for s in -9..=9i64 {
                let sum = CycElem::sum_root_powers(r, s).unwrap();
                let shift = &x(r, s) - &CycElem::one(r);
                assert!((&sum * &shift).is_zero(), "r={r} s={s}");
            }
        }
    }

    #[test]
    fn distinct_powers_are_distinct() {
        for r in 1..=8usize {
            for a in 0..r as i64 {
                for b in 0..a {
                    assert_ne!(x(r, a), x(r, b), "r={r}");
                }
            }
        }
    }

    #[test]
    fn basic_arithmetic() {
        assert!((&x(3, 1) * &x(3, 2)).is_one());
        let a = &x(5, 2) + &CycElem::from_int(5, 3);
        assert!((&a + &(-&a)).is_zero());
        let two_x = &x(7, 1) + &x(7, 1);
        assert_eq!(two_x.scale(&rational(1, 2)), x(7, 1));
    }

    #[test]
    fn checked_arith_rejects_mismatch() {
        let err = cyc_arith(&x(3, 1), &x(4, 1), CycOp::Add).unwrap_err();
        assert!(matches!(err, Error::OrderMismatch { left: 3, right: 4 }));
        let half = CycElem::from_rational(3, rational(1, 2));
        let scaled = cyc_arith(&half, &x(3, 1), CycOp::ScalarMul).unwrap();
        assert_eq!(scaled, x(3, 1).scale(&rational(1, 2)));
        assert!(cyc_arith(&x(3, 1), &x(3, 1), CycOp::ScalarMul).is_err());
    }

    #[test]
    fn inverses() {
        for r in 1..=8usize {
            for k in 0..r as i64 {
                let e = &x(r, k) + &CycElem::from_int(r, 2);
                let inv = e.inv().unwrap();
                assert!((&e * &inv).is_one(), "r={r} k={k}");
            }
            assert!(CycElem::zero(r).inv().is_none());
        }
    }

    #[test]
    fn json_round_trip() {
        let e = &x(4, 1).scale(&rational(-3, 7)) + &CycElem::from_int(4, 2);
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(
            text,
            r#"{"coeffs":[["2","1"],["-3","7"],["0","1"],["0","1"]],"order":4}"#
        );
        let back: CycElem = serde_json::from_str(&text).unwrap();
        assert_eq!(back, e);
        // Non-canonical input is reduced on the way in.
        let raw = r#"{"order":3,"coeffs":[["1","1"],["1","1"],["1","1"]]}"#;
        let zero: CycElem = serde_json::from_str(raw).unwrap();
        assert!(zero.is_zero());
    }

    fn arb_elem(r: usize) -> impl Strategy<Value = CycElem> {
        proptest::collection::vec((-20i64..20, 1i64..6), r).prop_map(move |v| {
            CycElem::from_coeffs(r, v.into_iter().map(|(n, d)| rational(n, d)).collect())
        })
    }

    fn arb_triple() -> impl Strategy<Value = (CycElem, CycElem, CycElem)> {
        (1usize..=8).prop_flat_map(|r| (arb_elem(r), arb_elem(r), arb_elem(r)))
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }
    }
}
