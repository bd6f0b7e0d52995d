//! Small dense polynomial helpers (constant term first).

use num_traits::{One, Zero};

use super::Rational;

/// Quotient of `num` by the monic integer polynomial `den`, assuming exact division.
pub(super) fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let d = den.len() - 1;
    debug_assert_eq!(den[d], 1);
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - d];
    for k in (0..quot.len()).rev() {
        let c = rem[k + d];
        quot[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn sub_scaled_shift(p: &mut Vec<Rational>, q: &[Rational], c: &Rational, shift: usize) {
    if p.len() < q.len() + shift {
        p.resize(q.len() + shift, Rational::zero());
    }
    for (j, qj) in q.iter().enumerate() {
        p[j + shift] -= c * qj;
    }
}

fn divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut quot = vec![Rational::zero(); rem.len().saturating_sub(db).max(1)];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] / &lead;
        sub_scaled_shift(&mut rem, b, &c, k);
        quot[k] = c;
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Rational::zero());
    }
    for (o, y) in out.iter_mut().zip(b) {
        *o -= y;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo the irreducible polynomial `m`, via extended Euclid.
pub(super) fn inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut t0, mut t1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1);
        let t = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    Some(t0.into_iter().map(|x| x * &c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn exact_division() {
        // (x^2 - 1) / (x - 1) = x + 1
        assert_eq!(div_exact_monic(&[-1, 0, 1], &[-1, 1]), vec![1, 1]);
    }

    #[test]
    fn modular_inverse() {
        // x * (-x - 1) = -x^2 - x = 1 mod x^2 + x + 1
        let m = [int(1), int(1), int(1)];
        let inv = inverse_mod(&[int(0), int(1)], &m).unwrap();
        assert_eq!(inv, vec![int(-1), int(-1)]);
    }
}
