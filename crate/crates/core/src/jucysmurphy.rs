//! Jucys-Murphy elements of `ℚ(ξ)[C_r ≀ R_n]`, their spectra on the
//! Gelfand-Zeitlin bases, and the central elements built from them.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::combinatorics::{multipartitions_up_to, partitions_of, subsets, MultiTableau, Partition};
use crate::error::{Error, Result};
use crate::exactnum::{rational, CycElem, CycMatrix};
use crate::monoid::{cycle_type, enumerate_elements, idempotent_e, AlgebraElem, RookElem};
use crate::seminormal::{rook_irrep, ElementCache, Representation};

/// `X_1..X_n` and `Y_1..Y_n` (index 0 holds `X_1`, `Y_1`).
#[derive(Clone, Debug)]
pub struct JmFamily {
    pub n: usize,
    pub r: usize,
    pub x: Vec<AlgebraElem>,
    pub y: Vec<AlgebraElem>,
}

fn el(e: RookElem) -> AlgebraElem {
    AlgebraElem::from_elem(e)
}

/// `Σ_{l=0}^{r-1} ξ_m^l ξ_j^{-l}` (1-based `m`, `j`).
pub fn diagonal_average(n: usize, r: usize, m: usize, j: usize) -> AlgebraElem {
    let mut out = AlgebraElem::zero(n, r);
    for l in 0..r {
        let d = &RookElem::diagonal_root(n, r, m, l) * &RookElem::diagonal_root(n, r, j, r - l);
        out.add_term(d, CycElem::one(r));
    }
    out
}

/// `X_1 = Q - P`, `X_j = s_{j-1} X_{j-1} s_{j-1}`, `Y_1 = 0` and
/// `Y_j = (1/r) Σ_{m<j} E_{m,j} Σ_l ξ_m^l ξ_j^{-l} (m, j)`.
pub fn jm_elements(n: usize, r: usize) -> JmFamily {
    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    if n > 0 {
        x.push(&el(RookElem::gen_q(n, r)) - &el(RookElem::gen_p(n, r)));
        y.push(AlgebraElem::zero(n, r));
    }
    let inv_r = CycElem::from_rational(r, rational(1, r as i64));
    for j in 2..=n {
        let s = el(RookElem::gen_s(n, r, j - 1));
        x.push(&(&s * &x[j - 2]) * &s);
        let mut yj = AlgebraElem::zero(n, r);
        for m in 1..j {
            let term = &(&idempotent_e(&[m, j], n, r) * &diagonal_average(n, r, m, j))
                * &el(RookElem::transposition(n, r, m, j));
            yj = &yj + &term;
        }
        y.push(yj.scale(&inv_r));
    }
    JmFamily { n, r, x, y }
}

/// `Y_j` from the recursion
/// `Y_{j} = s_{j-1} Y_{j-1} s_{j-1} + (1/r) E_{j-1,j} Σ_l ξ_{j-1}^l ξ_j^{-l} s_{j-1}`.
pub fn jm_y_recursive(n: usize, r: usize) -> Vec<AlgebraElem> {
    let mut y = Vec::with_capacity(n);
    if n == 0 {
        return y;
    }
    y.push(AlgebraElem::zero(n, r));
    let inv_r = CycElem::from_rational(r, rational(1, r as i64));
    for j in 2..=n {
        let s = el(RookElem::gen_s(n, r, j - 1));
        let correction = &(&idempotent_e(&[j - 1, j], n, r) * &diagonal_average(n, r, j - 1, j)) * &s;
        let next = &(&(&s * &y[j - 2]) * &s) + &correction.scale(&inv_r);
        y.push(next);
    }
    y
}

/// Expected eigenvalues of one basis vector and the observed diagonal.
#[derive(Clone, Debug)]
pub struct SpectrumRow {
    pub tableau: MultiTableau,
    pub x: Vec<CycElem>,
    pub y: Vec<CycElem>,
}

#[derive(Clone, Debug)]
pub struct JmSpectrum {
    pub rows: Vec<SpectrumRow>,
    /// Every `X_i`, `Y_i` matrix is diagonal in the basis.
    pub diagonal: bool,
    /// Diagonal entries equal `sgn_L(i)` and `ct(L(i))` (zero when `i ∉ L`).
    pub matches_tableaux: bool,
    pub violations: Vec<String>,
}

impl JmSpectrum {
    pub fn is_ok(&self) -> bool {
        self.diagonal && self.matches_tableaux
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| json!({ "tableau": row.tableau.to_json(), "X": row.x, "Y": row.y }))
            .collect();
        json!({
            "vectors": rows,
            "diagonal": self.diagonal,
            "matches_tableaux": self.matches_tableaux,
            "violations": self.violations,
        })
    }
}

/// Matrices of `X_i` and `Y_i` on a representation.
pub fn jm_matrices(rep: &Representation) -> Result<(Vec<CycMatrix>, Vec<CycMatrix>)> {
    let jm = jm_elements(rep.n(), rep.r());
    let cache = ElementCache::new(&rep.gens);
    let xs = jm.x.iter().map(|x| cache.algebra_matrix(x)).collect::<Result<_>>()?;
    let ys = jm.y.iter().map(|y| cache.algebra_matrix(y)).collect::<Result<_>>()?;
    Ok((xs, ys))
}

/// Eigenvalue table of the Jucys-Murphy elements on a seminormal basis.
pub fn jm_spectrum(rep: &Representation) -> Result<JmSpectrum> {
    let (n, r) = (rep.n(), rep.r());
    let (xs, ys) = jm_matrices(rep)?;
    let mut violations = Vec::new();
    for (name, mats) in [("X", &xs), ("Y", &ys)] {
        for (i, m) in mats.iter().enumerate() {
            if !m.is_diagonal() {
                violations.push(format!("{name}_{} is not diagonal on {}", i + 1, rep.label));
            }
        }
    }
    let diagonal = violations.is_empty();
    let mut matches = true;
    let mut rows = Vec::with_capacity(rep.dim());
    for (k, t) in rep.basis.iter().enumerate() {
        let x: Vec<CycElem> = xs.iter().map(|m| m.get(k, k).clone()).collect();
        let y: Vec<CycElem> = ys.iter().map(|m| m.get(k, k).clone()).collect();
        for b in 1..=n {
            let want_x = t.sign(b, r);
            let want_y = CycElem::from_int(r, t.content(b).unwrap_or(0));
            if x[b - 1] != want_x || y[b - 1] != want_y {
                matches = false;
                violations.push(format!(
                    "entry {b} of {:?}: X = {}, Y = {}, expected {}, {}",
                    t.to_json(),
                    x[b - 1],
                    y[b - 1],
                    want_x,
                    want_y
                ));
            }
        }
        rows.push(SpectrumRow { tableau: t.clone(), x, y });
    }
    Ok(JmSpectrum {
        rows,
        diagonal,
        matches_tableaux: matches,
        violations,
    })
}

/// Checks that the observed `(X, Y)` eigenvalue strings of all seminormal
/// basis vectors of all irreducibles of `C_r ≀ R_n` are pairwise distinct.
/// Returns the colliding pairs.
pub fn separation_violations(n: usize, r: usize) -> Result<Vec<String>> {
    let mut seen: BTreeMap<Vec<Vec<CycElemKey>>, String> = BTreeMap::new();
    let mut out = Vec::new();
    for (_, lambda) in multipartitions_up_to(r, n) {
        let rep = rook_irrep(&lambda, n)?;
        let spec = jm_spectrum(&rep)?;
        for row in spec.rows {
            let key = vec![
                row.x.iter().map(CycElemKey::from).collect(),
                row.y.iter().map(CycElemKey::from).collect(),
            ];
            let name = format!("{lambda}:{}", row.tableau.to_json());
            if let Some(prev) = seen.insert(key, name.clone()) {
                out.push(format!("{prev} and {name} share an eigenvalue string"));
            }
        }
    }
    Ok(out)
}

/// Orderable stand-in for a `CycElem` (its canonical coefficient strings).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct CycElemKey(Vec<String>);

impl From<&CycElem> for CycElemKey {
    fn from(c: &CycElem) -> Self {
        CycElemKey(c.coeffs().iter().map(|q| q.to_string()).collect())
    }
}

/// `e_k(z_1, ..., z_m)` for pairwise commuting algebra elements.
pub fn elementary_symmetric(zs: &[AlgebraElem], k: usize, n: usize, r: usize) -> AlgebraElem {
    // table[d] = e_d of the prefix processed so far
    let mut table = vec![AlgebraElem::zero(n, r); k + 1];
    table[0] = AlgebraElem::one(n, r);
    for z in zs {
        for d in (1..=k).rev() {
            if table[d - 1].is_zero() {
                continue;
            }
            let add = &table[d - 1] * z;
            table[d] = &table[d] + &add;
        }
    }
    table.swap_remove(k)
}

/// Generators `P`, `Q`, `s_1, ..., s_{n-1}` as algebra elements.
pub fn generator_elements(n: usize, r: usize) -> Vec<(String, AlgebraElem)> {
    let mut gens = Vec::new();
    if n > 0 {
        gens.push(("P".to_string(), el(RookElem::gen_p(n, r))));
        gens.push(("Q".to_string(), el(RookElem::gen_q(n, r))));
    }
    for j in 1..n {
        gens.push((format!("s{j}"), el(RookElem::gen_s(n, r, j))));
    }
    gens
}

/// Names of generators that fail to commute with `z`.
pub fn noncommuting_generators(z: &AlgebraElem) -> Vec<String> {
    generator_elements(z.n(), z.r())
        .into_iter()
        .filter(|(_, g)| !z.commutator(g).is_zero())
        .map(|(name, _)| name)
        .collect()
}

#[derive(Clone, Debug)]
pub struct CentralReport {
    pub degree: usize,
    pub ex: AlgebraElem,
    pub ey: AlgebraElem,
    /// Generators not commuting with `e_k(X)`; empty when central.
    pub ex_fails: Vec<String>,
    pub ey_fails: Vec<String>,
}

impl CentralReport {
    pub fn is_central(&self) -> bool {
        self.ex_fails.is_empty() && self.ey_fails.is_empty()
    }
}

/// `e_k(X_1..X_n)` and `e_k(Y_1..Y_n)` with their commutation with the generators.
pub fn central_symmetric_polys(n: usize, r: usize, k: usize) -> CentralReport {
    let jm = jm_elements(n, r);
    let ex = elementary_symmetric(&jm.x, k, n, r);
    let ey = elementary_symmetric(&jm.y, k, n, r);
    CentralReport {
        degree: k,
        ex_fails: noncommuting_generators(&ex),
        ey_fails: noncommuting_generators(&ey),
        ex,
        ey,
    }
}

/// `d_k = Σ_{|A|=k} E_A`.
pub fn d_element(n: usize, r: usize, k: usize) -> AlgebraElem {
    subsets(n, k)
        .iter()
        .fold(AlgebraElem::zero(n, r), |acc, a| &acc + &idempotent_e(a, n, r))
}

/// `g_k = Σ_{i_1 < ... < i_k} e_{i_1} ... e_{i_k}`.
pub fn g_element(n: usize, r: usize, k: usize) -> AlgebraElem {
    let mut out = AlgebraElem::zero(n, r);
    for a in subsets(n, k) {
        out.add_term(RookElem::idempotent(n, r, &a), CycElem::one(r));
    }
    out
}

/// `c_μ = Σ E_{R(σ)} σ` over `r = 1` elements with equal row and column
/// support and cycle type `μ`.
pub fn c_element(n: usize, mu: &Partition) -> Result<AlgebraElem> {
    let mut out = AlgebraElem::zero(n, 1);
    for sigma in enumerate_elements(n, 1)? {
        if cycle_type(&sigma)?.as_ref() == Some(mu) {
            let rows: Vec<usize> = sigma.image().iter().map(|&i| i + 1).collect();
            out = &out + &(&idempotent_e(&rows, n, 1) * &el(sigma));
        }
    }
    Ok(out)
}

/// All `c_μ` for `|μ| <= n`.
pub fn class_elements(n: usize) -> Result<Vec<(Partition, AlgebraElem)>> {
    (0..=n)
        .flat_map(partitions_of)
        .map(|mu| Ok((mu.clone(), c_element(n, &mu)?)))
        .collect()
}

/// Matrix of `x` acting by left multiplication on `ℚ(ξ)[C_r ≀ R_n]`.
pub fn regular_matrix(x: &AlgebraElem) -> Result<CycMatrix> {
    let (n, r) = (x.n(), x.r());
    let basis = enumerate_elements(n, r)?;
    let d = basis.len();
    let mut m = CycMatrix::zero(d, d, r);
    for (j, tau) in basis.iter().enumerate() {
        for (sigma, c) in x.terms() {
            let i = basis.binary_search(&(sigma * tau)).expect("closed under products");
            let v = m.get(i, j) + c;
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// Integer coefficients of a characteristic polynomial, constant term first.
fn integer_coeffs(poly: &[CycElem]) -> Result<Vec<num_bigint::BigInt>> {
    poly.iter()
        .map(|c| {
            c.to_rational()
                .filter(|q| q.is_integer())
                .map(|q| q.to_integer())
                .ok_or_else(|| Error::Inconsistent(format!("non-integer coefficient {c}")))
        })
        .collect()
}

/// Whether the integer polynomial, reduced mod `p`, is a product of linear
/// factors over `𝔽_p`. Returns the roots with multiplicity when it is.
pub fn splits_mod_p(coeffs: &[num_bigint::BigInt], p: u64) -> Option<Vec<u64>> {
    let modulus = num_bigint::BigInt::from(p);
    let mut poly: Vec<u64> = coeffs
        .iter()
        .map(|c| c.mod_floor(&modulus).to_u64().expect("reduced"))
        .collect();
    while poly.last() == Some(&0) {
        poly.pop();
    }
    if poly.is_empty() {
        // The zero polynomial cannot come from a monic characteristic polynomial.
        return None;
    }
    let mut roots = Vec::new();
    'outer: while poly.len() > 1 {
        for a in 0..p {
            let value = poly.iter().rev().fold(0u64, |acc, &c| (acc * a + c) % p);
            if value == 0 {
                // Synthetic division by (t - a).
                let deg = poly.len() - 1;
                let mut quot = vec![0u64; deg];
                let mut carry = 0u64;
                for k in (0..deg).rev() {
                    carry = (poly[k + 1] + carry * a) % p;
                    quot[k] = carry;
                }
                poly = quot;
                roots.push(a);
                continue 'outer;
            }
        }
        return None;
    }
    roots.sort_unstable();
    Some(roots)
}

/// One characteristic-polynomial test on the regular representation.
#[derive(Clone, Debug)]
pub struct PrimeFieldCheck {
    pub n: usize,
    pub p: u64,
    pub operator: String,
    /// Integer roots of the characteristic polynomial over `ℚ`.
    pub integer_roots: Vec<i64>,
    pub roots_mod_p: Option<Vec<u64>>,
}

/// Integer roots (with multiplicity) of an integer polynomial, when it splits over `ℤ`.
fn integer_roots(coeffs: &[num_bigint::BigInt]) -> Vec<i64> {
    let mut poly = coeffs.to_vec();
    let mut roots = Vec::new();
    let bound = poly.len() as i64 + 1;
    'outer: while poly.len() > 1 {
        for a in -bound..=bound {
            let a_big = num_bigint::BigInt::from(a);
            let value = poly.iter().rev().fold(num_bigint::BigInt::from(0), |acc, c| acc * &a_big + c);
            if value == num_bigint::BigInt::from(0) {
                let deg = poly.len() - 1;
                let mut quot = vec![num_bigint::BigInt::from(0); deg];
                let mut carry = num_bigint::BigInt::from(0);
                for k in (0..deg).rev() {
                    carry = &poly[k + 1] + carry * &a_big;
                    quot[k] = carry.clone();
                }
                poly = quot;
                roots.push(a);
                continue 'outer;
            }
        }
        break;
    }
    roots.sort_unstable();
    roots
}

/// Characteristic polynomials of `X_i` and `Y_i` on the regular
/// representation of `R_n`, reduced modulo `p`.
pub fn prime_field_checks(n: usize, p: u64) -> Result<Vec<PrimeFieldCheck>> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let jm = jm_elements(n, 1);
    let mut out = Vec::new();
    for (name, family) in [("X", &jm.x), ("Y", &jm.y)] {
        for (i, z) in family.iter().enumerate() {
            let poly = integer_coeffs(&regular_matrix(z)?.charpoly())?;
            if poly.iter().any(|c| c.is_negative() && c.bits() > 62) {
                return Err(Error::TooLarge("characteristic polynomial coefficients".into()));
            }
            out.push(PrimeFieldCheck {
                n,
                p,
                operator: format!("{name}_{}", i + 1),
                integer_roots: integer_roots(&poly),
                roots_mod_p: splits_mod_p(&poly, p),
            });
        }
    }
    Ok(out)
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Distinct eigenvalue strings seen across a family, for reporting.
pub fn distinct_strings(spec: &JmSpectrum) -> usize {
    spec.rows
        .iter()
        .map(|row| {
            (
                row.x.iter().map(CycElemKey::from).collect::<Vec<_>>(),
                row.y.iter().map(CycElemKey::from).collect::<Vec<_>>(),
            )
        })
        .collect::<BTreeSet<_>>()
        .len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Multipartition;
    use crate::exactnum::int;

    fn mp(text: &str) -> Multipartition {
        Multipartition::from_json_str(text).unwrap()
    }

    #[test]
    fn first_elements() {
        let jm = jm_elements(3, 2);
        assert!(jm.y[0].is_zero());
        assert_eq!(jm.x[0], &el(RookElem::gen_q(3, 2)) - &el(RookElem::gen_p(3, 2)));
        let jm1 = jm_elements(3, 1);
        for j in 1..=3 {
            assert_eq!(jm1.x[j - 1], idempotent_e(&[j], 3, 1));
        }
    }

    #[test]
    fn r1_y_is_transposition_sum() {
        let n = 3;
        let jm = jm_elements(n, 1);
        for j in 2..=n {
            let mut expected = AlgebraElem::zero(n, 1);
            for i in 1..j {
                expected = &expected + &(&idempotent_e(&[i, j], n, 1) * &el(RookElem::transposition(n, 1, i, j)));
            }
            assert_eq!(jm.y[j - 1], expected);
        }
    }

    #[test]
    fn recursive_y_matches_sum_form() {
        for n in 1..=3 {
            for r in 1..=3 {
                assert_eq!(jm_y_recursive(n, r), jm_elements(n, r).y, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn pairwise_commutation() {
        for n in 1..=3 {
            for r in 1..=3 {
                let jm = jm_elements(n, r);
                let all: Vec<&AlgebraElem> = jm.x.iter().chain(&jm.y).collect();
                for a in &all {
                    for b in &all {
                        assert!(a.commutator(b).is_zero(), "n={n} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn spectrum_examples() {
        let spec = jm_spectrum(&rook_irrep(&mp("[[2]]"), 2).unwrap()).unwrap();
        assert!(spec.is_ok());
        assert_eq!(spec.rows[0].y[1].to_i64(), Some(1));
        assert!(spec.rows[0].x[1].is_one());

        let spec = jm_spectrum(&rook_irrep(&mp("[[1,1]]"), 2).unwrap()).unwrap();
        assert_eq!(spec.rows[0].y[1].to_i64(), Some(-1));

        let spec = jm_spectrum(&rook_irrep(&mp("[[1],[]]"), 3).unwrap()).unwrap();
        for row in &spec.rows {
            for b in 1..=3 {
                if !row.tableau.contains(b) {
                    assert!(row.x[b - 1].is_zero() && row.y[b - 1].is_zero());
                }
            }
        }
    }

    #[test]
    fn spectra_on_all_irreducibles() {
        for n in 0..=3 {
            for r in 1..=3 {
                for (_, lambda) in multipartitions_up_to(r, n) {
                    let spec = jm_spectrum(&rook_irrep(&lambda, n).unwrap()).unwrap();
                    assert!(spec.is_ok(), "{lambda} n={n}: {:?}", spec.violations);
                }
                assert!(separation_violations(n, r).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn elementary_symmetric_centrality() {
        let d1 = central_symmetric_polys(2, 2, 1);
        assert!(d1.is_central());
        assert_eq!(d1.ex, &jm_elements(2, 2).x[0] + &jm_elements(2, 2).x[1]);
        assert!(central_symmetric_polys(3, 1, 1).ey_fails.is_empty());
        assert!(central_symmetric_polys(3, 1, 3).ex_fails.is_empty());
        // A single Jucys-Murphy element is not central.
        assert!(!noncommuting_generators(&jm_elements(2, 1).x[0]).is_empty());
    }

    #[test]
    fn d_is_elementary_in_x() {
        for n in 0..=3 {
            let jm = jm_elements(n, 1);
            for k in 0..=n {
                assert_eq!(elementary_symmetric(&jm.x, k, n, 1), d_element(n, 1, k));
            }
        }
    }

    fn binom(n: usize, k: usize) -> i64 {
        (0..k).fold(1, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
    }

    #[test]
    fn g_in_span_of_d() {
        // e_i = 1 - X_i for r = 1, so g_k = Σ_j (-1)^j binom(n-j, k-j) d_j.
        for n in 0..=3 {
            for k in 0..=n {
                let mut combo = AlgebraElem::zero(n, 1);
                for j in 0..=k {
                    let c = if j % 2 == 0 { 1 } else { -1 } * binom(n - j, k - j);
                    combo = &combo + &d_element(n, 1, j).scale(&CycElem::from_int(1, c));
                }
                assert_eq!(combo, g_element(n, 1, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn class_elements_are_central() {
        for n in 0..=3 {
            for (mu, c) in class_elements(n).unwrap() {
                assert!(noncommuting_generators(&c).is_empty(), "n={n} μ={mu}");
            }
        }
        let zero_class = c_element(2, &Partition::empty()).unwrap();
        assert_eq!(zero_class, el(RookElem::zero(2, 1)));
    }

    #[test]
    fn splitting_mod_p() {
        let c = |v: &[i64]| v.iter().map(|&x| num_bigint::BigInt::from(x)).collect::<Vec<_>>();
        // (t - 1)(t + 1) = t^2 - 1
        assert_eq!(splits_mod_p(&c(&[-1, 0, 1]), 3), Some(vec![1, 2]));
        // t^2 + 1 is irreducible mod 3
        assert_eq!(splits_mod_p(&c(&[1, 0, 1]), 3), None);
        assert_eq!(splits_mod_p(&c(&[1, 0, 1]), 2), Some(vec![1, 1]));
        assert_eq!(integer_roots(&c(&[-2, -1, 1])), vec![-1, 2]);
        assert_eq!(int(2), int(2));
    }

    #[test]
    fn prime_field_small() {
        for check in prime_field_checks(2, 2).unwrap() {
            assert!(check.roots_mod_p.is_some(), "{}", check.operator);
            assert_eq!(check.integer_roots.len(), 7);
        }
        assert!(prime_field_checks(2, 4).is_err());
    }
}
