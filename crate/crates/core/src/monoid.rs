//! The generalized rook monoid `C_r ≀ R_n` and its monoid algebra over `ℚ(ξ)`.
//!
//! An element is an `n × n` matrix with at most one nonzero entry in each row
//! and column, each nonzero entry a power of `ξ`. It is stored column-wise:
//! column `j` either vanishes or carries `ξ^label` in row `map(j)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exactnum::CycElem;

/// Refuse to enumerate more elements than this.
pub const ENUMERATION_LIMIT: u128 = 2_000_000;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RookElem {
    n: usize,
    r: usize,
    /// `cols[j] = Some((row, label))`, both 0-based; label in `0..r`.
    cols: Vec<Option<(usize, usize)>>,
}

impl RookElem {
    /// Validates injectivity and ranges; labels are reduced mod `r`.
    pub fn new(n: usize, r: usize, cols: Vec<Option<(usize, usize)>>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("r must be positive".into()));
        }
        if cols.len() != n {
            return Err(Error::SizeMismatch(format!("{} columns for n = {n}", cols.len())));
        }
        let mut used = vec![false; n];
        let mut cols = cols;
        for entry in cols.iter_mut().flatten() {
            if entry.0 >= n {
                return Err(Error::InvalidArgument(format!("row {} out of range", entry.0 + 1)));
            }
            if std::mem::replace(&mut used[entry.0], true) {
                return Err(Error::InvalidArgument(format!("row {} used twice", entry.0 + 1)));
            }
            entry.1 %= r;
        }
        Ok(RookElem { n, r, cols })
    }

    pub fn identity(n: usize, r: usize) -> Self {
        RookElem {
            n,
            r,
            cols: (0..n).map(|j| Some((j, 0))).collect(),
        }
    }

    /// The zero matrix: an ordinary monoid element, not the algebra's zero.
    pub fn zero(n: usize, r: usize) -> Self {
        RookElem { n, r, cols: vec![None; n] }
    }

    /// Diagonal element with `diag[j]` the label at `(j, j)`, or `None` for a zero entry.
    pub fn diagonal(n: usize, r: usize, diag: &[Option<usize>]) -> Self {
        assert_eq!(diag.len(), n);
        RookElem {
            n,
            r,
            cols: diag.iter().enumerate().map(|(j, d)| d.map(|l| (j, l % r))).collect(),
        }
    }

    /// `P`: identity with the `(1,1)` entry replaced by zero.
    pub fn gen_p(n: usize, r: usize) -> Self {
        Self::idempotent(n, r, &[1])
    }

    /// `Q`: identity with the `(1,1)` entry replaced by `ξ`.
    pub fn gen_q(n: usize, r: usize) -> Self {
        let mut q = Self::identity(n, r);
        q.cols[0] = Some((0, 1 % r));
        q
    }

    /// Adjacent transposition `s_j = (j, j+1)`, `1 <= j < n`.
    pub fn gen_s(n: usize, r: usize, j: usize) -> Self {
        Self::transposition(n, r, j, j + 1)
    }

    /// Permutation matrix of the transposition `(a, b)` (1-based).
    pub fn transposition(n: usize, r: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1 && a <= n && b <= n, "transposition ({a},{b}) out of range");
        let mut t = Self::identity(n, r);
        t.cols.swap(a - 1, b - 1);
        t
    }

    /// `e_B`: the diagonal idempotent zeroing the coordinates in `B` (1-based).
    pub fn idempotent(n: usize, r: usize, b: &[usize]) -> Self {
        let mut e = Self::identity(n, r);
        for &k in b {
            e.cols[k - 1] = None;
        }
        e
    }

    /// `ξ_k^a`: identity with `ξ^a` at `(k, k)` (1-based `k`).
    pub fn diagonal_root(n: usize, r: usize, k: usize, a: usize) -> Self {
        let mut e = Self::identity(n, r);
        e.cols[k - 1] = Some((k - 1, a % r));
        e
    }

    /// `h_Z`: for `Z = {z_1 < ... < z_i}` (1-based), ones at `(z_l, l)`.
    pub fn h(n: usize, r: usize, z: &[usize]) -> Self {
        let mut cols = vec![None; n];
        for (l, &zl) in z.iter().enumerate() {
            cols[l] = Some((zl - 1, 0));
        }
        RookElem { n, r, cols }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Column data, 0-based rows.
    pub fn cols(&self) -> &[Option<(usize, usize)>] {
        &self.cols
    }

    /// Image of column `j` (0-based).
    pub fn apply(&self, j: usize) -> Option<(usize, usize)> {
        self.cols[j]
    }

    pub fn rank(&self) -> usize {
        self.cols.iter().flatten().count()
    }

    /// Nonzero columns, 0-based, increasing.
    pub fn domain(&self) -> Vec<usize> {
        (0..self.n).filter(|&j| self.cols[j].is_some()).collect()
    }

    /// Nonzero rows, 0-based, increasing.
    pub fn image(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = self.cols.iter().flatten().map(|&(i, _)| i).collect();
        rows.sort_unstable();
        rows
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.n
    }

    /// Matrix product `self · other`: column `j` of the result is `self` applied
    /// to column `j` of `other`.
    pub fn compose(&self, other: &RookElem) -> Result<RookElem> {
        if (self.n, self.r) != (other.n, other.r) {
            return Err(Error::SizeMismatch(format!(
                "compose (n={}, r={}) with (n={}, r={})",
                self.n, self.r, other.n, other.r
            )));
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &RookElem) -> RookElem {
        let cols = other
            .cols
            .iter()
            .map(|c| {
                let (mid, l1) = (*c)?;
                let (row, l2) = self.cols[mid]?;
                Some((row, (l1 + l2) % self.r))
            })
            .collect();
        RookElem { n: self.n, r: self.r, cols }
    }

    /// Conjugate transpose: inverts the partial map and negates labels, so
    /// `σ σᵗ σ = σ`.
    pub fn transpose(&self) -> RookElem {
        let mut cols = vec![None; self.n];
        for (j, c) in self.cols.iter().enumerate() {
            if let Some((i, l)) = *c {
                cols[i] = Some((j, (self.r - l) % self.r));
            }
        }
        RookElem { n: self.n, r: self.r, cols }
    }

    pub fn is_symmetric(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, c)| c.is_none_or(|(i, l)| self.cols[i] == Some((j, l))))
    }

    /// Belongs to the left cell `𝕃_i`: rank `i` with columns `i+1..n` zero.
    pub fn in_lcell(&self, i: usize) -> bool {
        self.rank() == i && self.cols[i..].iter().all(Option::is_none)
    }

    /// Ordering key: rank, domain, row word, labels.
    fn key(&self) -> (usize, Vec<usize>, Vec<usize>, Vec<usize>) {
        let dom = self.domain();
        let rows = dom.iter().map(|&j| self.cols[j].unwrap().0).collect();
        let labels = dom.iter().map(|&j| self.cols[j].unwrap().1).collect();
        (self.rank(), dom, rows, labels)
    }

    pub fn to_json(&self) -> Value {
        let cols: Vec<Value> = self
            .cols
            .iter()
            .map(|c| match c {
                Some((i, l)) => json!([i + 1, l]),
                None => Value::Null,
            })
            .collect();
        json!({ "n": self.n, "r": self.r, "cols": cols })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let field = |name: &str| {
            value
                .get(name)
                .and_then(Value::as_u64)
                .map(|v| v as usize)
                .ok_or_else(|| Error::Parse(format!("element needs integer {name:?}")))
        };
        let (n, r) = (field("n")?, field("r")?);
        let cols = value
            .get("cols")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("element needs \"cols\"".into()))?
            .iter()
            .map(|c| match c {
                Value::Null => Ok(None),
                Value::Array(pair) if pair.len() == 2 => {
                    let row = pair[0].as_u64().filter(|&v| v >= 1);
                    let label = pair[1].as_u64();
                    match (row, label) {
                        (Some(row), Some(label)) => Ok(Some((row as usize - 1, label as usize))),
                        _ => Err(Error::Parse(format!("bad column entry {c}"))),
                    }
                }
                other => Err(Error::Parse(format!("bad column entry {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        RookElem::new(n, r, cols)
    }
}

impl Ord for RookElem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.r, self.key()).cmp(&(other.n, other.r, other.key()))
    }
}

impl PartialOrd for RookElem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Mul<&'a RookElem> for &'a RookElem {
    type Output = RookElem;
    /// Panics on size or order mismatch; see [`RookElem::compose`].
    fn mul(self, rhs: &RookElem) -> RookElem {
        self.compose(rhs).expect("compatible rook elements")
    }
}

impl fmt::Debug for RookElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RookElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .cols
            .iter()
            .map(|c| match c {
                Some((i, 0)) => format!("{}", i + 1),
                Some((i, l)) => format!("{}^{l}", i + 1),
                None => "-".into(),
            })
            .collect();
        write!(f, "[{}]", cols.join(" "))
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `|C_r ≀ R_n| = Σ_k binom(n,k)² k! r^k`.
pub fn monoid_order(n: usize, r: usize) -> u128 {
    (0..=n as u128)
        .map(|k| {
            let b = binomial(n as u128, k);
            b * b * (1..=k).product::<u128>() * (r as u128).pow(k as u32)
        })
        .sum()
}

/// All elements of `C_r ≀ R_n` in the canonical order.
pub fn enumerate_elements(n: usize, r: usize) -> Result<Vec<RookElem>> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let total = monoid_order(n, r);
    if total > ENUMERATION_LIMIT {
        return Err(Error::TooLarge(format!(
            "C_{r} wr R_{n} has {total} elements (limit {ENUMERATION_LIMIT})"
        )));
    }
    fn go(n: usize, r: usize, j: usize, used: &mut Vec<bool>, cur: &mut Vec<Option<(usize, usize)>>, out: &mut Vec<RookElem>) {
        if j == n {
            out.push(RookElem { n, r, cols: cur.clone() });
            return;
        }
        cur.push(None);
        go(n, r, j + 1, used, cur, out);
        cur.pop();
        for row in 0..n {
            if used[row] {
                continue;
            }
            used[row] = true;
            for l in 0..r {
                cur.push(Some((row, l)));
                go(n, r, j + 1, used, cur, out);
                cur.pop();
            }
            used[row] = false;
        }
    }
    let mut out = Vec::with_capacity(total as usize);
    go(n, r, 0, &mut vec![false; n], &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Cycle type of an `r = 1` element whose row support equals its column
/// support; `None` otherwise.
pub fn cycle_type(sigma: &RookElem) -> Result<Option<Partition>> {
    if sigma.r != 1 {
        return Err(Error::InvalidArgument("cycle type is defined for r = 1".into()));
    }
    if sigma.domain() != sigma.image() {
        return Ok(None);
    }
    let mut seen = vec![false; sigma.n];
    let mut lengths = Vec::new();
    for start in sigma.domain() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            len += 1;
            j = sigma.cols[j].expect("support is closed").0;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Some(Partition::new(lengths).expect("positive lengths")))
}

/// The basis `{h_Z}` of the left cell `𝕃_i` as a right `C_r ≀ S_i`-module,
/// one per `i`-subset `Z`, lexicographic in `Z`.
pub fn lcell_basis(i: usize, n: usize, r: usize) -> Vec<RookElem> {
    crate::combinatorics::subsets(n, i)
        .iter()
        .map(|z| RookElem::h(n, r, z))
        .collect()
}

/// Element of the monoid algebra: a finite combination of monoid elements.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElem {
    n: usize,
    r: usize,
    terms: BTreeMap<RookElem, CycElem>,
}

/// Operation selector for [`algebra_ops`].
#[derive(Clone, Debug)]
pub enum AlgebraOp {
    Add,
    Mul,
    /// Multiply the first operand by the scalar.
    Scalar(CycElem),
}

/// Checked algebra arithmetic; rejects operands over different monoids.
pub fn algebra_ops(x: &AlgebraElem, y: &AlgebraElem, op: AlgebraOp) -> Result<AlgebraElem> {
    if (x.n, x.r) != (y.n, y.r) {
        return Err(Error::SizeMismatch(format!(
            "algebra elements over (n={}, r={}) and (n={}, r={})",
            x.n, x.r, y.n, y.r
        )));
    }
    match op {
        AlgebraOp::Add => Ok(x + y),
        AlgebraOp::Mul => Ok(x * y),
        AlgebraOp::Scalar(c) => {
            if c.order() != x.r {
                return Err(Error::OrderMismatch { left: c.order(), right: x.r });
            }
            Ok(x.scale(&c))
        }
    }
}

impl AlgebraElem {
    pub fn zero(n: usize, r: usize) -> Self {
        AlgebraElem { n, r, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, r: usize) -> Self {
        Self::from_elem(RookElem::identity(n, r))
    }

    pub fn from_elem(e: RookElem) -> Self {
        let r = e.r;
        Self::from_term(e, CycElem::one(r))
    }

    pub fn from_term(e: RookElem, coeff: CycElem) -> Self {
        let mut out = Self::zero(e.n, e.r);
        out.add_term(e, coeff);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> &BTreeMap<RookElem, CycElem> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: RookElem, coeff: CycElem) {
        assert_eq!((e.n, e.r), (self.n, self.r), "term from a different monoid");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &CycElem) -> Self {
        let mut out = Self::zero(self.n, self.r);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), k * c);
        }
        out
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &AlgebraElem) -> AlgebraElem {
        &(self * other) - &(other * self)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({ "element": e.to_json(), "coeff": c }))
            .collect();
        json!({ "n": self.n, "r": self.r, "terms": terms })
    }
}

impl<'a> Add<&'a AlgebraElem> for &'a AlgebraElem {
    type Output = AlgebraElem;
    fn add(self, rhs: &AlgebraElem) -> AlgebraElem {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a AlgebraElem> for &'a AlgebraElem {
    type Output = AlgebraElem;
    fn sub(self, rhs: &AlgebraElem) -> AlgebraElem {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &AlgebraElem {
    type Output = AlgebraElem;
    fn neg(self) -> AlgebraElem {
        AlgebraElem::zero(self.n, self.r).sub(self)
    }
}

impl<'a> Mul<&'a AlgebraElem> for &'a AlgebraElem {
    type Output = AlgebraElem;
    /// Bilinear extension of composition. Panics on mismatched monoids; see
    /// [`algebra_ops`] for the checked form.
    fn mul(self, rhs: &AlgebraElem) -> AlgebraElem {
        assert_eq!((self.n, self.r), (rhs.n, rhs.r), "algebra elements from different monoids");
        let mut out = AlgebraElem::zero(self.n, self.r);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.compose_unchecked(b), ca * cb);
            }
        }
        out
    }
}

impl fmt::Debug for AlgebraElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("({c}){e}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `E_A = Σ_{B ⊆ A} (-1)^{|B|} e_B` for `A ⊆ [n]` (1-based).
pub fn idempotent_e(a: &[usize], n: usize, r: usize) -> AlgebraElem {
    let mut out = AlgebraElem::zero(n, r);
    for mask in 0u32..(1 << a.len()) {
        let b: Vec<usize> = a
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &x)| x)
            .collect();
        let sign = if b.len().is_multiple_of(2) { 1 } else { -1 };
        out.add_term(RookElem::idempotent(n, r, &b), CycElem::from_int(r, sign));
    }
    out
}
