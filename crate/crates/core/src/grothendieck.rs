//! Grothendieck-group operators on `⊕_n G_0(𝔽[R_n])`: Kleshchev `i`-restriction
//! and `i`-induction, the rank operators `A` and `B`, the bicyclic modules,
//! and the characteristic-zero product and coproduct.
//!
//! A class `[𝓛_j^n(D^λ)]` is stored as the pair `(λ, m)` with `m = n - j`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::combinatorics::{partitions_of, removable_addable, signature, Partition};
use crate::error::{Error, Result};
use crate::exactnum::{int, rational_from_json, rational_to_json, Rational};

/// Basis symbol `(λ, m)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrothBasisVec {
    pub lambda: Partition,
    pub m: usize,
}

impl GrothBasisVec {
    pub fn new(lambda: Partition, m: usize) -> Self {
        GrothBasisVec { lambda, m }
    }

    /// `n = |λ| + m`.
    pub fn degree(&self) -> usize {
        self.lambda.size() + self.m
    }

    fn to_json(&self) -> Value {
        json!({ "lambda": self.lambda.parts(), "m": self.m })
    }
}

impl fmt::Display for GrothBasisVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:{}", self.lambda.parts(), self.m)
    }
}

/// Parses `"[2,1]:3"`.
impl FromStr for GrothBasisVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (lambda, m) = s
            .rsplit_once(':')
            .ok_or_else(|| Error::Parse(format!("expected LAMBDA:M, got {s:?}")))?;
        let parts: Vec<usize> =
            serde_json::from_str(lambda.trim()).map_err(|e| Error::Parse(format!("{lambda:?}: {e}")))?;
        let m = m.trim().parse().map_err(|_| Error::Parse(format!("bad slack {m:?}")))?;
        Ok(GrothBasisVec::new(Partition::new(parts)?, m))
    }
}

/// A finite rational combination of basis symbols. `p = None` is the
/// characteristic-zero group, where every partition is a label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothVector {
    p: Option<u64>,
    terms: BTreeMap<GrothBasisVec, Rational>,
}

impl GrothVector {
    pub fn zero(p: Option<u64>) -> Self {
        GrothVector { p, terms: BTreeMap::new() }
    }

    /// A basis vector, rejecting labels that are not `p`-regular.
    pub fn basis(b: GrothBasisVec, p: Option<u64>) -> Result<Self> {
        check_label(&b.lambda, p)?;
        let mut v = Self::zero(p);
        v.add_term(b, Rational::one());
        Ok(v)
    }

    pub fn p(&self) -> Option<u64> {
        self.p
    }

    pub fn terms(&self) -> &BTreeMap<GrothBasisVec, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &GrothBasisVec) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, b: GrothBasisVec, c: Rational) {
        accumulate(&mut self.terms, b, c);
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.p);
        for (b, v) in &self.terms {
            out.add_term(b.clone(), v * c);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(b, c)| {
                let mut v = b.to_json();
                v["coeff"] = rational_to_json(c);
                v
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(value: &Value, p: Option<u64>) -> Result<Self> {
        let terms = value["terms"]
            .as_array()
            .ok_or_else(|| Error::Parse("expected {\"terms\": [...]}".into()))?;
        let mut out = Self::zero(p);
        for t in terms {
            let parts: Vec<usize> =
                serde_json::from_value(t["lambda"].clone()).map_err(|e| Error::Parse(e.to_string()))?;
            let m = t["m"].as_u64().ok_or_else(|| Error::Parse("missing m".into()))? as usize;
            let b = GrothBasisVec::new(Partition::new(parts)?, m);
            check_label(&b.lambda, p)?;
            out.add_term(b, rational_from_json(&t["coeff"])?);
        }
        Ok(out)
    }

    fn map_basis(&self, mut f: impl FnMut(&GrothBasisVec) -> Result<Vec<(GrothBasisVec, Rational)>>) -> Result<Self> {
        let mut out = Self::zero(self.p);
        for (b, c) in &self.terms {
            for (image, k) in f(b)? {
                out.add_term(image, c * k);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for GrothVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.terms.iter().map(|(b, c)| format!("{c}·{b}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl std::ops::Add for &GrothVector {
    type Output = GrothVector;

    fn add(self, rhs: &GrothVector) -> GrothVector {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(b.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &GrothVector {
    type Output = GrothVector;

    fn sub(self, rhs: &GrothVector) -> GrothVector {
        self + &rhs.scale(&-Rational::one())
    }
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        map.retain(|_, v| !v.is_zero());
    }
}

fn check_label(lambda: &Partition, p: Option<u64>) -> Result<()> {
    match p {
        Some(p) if !lambda.is_p_regular(p) => {
            Err(Error::InvalidArgument(format!("{lambda} is not {p}-regular")))
        }
        _ => Ok(()),
    }
}

fn require_p(v: &GrothVector) -> Result<u64> {
    v.p.filter(|&p| p >= 2)
        .ok_or_else(|| Error::InvalidArgument("Kleshchev operators need a prime p".into()))
}

/// Raw Kleshchev coefficients on `[D^λ]`, before dropping labels that are
/// not `p`-regular. Normal boxes count those weakly right of the removed box
/// in rim order; conormal boxes count those weakly left of the added box.
pub fn kleshchev_terms(lambda: &Partition, i: u64, p: u64, raise: bool) -> Vec<(Partition, usize)> {
    let sig = signature(lambda, i as i64, p);
    if raise {
        sig.conormal()
            .iter()
            .enumerate()
            .map(|(k, cell)| (lambda.with_box_added(cell.row).expect("addable"), k + 1))
            .collect()
    } else {
        let normal = sig.normal();
        let total = normal.len();
        normal
            .iter()
            .enumerate()
            .map(|(k, cell)| (lambda.with_box_removed(cell.row).expect("removable"), total - k))
            .collect()
    }
}

fn kleshchev(i: u64, v: &GrothVector, raise: bool) -> Result<GrothVector> {
    let p = require_p(v)?;
    if i >= p {
        return Err(Error::InvalidArgument(format!("residue {i} out of range for p = {p}")));
    }
    v.map_basis(|b| {
        check_label(&b.lambda, Some(p))?;
        Ok(kleshchev_terms(&b.lambda, i, p, raise)
            .into_iter()
            .filter(|(mu, _)| mu.is_p_regular(p))
            .map(|(mu, c)| (GrothBasisVec::new(mu, b.m), int(c as i64)))
            .collect())
    })
}

/// `[res_i]`, acting as `e_i`.
pub fn kleshchev_res(i: u64, v: &GrothVector) -> Result<GrothVector> {
    kleshchev(i, v, false)
}

/// `[ind_i]`, acting as `f_i`.
pub fn kleshchev_ind(i: u64, v: &GrothVector) -> Result<GrothVector> {
    kleshchev(i, v, true)
}

/// `(λ, i, ν)` where the coefficient rule produces a label `ν` that is not
/// `p`-regular, for `p`-regular `λ` with `|λ| <= max_size`. These are dropped
/// by [`kleshchev_res`] and [`kleshchev_ind`].
pub fn nonregular_outputs(p: u64, max_size: usize) -> Vec<(Partition, u64, Partition)> {
    let mut out = Vec::new();
    for lambda in (0..=max_size).flat_map(partitions_of).filter(|l| l.is_p_regular(p)) {
        for i in 0..p {
            for raise in [false, true] {
                for (nu, _) in kleshchev_terms(&lambda, i, p, raise) {
                    if !nu.is_p_regular(p) {
                        out.push((lambda.clone(), i, nu));
                    }
                }
            }
        }
    }
    out
}

/// Specht-class operators on the Fock space: every `i`-box counts once.
fn fock(i: u64, v: &GrothVector, raise: bool) -> Result<GrothVector> {
    let p = require_p(v)?;
    v.map_basis(|b| {
        let (rem, add) = removable_addable(&b.lambda, Some(i as i64), Some(p));
        let cells = if raise { add } else { rem };
        Ok(cells
            .iter()
            .map(|c| {
                let mu = if raise {
                    b.lambda.with_box_added(c.row)
                } else {
                    b.lambda.with_box_removed(c.row)
                };
                (GrothBasisVec::new(mu.expect("corner"), b.m), Rational::one())
            })
            .collect())
    })
}

/// `[𝔸]`: `(λ, m) ↦ (λ, m - 1)`, zero when `m = 0`.
pub fn op_a(v: &GrothVector) -> GrothVector {
    v.map_basis(|b| {
        Ok(match b.m {
            0 => vec![],
            m => vec![(GrothBasisVec::new(b.lambda.clone(), m - 1), Rational::one())],
        })
    })
    .expect("infallible")
}

/// `[𝔹]`: `(λ, m) ↦ (λ, m + 1)`.
pub fn op_b(v: &GrothVector) -> GrothVector {
    v.map_basis(|b| Ok(vec![(GrothBasisVec::new(b.lambda.clone(), b.m + 1), Rational::one())]))
        .expect("infallible")
}

/// Operator letters accepted by [`apply_word`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrothOp {
    E(u64),
    F(u64),
    A,
    B,
}

impl fmt::Display for GrothOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrothOp::E(i) => write!(f, "e{i}"),
            GrothOp::F(i) => write!(f, "f{i}"),
            GrothOp::A => write!(f, "A"),
            GrothOp::B => write!(f, "B"),
        }
    }
}

impl FromStr for GrothOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let residue = |t: &str| t.parse::<u64>().map_err(|_| Error::Parse(format!("bad operator {s:?}")));
        match s {
            "A" => Ok(GrothOp::A),
            "B" => Ok(GrothOp::B),
            _ if s.starts_with('e') => Ok(GrothOp::E(residue(&s[1..])?)),
            _ if s.starts_with('f') => Ok(GrothOp::F(residue(&s[1..])?)),
            _ => Err(Error::Parse(format!("bad operator {s:?}"))),
        }
    }
}

/// Whitespace-separated operators such as `"f0 f1 e0 B A"`.
pub fn parse_word(text: &str) -> Result<Vec<GrothOp>> {
    text.split_whitespace().map(str::parse).collect()
}

pub fn apply_op(op: GrothOp, v: &GrothVector) -> Result<GrothVector> {
    match op {
        GrothOp::E(i) => kleshchev_res(i, v),
        GrothOp::F(i) => kleshchev_ind(i, v),
        GrothOp::A => Ok(op_a(v)),
        GrothOp::B => Ok(op_b(v)),
    }
}

/// Applies a word as a composition: the rightmost operator acts first.
pub fn apply_word(word: &[GrothOp], v: &GrothVector) -> Result<GrothVector> {
    word.iter().rev().try_fold(v.clone(), |acc, &op| apply_op(op, &acc))
}

/// Which operators stand in for `e_i`, `f_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realization {
    /// The normal/conormal coefficient rule on `p`-regular labels.
    Kleshchev,
    /// Box-adding and box-removing on all partitions.
    Fock,
}

impl Realization {
    pub fn e(self, i: u64, v: &GrothVector) -> Result<GrothVector> {
        match self {
            Realization::Kleshchev => kleshchev_res(i, v),
            Realization::Fock => fock(i, v, false),
        }
    }

    pub fn f(self, i: u64, v: &GrothVector) -> Result<GrothVector> {
        match self {
            Realization::Kleshchev => kleshchev_ind(i, v),
            Realization::Fock => fock(i, v, true),
        }
    }

    fn labels(self, p: u64, size: usize) -> Vec<Partition> {
        let all = partitions_of(size);
        match self {
            Realization::Kleshchev => all.into_iter().filter(|l| l.is_p_regular(p)).collect(),
            Realization::Fock => all,
        }
    }

    /// Predicted eigenvalue of `[e_i, f_i]` on `(λ, m)`.
    fn weight(self, lambda: &Partition, i: u64, p: u64) -> i64 {
        match self {
            Realization::Kleshchev => {
                let sig = signature(lambda, i as i64, p);
                sig.conormal().len() as i64 - sig.normal().len() as i64
            }
            Realization::Fock => {
                let (rem, add) = removable_addable(lambda, Some(i as i64), Some(p));
                add.len() as i64 - rem.len() as i64
            }
        }
    }
}

/// Basis symbols with `|λ| + m <= degree`.
pub fn basis_up_to(p: u64, degree: usize, realization: Realization) -> Vec<GrothBasisVec> {
    let mut out = Vec::new();
    for size in 0..=degree {
        for lambda in realization.labels(p, size) {
            for m in 0..=degree - size {
                out.push(GrothBasisVec::new(lambda.clone(), m));
            }
        }
    }
    out.sort();
    out
}

/// Off-diagonal Cartan entry `a_{ij}` of type `A_{p-1}^{(1)}`.
pub fn cartan_entry(i: u64, j: u64, p: u64) -> i64 {
    if i == j {
        2
    } else if p == 2 {
        -2
    } else if (i + 1) % p == j || (j + 1) % p == i {
        -1
    } else {
        0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationKind {
    /// `[e_i, f_j] = 0` for `i ≠ j`.
    CommutatorOffDiagonal,
    /// `[e_i, f_i]` maps a basis vector to a multiple of itself.
    CommutatorDiagonal,
    SerreE,
    SerreF,
    /// `A ∘ B = Id`.
    AB,
    /// `A` and `B` commute with every `e_i`, `f_i`.
    RankCommute,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RelationKind::CommutatorOffDiagonal => "[e_i,f_j]=0 (i!=j)",
            RelationKind::CommutatorDiagonal => "[e_i,f_i] diagonal",
            RelationKind::SerreE => "Serre (e)",
            RelationKind::SerreF => "Serre (f)",
            RelationKind::AB => "A.B = Id",
            RelationKind::RankCommute => "A, B commute with e_i, f_i",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub kind: RelationKind,
    pub detail: String,
    pub vector: GrothBasisVec,
    pub residual: GrothVector,
}

#[derive(Clone, Debug)]
pub struct LieReport {
    pub p: u64,
    pub degree: usize,
    pub realization: Realization,
    pub vectors_checked: usize,
    pub violations: Vec<Violation>,
    /// `[e_i, f_i]` eigenvalues that differ from the conormal-minus-normal count.
    pub weight_mismatches: Vec<String>,
    /// Some `(λ, 0)` with `B ∘ A ≠ Id`, showing `A` is only a one-sided inverse.
    pub ba_witness: Option<GrothBasisVec>,
}

impl LieReport {
    pub fn count(&self, kind: RelationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty() && self.ba_witness.is_some()
    }

    pub fn to_json(&self) -> Value {
        let mut counts = serde_json::Map::new();
        for kind in [
            RelationKind::CommutatorOffDiagonal,
            RelationKind::CommutatorDiagonal,
            RelationKind::SerreE,
            RelationKind::SerreF,
            RelationKind::AB,
            RelationKind::RankCommute,
        ] {
            counts.insert(kind.to_string(), json!(self.count(kind)));
        }
        let examples: Vec<Value> = self
            .violations
            .iter()
            .take(20)
            .map(|v| json!({ "relation": v.kind.to_string(), "detail": v.detail, "vector": v.vector.to_string(), "residual": v.residual.to_json() }))
            .collect();
        json!({
            "p": self.p,
            "degree": self.degree,
            "realization": format!("{:?}", self.realization),
            "vectors_checked": self.vectors_checked,
            "violation_counts": counts,
            "violation_examples": examples,
            "weight_mismatches": self.weight_mismatches.len(),
            "ba_witness": self.ba_witness.as_ref().map(ToString::to_string),
        })
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// `ad(x_i)^N (x_j) v = Σ_k (-1)^k C(N, k) x_i^{N-k} x_j x_i^k v`.
fn serre(
    apply: &dyn Fn(u64, &GrothVector) -> Result<GrothVector>,
    i: u64,
    j: u64,
    power: i64,
    v: &GrothVector,
) -> Result<GrothVector> {
    let mut total = GrothVector::zero(v.p);
    let mut inner = v.clone();
    for k in 0..=power {
        // inner = x_i^k v
        let mut term = apply(j, &inner)?;
        for _ in 0..power - k {
            term = apply(i, &term)?;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        total = &total + &term.scale(&int(sign * binomial(power, k)));
        inner = apply(i, &inner)?;
    }
    Ok(total)
}

/// Checks the Chevalley, Serre and rank-operator relations on every basis
/// symbol with `|λ| + m <= degree`.
pub fn lie_relation_check(p: u64, degree: usize, realization: Realization) -> Result<LieReport> {
    if !crate::jucysmurphy::is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let basis = basis_up_to(p, degree, realization);
    let mut violations = Vec::new();
    let mut weight_mismatches = Vec::new();
    let mut ba_witness = None;
    let e = |i: u64, v: &GrothVector| realization.e(i, v);
    let f = |i: u64, v: &GrothVector| realization.f(i, v);
    let mut flag = |kind, detail: String, b: &GrothBasisVec, residual: GrothVector| {
        if !residual.is_zero() {
            violations.push(Violation { kind, detail, vector: b.clone(), residual });
        }
    };
    for b in &basis {
        let v = GrothVector { p: Some(p), terms: BTreeMap::from([(b.clone(), Rational::one())]) };
        for i in 0..p {
            for j in 0..p {
                let comm = &e(i, &f(j, &v)?)? - &f(j, &e(i, &v)?)?;
                if i != j {
                    flag(RelationKind::CommutatorOffDiagonal, format!("[e{i},f{j}]"), b, comm);
                    let power = 1 - cartan_entry(i, j, p);
                    flag(RelationKind::SerreE, format!("ad(e{i})^{power} e{j}"), b, serre(&e, i, j, power, &v)?);
                    if b.degree() + (power as usize) < degree {
                        flag(RelationKind::SerreF, format!("ad(f{i})^{power} f{j}"), b, serre(&f, i, j, power, &v)?);
                    }
                } else {
                    let c = comm.coeff(b);
                    let off = &comm - &v.scale(&c);
                    flag(RelationKind::CommutatorDiagonal, format!("[e{i},f{i}]"), b, off);
                    let w = realization.weight(&b.lambda, i, p);
                    if c != int(w) {
                        weight_mismatches.push(format!("[e{i},f{i}] on {b}: {c}, predicted {w}"));
                    }
                }
            }
            for (name, x) in [("e", &e as &dyn Fn(u64, &GrothVector) -> Result<GrothVector>), ("f", &f)] {
                let with_a = &x(i, &op_a(&v))? - &op_a(&x(i, &v)?);
                flag(RelationKind::RankCommute, format!("[{name}{i},A]"), b, with_a);
                let with_b = &x(i, &op_b(&v))? - &op_b(&x(i, &v)?);
                flag(RelationKind::RankCommute, format!("[{name}{i},B]"), b, with_b);
            }
        }
        flag(RelationKind::AB, "AB - Id".into(), b, &op_a(&op_b(&v)) - &v);
        if ba_witness.is_none() && op_b(&op_a(&v)) != v {
            ba_witness = Some(b.clone());
        }
    }
    Ok(LieReport {
        p,
        degree,
        realization,
        vectors_checked: basis.len(),
        violations,
        weight_mismatches,
        ba_witness,
    })
}

/// Simple modules of the bicyclic monoid `⟨a, b | ab = 1⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BicyclicModule {
    /// `V_ℕ`: basis `0, 1, 2, ...` with `b·i = i + 1`, `a·i = i - 1`, `a·0 = 0`.
    Natural,
    /// One-dimensional: `b` acts by `λ`, `a` by `λ^{-1}`.
    Scalar(Rational),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BicyclicGen {
    A,
    B,
}

/// Parses a word over `{a, b}` such as `"aab"`.
pub fn parse_bicyclic_word(text: &str) -> Result<Vec<BicyclicGen>> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'a' => Ok(BicyclicGen::A),
            'b' => Ok(BicyclicGen::B),
            other => Err(Error::Parse(format!("bicyclic generator {other:?}"))),
        })
        .collect()
}

/// Applies a word (rightmost letter first) to basis vector `index`.
/// The result maps basis indices to coefficients.
pub fn bicyclic_action(module: &BicyclicModule, word: &[BicyclicGen], index: usize) -> Result<BTreeMap<usize, Rational>> {
    match module {
        BicyclicModule::Natural => {
            let mut i = Some(index);
            for g in word.iter().rev() {
                i = match (g, i) {
                    (_, None) => None,
                    (BicyclicGen::B, Some(i)) => Some(i + 1),
                    (BicyclicGen::A, Some(0)) => None,
                    (BicyclicGen::A, Some(i)) => Some(i - 1),
                };
            }
            Ok(i.map(|i| (i, Rational::one())).into_iter().collect())
        }
        BicyclicModule::Scalar(lambda) => {
            if lambda.is_zero() {
                return Err(Error::InvalidArgument("V_λ needs λ ≠ 0".into()));
            }
            if index != 0 {
                return Err(Error::InvalidArgument("V_λ is one-dimensional".into()));
            }
            let c = word.iter().fold(Rational::one(), |acc, g| match g {
                BicyclicGen::B => acc * lambda,
                BicyclicGen::A => acc / lambda,
            });
            Ok(BTreeMap::from([(0, c)]))
        }
    }
}

/// Littlewood-Richardson coefficient `c^λ_{μν}`, counting LR tableaux of
/// shape `λ/μ` and content `ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() {
        return 0;
    }
    let rows = lambda.num_rows();
    if mu.num_rows() > rows || (1..=rows).any(|r| mu.row_len(r) > lambda.row_len(r)) {
        return 0;
    }
    // Cells in reading order: rows top to bottom, each right to left.
    let cells: Vec<(usize, usize)> = (1..=rows)
        .flat_map(|r| ((mu.row_len(r) + 1)..=lambda.row_len(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut counts = vec![0usize; nu.num_rows() + 2];

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        mu: &Partition,
        nu: &Partition,
        filling: &mut BTreeMap<(usize, usize), usize>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 1..=nu.num_rows() {
            if counts[v] == nu.row_len(v) {
                continue;
            }
            // Lattice condition on the reverse reading word.
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            // Rows weakly increase left to right.
            if filling.get(&(r, c + 1)).is_some_and(|&right| v > right) {
                continue;
            }
            // Columns strictly increase downwards.
            if r > 1 && c > mu.row_len(r - 1) {
                if let Some(&above) = filling.get(&(r - 1, c)) {
                    if v <= above {
                        continue;
                    }
                }
            }
            filling.insert((r, c), v);
            counts[v] += 1;
            total += fill(k + 1, cells, mu, nu, filling, counts);
            counts[v] -= 1;
            filling.remove(&(r, c));
        }
        total
    }

    fill(0, &cells, mu, nu, &mut filling, &mut counts)
}

/// Two-fold tensors of basis symbols.
pub type Tensor2 = BTreeMap<(GrothBasisVec, GrothBasisVec), Rational>;
/// Three-fold tensors of basis symbols.
pub type Tensor3 = BTreeMap<(GrothBasisVec, GrothBasisVec, GrothBasisVec), Rational>;

fn char0(b: &GrothBasisVec) -> GrothVector {
    GrothVector { p: None, terms: BTreeMap::from([(b.clone(), Rational::one())]) }
}

/// `(λ, m)·(μ, m') = Σ_ν c^ν_{λμ} (ν, m + m')`.
pub fn bialgebra_product(x: &GrothBasisVec, y: &GrothBasisVec) -> GrothVector {
    let mut out = GrothVector::zero(None);
    for nu in partitions_of(x.lambda.size() + y.lambda.size()) {
        let c = lr_coefficient(&nu, &x.lambda, &y.lambda);
        if c > 0 {
            out.add_term(GrothBasisVec::new(nu, x.m + y.m), int(c as i64));
        }
    }
    out
}

/// Bilinear extension of [`bialgebra_product`].
pub fn product(x: &GrothVector, y: &GrothVector) -> GrothVector {
    let mut out = GrothVector::zero(None);
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            let c = ca * cb;
            for (t, k) in bialgebra_product(a, b).terms {
                out.add_term(t, &c * k);
            }
        }
    }
    out
}

/// `Δ(λ, m) = Σ_{m₁+m₂=m} Σ c^λ_{μν} (μ, m₁) ⊗ (ν, m₂)`.
pub fn bialgebra_coproduct(x: &GrothBasisVec) -> Tensor2 {
    let mut out = Tensor2::new();
    let size = x.lambda.size();
    for k in 0..=size {
        for mu in partitions_of(k) {
            for nu in partitions_of(size - k) {
                let c = lr_coefficient(&x.lambda, &mu, &nu);
                if c == 0 {
                    continue;
                }
                for m1 in 0..=x.m {
                    let key = (GrothBasisVec::new(mu.clone(), m1), GrothBasisVec::new(nu.clone(), x.m - m1));
                    accumulate(&mut out, key, int(c as i64));
                }
            }
        }
    }
    out
}

pub fn coproduct(x: &GrothVector) -> Tensor2 {
    let mut out = Tensor2::new();
    for (b, c) in &x.terms {
        for (key, k) in bialgebra_coproduct(b) {
            accumulate(&mut out, key, c * k);
        }
    }
    out
}

/// `ε`: 1 on `(∅, 0)`, 0 on every other basis symbol.
pub fn counit(x: &GrothBasisVec) -> Rational {
    if x.lambda.is_empty() && x.m == 0 {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`, extended bilinearly.
pub fn tensor_product(x: &Tensor2, y: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::new();
    for ((a, b), cx) in x {
        for ((c, d), cy) in y {
            let left = bialgebra_product(a, c);
            let right = bialgebra_product(b, d);
            for (l, kl) in &left.terms {
                for (r, kr) in &right.terms {
                    accumulate(&mut out, (l.clone(), r.clone()), cx * cy * kl * kr);
                }
            }
        }
    }
    out
}

fn coassoc_left(x: &GrothBasisVec) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((a, b), c) in bialgebra_coproduct(x) {
        for ((a1, a2), k) in bialgebra_coproduct(&a) {
            accumulate(&mut out, (a1, a2, b.clone()), &c * k);
        }
    }
    out
}

fn coassoc_right(x: &GrothBasisVec) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((a, b), c) in bialgebra_coproduct(x) {
        for ((b1, b2), k) in bialgebra_coproduct(&b) {
            accumulate(&mut out, (a.clone(), b1, b2), &c * k);
        }
    }
    out
}

/// Pairs of `V(Λ₀) ⊗ V_ℕ` basis labels: a partition and a natural number.
pub type PairVector = BTreeMap<(Partition, usize), Rational>;

/// `Φ(λ, m) = [D^λ] ⊗ m`.
pub fn phi(v: &GrothVector) -> PairVector {
    v.terms.iter().map(|(b, c)| ((b.lambda.clone(), b.m), c.clone())).collect()
}

/// `x ⊗ 1` for `x` one of `e_i`, `f_i` acting on `[D^λ]` alone.
fn pair_lie(i: u64, p: u64, raise: bool, v: &PairVector) -> PairVector {
    let mut out = PairVector::new();
    for ((lambda, m), c) in v {
        for (mu, k) in kleshchev_terms(lambda, i, p, raise) {
            if mu.is_p_regular(p) {
                accumulate(&mut out, (mu, *m), c * int(k as i64));
            }
        }
    }
    out
}

/// `1 ⊗ g` for a bicyclic generator acting on `V_ℕ`.
fn pair_bicyclic(g: BicyclicGen, v: &PairVector) -> Result<PairVector> {
    let mut out = PairVector::new();
    for ((lambda, m), c) in v {
        for (k, coeff) in bicyclic_action(&BicyclicModule::Natural, &[g], *m)? {
            accumulate(&mut out, (lambda.clone(), k), c * coeff);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default)]
pub struct PhiReport {
    pub coassociativity: Vec<String>,
    pub counit: Vec<String>,
    pub unit: Vec<String>,
    pub multiplicativity: Vec<String>,
    pub intertwining: Vec<String>,
    pub pairs_checked: usize,
}

impl PhiReport {
    pub fn is_ok(&self) -> bool {
        self.coassociativity.is_empty()
            && self.counit.is_empty()
            && self.unit.is_empty()
            && self.multiplicativity.is_empty()
            && self.intertwining.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let head = |v: &Vec<String>| json!({ "count": v.len(), "examples": v.iter().take(10).collect::<Vec<_>>() });
        json!({
            "coassociativity": head(&self.coassociativity),
            "counit": head(&self.counit),
            "unit": head(&self.unit),
            "multiplicativity": head(&self.multiplicativity),
            "intertwining": head(&self.intertwining),
            "pairs_checked": self.pairs_checked,
        })
    }
}

fn tensor_to_string(t: &Tensor2) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|((a, b), c)| format!("{c}·{a}⊗{b}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Bialgebra laws in characteristic zero up to `degree`, and the
/// intertwining property of `Φ` for `e_i`, `f_i` (at `p`), `A` and `B`.
pub fn phi_check(p: u64, degree: usize) -> Result<PhiReport> {
    if !crate::jucysmurphy::is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let mut report = PhiReport::default();
    let basis: Vec<GrothBasisVec> = (0..=degree)
        .flat_map(|size| {
            partitions_of(size)
                .into_iter()
                .flat_map(move |l| (0..=degree - size).map(move |m| GrothBasisVec::new(l.clone(), m)))
        })
        .collect();
    let unit = GrothBasisVec::new(Partition::empty(), 0);
    for x in &basis {
        if coassoc_left(x) != coassoc_right(x) {
            report.coassociativity.push(format!("{x}"));
        }
        let delta = bialgebra_coproduct(x);
        let mut left = GrothVector::zero(None);
        let mut right = GrothVector::zero(None);
        for ((a, b), c) in &delta {
            left.add_term(b.clone(), c * counit(a));
            right.add_term(a.clone(), c * counit(b));
        }
        if left != char0(x) || right != char0(x) {
            report.counit.push(format!("{x}: (ε⊗1)Δ = {left}, (1⊗ε)Δ = {right}"));
        }
        if bialgebra_product(&unit, x) != char0(x) || bialgebra_product(x, &unit) != char0(x) {
            report.unit.push(format!("{x}"));
        }
    }
    for x in &basis {
        for y in basis.iter().filter(|y| x.degree() + y.degree() <= degree) {
            report.pairs_checked += 1;
            let lhs = coproduct(&bialgebra_product(x, y));
            let rhs = tensor_product(&bialgebra_coproduct(x), &bialgebra_coproduct(y));
            if lhs != rhs {
                report.multiplicativity.push(format!(
                    "Δ({x}·{y}) = {} but Δ({x})Δ({y}) = {}",
                    tensor_to_string(&lhs),
                    tensor_to_string(&rhs)
                ));
            }
        }
    }
    for b in basis_up_to(p, degree, Realization::Kleshchev) {
        let v = GrothVector::basis(b.clone(), Some(p))?;
        let image = phi(&v);
        let mut check = |name: String, lhs: PairVector, rhs: PairVector| {
            if lhs != rhs {
                report.intertwining.push(format!("{name} on {b}"));
            }
        };
        for i in 0..p {
            check(format!("Φ∘e{i}"), phi(&kleshchev_res(i, &v)?), pair_lie(i, p, false, &image));
            check(format!("Φ∘f{i}"), phi(&kleshchev_ind(i, &v)?), pair_lie(i, p, true, &image));
        }
        check("Φ∘A".into(), phi(&op_a(&v)), pair_bicyclic(BicyclicGen::A, &image)?);
        check("Φ∘B".into(), phi(&op_b(&v)), pair_bicyclic(BicyclicGen::B, &image)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bv(parts: &[usize], m: usize) -> GrothBasisVec {
        GrothBasisVec::new(part(parts), m)
    }

    fn vec_p(parts: &[usize], m: usize, p: u64) -> GrothVector {
        GrothVector::basis(bv(parts, m), Some(p)).unwrap()
    }

    fn single(parts: &[usize], m: usize, c: i64, p: Option<u64>) -> GrothVector {
        let mut v = GrothVector::zero(p);
        v.add_term(bv(parts, m), int(c));
        v
    }

    #[test]
    fn res_examples() {
        assert_eq!(kleshchev_res(0, &vec_p(&[1], 0, 2)).unwrap(), single(&[], 0, 1, Some(2)));
        assert!(kleshchev_res(1, &vec_p(&[1], 0, 2)).unwrap().is_zero());
        for i in 0..3 {
            assert!(kleshchev_res(i, &vec_p(&[], 4, 3)).unwrap().is_zero());
        }
        assert!(kleshchev_res(0, &single(&[1, 1], 0, 1, Some(2))).is_err());
        assert!(kleshchev_res(2, &vec_p(&[1], 0, 2)).is_err());
    }

    #[test]
    fn ind_examples() {
        assert_eq!(kleshchev_ind(0, &vec_p(&[], 3, 2)).unwrap(), single(&[1], 3, 1, Some(2)));
        assert!(kleshchev_ind(1, &vec_p(&[], 3, 2)).unwrap().is_zero());
        assert_eq!(kleshchev_ind(1, &vec_p(&[1], 0, 3)).unwrap(), single(&[2], 0, 1, Some(3)));
    }

    #[test]
    fn conormal_coefficients_count_from_the_left() {
        // p = 3, λ = (2): addable (2,1) and (1,3) both have residue 2, read in that order.
        let out = kleshchev_ind(2, &vec_p(&[2], 0, 3)).unwrap();
        assert_eq!(out.coeff(&bv(&[2, 1], 0)), int(1));
        assert_eq!(out.coeff(&bv(&[3], 0)), int(2));
    }

    #[test]
    fn residue_one_normals_at_p2() {
        // λ = (2,1), p = 2: removable (2,1) and (1,2) both have residue 1, raw "--".
        let terms = kleshchev_terms(&part(&[2, 1]), 1, 2, false);
        assert_eq!(terms, vec![(part(&[2]), 2), (part(&[1, 1]), 1)]);
        let out = kleshchev_res(1, &vec_p(&[2, 1], 0, 2)).unwrap();
        assert_eq!(out, single(&[2], 0, 2, Some(2)));
    }

    #[test]
    fn rank_operators() {
        for b in basis_up_to(3, 4, Realization::Kleshchev) {
            let v = GrothVector::basis(b.clone(), Some(3)).unwrap();
            assert_eq!(op_a(&op_b(&v)), v);
            if b.m == 0 {
                assert!(op_a(&v).is_zero());
                assert!(op_b(&op_a(&v)).is_zero());
            }
        }
    }

    #[test]
    fn words_apply_right_to_left() {
        let start: GrothBasisVec = "[]:0".parse().unwrap();
        let v = GrothVector::basis(start, Some(2)).unwrap();
        let word = parse_word("A f0").unwrap();
        assert_eq!(word, vec![GrothOp::A, GrothOp::F(0)]);
        assert!(apply_word(&word, &v).unwrap().is_zero());
        let out = apply_word(&parse_word("f0 B").unwrap(), &v).unwrap();
        assert_eq!(out, single(&[1], 1, 1, Some(2)));
        assert!(parse_word("g1").is_err());
        assert!("[2,1]".parse::<GrothBasisVec>().is_err());
        assert_eq!("[2,1]:3".parse::<GrothBasisVec>().unwrap(), bv(&[2, 1], 3));
    }

    #[test]
    fn json_round_trip() {
        let mut v = single(&[1, 1], 1, 3, Some(3));
        v.add_term(bv(&[1], 0), rational(-1, 2));
        let j = v.to_json();
        assert_eq!(j["terms"][0]["lambda"], json!([1]));
        assert_eq!(j["terms"][0]["coeff"], json!(["-1", "2"]));
        assert_eq!(GrothVector::from_json(&j, Some(3)).unwrap(), v);
        assert!(GrothVector::from_json(&j, Some(2)).is_err());
    }

    #[test]
    fn commutator_example() {
        let v = vec_p(&[1], 0, 2);
        let lhs = kleshchev_res(0, &kleshchev_ind(1, &v).unwrap()).unwrap();
        let rhs = kleshchev_ind(1, &kleshchev_res(0, &v).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fock_space_satisfies_relations() {
        for p in [2, 3] {
            let report = lie_relation_check(p, 6, Realization::Fock).unwrap();
            assert!(report.is_ok(), "p={p}: {:?}", report.to_json());
            assert!(report.weight_mismatches.is_empty());
        }
    }

    #[test]
    fn rank_relations_hold_for_kleshchev_rule() {
        for p in [2, 3] {
            let report = lie_relation_check(p, 5, Realization::Kleshchev).unwrap();
            assert_eq!(report.count(RelationKind::AB), 0);
            assert_eq!(report.count(RelationKind::RankCommute), 0);
            assert!(report.ba_witness.is_some());
        }
    }

    #[test]
    fn cartan() {
        assert_eq!(cartan_entry(0, 1, 2), -2);
        assert_eq!(cartan_entry(0, 2, 3), -1);
        assert_eq!(cartan_entry(0, 2, 5), 0);
        assert_eq!(cartan_entry(4, 0, 5), -1);
    }

    #[test]
    fn bicyclic() {
        let a = BicyclicGen::A;
        let b = BicyclicGen::B;
        assert!(bicyclic_action(&BicyclicModule::Natural, &[a], 0).unwrap().is_empty());
        for i in 0..=10 {
            let out = bicyclic_action(&BicyclicModule::Natural, &[a, b], i).unwrap();
            assert_eq!(out, BTreeMap::from([(i, Rational::one())]));
        }
        assert!(bicyclic_action(&BicyclicModule::Natural, &[b, a], 0).unwrap().is_empty());
        let two = BicyclicModule::Scalar(int(2));
        assert_eq!(bicyclic_action(&two, &[b], 0).unwrap()[&0], int(2));
        assert_eq!(bicyclic_action(&two, &[a], 0).unwrap()[&0], rational(1, 2));
        assert!(bicyclic_action(&BicyclicModule::Scalar(int(0)), &[a], 0).is_err());
        assert_eq!(parse_bicyclic_word("ab").unwrap(), vec![a, b]);
    }

    /// `χ^λ(ρ)` by the Murnaghan-Nakayama rule on beta-sets.
    fn mn_character(lambda: &Partition, rho: &[usize]) -> i64 {
        let Some((&k, rest)) = rho.split_first() else {
            return i64::from(lambda.is_empty());
        };
        let len = lambda.num_rows();
        let betas: Vec<i64> = (1..=len).map(|i| (lambda.row_len(i) + len - i) as i64).collect();
        let mut total = 0;
        for (idx, &beta) in betas.iter().enumerate() {
            let target = beta - k as i64;
            if target < 0 || betas.contains(&target) {
                continue;
            }
            let height = betas.iter().filter(|&&b| b > target && b < beta).count();
            let mut next = betas.clone();
            next[idx] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let parts: Vec<usize> = next
                .iter()
                .enumerate()
                .map(|(i, &b)| (b - (len - 1 - i) as i64) as usize)
                .filter(|&x| x > 0)
                .collect();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * mn_character(&Partition::new(parts).unwrap(), rest);
        }
        total
    }

    /// Size of the centralizer of a permutation of cycle type `ρ`.
    fn z(rho: &Partition) -> Rational {
        let mut counts = BTreeMap::new();
        for &part in rho.parts() {
            *counts.entry(part).or_insert(0u64) += 1;
        }
        let value: u64 = counts
            .iter()
            .map(|(&part, &mult)| (part as u64).pow(mult as u32) * (1..=mult).product::<u64>())
            .product();
        int(value as i64)
    }

    /// `⟨χ^λ↓, χ^μ × χ^ν⟩` over `S_a × S_b`.
    fn induced_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> Rational {
        let mut total = Rational::zero();
        for alpha in partitions_of(mu.size()) {
            for beta in partitions_of(nu.size()) {
                let mut joined: Vec<usize> = alpha.parts().iter().chain(beta.parts()).copied().collect();
                joined.sort_unstable_by(|a, b| b.cmp(a));
                let value = mn_character(lambda, &joined) * mn_character(mu, alpha.parts()) * mn_character(nu, beta.parts());
                total += int(value) / (z(&alpha) * z(&beta));
            }
        }
        total
    }

    #[test]
    fn mn_sanity() {
        assert_eq!(mn_character(&part(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(mn_character(&part(&[2, 1]), &[3]), -1);
        assert_eq!(mn_character(&part(&[1, 1, 1]), &[2, 1]), -1);
    }

    #[test]
    fn lr_matches_induced_characters() {
        for n in 0..=4 {
            for lambda in partitions_of(n) {
                for k in 0..=n {
                    for mu in partitions_of(k) {
                        for nu in partitions_of(n - k) {
                            let c = lr_coefficient(&lambda, &mu, &nu);
                            assert_eq!(int(c as i64), induced_oracle(&lambda, &mu, &nu), "{lambda} {mu} {nu}");
                        }
                    }
                }
            }
        }
        assert_eq!(lr_coefficient(&part(&[3, 2, 1]), &part(&[2, 1]), &part(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&part(&[2]), &part(&[1]), &part(&[2])), 0);
    }

    #[test]
    fn product_examples() {
        let out = bialgebra_product(&bv(&[1], 0), &bv(&[1], 0));
        let mut want = single(&[2], 0, 1, None);
        want.add_term(bv(&[1, 1], 0), int(1));
        assert_eq!(out, want);
        assert_eq!(bialgebra_product(&bv(&[], 0), &bv(&[2, 1], 3)), single(&[2, 1], 3, 1, None));
        assert_eq!(bialgebra_product(&bv(&[1], 1), &bv(&[], 2)), single(&[1], 3, 1, None));
    }

    #[test]
    fn coproduct_examples() {
        let d = bialgebra_coproduct(&bv(&[], 1));
        assert_eq!(d.len(), 2);
        assert_eq!(d[&(bv(&[], 0), bv(&[], 1))], int(1));
        assert_eq!(d[&(bv(&[], 1), bv(&[], 0))], int(1));
        let d = bialgebra_coproduct(&bv(&[1], 0));
        assert_eq!(d.keys().cloned().collect::<Vec<_>>(), vec![(bv(&[], 0), bv(&[1], 0)), (bv(&[1], 0), bv(&[], 0))]);
        assert_eq!(counit(&bv(&[], 0)), int(1));
        assert_eq!(counit(&bv(&[], 1)), int(0));
        assert_eq!(counit(&bv(&[1], 0)), int(0));
        assert_eq!(coassoc_left(&bv(&[], 2)).len(), 6);
        assert_eq!(coassoc_left(&bv(&[], 2)), coassoc_right(&bv(&[], 2)));
    }

    #[test]
    fn multiplicativity_on_partitions() {
        let x = bv(&[1], 0);
        let lhs = coproduct(&bialgebra_product(&x, &x));
        let rhs = tensor_product(&bialgebra_coproduct(&x), &bialgebra_coproduct(&x));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn slack_coproduct_is_not_multiplicative() {
        let x = bv(&[], 1);
        let lhs = coproduct(&bialgebra_product(&x, &x));
        let rhs = tensor_product(&bialgebra_coproduct(&x), &bialgebra_coproduct(&x));
        assert_eq!(lhs[&(x.clone(), x.clone())], int(1));
        assert_eq!(rhs[&(x.clone(), x.clone())], int(2));
    }

    #[test]
    fn phi_report_shape() {
        let report = phi_check(2, 3).unwrap();
        assert!(report.coassociativity.is_empty());
        assert!(report.counit.is_empty());
        assert!(report.unit.is_empty());
        assert!(report.intertwining.is_empty());
        assert!(!report.multiplicativity.is_empty());
        assert!(phi_check(4, 2).is_err());
    }

    mod props {
        use super::*;
        use crate::combinatorics::partitions_of;
        use proptest::prelude::*;

        fn partition() -> impl Strategy<Value = Partition> {
            (0usize..7).prop_flat_map(|n| {
                let all = partitions_of(n);
                (0..all.len()).prop_map(move |k| all[k].clone())
            })
        }

        proptest! {
            #[test]
            fn a_undoes_b(lambda in partition(), m in 0usize..5) {
                let v = GrothVector::basis(GrothBasisVec::new(lambda, m), None).unwrap();
                prop_assert_eq!(op_a(&op_b(&v)), v);
            }

            #[test]
            fn lr_symmetric(mu in partition(), nu in partition()) {
                for lambda in partitions_of(mu.size() + nu.size()) {
                    prop_assert_eq!(lr_coefficient(&lambda, &mu, &nu), lr_coefficient(&lambda, &nu, &mu));
                }
            }

            #[test]
            fn induction_stays_regular(lambda in partition(), p in prop::sample::select(vec![2u64, 3, 5]), i in 0u64..5) {
                prop_assume!(i < p && lambda.is_p_regular(p));
                let v = GrothVector::basis(GrothBasisVec::new(lambda.clone(), 0), Some(p)).unwrap();
                let w = kleshchev_ind(i, &v).unwrap();
                for (b, c) in w.terms() {
                    prop_assert!(b.lambda.is_p_regular(p));
                    prop_assert_eq!(b.lambda.size(), lambda.size() + 1);
                    prop_assert!(*c > Rational::zero());
                }
            }
        }
    }
}
