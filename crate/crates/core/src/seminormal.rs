//! Seminormal irreducible representations of `C_r ≀ S_n` and `C_r ≀ R_n`,
//! the induced-module oracle, the Gelfand model and spectral decomposition.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;
use serde_json::{json, Value};

use crate::combinatorics::{enumerate_tableaux, Multipartition, MultiTableau, Partition};
use crate::error::{Error, Result};
use crate::exactnum::{CycElem, CycMatrix, Rational};
use crate::jucysmurphy::jm_elements;
use crate::monoid::{enumerate_elements, AlgebraElem, RookElem};

/// A monoid generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    P,
    Q,
    /// Adjacent transposition `s_j`, 1-based.
    S(usize),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::P => write!(f, "P"),
            Gen::Q => write!(f, "Q"),
            Gen::S(j) => write!(f, "s{j}"),
        }
    }
}

/// A word `g_1 g_2 ... g_m`, read as the matrix product in that order.
pub type Word = Vec<Gen>;

pub fn word_to_string(w: &[Gen]) -> String {
    w.iter().map(Gen::to_string).collect::<Vec<_>>().join(" ")
}

/// Product of a word in `C_r ≀ R_n`.
pub fn word_product(w: &[Gen], n: usize, r: usize) -> RookElem {
    w.iter().fold(RookElem::identity(n, r), |acc, g| {
        let m = match *g {
            Gen::P => RookElem::gen_p(n, r),
            Gen::Q => RookElem::gen_q(n, r),
            Gen::S(j) => RookElem::gen_s(n, r, j),
        };
        &acc * &m
    })
}

/// The transposition `(1, k)` as `s_1 s_2 ... s_{k-1} ... s_2 s_1`.
fn transposition_word(k: usize) -> Word {
    if k <= 1 {
        return Vec::new();
    }
    let mut w: Word = (1..k).map(Gen::S).collect();
    w.extend((1..k - 1).rev().map(Gen::S));
    w
}

/// Writes a full-rank `π ∈ C_r ≀ S_n` as a word in `Q` and the `s_j`.
///
/// `π = Pm · D` with `Pm` a permutation matrix and `D` diagonal. `Pm` is
/// sorted by adjacent transpositions; each diagonal factor `ξ^a` at `(k, k)`
/// is written as `(1,k) Q^a (1,k)`.
pub fn group_factorize(pi: &RookElem) -> Result<Word> {
    if !pi.is_full_rank() {
        return Err(Error::InvalidArgument(format!("{pi} is not invertible")));
    }
    let n = pi.n();
    let mut perm: Vec<usize> = pi.cols().iter().map(|c| c.unwrap().0).collect();
    let mut pos = vec![0; n];
    for (j, &row) in perm.iter().enumerate() {
        pos[row] = j;
    }
    let mut word = Word::new();
    // Left-multiplying by s_{v+1} swaps the values v and v+1.
    while let Some(v) = (0..n.saturating_sub(1)).find(|&v| pos[v + 1] < pos[v]) {
        word.push(Gen::S(v + 1));
        perm.swap(pos[v], pos[v + 1]);
        pos.swap(v, v + 1);
    }
    for (k, c) in pi.cols().iter().enumerate() {
        let label = c.unwrap().1;
        if label != 0 {
            let t = transposition_word(k + 1);
            word.extend(&t);
            word.extend(std::iter::repeat_n(Gen::Q, label));
            word.extend(&t);
        }
    }
    Ok(word)
}

/// Writes any `σ ∈ C_r ≀ R_n` as a word: `σ = g · e_B` where `g` is a
/// full-rank extension of `σ` and `e_B = Π_{k∈B} (1,k) P (1,k)`.
pub fn element_word(sigma: &RookElem) -> Word {
    let n = sigma.n();
    let mut used = vec![false; n];
    for &(row, _) in sigma.cols().iter().flatten() {
        used[row] = true;
    }
    let mut free = (0..n).filter(|&row| !used[row]);
    let cols: Vec<Option<(usize, usize)>> = sigma
        .cols()
        .iter()
        .map(|c| c.or_else(|| Some((free.next().expect("enough free rows"), 0))))
        .collect();
    let g = RookElem::new(n, sigma.r(), cols).expect("full-rank extension");
    let mut word = group_factorize(&g).expect("full rank");
    for (k, c) in sigma.cols().iter().enumerate() {
        if c.is_none() {
            let t = transposition_word(k + 1);
            word.extend(&t);
            word.push(Gen::P);
            word.extend(&t);
        }
    }
    word
}

/// Matrices of the generators on some module of `C_r ≀ R_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrices {
    pub n: usize,
    pub r: usize,
    pub dim: usize,
    /// Absent for group representations and for `n = 0`.
    pub p: Option<CycMatrix>,
    /// Absent for `n = 0`.
    pub q: Option<CycMatrix>,
    /// `s[j-1]` is the matrix of `s_j`.
    pub s: Vec<CycMatrix>,
}

impl GeneratorMatrices {
    pub fn generator(&self, g: Gen) -> Result<&CycMatrix> {
        let missing = || Error::InvalidArgument(format!("generator {g} does not act on this module"));
        match g {
            Gen::P => self.p.as_ref().ok_or_else(missing),
            Gen::Q => self.q.as_ref().ok_or_else(missing),
            Gen::S(j) => self.s.get(j.wrapping_sub(1)).ok_or_else(missing),
        }
    }

    /// `ρ(g_1) ρ(g_2) ... ρ(g_m)`, accumulated from the right so every product
    /// has a sparse generator on the left.
    pub fn word_matrix(&self, w: &[Gen]) -> Result<CycMatrix> {
        let mut acc = CycMatrix::identity(self.dim, self.r);
        for &g in w.iter().rev() {
            acc = self.generator(g)? * &acc;
        }
        Ok(acc)
    }

    pub fn element_matrix(&self, sigma: &RookElem) -> Result<CycMatrix> {
        self.check_elem(sigma)?;
        self.word_matrix(&element_word(sigma))
    }

    pub fn algebra_matrix(&self, x: &AlgebraElem) -> Result<CycMatrix> {
        ElementCache::new(self).algebra_matrix(x)
    }

    fn check_elem(&self, sigma: &RookElem) -> Result<()> {
        if (sigma.n(), sigma.r()) != (self.n, self.r) {
            return Err(Error::SizeMismatch(format!(
                "element of C_{} wr R_{} on a module for C_{} wr R_{}",
                sigma.r(),
                sigma.n(),
                self.r,
                self.n
            )));
        }
        Ok(())
    }

    /// Restriction along `C_r ≀ R_{n-1} ⊂ C_r ≀ R_n` (last diagonal entry 1):
    /// keeps `P`, `Q` and `s_1, ..., s_{n-2}`.
    pub fn restrict(&self) -> Result<GeneratorMatrices> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("cannot restrict a module for n = 0".into()));
        }
        let m = self.n - 1;
        Ok(GeneratorMatrices {
            n: m,
            r: self.r,
            dim: self.dim,
            p: if m == 0 { None } else { self.p.clone() },
            q: if m == 0 { None } else { self.q.clone() },
            s: self.s[..m.saturating_sub(1)].to_vec(),
        })
    }

    pub fn direct_sum(parts: &[&GeneratorMatrices]) -> Result<GeneratorMatrices> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty direct sum".into()))?;
        if parts.iter().any(|g| (g.n, g.r) != (first.n, first.r)) {
            return Err(Error::SizeMismatch("direct sum of modules for different monoids".into()));
        }
        let r = first.r;
        let sum = |pick: &dyn Fn(&GeneratorMatrices) -> Option<&CycMatrix>| -> Option<CycMatrix> {
            let blocks: Option<Vec<CycMatrix>> = parts.iter().map(|g| pick(g).cloned()).collect();
            blocks.map(|b| CycMatrix::direct_sum(&b, r))
        };
        Ok(GeneratorMatrices {
            n: first.n,
            r,
            dim: parts.iter().map(|g| g.dim).sum(),
            p: sum(&|g| g.p.as_ref()),
            q: sum(&|g| g.q.as_ref()),
            s: (1..first.n)
                .map(|j| sum(&|g| g.s.get(j - 1)).expect("all modules have s_j"))
                .collect(),
        })
    }

    pub fn to_json(&self) -> Value {
        json!({ "P": self.p, "Q": self.q, "s": self.s })
    }
}

/// Memoizes element matrices while evaluating many algebra elements.
pub struct ElementCache<'a> {
    gens: &'a GeneratorMatrices,
    cache: RefCell<HashMap<RookElem, CycMatrix>>,
}

impl<'a> ElementCache<'a> {
    pub fn new(gens: &'a GeneratorMatrices) -> Self {
        ElementCache {
            gens,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn element_matrix(&self, sigma: &RookElem) -> Result<CycMatrix> {
        if let Some(m) = self.cache.borrow().get(sigma) {
            return Ok(m.clone());
        }
        let m = self.gens.element_matrix(sigma)?;
        self.cache.borrow_mut().insert(sigma.clone(), m.clone());
        Ok(m)
    }

    pub fn algebra_matrix(&self, x: &AlgebraElem) -> Result<CycMatrix> {
        let mut acc = CycMatrix::zero(self.gens.dim, self.gens.dim, self.gens.r);
        for (sigma, c) in x.terms() {
            acc = &acc + &self.element_matrix(sigma)?.scale(c);
        }
        Ok(acc)
    }
}

/// An irreducible representation in its Gelfand-Zeitlin basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub label: Multipartition,
    /// Basis `𝒴(λ, n)` in canonical order.
    pub basis: Vec<MultiTableau>,
    pub gens: GeneratorMatrices,
}

impl Representation {
    pub fn n(&self) -> usize {
        self.gens.n
    }

    pub fn r(&self) -> usize {
        self.gens.r
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, t: &MultiTableau) -> Option<usize> {
        self.basis.binary_search(t).ok()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label.to_json(),
            "basis": self.basis.iter().map(MultiTableau::to_json).collect::<Vec<_>>(),
            "matrices": self.gens.to_json(),
        })
    }
}

/// Matrix whose column `j` is `f(basis[j])`, a list of (tableau, coefficient).
fn assemble(
    basis: &[MultiTableau],
    r: usize,
    f: impl Fn(&MultiTableau) -> Vec<(MultiTableau, CycElem)>,
) -> CycMatrix {
    let d = basis.len();
    let mut m = CycMatrix::zero(d, d, r);
    for (j, t) in basis.iter().enumerate() {
        for (u, c) in f(t) {
            let i = basis.binary_search(&u).expect("image lies in the basis");
            let v = m.get(i, j) + &c;
            m.set(i, j, v);
        }
    }
    m
}

/// `s_j` on `w_L` when `j, j+1 ∈ L`: either `w_{s_j L}` or
/// `a w_L + (1 + a) w_{s_j L}`, with `w_{s_j L} = 0` off the basis.
fn seminormal_pair(t: &MultiTableau, j: usize, r: usize) -> Vec<(MultiTableau, CycElem)> {
    let swapped = t.swap(j);
    let same = t.position(j).unwrap().component == t.position(j + 1).unwrap().component;
    if !same {
        return vec![(swapped.expect("different components always swap"), CycElem::one(r))];
    }
    let a: Rational = t.axial_coefficient(j).expect("same component");
    let mut out = vec![(t.clone(), CycElem::from_rational(r, a.clone()))];
    if let Some(u) = swapped {
        out.push((u, CycElem::from_rational(r, a + Rational::one())));
    }
    out
}

fn q_action(t: &MultiTableau, r: usize) -> Vec<(MultiTableau, CycElem)> {
    let c = match t.position(1) {
        Some(_) => t.sign(1, r),
        None => CycElem::one(r),
    };
    vec![(t.clone(), c)]
}

/// Irreducible representation `W_λ` of `C_r ≀ S_n`, `n = |λ|`.
pub fn symgroup_irrep(lambda: &Multipartition) -> Result<Representation> {
    let n = lambda.size();
    let r = lambda.r();
    let basis = enumerate_tableaux(lambda, n)?;
    let s = (1..n)
        .map(|j| assemble(&basis, r, |t| seminormal_pair(t, j, r)))
        .collect();
    let q = (n > 0).then(|| assemble(&basis, r, |t| q_action(t, r)));
    let dim = basis.len();
    Ok(Representation {
        label: lambda.clone(),
        basis,
        gens: GeneratorMatrices { n, r, dim, p: None, q, s },
    })
}

/// Irreducible representation `V_λ^n` of `C_r ≀ R_n`, `|λ| <= n`.
pub fn rook_irrep(lambda: &Multipartition, n: usize) -> Result<Representation> {
    let r = lambda.r();
    let basis = enumerate_tableaux(lambda, n)?;
    let s = (1..n)
        .map(|j| {
            assemble(&basis, r, |t| match (t.contains(j), t.contains(j + 1)) {
                (false, false) => vec![(t.clone(), CycElem::one(r))],
                (true, true) => seminormal_pair(t, j, r),
                _ => vec![(t.swap(j).expect("one of j, j+1 absent"), CycElem::one(r))],
            })
        })
        .collect();
    let p = (n > 0).then(|| {
        assemble(&basis, r, |t| {
            if t.contains(1) {
                Vec::new()
            } else {
                vec![(t.clone(), CycElem::one(r))]
            }
        })
    });
    let q = (n > 0).then(|| assemble(&basis, r, |t| q_action(t, r)));
    let dim = basis.len();
    Ok(Representation {
        label: lambda.clone(),
        basis,
        gens: GeneratorMatrices { n, r, dim, p, q, s },
    })
}

/// The action of `C_r ≀ R_n` on `V_λ^n = ℂ𝕃_i ⊗ W_λ`, computed from the
/// tensor-product construction rather than from closed formulas: for
/// `v_L = h_Z ⊗ w_{L'}`, `σ v_L = h_{Z'} ⊗ π w_{L'}` with
/// `π = h_{Z'}ᵗ σ h_Z ∈ C_r ≀ S_i`, or zero when `Z ⊄ dom σ`.
pub struct InducedOracle {
    n: usize,
    r: usize,
    basis: Vec<MultiTableau>,
    group: Representation,
    cache: RefCell<HashMap<RookElem, CycMatrix>>,
}

impl InducedOracle {
    pub fn new(lambda: &Multipartition, n: usize) -> Result<Self> {
        Ok(InducedOracle {
            n,
            r: lambda.r(),
            basis: enumerate_tableaux(lambda, n)?,
            group: symgroup_irrep(lambda)?,
            cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn basis(&self) -> &[MultiTableau] {
        &self.basis
    }

    fn group_matrix(&self, pi: &RookElem) -> Result<CycMatrix> {
        if let Some(m) = self.cache.borrow().get(pi) {
            return Ok(m.clone());
        }
        let m = self.group.gens.word_matrix(&group_factorize(pi)?)?;
        self.cache.borrow_mut().insert(pi.clone(), m.clone());
        Ok(m)
    }

    /// `σ v_L` for `L = basis[index]`, as a coefficient vector.
    pub fn act(&self, sigma: &RookElem, index: usize) -> Result<Vec<CycElem>> {
        if (sigma.n(), sigma.r()) != (self.n, self.r) {
            return Err(Error::SizeMismatch(format!(
                "element of C_{} wr R_{} acting on a module for C_{} wr R_{}",
                sigma.r(),
                sigma.n(),
                self.r,
                self.n
            )));
        }
        let t = self
            .basis
            .get(index)
            .ok_or_else(|| Error::InvalidArgument(format!("basis index {index} out of range")))?;
        let mut out = vec![CycElem::zero(self.r); self.basis.len()];
        let (standard, z) = t.standardize();
        let mut images = Vec::with_capacity(z.len());
        for &zl in &z {
            match sigma.apply(zl - 1) {
                Some((row, label)) => images.push((row + 1, label)),
                None => return Ok(out),
            }
        }
        let mut z_new: Vec<usize> = images.iter().map(|&(row, _)| row).collect();
        z_new.sort_unstable();
        let i = z.len();
        let cols = images
            .iter()
            .map(|&(row, label)| Some((z_new.binary_search(&row).unwrap(), label)))
            .collect();
        let pi = RookElem::new(i, self.r, cols)?;
        let g = self.group_matrix(&pi)?;
        let col = self.group.index_of(&standard).expect("standard tableau in the group basis");
        for (k, u) in self.group.basis.iter().enumerate() {
            let c = g.get(k, col);
            if c.is_zero() {
                continue;
            }
            let target = u.relabel(&z_new, self.n);
            let idx = self.basis.binary_search(&target).expect("relabelled tableau in basis");
            out[idx] += c;
        }
        Ok(out)
    }

    /// The full matrix of `σ`, column by column.
    pub fn matrix(&self, sigma: &RookElem) -> Result<CycMatrix> {
        let columns = (0..self.basis.len())
            .map(|j| self.act(sigma, j))
            .collect::<Result<Vec<_>>>()?;
        Ok(CycMatrix::from_columns(self.basis.len(), self.r, &columns))
    }
}

/// One-shot form of [`InducedOracle::act`].
pub fn act_oracle(lambda: &Multipartition, n: usize, sigma: &RookElem, index: usize) -> Result<Vec<CycElem>> {
    InducedOracle::new(lambda, n)?.act(sigma, index)
}

/// The module spanned by symmetric elements of `C_r ≀ R_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GelfandModel {
    pub basis: Vec<RookElem>,
    pub gens: GeneratorMatrices,
}

/// `(i, i+1) ∈ pa(M)`: column `i` sits in row `i+1` and column `i+1` in row `i`.
fn adjacent_pair(m: &RookElem, i: usize) -> bool {
    m.apply(i - 1).map(|c| c.0) == Some(i) && m.apply(i).map(|c| c.0) == Some(i - 1)
}

/// The symmetric-matrix module with
/// `s_i · M = ±s_i M s_i` (minus iff `(i, i+1) ∈ pa(M)`),
/// `Q · M = Q M Q⁻¹`, and `P · M = M` if the first row of `M` vanishes, else 0.
///
/// For `r >= 3` conjugation by `Q` does not preserve symmetric matrices and
/// the construction is rejected.
pub fn gelfand_model(n: usize, r: usize) -> Result<GelfandModel> {
    let basis: Vec<RookElem> = enumerate_elements(n, r)?
        .into_iter()
        .filter(RookElem::is_symmetric)
        .collect();
    let dim = basis.len();
    let index = |m: &RookElem| -> Result<usize> {
        basis.binary_search(m).map_err(|_| {
            Error::InvalidArgument(format!(
                "{m} is not symmetric: the Q-conjugation action does not preserve symmetric matrices for r = {r}"
            ))
        })
    };
    let build = |f: &dyn Fn(&RookElem) -> Option<(RookElem, i64)>| -> Result<CycMatrix> {
        let mut mat = CycMatrix::zero(dim, dim, r);
        for (j, m) in basis.iter().enumerate() {
            if let Some((image, sign)) = f(m) {
                mat.set(index(&image)?, j, CycElem::from_int(r, sign));
            }
        }
        Ok(mat)
    };
    let s = (1..n)
        .map(|i| {
            let si = RookElem::gen_s(n, r, i);
            build(&|m| {
                let sign = if adjacent_pair(m, i) { -1 } else { 1 };
                Some((&(&si * m) * &si, sign))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let (p, q) = if n == 0 {
        (None, None)
    } else {
        let q_el = RookElem::gen_q(n, r);
        let q_inv = q_el.transpose();
        let q = build(&|m| Some((&(&q_el * m) * &q_inv, 1)))?;
        let p = build(&|m| {
            let first_row_zero = m.cols().iter().flatten().all(|&(row, _)| row != 0);
            first_row_zero.then(|| (m.clone(), 1))
        })?;
        (Some(p), Some(q))
    };
    Ok(GelfandModel {
        basis,
        gens: GeneratorMatrices { n, r, dim, p, q, s },
    })
}

/// Joint eigenvalue profile of one Gelfand-Zeitlin vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Profile {
    /// Component of each entry (0-based), `None` if absent.
    components: Vec<Option<usize>>,
    contents: Vec<i64>,
}

/// Rebuilds the unique tableau with the given components and contents.
fn tableau_from_profile(profile: &Profile, n: usize, r: usize) -> Option<MultiTableau> {
    let mut rows: Vec<Vec<Vec<usize>>> = vec![Vec::new(); r];
    for b in 1..=n {
        let Some(k) = profile.components[b - 1] else {
            if profile.contents[b - 1] != 0 {
                return None;
            }
            continue;
        };
        let shape: Vec<usize> = rows[k].iter().map(Vec::len).collect();
        let lambda = Partition::new(shape).ok()?;
        let cell = lambda
            .addable()
            .into_iter()
            .find(|c| c.content() == profile.contents[b - 1])?;
        if cell.row > rows[k].len() {
            rows[k].push(Vec::new());
        }
        rows[k][cell.row - 1].push(b);
    }
    MultiTableau::new(n, rows).ok()
}

fn candidate_x(r: usize) -> Vec<(CycElem, Option<usize>)> {
    std::iter::once((CycElem::zero(r), None))
        .chain((0..r).map(|k| (CycElem::root_power(r, k as i64).unwrap(), Some(k))))
        .collect()
}

/// Splits `space` (columns spanning a `T`-invariant subspace) into the
/// eigenspaces of `T` for the candidate eigenvalues.
fn split<K: Clone>(
    t: &CycMatrix,
    space: &CycMatrix,
    candidates: &[(CycElem, K)],
) -> Result<Vec<(K, CycMatrix)>> {
    let image = t * space;
    let mut out = Vec::new();
    let mut found = 0;
    for (value, key) in candidates {
        let shifted = &image - &space.scale(value);
        let kernel = shifted.kernel();
        if kernel.is_empty() {
            continue;
        }
        found += kernel.len();
        let coords = CycMatrix::from_columns(space.cols(), t.order(), &kernel);
        out.push((key.clone(), space * &coords));
    }
    if found != space.cols() {
        return Err(Error::Inconsistent(format!(
            "operator is not diagonalizable with the expected eigenvalues ({found} of {} dimensions)",
            space.cols()
        )));
    }
    Ok(out)
}

/// Irreducible multiplicities of a `C_r ≀ R_n`-module, read off from the joint
/// spectrum of the Jucys-Murphy elements.
pub fn decompose_by_spectrum(gens: &GeneratorMatrices) -> Result<BTreeMap<Multipartition, usize>> {
    let (n, r) = (gens.n, gens.r);
    let mut out = BTreeMap::new();
    if gens.dim == 0 {
        return Ok(out);
    }
    if n == 0 {
        out.insert(Multipartition::empty(r), gens.dim);
        return Ok(out);
    }
    let jm = jm_elements(n, r);
    let cache = ElementCache::new(gens);
    let xs = jm.x.iter().map(|x| cache.algebra_matrix(x)).collect::<Result<Vec<_>>>()?;
    let ys = jm.y.iter().map(|y| cache.algebra_matrix(y)).collect::<Result<Vec<_>>>()?;
    let cx = candidate_x(r);
    let max_content = n as i64 - 1;
    let cy: Vec<(CycElem, i64)> = (-max_content..=max_content)
        .map(|c| (CycElem::from_int(r, c), c))
        .collect();

    let mut leaves = vec![(
        Profile {
            components: Vec::new(),
            contents: Vec::new(),
        },
        CycMatrix::identity(gens.dim, r),
    )];
    for b in 0..n {
        let mut next = Vec::new();
        for (profile, space) in leaves {
            for (comp, sub) in split(&xs[b], &space, &cx)? {
                for (content, leaf) in split(&ys[b], &sub, &cy)? {
                    let mut p = profile.clone();
                    p.components.push(comp);
                    p.contents.push(content);
                    next.push((p, leaf));
                }
            }
        }
        leaves = next;
    }

    let mut per_shape: BTreeMap<Multipartition, BTreeMap<MultiTableau, usize>> = BTreeMap::new();
    for (profile, space) in &leaves {
        let t = tableau_from_profile(profile, n, r).ok_or_else(|| {
            Error::Inconsistent(format!("eigenvalue string {profile:?} matches no tableau"))
        })?;
        *per_shape
            .entry(t.shape().clone())
            .or_default()
            .entry(t)
            .or_default() += space.cols();
    }
    for (shape, dims) in per_shape {
        let expected = enumerate_tableaux(&shape, n)?;
        let mult = *dims.values().next().expect("nonempty");
        if dims.len() != expected.len() || dims.values().any(|&d| d != mult) {
            return Err(Error::Inconsistent(format!(
                "eigenspaces for {shape} do not assemble into copies of the irreducible: {dims:?}"
            )));
        }
        out.insert(shape, mult);
    }
    Ok(out)
}
