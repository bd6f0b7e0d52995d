//! Partitions, multipartitions, residues, i-signatures and the tableau sets
//! `𝒴(λ, n)` that index the Gelfand-Zeitlin bases.

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{int, CycElem, Rational};

/// Integer partition, parts weakly decreasing and positive. Ordered
/// lexicographically by its part list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A box of a (multi)partition diagram. `component` is 0-based; `row` and
/// `col` are 1-based so that the content is `col - row`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(component: usize, row: usize, col: usize) -> Self {
        Cell { component, row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// Content of a box and its residue: `content mod p`, or the content itself
/// when `p` is `None` (characteristic zero).
pub fn content_and_residue(b: &Cell, p: Option<u64>) -> (i64, i64) {
    let c = b.content();
    (c, residue_of(c, p))
}

pub fn residue_of(content: i64, p: Option<u64>) -> i64 {
    match p {
        Some(p) => content.rem_euclid(p as i64),
        None => content,
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// Drops trailing zeros; panics if the remaining parts are not a partition.
    pub(crate) fn from_parts_trimmed(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts).expect("valid partition")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `row` (1-based), zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        self.0.get(row.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row_len(1);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// Boxes in row-major order, reported in `component`.
    pub fn cells(&self, component: usize) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| Cell::new(component, i + 1, c)))
            .collect()
    }

    /// Removable boxes (outer corners) by strictly decreasing row.
    pub fn removable(&self) -> Vec<Cell> {
        (1..=self.num_rows())
            .rev()
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Cell::new(0, r, self.row_len(r)))
            .collect()
    }

    /// Addable boxes by strictly decreasing row.
    pub fn addable(&self) -> Vec<Cell> {
        (1..=self.num_rows() + 1)
            .rev()
            .filter(|&r| r == 1 || self.row_len(r - 1) > self.row_len(r))
            .map(|r| Cell::new(0, r, self.row_len(r) + 1))
            .collect()
    }

    pub fn with_box_added(&self, row: usize) -> Option<Partition> {
        let mut parts = self.0.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else if row >= 1 && row <= parts.len() && (row == 1 || parts[row - 2] > parts[row - 1]) {
            parts[row - 1] += 1;
        } else {
            return None;
        }
        Some(Partition(parts))
    }

    pub fn with_box_removed(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.num_rows() || self.row_len(row) == self.row_len(row + 1) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        Some(Partition::from_parts_trimmed(parts))
    }

    /// No part value repeats `p` or more times.
    pub fn is_p_regular(&self, p: u64) -> bool {
        let p = p as usize;
        self.0.chunk_by(|a, b| a == b).all(|run| run.len() < p)
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn num_standard_tableaux(&self) -> u128 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &len) in self.0.iter().enumerate() {
            for c in 1..=len {
                let hook = (len - c) + (conj.row_len(c) - (i + 1)) + 1;
                hooks *= hook as u128;
            }
        }
        (1..=self.size() as u128).product::<u128>() / hooks
    }
}

/// Partitions of `n` in lexicographic order of part lists.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in 1..=rem.min(max) {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Whether a signature symbol comes from an addable (`+`) or removable (`-`) box.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// The `i`-signature of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    /// Residue-`i` addable and removable boxes in rim order, bottom-left to top-right.
    pub raw: Vec<(Cell, Sign)>,
    /// Survivors of the `-+` cancellation, in the same order: `+...+-...-`.
    pub reduced: Vec<(Cell, Sign)>,
}

impl Signature {
    pub fn raw_word(&self) -> String {
        self.raw.iter().map(|(_, s)| s.symbol()).collect()
    }

    pub fn reduced_word(&self) -> String {
        self.reduced.iter().map(|(_, s)| s.symbol()).collect()
    }

    /// `i`-normal boxes, in rim order.
    pub fn normal(&self) -> Vec<Cell> {
        self.cells_with(Sign::Minus)
    }

    /// `i`-conormal boxes, in rim order.
    pub fn conormal(&self) -> Vec<Cell> {
        self.cells_with(Sign::Plus)
    }

    fn cells_with(&self, sign: Sign) -> Vec<Cell> {
        self.reduced
            .iter()
            .filter(|(_, s)| *s == sign)
            .map(|(c, _)| *c)
            .collect()
    }
}

/// Removable and addable boxes, optionally restricted to residue `i`.
pub fn removable_addable(lambda: &Partition, i: Option<i64>, p: Option<u64>) -> (Vec<Cell>, Vec<Cell>) {
    let keep = |c: &Cell| i.is_none_or(|i| residue_of(c.content(), p) == residue_of(i, p));
    (
        lambda.removable().into_iter().filter(keep).collect(),
        lambda.addable().into_iter().filter(keep).collect(),
    )
}

/// Reads residue-`i` addable (`+`) and removable (`-`) boxes along the rim
/// from bottom left to top right and cancels adjacent `-+` pairs.
pub fn signature(lambda: &Partition, i: i64, p: u64) -> Signature {
    let (rem, add) = removable_addable(lambda, Some(i), Some(p));
    let mut raw: Vec<(Cell, Sign)> = rem
        .into_iter()
        .map(|c| (c, Sign::Minus))
        .chain(add.into_iter().map(|c| (c, Sign::Plus)))
        .collect();
    raw.sort_by_key(|b| std::cmp::Reverse(b.0.row));
    let mut reduced: Vec<(Cell, Sign)> = Vec::with_capacity(raw.len());
    for &(cell, sign) in &raw {
        if sign == Sign::Plus && reduced.last().is_some_and(|(_, s)| *s == Sign::Minus) {
            reduced.pop();
        } else {
            reduced.push((cell, sign));
        }
    }
    Signature { raw, reduced }
}

/// An `r`-tuple of partitions. Ordered by total size, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition(Vec<Partition>);

impl Ord for Multipartition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.size(), &self.0).cmp(&(other.size(), &other.0))
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument("a multipartition needs r >= 1 components".into()));
        }
        Ok(Multipartition(components))
    }

    pub fn empty(r: usize) -> Self {
        Multipartition(vec![Partition::empty(); r])
    }

    /// Parses `[[2,1],[],[1]]`.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let comps: Vec<Partition> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("multipartition {text:?}: {e}")))?;
        Multipartition::new(comps)
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, k: usize) -> &Partition {
        &self.0[k]
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(k, p)| p.cells(k))
            .collect()
    }

    /// Removable boxes over all components.
    pub fn removable(&self) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(k, p)| p.removable().into_iter().map(move |c| Cell { component: k, ..c }))
            .collect()
    }

    pub fn with_box_removed(&self, cell: &Cell) -> Option<Multipartition> {
        let mut comps = self.0.clone();
        comps[cell.component] = comps[cell.component].with_box_removed(cell.row)?;
        Some(Multipartition(comps))
    }

    /// All multipartitions obtained by removing one box.
    pub fn minus_one_box(&self) -> Vec<Multipartition> {
        let mut out: Vec<_> = self
            .removable()
            .iter()
            .filter_map(|c| self.with_box_removed(c))
            .collect();
        out.sort();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(self).expect("serializable"))
    }
}

/// `Λ_r(m)`: all multipartitions with `r` components and total size `m`.
pub fn multipartitions_of(r: usize, m: usize) -> Vec<Multipartition> {
    fn go(r: usize, rem: usize, cur: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if cur.len() == r - 1 {
            for p in partitions_of(rem) {
                cur.push(p);
                out.push(Multipartition(cur.clone()));
                cur.pop();
            }
            return;
        }
        for size in 0..=rem {
            for p in partitions_of(size) {
                cur.push(p);
                go(r, rem - size, cur, out);
                cur.pop();
            }
        }
    }
    assert!(r >= 1, "r must be positive");
    let mut out = Vec::new();
    go(r, m, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `Λ_r(i)` for `0 <= i <= n`, each tagged with its level.
pub fn multipartitions_up_to(r: usize, n: usize) -> Vec<(usize, Multipartition)> {
    (0..=n)
        .flat_map(|m| multipartitions_of(r, m).into_iter().map(move |l| (m, l)))
        .collect()
}

/// A filling `L ∈ 𝒴(λ, n)`: distinct entries from `[n]` placed in the boxes of
/// `λ`, increasing along rows and down columns in every component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiTableau {
    shape: Multipartition,
    n: usize,
    /// `entries[k][row-1][col-1]`.
    entries: Vec<Vec<Vec<usize>>>,
    /// `positions[b-1]` is the box holding `b`, if any.
    positions: Vec<Option<Cell>>,
}

impl MultiTableau {
    /// Builds and validates a tableau from per-component rows of entries.
    pub fn new(n: usize, entries: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let shape = Multipartition::new(
            entries
                .iter()
                .map(|rows| Partition::new(rows.iter().map(Vec::len).collect()))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let mut positions = vec![None; n];
        for (k, rows) in entries.iter().enumerate() {
            for (i, row) in rows.iter().enumerate() {
                for (j, &b) in row.iter().enumerate() {
                    if b == 0 || b > n {
                        return Err(Error::InvalidArgument(format!("entry {b} outside [1, {n}]")));
                    }
                    if positions[b - 1].is_some() {
                        return Err(Error::InvalidArgument(format!("entry {b} repeated")));
                    }
                    positions[b - 1] = Some(Cell::new(k, i + 1, j + 1));
                }
            }
        }
        let t = MultiTableau {
            shape,
            n,
            entries,
            positions,
        };
        if !t.is_increasing() {
            return Err(Error::InvalidArgument("entries must increase along rows and columns".into()));
        }
        Ok(t)
    }

    fn is_increasing(&self) -> bool {
        self.entries.iter().all(|rows| {
            rows.iter().enumerate().all(|(i, row)| {
                row.windows(2).all(|w| w[0] < w[1])
                    && (i == 0 || row.iter().enumerate().all(|(j, &b)| rows[i - 1][j] < b))
            })
        })
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Vec<Vec<usize>>] {
        &self.entries
    }

    pub fn position(&self, b: usize) -> Option<Cell> {
        self.positions.get(b.wrapping_sub(1)).copied().flatten()
    }

    pub fn contains(&self, b: usize) -> bool {
        self.position(b).is_some()
    }

    /// Entries present, increasing.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.n).filter(|&b| self.contains(b)).collect()
    }

    /// `sgn_L(b)`: `ξ^{k}` for `b` in component `k` (0-based), zero if absent.
    pub fn sign(&self, b: usize, r: usize) -> CycElem {
        match self.position(b) {
            Some(c) => CycElem::root_power(r, c.component as i64).expect("r >= 1"),
            None => CycElem::zero(r),
        }
    }

    /// Content of the box holding `b`.
    pub fn content(&self, b: usize) -> Option<i64> {
        self.position(b).map(|c| c.content())
    }

    /// `s_i L`: swaps the labels `i` and `i+1`; `None` if the result is not a
    /// valid filling.
    pub fn swap(&self, i: usize) -> Option<MultiTableau> {
        assert!(i >= 1 && i < self.n, "swap index {i} out of range for n = {}", self.n);
        let entries = self
            .entries
            .iter()
            .map(|rows| {
                rows.iter()
                    .map(|row| {
                        row.iter()
                            .map(|&b| match b {
                                b if b == i => i + 1,
                                b if b == i + 1 => i,
                                b => b,
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        MultiTableau::new(self.n, entries).ok()
    }

    /// `a_L(i) = 1 / (ct(L(i+1)) - ct(L(i)))`, defined when `i` and `i+1` lie
    /// in the same component.
    pub fn axial_coefficient(&self, i: usize) -> Result<Rational> {
        match (self.position(i), self.position(i + 1)) {
            (Some(a), Some(b)) if a.component == b.component => {
                Ok(Rational::one() / int(b.content() - a.content()))
            }
            _ => Err(Error::InvalidArgument(format!(
                "a_L({i}) needs {i} and {} in the same component",
                i + 1
            ))),
        }
    }

    /// Sort key: positions of `1, ..., n`, absent entries first.
    pub fn sort_key(&self) -> &[Option<Cell>] {
        &self.positions
    }

    /// Relabels the entries of a standard multitableau of size `|λ|` by `z`
    /// (so entry `l` becomes `z[l-1]`), giving a filling in `𝒴(λ, n)`.
    pub fn relabel(&self, z: &[usize], n: usize) -> MultiTableau {
        let entries = self
            .entries
            .iter()
            .map(|rows| {
                rows.iter()
                    .map(|row| row.iter().map(|&b| z[b - 1]).collect())
                    .collect()
            })
            .collect();
        MultiTableau::new(n, entries).expect("order-preserving relabel stays valid")
    }

    /// Standardizes entries to `1..=|λ|`, returning the tableau and the
    /// increasing list of original entries.
    pub fn standardize(&self) -> (MultiTableau, Vec<usize>) {
        let z = self.support();
        let mut rank = vec![0; self.n + 1];
        for (l, &b) in z.iter().enumerate() {
            rank[b] = l + 1;
        }
        let entries = self
            .entries
            .iter()
            .map(|rows| {
                rows.iter()
                    .map(|row| row.iter().map(|&b| rank[b]).collect())
                    .collect()
            })
            .collect();
        (
            MultiTableau::new(z.len(), entries).expect("standardization stays valid"),
            z,
        )
    }

    /// Per-component matrices padded with 0 for cells outside the diagram.
    pub fn to_json(&self) -> serde_json::Value {
        let comps: Vec<Vec<Vec<usize>>> = self
            .entries
            .iter()
            .map(|rows| {
                let width = rows.first().map_or(0, Vec::len);
                rows.iter()
                    .map(|row| {
                        let mut padded = row.clone();
                        padded.resize(width, 0);
                        padded
                    })
                    .collect()
            })
            .collect();
        serde_json::to_value(comps).expect("serializable")
    }
}

impl Ord for MultiTableau {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.positions.cmp(&other.positions)
    }
}

impl PartialOrd for MultiTableau {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Standard multitableaux of `λ` (entries exactly `1..=|λ|`), sorted.
pub fn standard_tableaux(lambda: &Multipartition) -> Vec<MultiTableau> {
    fn go(shape: &Multipartition, fill: &mut [Vec<Vec<usize>>], next: usize, out: &mut Vec<Vec<Vec<Vec<usize>>>>) {
        if next == 0 {
            out.push(fill.to_vec());
            return;
        }
        // Place the largest remaining entry in a removable box of what is left.
        for cell in shape.removable() {
            let k = cell.component;
            fill[k][cell.row - 1][cell.col - 1] = next;
            let smaller = shape.with_box_removed(&cell).expect("removable");
            go(&smaller, fill, next - 1, out);
        }
    }
    let mut fill: Vec<Vec<Vec<usize>>> = lambda
        .components()
        .iter()
        .map(|p| p.parts().iter().map(|&len| vec![0; len]).collect())
        .collect();
    let mut raw = Vec::new();
    go(lambda, &mut fill, lambda.size(), &mut raw);
    let size = lambda.size();
    let mut out: Vec<MultiTableau> = raw
        .into_iter()
        .map(|e| MultiTableau::new(size, e).expect("standard filling"))
        .collect();
    out.sort();
    out
}

/// Increasing `k`-subsets of `1..=n`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// `𝒴(λ, n)` in the canonical order.
pub fn enumerate_tableaux(lambda: &Multipartition, n: usize) -> Result<Vec<MultiTableau>> {
    let size = lambda.size();
    if size > n {
        return Err(Error::InvalidArgument(format!("|λ| = {size} exceeds n = {n}")));
    }
    let standard = standard_tableaux(lambda);
    let mut out: Vec<MultiTableau> = subsets(n, size)
        .iter()
        .flat_map(|z| standard.iter().map(move |t| t.relabel(z, n)))
        .collect();
    out.sort();
    Ok(out)
}

/// Statistics of an entry `b` in a tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryStats {
    /// `sgn_L(b)`; zero when `b` is absent.
    pub sign: CycElem,
    pub content: Option<i64>,
    /// 0-based component holding `b`.
    pub component: Option<usize>,
}

pub fn tableau_stats(t: &MultiTableau, b: usize, r: usize) -> EntryStats {
    EntryStats {
        sign: t.sign(b, r),
        content: t.content(b),
        component: t.position(b).map(|c| c.component),
    }
}
