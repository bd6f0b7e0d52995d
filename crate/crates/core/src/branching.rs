//! Branching from `C_r ≀ R_n` to `C_r ≀ R_{n-1}` and the Bratteli diagram.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::combinatorics::{enumerate_tableaux, multipartitions_of, Multipartition};
use crate::error::{Error, Result};
use crate::seminormal::{decompose_by_spectrum, rook_irrep};

/// Labels of the irreducible constituents of `V_λ` restricted to level `n - 1`,
/// each with multiplicity one.
pub fn restrict_label(lambda: &Multipartition, n: usize) -> Result<BTreeMap<Multipartition, usize>> {
    if n == 0 {
        return Err(Error::InvalidArgument("level 0 has nothing to restrict to".into()));
    }
    if lambda.size() > n {
        return Err(Error::InvalidArgument(format!("{lambda} does not occur at level {n}")));
    }
    let mut out: BTreeMap<Multipartition, usize> =
        lambda.minus_one_box().into_iter().map(|mu| (mu, 1)).collect();
    if lambda.size() < n {
        out.insert(lambda.clone(), 1);
    }
    Ok(out)
}

/// Leveled branching graph. Vertex `(m, k)` is `levels[m][k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BratteliGraph {
    pub r: usize,
    pub levels: Vec<Vec<Multipartition>>,
    /// `(m, from, to)`: an edge from `levels[m-1][from]` to `levels[m][to]`.
    pub edges: Vec<(usize, usize, usize)>,
}

pub fn bratteli_graph(r: usize, n_max: usize) -> Result<BratteliGraph> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let levels: Vec<Vec<Multipartition>> = (0..=n_max)
        .map(|m| (0..=m).flat_map(|k| multipartitions_of(r, k)).collect())
        .collect();
    let mut edges = Vec::new();
    for m in 1..=n_max {
        for (to, lambda) in levels[m].iter().enumerate() {
            for mu in restrict_label(lambda, m)?.keys() {
                let from = levels[m - 1]
                    .binary_search(mu)
                    .expect("restriction lands on the previous level");
                edges.push((m, from, to));
            }
        }
    }
    edges.sort_unstable();
    Ok(BratteliGraph { r, levels, edges })
}

impl BratteliGraph {
    pub fn n_max(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn index_of(&self, lambda: &Multipartition, m: usize) -> Option<usize> {
        self.levels.get(m)?.binary_search(lambda).ok()
    }

    /// Path counts from the root to every vertex, level by level.
    pub fn path_counts(&self) -> Vec<Vec<u128>> {
        let mut counts: Vec<Vec<u128>> = self.levels.iter().map(|l| vec![0; l.len()]).collect();
        if let Some(root) = counts.first_mut() {
            root.iter_mut().for_each(|c| *c = 1);
        }
        for &(m, from, to) in &self.edges {
            counts[m][to] += counts[m - 1][from];
        }
        counts
    }

    pub fn to_json(&self) -> Value {
        let levels: Vec<Vec<Value>> = self
            .levels
            .iter()
            .map(|l| l.iter().map(Multipartition::to_json).collect())
            .collect();
        let edges: Vec<[usize; 3]> = self.edges.iter().map(|&(m, a, b)| [m, a, b]).collect();
        json!({ "r": self.r, "levels": levels, "edges": edges })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("bratteli JSON: {what}"));
        let r = value["r"].as_u64().ok_or_else(|| bad("missing r"))? as usize;
        let levels = value["levels"]
            .as_array()
            .ok_or_else(|| bad("missing levels"))?
            .iter()
            .map(|level| {
                level
                    .as_array()
                    .ok_or_else(|| bad("level is not an array"))?
                    .iter()
                    .map(|v| serde_json::from_value(v.clone()).map_err(|e| bad(&e.to_string())))
                    .collect::<Result<Vec<Multipartition>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let edges = value["edges"]
            .as_array()
            .ok_or_else(|| bad("missing edges"))?
            .iter()
            .map(|e| {
                let triple: [usize; 3] = serde_json::from_value(e.clone()).map_err(|e| bad(&e.to_string()))?;
                Ok((triple[0], triple[1], triple[2]))
            })
            .collect::<Result<Vec<_>>>()?;
        let g = BratteliGraph { r, levels, edges };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        for &(m, from, to) in &self.edges {
            let ok = m >= 1
                && m < self.levels.len()
                && from < self.levels[m - 1].len()
                && to < self.levels[m].len();
            if !ok {
                return Err(Error::Parse(format!("edge ({m}, {from}, {to}) out of range")));
            }
        }
        Ok(())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph bratteli {\n  rankdir=TB;\n");
        for (m, level) in self.levels.iter().enumerate() {
            let _ = writeln!(out, "  subgraph level_{m} {{\n    rank=same;");
            for (k, lambda) in level.iter().enumerate() {
                let _ = writeln!(out, "    \"{m}:{k}\" [label=\"{lambda}\"];");
            }
            out.push_str("  }\n");
        }
        for &(m, from, to) in &self.edges {
            let _ = writeln!(out, "  \"{}:{from}\" -- \"{m}:{to}\";", m - 1);
        }
        out.push_str("}\n");
        out
    }

    /// Parses the output of [`BratteliGraph::to_dot`].
    pub fn from_dot(text: &str, r: usize) -> Result<Self> {
        let bad = |line: &str| Error::Parse(format!("unexpected DOT line: {line}"));
        let vertex = |s: &str| -> Option<(usize, usize)> {
            let (m, k) = s.trim().trim_matches('"').split_once(':')?;
            Some((m.parse().ok()?, k.parse().ok()?))
        };
        let mut levels: Vec<Vec<Multipartition>> = Vec::new();
        let mut edges = Vec::new();
        for line in text.lines().map(str::trim) {
            if let Some((node, rest)) = line.split_once(" [label=\"") {
                let (m, k) = vertex(node).ok_or_else(|| bad(line))?;
                let label = rest.strip_suffix("\"];").ok_or_else(|| bad(line))?;
                if levels.len() <= m {
                    levels.resize(m + 1, Vec::new());
                }
                if levels[m].len() != k {
                    return Err(bad(line));
                }
                levels[m].push(Multipartition::from_json_str(label)?);
            } else if let Some((a, b)) = line.strip_suffix(';').and_then(|l| l.split_once(" -- ")) {
                let ((m0, from), (m, to)) = vertex(a).zip(vertex(b)).ok_or_else(|| bad(line))?;
                if m0 + 1 != m {
                    return Err(bad(line));
                }
                edges.push((m, from, to));
            }
        }
        let g = BratteliGraph { r, levels, edges };
        g.validate()?;
        Ok(g)
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::Json => serde_json::to_string_pretty(&self.to_json()).expect("serializable"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

/// Number of root-to-vertex paths ending at `λ` on level `n`.
pub fn count_paths(g: &BratteliGraph, lambda: &Multipartition, n: usize) -> Result<u128> {
    let k = g
        .index_of(lambda, n)
        .ok_or_else(|| Error::InvalidArgument(format!("{lambda} is not a vertex at level {n}")))?;
    Ok(g.path_counts()[n][k])
}

/// Compares the spectral decomposition of every restricted irreducible with
/// [`restrict_label`]. Returns a description of each mismatch.
pub fn restriction_mismatches(n: usize, r: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for m in 0..=n {
        for lambda in multipartitions_of(r, m) {
            let rep = rook_irrep(&lambda, n)?;
            let got = decompose_by_spectrum(&rep.gens.restrict()?)?;
            let want = restrict_label(&lambda, n)?;
            if got != want {
                out.push(format!("{lambda} at level {n}: restricted module {got:?}, rule {want:?}"));
            }
        }
    }
    Ok(out)
}

/// Vertices whose path count differs from `|𝒴(λ, m)|`.
pub fn path_count_mismatches(g: &BratteliGraph) -> Result<Vec<String>> {
    let counts = g.path_counts();
    let mut out = Vec::new();
    for (m, level) in g.levels.iter().enumerate() {
        for (k, lambda) in level.iter().enumerate() {
            let tableaux = enumerate_tableaux(lambda, m)?.len() as u128;
            if counts[m][k] != tableaux {
                out.push(format!("{lambda} at level {m}: {} paths, {tableaux} tableaux", counts[m][k]));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(text: &str) -> Multipartition {
        Multipartition::from_json_str(text).unwrap()
    }

    fn labels(m: &BTreeMap<Multipartition, usize>) -> Vec<String> {
        m.keys().map(ToString::to_string).collect()
    }

    #[test]
    fn restriction_examples() {
        let got = restrict_label(&mp("[[1],[]]"), 2).unwrap();
        assert_eq!(labels(&got), ["[[],[]]", "[[1],[]]"]);
        assert_eq!(labels(&restrict_label(&mp("[[],[]]"), 4).unwrap()), ["[[],[]]"]);
        let got = restrict_label(&mp("[[1],[1]]"), 2).unwrap();
        assert_eq!(labels(&got), ["[[],[1]]", "[[1],[]]"]);
        assert!(got.values().all(|&m| m == 1));
        assert!(restrict_label(&mp("[[2]]"), 1).is_err());
        assert!(restrict_label(&mp("[[]]"), 0).is_err());
    }

    /// The r = 2 diagram through level 2, transcribed edge by edge.
    fn golden_edges() -> Vec<(usize, &'static str, &'static str)> {
        vec![
            (1, "[[],[]]", "[[],[]]"),
            (1, "[[],[]]", "[[1],[]]"),
            (1, "[[],[]]", "[[],[1]]"),
            (2, "[[],[]]", "[[],[]]"),
            (2, "[[],[]]", "[[1],[]]"),
            (2, "[[],[]]", "[[],[1]]"),
            (2, "[[1],[]]", "[[1],[]]"),
            (2, "[[1],[]]", "[[2],[]]"),
            (2, "[[1],[]]", "[[1,1],[]]"),
            (2, "[[1],[]]", "[[1],[1]]"),
            (2, "[[],[1]]", "[[1],[1]]"),
            (2, "[[],[1]]", "[[],[1]]"),
            (2, "[[],[1]]", "[[],[2]]"),
            (2, "[[],[1]]", "[[],[1,1]]"),
        ]
    }

    #[test]
    fn golden_r2() {
        let g = bratteli_graph(2, 2).unwrap();
        let sizes: Vec<usize> = g.levels.iter().map(Vec::len).collect();
        assert_eq!(sizes, [1, 3, 8]);
        let mut drawn: Vec<(usize, usize, usize)> = golden_edges()
            .into_iter()
            .map(|(m, a, b)| {
                (m, g.index_of(&mp(a), m - 1).unwrap(), g.index_of(&mp(b), m).unwrap())
            })
            .collect();
        drawn.sort_unstable();
        assert_eq!(g.edges, drawn);
        assert!(path_count_mismatches(&g).unwrap().is_empty());
    }

    #[test]
    fn small_graphs() {
        let g = bratteli_graph(1, 1).unwrap();
        assert_eq!(g.levels, vec![vec![mp("[[]]")], vec![mp("[[]]"), mp("[[1]]")]]);
        assert_eq!(g.edges, vec![(1, 0, 0), (1, 0, 1)]);
        let g0 = bratteli_graph(3, 0).unwrap();
        assert_eq!(g0.levels, vec![vec![mp("[[],[],[]]")]]);
        assert_eq!(g0.to_dot().matches("[label=").count(), 1);
    }

    #[test]
    fn path_counts() {
        let g = bratteli_graph(1, 3).unwrap();
        for n in 0..=3 {
            assert_eq!(count_paths(&g, &mp("[[]]"), n).unwrap(), 1);
        }
        assert_eq!(count_paths(&g, &mp("[[1]]"), 2).unwrap(), 2);
        assert_eq!(count_paths(&g, &mp("[[2]]"), 2).unwrap(), 1);
        assert!(count_paths(&g, &mp("[[3]]"), 2).is_err());
        for r in 1..=3 {
            assert!(path_count_mismatches(&bratteli_graph(r, 3).unwrap()).unwrap().is_empty());
        }
    }

    #[test]
    fn path_recursion() {
        let g = bratteli_graph(2, 3).unwrap();
        let counts = g.path_counts();
        for m in 1..=3 {
            for (k, lambda) in g.levels[m].iter().enumerate() {
                let below: u128 = restrict_label(lambda, m)
                    .unwrap()
                    .keys()
                    .map(|mu| counts[m - 1][g.index_of(mu, m - 1).unwrap()])
                    .sum();
                assert_eq!(counts[m][k], below);
            }
        }
    }

    #[test]
    fn exports_round_trip() {
        let g = bratteli_graph(2, 2).unwrap();
        let back = BratteliGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_dot(), g.to_dot());
        assert_eq!(BratteliGraph::from_dot(&g.to_dot(), 2).unwrap(), g);
        assert!(g.to_json()["levels"][1][1].is_array());
        assert_eq!("dot".parse::<ExportFormat>().unwrap(), ExportFormat::Dot);
        assert!("svg".parse::<ExportFormat>().is_err());
        assert!(BratteliGraph::from_json(&json!({"r": 1, "levels": [[[[]]]], "edges": [[1, 0, 0]]})).is_err());
    }

    #[test]
    fn module_restriction() {
        for n in 1..=3 {
            for r in 1..=2 {
                assert_eq!(restriction_mismatches(n, r).unwrap(), Vec::<String>::new(), "n={n} r={r}");
            }
        }
    }
}
