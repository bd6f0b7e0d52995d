//! Named verification suites. Each runs exact checks and collects a
//! pass/fail line per check.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Value};

use crate::branching::{bratteli_graph, path_count_mismatches, restriction_mismatches};
use crate::combinatorics::{enumerate_tableaux, multipartitions_up_to, Multipartition};
use crate::error::{Error, Result};
use crate::grothendieck::{lie_relation_check, phi_check, RelationKind, Realization};
use crate::jucysmurphy::{central_symmetric_polys, jm_elements, jm_spectrum, prime_field_checks, separation_violations};
use crate::monoid::{enumerate_elements, monoid_order};
use crate::seminormal::{decompose_by_spectrum, gelfand_model, rook_irrep, ElementCache, Gen, InducedOracle};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Monoid,
    Dimensions,
    Representations,
    Jm,
    Bratteli,
    Branching,
    Gelfand,
    Centrality,
    Chevalley,
    Bialgebra,
    PrimeField,
    All,
}

impl Suite {
    pub const EACH: [Suite; 11] = [
        Suite::Monoid,
        Suite::Dimensions,
        Suite::Representations,
        Suite::Jm,
        Suite::Bratteli,
        Suite::Branching,
        Suite::Gelfand,
        Suite::Centrality,
        Suite::Chevalley,
        Suite::Bialgebra,
        Suite::PrimeField,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Monoid => "monoid",
            Suite::Dimensions => "dimensions",
            Suite::Representations => "representations",
            Suite::Jm => "jm",
            Suite::Bratteli => "bratteli",
            Suite::Branching => "branching",
            Suite::Gelfand => "gelfand",
            Suite::Centrality => "centrality",
            Suite::Chevalley => "chevalley",
            Suite::Bialgebra => "bialgebra",
            Suite::PrimeField => "primefield",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// Optional overrides. A given `n` or `r` narrows a suite to that one value.
#[derive(Clone, Copy, Debug, Default)]
pub struct Params {
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub p: Option<u64>,
    pub degree: Option<usize>,
}

impl Params {
    fn ns(&self, range: std::ops::RangeInclusive<usize>) -> Vec<usize> {
        self.n.map_or_else(|| range.collect(), |n| vec![n])
    }

    fn rs(&self, range: std::ops::RangeInclusive<usize>) -> Vec<usize> {
        self.r.map_or_else(|| range.collect(), |r| vec![r])
    }

    fn grid(&self, ns: std::ops::RangeInclusive<usize>, rs: std::ops::RangeInclusive<usize>) -> Vec<(usize, usize)> {
        let rs = self.rs(rs);
        self.ns(ns).into_iter().flat_map(|n| rs.iter().map(move |&r| (n, r))).collect()
    }

    fn ps(&self) -> Vec<u64> {
        self.p.map_or_else(|| vec![2, 3], |p| vec![p])
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect();
        json!({ "suite": self.suite.name(), "passed": self.passed(), "checks": checks })
    }
}

struct Collector(Vec<Check>);

impl Collector {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    /// Passes when `problems` is empty; otherwise reports the count and the first few.
    fn none(&mut self, name: impl Into<String>, problems: &[String]) {
        let detail = if problems.is_empty() {
            "ok".to_string()
        } else {
            let head: Vec<&str> = problems.iter().take(3).map(String::as_str).collect();
            format!("{} violation(s): {}", problems.len(), head.join("; "))
        };
        self.check(name, problems.is_empty(), detail);
    }
}

pub fn run(suite: Suite, params: &Params) -> Result<Vec<SuiteReport>> {
    if suite == Suite::All {
        return Suite::EACH.into_iter().map(|s| run_one(s, params)).collect();
    }
    Ok(vec![run_one(suite, params)?])
}

fn run_one(suite: Suite, params: &Params) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut c = Collector(Vec::new());
    match suite {
        Suite::Monoid => monoid(params, &mut c)?,
        Suite::Dimensions => dimensions(params, &mut c)?,
        Suite::Representations => representations(params, &mut c)?,
        Suite::Jm => jm(params, &mut c)?,
        Suite::Bratteli => bratteli(params, &mut c)?,
        Suite::Branching => branching(params, &mut c)?,
        Suite::Gelfand => gelfand(params, &mut c)?,
        Suite::Centrality => centrality(params, &mut c)?,
        Suite::Chevalley => chevalley(params, &mut c)?,
        Suite::Bialgebra => bialgebra(params, &mut c)?,
        Suite::PrimeField => prime_field(params, &mut c)?,
        Suite::All => unreachable!("expanded by run"),
    }
    Ok(SuiteReport { suite, checks: c.0, seconds: start.elapsed().as_secs_f64() })
}

fn monoid(params: &Params, c: &mut Collector) -> Result<()> {
    for (n, r) in params.grid(0..=3, 1..=3) {
        let count = enumerate_elements(n, r)?.len() as u128;
        let formula = monoid_order(n, r);
        c.check(format!("|C_{r} wr R_{n}|"), count == formula, format!("enumerated {count}, formula {formula}"));
    }
    Ok(())
}

fn dimensions(params: &Params, c: &mut Collector) -> Result<()> {
    for (n, r) in params.grid(0..=3, 1..=3) {
        let mut sum = 0u128;
        for (_, lambda) in multipartitions_up_to(r, n) {
            let d = enumerate_tableaux(&lambda, n)?.len() as u128;
            sum += d * d;
        }
        let order = monoid_order(n, r);
        c.check(format!("sum dim^2 (n={n}, r={r})"), sum == order, format!("{sum} vs {order}"));
    }
    Ok(())
}

fn representations(params: &Params, c: &mut Collector) -> Result<()> {
    let grid = match (params.n, params.r) {
        (None, None) => vec![(2, 1), (2, 2), (2, 3), (3, 1)],
        _ => params.grid(1..=3, 1..=2),
    };
    for (n, r) in grid {
        let elements = enumerate_elements(n, r)?;
        for (_, lambda) in multipartitions_up_to(r, n) {
            let rep = rook_irrep(&lambda, n)?;
            let oracle = InducedOracle::new(&lambda, n)?;
            let cache = ElementCache::new(&rep.gens);
            let mut problems = Vec::new();
            let mut gens = vec![Gen::P, Gen::Q];
            gens.extend((1..n).map(Gen::S));
            for g in gens {
                let elem = crate::seminormal::word_product(&[g], n, r);
                if rep.gens.generator(g)? != &oracle.matrix(&elem)? {
                    problems.push(format!("generator {g} differs from the induced action"));
                }
            }
            let oracle_mats = elements.iter().map(|s| oracle.matrix(s)).collect::<Result<Vec<_>>>()?;
            let closed_mats = elements.iter().map(|s| cache.element_matrix(s)).collect::<Result<Vec<_>>>()?;
            for (k, s) in elements.iter().enumerate() {
                if closed_mats[k] != oracle_mats[k] {
                    problems.push(format!("matrix of {} differs from the induced action", s.to_json()));
                }
            }
            for (a, sa) in elements.iter().enumerate() {
                for (b, sb) in elements.iter().enumerate() {
                    let ab = elements.binary_search(&(sa * sb)).expect("closed");
                    if &oracle_mats[a] * &oracle_mats[b] != oracle_mats[ab] {
                        problems.push(format!("ρ({})ρ({}) ≠ ρ(product)", sa.to_json(), sb.to_json()));
                    }
                }
            }
            c.none(format!("ρ(στ) = ρ(σ)ρ(τ) for {lambda} (n={n}, r={r})"), &problems);
        }
    }
    Ok(())
}

fn jm(params: &Params, c: &mut Collector) -> Result<()> {
    for (n, r) in params.grid(1..=3, 1..=3) {
        let family = jm_elements(n, r);
        let all: Vec<_> = family.x.iter().chain(&family.y).collect();
        let noncommuting = all
            .iter()
            .enumerate()
            .flat_map(|(i, a)| all.iter().enumerate().skip(i + 1).map(move |(j, b)| (i, j, a, b)))
            .filter(|(_, _, a, b)| !a.commutator(b).is_zero())
            .map(|(i, j, _, _)| format!("pair ({i}, {j})"))
            .collect::<Vec<_>>();
        c.none(format!("X, Y commute (n={n}, r={r})"), &noncommuting);
        let mut spectral = Vec::new();
        for (_, lambda) in multipartitions_up_to(r, n) {
            let spec = jm_spectrum(&rook_irrep(&lambda, n)?)?;
            spectral.extend(spec.violations);
        }
        c.none(format!("diagonal with tableau eigenvalues (n={n}, r={r})"), &spectral);
        c.none(format!("eigenvalue strings separate (n={n}, r={r})"), &separation_violations(n, r)?);
    }
    Ok(())
}

fn bratteli(params: &Params, c: &mut Collector) -> Result<()> {
    let r = params.r.unwrap_or(2);
    let n_max = params.n.unwrap_or(2);
    let g = bratteli_graph(r, n_max)?;
    if r == 2 && n_max == 2 {
        let sizes: Vec<usize> = g.levels.iter().map(Vec::len).collect();
        c.check("level sizes 1/3/8", sizes == [1, 3, 8], format!("{sizes:?}"));
        c.check("14 edges", g.edges.len() == 14, format!("{} edges", g.edges.len()));
    }
    c.none(format!("path counts = |Y(λ, n)| (r={r}, n_max={n_max})"), &path_count_mismatches(&g)?);
    Ok(())
}

fn branching(params: &Params, c: &mut Collector) -> Result<()> {
    for (n, r) in params.grid(1..=3, 1..=2) {
        c.none(format!("restricted modules follow the branching rule (n={n}, r={r})"), &restriction_mismatches(n, r)?);
    }
    Ok(())
}

fn gelfand(params: &Params, c: &mut Collector) -> Result<()> {
    for (n, r) in params.grid(1..=3, 1..=2) {
        let model = match gelfand_model(n, r) {
            Ok(model) => model,
            Err(e) => {
                c.check(format!("Gelfand model (n={n}, r={r})"), false, e.to_string());
                continue;
            }
        };
        let labels: Vec<Multipartition> = multipartitions_up_to(r, n).into_iter().map(|(_, l)| l).collect();
        let mut expected_dim = 0;
        for lambda in &labels {
            expected_dim += enumerate_tableaux(lambda, n)?.len();
        }
        c.check(
            format!("Gelfand model dimension (n={n}, r={r})"),
            model.basis.len() == expected_dim,
            format!("{} vs {expected_dim}", model.basis.len()),
        );
        let detail;
        let ok = match decompose_by_spectrum(&model.gens) {
            Ok(decomposition) => {
                let bad: Vec<String> = labels
                    .iter()
                    .filter(|l| decomposition.get(*l) != Some(&1))
                    .map(|l| format!("{l}: {}", decomposition.get(l).copied().unwrap_or(0)))
                    .collect();
                detail = if bad.is_empty() { "ok".into() } else { bad.join(", ") };
                bad.is_empty()
            }
            Err(e) => {
                detail = e.to_string();
                false
            }
        };
        c.check(format!("every irreducible exactly once (n={n}, r={r})"), ok, detail);
    }
    Ok(())
}

fn centrality(params: &Params, c: &mut Collector) -> Result<()> {
    for (n, r) in params.grid(1..=3, 1..=2) {
        for k in 1..=n {
            let report = central_symmetric_polys(n, r, k);
            c.none(format!("e_{k}(X) central (n={n}, r={r})"), &report.ex_fails);
            c.none(format!("e_{k}(Y) central (n={n}, r={r})"), &report.ey_fails);
        }
    }
    Ok(())
}

fn chevalley(params: &Params, c: &mut Collector) -> Result<()> {
    let degree = params.degree.unwrap_or(6);
    for p in params.ps() {
        let report = lie_relation_check(p, degree, Realization::Kleshchev)?;
        for kind in [
            RelationKind::CommutatorOffDiagonal,
            RelationKind::CommutatorDiagonal,
            RelationKind::SerreE,
            RelationKind::SerreF,
            RelationKind::AB,
            RelationKind::RankCommute,
        ] {
            let problems: Vec<String> = report
                .violations
                .iter()
                .filter(|v| v.kind == kind)
                .map(|v| format!("{} on {} leaves {}", v.detail, v.vector, v.residual))
                .collect();
            c.none(format!("{kind} (p={p}, degree {degree})"), &problems);
        }
        c.check(
            format!("B.A ≠ Id witnessed (p={p})"),
            report.ba_witness.is_some(),
            report.ba_witness.map_or("none".into(), |b| b.to_string()),
        );
    }
    Ok(())
}

fn bialgebra(params: &Params, c: &mut Collector) -> Result<()> {
    let degree = params.degree.unwrap_or(5);
    let p = params.p.unwrap_or(2);
    let report = phi_check(p, degree)?;
    c.none(format!("coassociativity (degree {degree})"), &report.coassociativity);
    c.none(format!("counit laws (degree {degree})"), &report.counit);
    c.none(format!("unit (degree {degree})"), &report.unit);
    c.none(format!("Δ multiplicative (degree {degree})"), &report.multiplicativity);
    c.none(format!("Φ intertwines e_i, f_i, A, B (p={p})"), &report.intertwining);
    Ok(())
}

fn prime_field(params: &Params, c: &mut Collector) -> Result<()> {
    for n in params.ns(1..=3) {
        for p in params.ps() {
            let bad: Vec<String> = prime_field_checks(n, p)?
                .into_iter()
                .filter(|check| check.roots_mod_p.is_none())
                .map(|check| check.operator)
                .collect();
            c.none(format!("characteristic polynomials split over F_{p} (n={n})"), &bad);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn narrow_suites_pass() {
        let params = Params { n: Some(2), r: Some(2), ..Params::default() };
        for suite in [Suite::Monoid, Suite::Dimensions, Suite::Jm, Suite::Branching, Suite::Centrality] {
            let reports = run(suite, &params).unwrap();
            assert!(reports[0].passed(), "{suite}: {:?}", reports[0].to_json());
        }
    }

    #[test]
    fn gelfand_suite_reports_failures() {
        let params = Params { n: Some(1), r: Some(2), ..Params::default() };
        let report = &run(Suite::Gelfand, &params).unwrap()[0];
        assert!(!report.passed());
        let params = Params { n: Some(2), r: Some(1), ..Params::default() };
        assert!(run(Suite::Gelfand, &params).unwrap()[0].passed());
    }
}
