//! Batch verification over ensembles and parameter ranges.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::Caps;
use crate::ensemble::{claw_free_ensemble, general_ensemble, EnsembleSpec, NamedGraph};
use crate::error::{Error, Result};
use crate::harness::{
    verify_bound, verify_c_theorem, verify_component_suspension, verify_inequality, verify_l_family,
    verify_main_theorem, verify_wedge_decomposition, BoundCheck, Measured, VerificationRecord,
};
use crate::pi1::TietzeBudget;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Bounds,
    Lemma31,
    Thm28,
    Wedge,
    LRecursion,
    CTheorem,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["bounds", "lemma31", "thm28", "wedge", "L-recursion", "C-theorem", "all"];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Bounds,
                Suite::Lemma31,
                Suite::Thm28,
                Suite::Wedge,
                Suite::LRecursion,
                Suite::CTheorem,
            ],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "bounds" => Suite::Bounds,
            "lemma31" => Suite::Lemma31,
            "thm28" => Suite::Thm28,
            "wedge" => Suite::Wedge,
            "L-recursion" | "l-recursion" => Suite::LRecursion,
            "C-theorem" | "c-theorem" => Suite::CTheorem,
            "all" => Suite::All,
            _ => {
                return Err(Error::input(format!(
                    "unknown suite {s:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::Bounds,
            Suite::Lemma31,
            Suite::Thm28,
            Suite::Wedge,
            Suite::LRecursion,
            Suite::CTheorem,
            Suite::All,
        ]
        .iter()
        .position(|s| s == self)
        .expect("listed");
        f.write_str(Suite::NAMES[i])
    }
}

/// Parameters shared by every suite.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub ensemble: EnsembleSpec,
    /// Replaces the ensemble with this single graph when set.
    pub graph: Option<NamedGraph>,
    /// `k` values for the family suites; `None` uses the defaults.
    pub ks: Option<Vec<usize>>,
    pub n_max: Option<usize>,
    /// Restricts the bounds suite to one bound; `None` checks both.
    pub bound: Option<BoundCheck>,
    pub caps: Caps,
    pub tietze: TietzeBudget,
}

/// Counts over a set of records.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Summary {
    pub fn of(records: &[VerificationRecord]) -> Self {
        let mut s = Summary {
            total: records.len(),
            ..Summary::default()
        };
        for r in records {
            if r.skipped {
                s.skip += 1;
            } else if r.pass {
                s.pass += 1;
            } else {
                s.fail += 1;
            }
        }
        s
    }
}

/// Maps a resource-cap error to a skipped record; other errors propagate.
fn or_skip(
    out: Result<Vec<VerificationRecord>>,
    id: &str,
    check: &str,
    g: &crate::graph::Graph,
) -> Result<Vec<VerificationRecord>> {
    match out {
        Err(e @ Error::ResourceCap(_)) => Ok(vec![VerificationRecord::skipped(id, check, g, &e)]),
        other => other,
    }
}

fn per_graph<F>(graphs: &[NamedGraph], check: &str, f: F) -> Result<Vec<VerificationRecord>>
where
    F: Fn(&NamedGraph) -> Result<Vec<VerificationRecord>> + Sync,
{
    let chunks: Vec<Vec<VerificationRecord>> = graphs
        .par_iter()
        .map(|ng| or_skip(f(ng), &ng.id, check, &ng.graph))
        .collect::<Result<_>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

fn claw_free_graphs(opts: &SuiteOptions) -> Result<Vec<NamedGraph>> {
    match &opts.graph {
        Some(g) => Ok(vec![g.clone()]),
        None => claw_free_ensemble(&opts.ensemble),
    }
}

fn general_graphs(opts: &SuiteOptions) -> Vec<NamedGraph> {
    match &opts.graph {
        Some(g) => vec![g.clone()],
        None => general_ensemble(&opts.ensemble),
    }
}

fn wedge_records(ng: &NamedGraph, caps: &Caps) -> Result<Vec<VerificationRecord>> {
    let g = &ng.graph;
    let mut out = Vec::new();
    let record = |check: &str, u: usize, identity: crate::harness::IdentityCheck| {
        let mut r = VerificationRecord::new(&ng.id, check, g, Measured::Profile(identity.lhs));
        r.vertex = Some(u);
        r.expected = Some(Measured::Profile(identity.rhs));
        r.pass = identity.pass;
        r
    };
    if let Some(u) = (0..g.n()).find(|&u| g.degree(u) > 0 && g.is_clique(g.nbrs(u))) {
        out.push(record("wedge", u, verify_wedge_decomposition(g, u, caps)?));
    }
    let component = (0..g.n()).find_map(|u| {
        let v = g.nbrs(u).first()?;
        (u < v && g.degree(u) == 1 && g.degree(v) == 1).then_some((u, v))
    });
    if let Some((u, v)) = component {
        out.push(record("suspension", u, verify_component_suspension(g, u, v, caps)?));
    }
    Ok(out)
}

fn default_ks(opts: &SuiteOptions, fallback: &[usize]) -> Vec<usize> {
    opts.ks.clone().unwrap_or_else(|| fallback.to_vec())
}

fn run_one(suite: Suite, opts: &SuiteOptions) -> Result<Vec<VerificationRecord>> {
    let caps = &opts.caps;
    let tietze = &opts.tietze;
    match suite {
        Suite::Bounds => {
            let mut out = Vec::new();
            let claw_free = match (&opts.graph, opts.bound) {
                (_, Some(BoundCheck::General)) => Vec::new(),
                (Some(g), None) if !g.graph.is_claw_free() => Vec::new(),
                _ => claw_free_graphs(opts)?,
            };
            out.extend(per_graph(&claw_free, "claw_free", |ng| {
                Ok(vec![verify_bound(
                    &ng.id,
                    &ng.graph,
                    BoundCheck::ClawFree,
                    caps,
                    tietze,
                )?])
            })?);
            if opts.bound != Some(BoundCheck::ClawFree) {
                out.extend(per_graph(&general_graphs(opts), "general", |ng| {
                    Ok(vec![verify_bound(
                        &ng.id,
                        &ng.graph,
                        BoundCheck::General,
                        caps,
                        tietze,
                    )?])
                })?);
            }
            Ok(out)
        }
        Suite::Lemma31 => per_graph(&claw_free_graphs(opts)?, "lemma31", |ng| {
            Ok(vec![verify_inequality(&ng.id, &ng.graph)?])
        }),
        Suite::Thm28 => per_graph(&claw_free_graphs(opts)?, "thm28", |ng| {
            verify_main_theorem(&ng.id, &ng.graph, caps)
        }),
        Suite::Wedge => per_graph(&general_graphs(opts), "wedge", |ng| wedge_records(ng, caps)),
        Suite::LRecursion => {
            let n_max = opts.n_max.unwrap_or(18);
            let params: Vec<(usize, usize)> = default_ks(opts, &[2, 3, 4])
                .into_iter()
                .flat_map(|k| (1..=n_max).map(move |n| (n, k)))
                .collect();
            let chunks: Vec<Vec<VerificationRecord>> = params
                .par_iter()
                .map(|&(n, k)| verify_l_family(n, k, caps, tietze))
                .collect::<Result<_>>()?;
            Ok(chunks.into_iter().flatten().collect())
        }
        Suite::CTheorem => {
            let params: Vec<(usize, usize)> = match (&opts.ks, opts.n_max) {
                (None, None) => (6..=15).map(|n| (n, 2)).chain((12..=16).map(|n| (n, 3))).collect(),
                _ => default_ks(opts, &[2, 3])
                    .into_iter()
                    .flat_map(|k| {
                        let lo = (6 * k.saturating_sub(1)).max(2 * k - 1).max(1);
                        let hi = opts.n_max.unwrap_or(lo + 9);
                        (lo..=hi).map(move |n| (n, k))
                    })
                    .collect(),
            };
            params
                .par_iter()
                .map(|&(n, k)| verify_c_theorem(n, k, caps, tietze))
                .collect()
        }
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

/// Runs `suite`, returning records sorted by graph id, check and vertex.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for part in suite.parts() {
        out.extend(run_one(part, opts)?);
    }
    out.sort_by(|a, b| (&a.graph_id, &a.check, a.vertex).cmp(&(&b.graph_id, &b.check, b.vertex)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn quick_suites_pass() {
        let opts = SuiteOptions {
            ensemble: EnsembleSpec::quick(),
            n_max: Some(9),
            ..SuiteOptions::default()
        };
        let records = run_suite(Suite::All, &opts).unwrap();
        let summary = Summary::of(&records);
        assert_eq!(summary.fail, 0, "{:?}", records.iter().find(|r| !r.pass));
        assert!(summary.total > 100);
        let again = run_suite(Suite::All, &opts).unwrap();
        assert_eq!(
            serde_json::to_string(&records).unwrap(),
            serde_json::to_string(&again).unwrap()
        );
    }
}
