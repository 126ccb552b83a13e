//! Exact decision procedures for `K_s`- and `C_m`-saturation.
//!
//! A graph is `F`-saturated when it has no copy of `F` but adding any
//! non-edge creates one. For cliques the witness for a non-edge `uv` is a
//! `K_{s-2}` inside the common neighbourhood `N(u) ∩ N(v)`; for cycles it is
//! a path with `m - 1` edges from `u` to `v`. Non-edges are scanned in
//! lexicographic order and the first failure is returned as certificate.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{contains_clique, find_clique_within, Graph, WalkLayers};
use crate::provenance::ConstructionSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "size")]
pub enum Target {
    Clique(usize),
    Cycle(usize),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Clique(s) => write!(f, "clique:{s}"),
            Target::Cycle(m) => write!(f, "cycle:{m}"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, size) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("target must look like clique:s or cycle:m, got {s:?}")))?;
        let size: usize = size
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad target size {size:?}: {e}")))?;
        match kind.trim() {
            "clique" | "K" => Ok(Target::Clique(size)),
            "cycle" | "C" => Ok(Target::Cycle(size)),
            other => Err(Error::Parse(format!("unknown target kind {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Saturated,
    ContainsForbidden,
    NonEdgeUnwitnessed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Saturated => "saturated",
            Verdict::ContainsForbidden => "contains_forbidden",
            Verdict::NonEdgeUnwitnessed => "non_edge_unwitnessed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationVerdict {
    pub target: Target,
    pub verdict: Verdict,
    /// Vertices of the forbidden subgraph, the failing non-edge, or empty.
    pub certificate: Vec<usize>,
    pub regular: Option<usize>,
    pub edge_count: usize,
}

impl SaturationVerdict {
    pub fn is_saturated(&self) -> bool {
        self.verdict == Verdict::Saturated
    }

    fn new(g: &Graph, target: Target, verdict: Verdict, certificate: Vec<usize>) -> Self {
        SaturationVerdict {
            target,
            verdict,
            certificate,
            regular: g.regular_degree(),
            edge_count: g.edge_count(),
        }
    }
}

pub fn is_clique_saturated(g: &Graph, s: usize) -> Result<SaturationVerdict> {
    if s < 3 {
        return Err(Error::invalid(format!("clique saturation needs s >= 3, got {s}")));
    }
    let target = Target::Clique(s);
    if let Some(clique) = contains_clique(g, s) {
        return Ok(SaturationVerdict::new(g, target, Verdict::ContainsForbidden, clique));
    }
    for (u, v) in g.non_edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        if find_clique_within(g, &common, s - 2).is_none() {
            return Ok(SaturationVerdict::new(g, target, Verdict::NonEdgeUnwitnessed, vec![u, v]));
        }
    }
    Ok(SaturationVerdict::new(g, target, Verdict::Saturated, Vec::new()))
}

pub fn is_cycle_saturated(g: &Graph, m: usize) -> Result<SaturationVerdict> {
    if m < 3 {
        return Err(Error::invalid(format!("cycle saturation needs m >= 3, got {m}")));
    }
    let target = Target::Cycle(m);
    let layers: Vec<WalkLayers> = (0..g.order()).map(|v| WalkLayers::new(g, v, m - 1)).collect();
    if let Some(cycle) = crate::graph::cycle_with_layers(g, m, &layers) {
        return Ok(SaturationVerdict::new(g, target, Verdict::ContainsForbidden, cycle));
    }
    for (u, v) in g.non_edges() {
        if layers[v].find_path(g, u, m - 1).is_none() {
            return Ok(SaturationVerdict::new(g, target, Verdict::NonEdgeUnwitnessed, vec![u, v]));
        }
    }
    Ok(SaturationVerdict::new(g, target, Verdict::Saturated, Vec::new()))
}

pub fn check(g: &Graph, target: Target) -> Result<SaturationVerdict> {
    match target {
        Target::Clique(s) => is_clique_saturated(g, s),
        Target::Cycle(m) => is_cycle_saturated(g, m),
    }
}

/// One JSON record per verified construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub family: String,
    pub params: serde_json::Map<String, serde_json::Value>,
    pub n: usize,
    pub degree: Option<usize>,
    pub edges: usize,
    pub target: String,
    pub verdict: Verdict,
    pub certificate: Vec<usize>,
    pub spec: ConstructionSpec,
}

impl Report {
    pub fn from_verdict(spec: &ConstructionSpec, n: usize, v: &SaturationVerdict) -> Self {
        Report {
            family: spec.family().to_string(),
            params: spec.params_json(),
            n,
            degree: v.regular,
            edges: v.edge_count,
            target: v.target.to_string(),
            verdict: v.verdict,
            certificate: v.certificate.clone(),
            spec: spec.clone(),
        }
    }

    pub fn is_saturated(&self) -> bool {
        self.verdict == Verdict::Saturated
    }
}

/// Replays `spec` and checks the resulting graph against `target`.
pub fn verify_construction(spec: &ConstructionSpec, target: Target) -> Result<Report> {
    let g = spec.build()?;
    let v = check(&g, target)?;
    Ok(Report::from_verdict(spec, g.order(), &v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cayley_graph, empty_graph, join, petersen};
    use crate::group_sets::SymmetricSet;

    #[test]
    fn target_text() {
        assert_eq!("clique:4".parse::<Target>().unwrap(), Target::Clique(4));
        assert_eq!("cycle:5".parse::<Target>().unwrap(), Target::Cycle(5));
        assert_eq!(Target::Cycle(7).to_string(), "cycle:7");
        assert!("path:3".parse::<Target>().is_err());
        assert!("clique".parse::<Target>().is_err());
    }

    #[test]
    fn petersen_is_triangle_saturated() {
        let v = is_clique_saturated(&petersen(), 3).unwrap();
        assert!(v.is_saturated());
        assert_eq!(v.regular, Some(3));
        assert_eq!(v.edge_count, 15);
    }

    #[test]
    fn petersen_is_not_k4_saturated() {
        let p = petersen();
        let v = is_clique_saturated(&p, 4).unwrap();
        assert_eq!(v.verdict, Verdict::NonEdgeUnwitnessed);
        let (a, b) = (v.certificate[0], v.certificate[1]);
        assert!(!p.has_edge(a, b));
        assert!(contains_clique(&p.with_edge(a, b).unwrap(), 4).is_none());
    }

    #[test]
    fn five_cycle() {
        let c5 = Graph::cycle(5).unwrap();
        let v = is_clique_saturated(&c5, 3).unwrap();
        assert!(v.is_saturated());
        assert_eq!(v.regular, Some(2));

        let v = is_cycle_saturated(&c5, 5).unwrap();
        assert_eq!(v.verdict, Verdict::ContainsForbidden);
        assert!(c5.is_cycle(&v.certificate) && v.certificate.len() == 5);
        assert!(is_clique_saturated(&c5, 2).is_err());
        assert!(is_cycle_saturated(&c5, 2).is_err());
    }

    #[test]
    fn circulant_and_bipartite_c5() {
        let g = cayley_graph(&SymmetricSet::new(17, [1, 3, 14, 16]).unwrap());
        let v = is_cycle_saturated(&g, 5).unwrap();
        assert!(v.is_saturated());
        assert_eq!(v.regular, Some(4));

        let k33 = join(&empty_graph(3), &empty_graph(3));
        assert!(is_cycle_saturated(&k33, 5).unwrap().is_saturated());
    }

    #[test]
    fn h4_six_is_k4_saturated() {
        let s = SymmetricSet::from_generators(34, [1, 2, 6, 8, 11, 13, 16]).unwrap();
        let v = is_clique_saturated(&cayley_graph(&s), 4).unwrap();
        assert!(v.is_saturated());
        assert_eq!(v.regular, Some(14));
    }

    #[test]
    fn report_shape() {
        let spec = ConstructionSpec::petersen();
        let r = verify_construction(&spec, Target::Clique(4)).unwrap();
        assert_eq!(r.verdict, Verdict::NonEdgeUnwitnessed);
        let json = serde_json::to_value(&r).unwrap();
        for key in ["family", "params", "n", "degree", "edges", "target", "verdict", "certificate"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        assert_eq!(json["family"], "petersen");
        assert_eq!(json["target"], "clique:4");
        assert_eq!(json["verdict"], "non_edge_unwitnessed");
    }
}
