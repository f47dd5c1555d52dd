//! Command implementations behind the `shufflecube` binary.
//!
//! Each `cmd_*` function returns data or text; the binary only parses
//! arguments, prints, and maps outcomes to exit codes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::analysis::{
    bfs_distances, bipartition, block_equivalent_partners, clique_number, diameter,
    edge_certificate_from, equivalent_pairs, girth, invariant_profile, k4_census, triangle_census,
    vertex_certificate_from, Bipartition,
};
use crate::bitcodec::{parse_vertex, Dimension, VertexWord};
use crate::error::{Error, Result};
use crate::hamiltonian::{fixture_h1, fixture_h2, HamiltonianCycle};
use crate::routing::route;
use crate::topology::{CubeGraph, TopologyKind};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CLAIM_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `n` at which `route` cross-checks its answer against BFS.
pub const CROSS_CHECK_MAX_N: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Edges,
    Dot,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edges" => Ok(Format::Edges),
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            _ => Err(Error::Usage(format!(
                "unknown format {s:?} (expected edges, dot or json)"
            ))),
        }
    }
}

/// Writes the whole graph. Edge lines are `u v` with `u < v`, sorted.
pub fn cmd_generate(kind: TopologyKind, dim: Dimension, format: Format) -> Result<String> {
    let g = CubeGraph::materialize(kind, dim)?;
    let labels: Vec<String> = (0..g.len()).map(|i| g.label(i)).collect();
    let mut out = String::new();
    match format {
        Format::Edges => {
            for (a, b) in g.edges() {
                writeln!(out, "{} {}", labels[a], labels[b]).unwrap();
            }
        }
        Format::Dot => {
            writeln!(out, "graph \"{kind}_{}\" {{", dim.n()).unwrap();
            for l in &labels {
                writeln!(out, "  \"{l}\";").unwrap();
            }
            for (a, b) in g.edges() {
                writeln!(out, "  \"{}\" -- \"{}\";", labels[a], labels[b]).unwrap();
            }
            out.push_str("}\n");
        }
        Format::Json => {
            let edges: Vec<[&str; 2]> = g
                .edges()
                .map(|(a, b)| [labels[a].as_str(), labels[b].as_str()])
                .collect();
            let doc = json!({
                "kind": kind,
                "n": dim.n(),
                "vertices": labels,
                "edges": edges,
            });
            out = serde_json::to_string_pretty(&doc).expect("serializable");
            out.push('\n');
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Degree,
    Girth,
    Bipartite,
    Cliques,
    Diameter,
    Transitivity,
    Equivalence,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Degree,
        Check::Girth,
        Check::Bipartite,
        Check::Cliques,
        Check::Diameter,
        Check::Transitivity,
        Check::Equivalence,
    ];
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "degree" => Check::Degree,
            "girth" => Check::Girth,
            "bipartite" => Check::Bipartite,
            "cliques" => Check::Cliques,
            "diameter" => Check::Diameter,
            "transitivity" => Check::Transitivity,
            "equivalence" => Check::Equivalence,
            _ => {
                return Err(Error::Usage(format!(
                    "unknown check {s:?} (expected degree, girth, bipartite, cliques, \
                     diameter, transitivity or equivalence)"
                )))
            }
        })
    }
}

/// Runs the requested checks and returns one JSON object with a key per
/// result. Keys are sorted, so output is stable.
pub fn cmd_analyze(kind: TopologyKind, dim: Dimension, checks: &[Check]) -> Result<Value> {
    let g = CubeGraph::materialize(kind, dim)?;
    let mut checks = checks.to_vec();
    checks.sort_unstable();
    checks.dedup();
    let mut out = Map::new();
    out.insert("kind".into(), json!(kind));
    out.insert("n".into(), json!(dim.n()));
    for check in checks {
        match check {
            Check::Degree => {
                let min = (0..g.len()).map(|i| g.degree(i)).min().unwrap_or(0);
                let max = (0..g.len()).map(|i| g.degree(i)).max().unwrap_or(0);
                out.insert("vertices".into(), json!(g.len()));
                out.insert("edges".into(), json!(g.edge_count()));
                out.insert(
                    "degree".into(),
                    json!({ "min": min, "max": max, "regular": min == max }),
                );
            }
            Check::Girth => {
                out.insert("girth".into(), json!(girth(&g)));
            }
            Check::Bipartite => {
                let b = bipartition(&g);
                out.insert("bipartite".into(), json!(b.is_bipartite()));
                if let Bipartition::OddCycle(cycle) = b {
                    let labels: Vec<String> = cycle.iter().map(|&i| g.label(i)).collect();
                    out.insert("odd_cycle".into(), json!(labels));
                }
            }
            Check::Cliques => {
                let k4 = k4_census(&g);
                out.insert(
                    "cliques".into(),
                    json!({
                        "clique_number": clique_number(&g),
                        "triangles": triangle_census(&g).total,
                        "k4": k4.cliques.len(),
                        "k4_pairwise_disjoint": k4.pairwise_disjoint(),
                        "k4_membership_max": k4.membership.iter().max().copied().unwrap_or(0),
                    }),
                );
            }
            Check::Diameter => {
                let report = diameter(&g);
                out.insert("diameter".into(), json!(report.exact()));
                out.insert("diameter_method".into(), json!(report));
            }
            Check::Transitivity => {
                let p = invariant_profile(&g);
                out.insert(
                    "transitivity".into(),
                    json!({
                        "vertex": vertex_certificate_from(&g, &p),
                        "edge": edge_certificate_from(&g, &p),
                    }),
                );
            }
            Check::Equivalence => {
                let pairs = equivalent_pairs(&g);
                let example = pairs.first().map(|&(a, b)| [g.label(a), g.label(b)]);
                let mut counts = Vec::with_capacity(g.len());
                for &u in g.vertices() {
                    counts.push(block_equivalent_partners(kind, dim, u)?.len());
                }
                out.insert(
                    "equivalence".into(),
                    json!({
                        "same_neighborhood_pairs": pairs.len(),
                        "example": example,
                        "block_partners_min": counts.iter().min(),
                        "block_partners_max": counts.iter().max(),
                    }),
                );
            }
        }
    }
    Ok(Value::Object(out))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteReport {
    pub kind: TopologyKind,
    pub n: usize,
    pub path: Vec<String>,
    pub length: usize,
    /// BFS distance, present when `n <= CROSS_CHECK_MAX_N`.
    pub bfs_distance: Option<u32>,
}

impl RouteReport {
    /// False only when a BFS cross-check ran and disagreed.
    pub fn consistent(&self) -> bool {
        self.bfs_distance.is_none_or(|d| d as usize == self.length)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in &self.path {
            writeln!(s, "{v}").unwrap();
        }
        match self.bfs_distance {
            Some(d) => writeln!(s, "length {} (bfs {d})", self.length).unwrap(),
            None => writeln!(s, "length {}", self.length).unwrap(),
        }
        s
    }
}

pub fn cmd_route(kind: TopologyKind, dim: Dimension, from: &str, to: &str) -> Result<RouteReport> {
    let (u, v) = (parse_vertex(from, dim)?, parse_vertex(to, dim)?);
    let path = route(kind, dim, u, v)?;
    let bfs_distance = if dim.n() <= CROSS_CHECK_MAX_N {
        let g = CubeGraph::materialize(kind, dim)?;
        let (s, t) = (
            g.index_of(u).expect("routed vertex"),
            g.index_of(v).expect("routed vertex"),
        );
        Some(bfs_distances(&g, s)[t])
    } else {
        None
    };
    Ok(RouteReport {
        kind,
        n: dim.n(),
        length: path.len(),
        path: path.labels(),
        bfs_distance,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    H1,
    H2,
}

impl Fixture {
    pub fn cycle(self) -> HamiltonianCycle {
        match self {
            Fixture::H1 => fixture_h1(),
            Fixture::H2 => fixture_h2(),
        }
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "h1" => Ok(Fixture::H1),
            "h2" => Ok(Fixture::H2),
            _ => Err(Error::Usage(format!(
                "unknown fixture {s:?} (expected h1 or h2)"
            ))),
        }
    }
}

/// Parses a cycle listing: one vertex per line, blank lines ignored.
pub fn read_cycle(text: &str, dim: Dimension) -> Result<Vec<VertexWord>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| parse_vertex(l, dim))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize) -> Dimension {
        Dimension::new(n).unwrap()
    }

    #[test]
    fn edge_lists() {
        let out = cmd_generate(TopologyKind::SSQ, d(6), Format::Edges).unwrap();
        assert_eq!(out.lines().count(), 96);
        let out = cmd_generate(TopologyKind::BSQ, d(6), Format::Edges).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 192);
        let mut sorted = lines.clone();
        sorted.sort_unstable();
        assert_eq!(lines, sorted);
        assert!(lines.iter().all(|l| {
            let (a, b) = l.split_once(' ').unwrap();
            a < b
        }));
        assert!(matches!(
            cmd_generate(TopologyKind::SQ, d(22), Format::Edges),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn dot_and_json() {
        let dot = cmd_generate(TopologyKind::SQ, d(6), Format::Dot).unwrap();
        assert!(dot.starts_with("graph \"SQ_6\" {\n"));
        assert!(dot.ends_with("}\n"));
        assert_eq!(dot.matches(" -- ").count(), 192);
        let doc: Value =
            serde_json::from_str(&cmd_generate(TopologyKind::SSQ, d(6), Format::Json).unwrap())
                .unwrap();
        assert_eq!(doc["kind"], "SSQ");
        assert_eq!(doc["vertices"].as_array().unwrap().len(), 32);
        assert_eq!(doc["edges"].as_array().unwrap().len(), 96);
    }

    #[test]
    fn analyze_examples() {
        let v = cmd_analyze(TopologyKind::SQ, d(6), &[Check::Girth]).unwrap();
        assert_eq!(v["girth"], 3);
        let v = cmd_analyze(TopologyKind::BSQ, d(6), &[Check::Bipartite]).unwrap();
        assert_eq!(v["bipartite"], true);
        let v = cmd_analyze(TopologyKind::SSQ, d(6), &[Check::Diameter]).unwrap();
        assert_eq!(v["diameter"], 4);
        let v = cmd_analyze(TopologyKind::SQ, d(6), &[Check::Transitivity]).unwrap();
        assert_eq!(v["transitivity"]["vertex"]["verdict"], "refuted");
        let v = cmd_analyze(TopologyKind::BSQ, d(6), &[Check::Equivalence]).unwrap();
        assert_eq!(v["equivalence"]["same_neighborhood_pairs"], 0);
        assert_eq!(v["equivalence"]["block_partners_min"], 1);
        assert!("colour".parse::<Check>().is_err());
    }

    #[test]
    fn route_examples() {
        let r = cmd_route(TopologyKind::SSQ, d(6), "000000", "110000").unwrap();
        assert_eq!((r.length, r.bfs_distance), (2, Some(2)));
        let r = cmd_route(TopologyKind::BSQ, d(6), "000000", "010000").unwrap();
        assert_eq!(r.length, 1);
        let r = cmd_route(TopologyKind::SSQ, d(6), "000000", "000000").unwrap();
        assert_eq!(r.length, 0);
        assert!(r.consistent());
        assert!(r.to_text().ends_with("length 0 (bfs 0)\n"));
        assert!(cmd_route(TopologyKind::SSQ, d(6), "00000x", "000000").is_err());
        let r = cmd_route(TopologyKind::BSQ, d(14), "00000000000000", "11111111111111").unwrap();
        assert_eq!(r.bfs_distance, None);
    }

    #[test]
    fn cycle_round_trip() {
        let h1 = fixture_h1();
        let text = h1.to_lines();
        assert_eq!(read_cycle(&text, h1.dim).unwrap(), h1.vertices);
        assert!(read_cycle("000000\n0000\n", d(6)).is_err());
    }
}
