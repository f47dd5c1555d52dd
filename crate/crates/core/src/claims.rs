//! The claims report behind `shufflecube verify-claims`.
//!
//! Each record states an expected value, recomputes it, and compares. Two
//! record kinds exist: `claim` and `discrepancy`. A discrepancy record
//! documents a stated value that does not survive computation; it passes
//! when the computed value equals the corrected expectation, and carries
//! the stated value alongside.
//!
//! Output is deterministic: sampling uses a seeded ChaCha RNG, records are
//! emitted in a fixed order and timings are left out unless asked for.

use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{
    bfs_distances, bipartition, block_equivalent_partners, bsq_class, clique_number, diameter,
    differs_in_high_pair_bit, edge_certificate_from, equivalent_pairs, girth, invariant_profile,
    is_connected, k4_census, vertex_certificate_from,
};
use crate::bitcodec::{join_pairs, pair1, pair2, Dimension, VertexWord};
use crate::error::{Error, Result};
use crate::hamiltonian::{fixture_h1, fixture_h2, hamiltonian_cycle, validate_cycle};
use crate::routing::{diameter_formula, distance_of, route};
use crate::symmetry::{build_phi, build_psi, verify_automorphism};
use crate::topology::{
    adjacent, bh_neighbors, bsq_block_neighbors, BHVertex, CubeGraph, TopologyKind,
};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Dimensions `verify-claims` accepts.
pub const SUPPORTED_N: [usize; 3] = [6, 10, 14];

/// Random automorphism checks per kind above `n = 6`.
pub const AUTOMORPHISM_SAMPLES: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordKind {
    Claim,
    Discrepancy,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimRecord {
    pub kind: RecordKind,
    pub id: String,
    pub topology: String,
    pub description: String,
    /// The value as originally stated; discrepancy records only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stated: Option<Value>,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimsReport {
    pub ns: Vec<usize>,
    pub seed: u64,
    pub pass: bool,
    pub records: Vec<ClaimRecord>,
}

impl ClaimsReport {
    pub fn failures(&self) -> impl Iterator<Item = &ClaimRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// One line per record, then a totals line.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            let kind = match r.kind {
                RecordKind::Claim => "claim",
                RecordKind::Discrepancy => "discrepancy",
            };
            write!(s, "{verdict} {kind:<11} {:<28} {}", r.id, r.description).unwrap();
            if let Some(ms) = r.elapsed_ms {
                write!(s, " ({ms:.1} ms)").unwrap();
            }
            s.push('\n');
        }
        let failed = self.failures().count();
        writeln!(
            s,
            "{} records, {failed} failed: {}",
            self.records.len(),
            if self.pass { "PASS" } else { "FAIL" }
        )
        .unwrap();
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimsOptions {
    pub seed: u64,
    pub timings: bool,
}

impl Default for ClaimsOptions {
    fn default() -> Self {
        ClaimsOptions {
            seed: DEFAULT_SEED,
            timings: false,
        }
    }
}

struct Suite {
    records: Vec<ClaimRecord>,
    timings: bool,
}

impl Suite {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        kind: RecordKind,
        id: String,
        topology: &str,
        description: String,
        stated: Option<Value>,
        expected: Value,
        run: impl FnOnce() -> (Value, bool),
    ) {
        let start = Instant::now();
        let (computed, pass) = run();
        let elapsed_ms = self.timings.then(|| start.elapsed().as_secs_f64() * 1000.0);
        self.records.push(ClaimRecord {
            kind,
            id,
            topology: topology.to_string(),
            description,
            stated,
            expected,
            computed,
            pass,
            elapsed_ms,
        });
    }

    /// A claim that passes when the computed value equals `expected`.
    fn eq(
        &mut self,
        id: String,
        topology: &str,
        description: impl Into<String>,
        expected: Value,
        run: impl FnOnce() -> Value,
    ) {
        let want = expected.clone();
        self.push(
            RecordKind::Claim,
            id,
            topology,
            description.into(),
            None,
            expected,
            || {
                let got = run();
                let pass = got == want;
                (got, pass)
            },
        );
    }

    fn discrepancy(
        &mut self,
        id: String,
        topology: &str,
        description: impl Into<String>,
        stated: Value,
        expected: Value,
        run: impl FnOnce() -> Value,
    ) {
        let want = expected.clone();
        self.push(
            RecordKind::Discrepancy,
            id,
            topology,
            description.into(),
            Some(stated),
            expected,
            || {
                let got = run();
                let pass = got == want;
                (got, pass)
            },
        );
    }
}

/// Runs the full suite for each `n` (deduplicated, ascending) plus the
/// fixed 6-dimensional records.
pub fn verify_claims(ns: &[usize], opts: &ClaimsOptions) -> Result<ClaimsReport> {
    if ns.is_empty() {
        return Err(Error::Usage("verify-claims needs at least one n".into()));
    }
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    for &n in &ns {
        Dimension::new(n)?;
        if !SUPPORTED_N.contains(&n) {
            return Err(Error::Usage(format!(
                "verify-claims supports n in {{6, 10, 14}}, got {n}"
            )));
        }
    }
    let mut suite = Suite {
        records: Vec::new(),
        timings: opts.timings,
    };
    fixed_claims(&mut suite);
    for &n in &ns {
        let dim = Dimension::new(n)?;
        sq_claims(&mut suite, dim)?;
        for kind in [TopologyKind::SSQ, TopologyKind::BSQ] {
            cube_claims(&mut suite, kind, dim, opts.seed)?;
        }
    }
    let pass = suite.records.iter().all(|r| r.pass);
    Ok(ClaimsReport {
        ns,
        seed: opts.seed,
        pass,
        records: suite.records,
    })
}

fn fixed_claims(s: &mut Suite) {
    let dim = Dimension::new(6).expect("6 is a valid dimension");
    for (id, fixture, kind) in [
        ("fixture.h1", fixture_h1(), TopologyKind::SSQ),
        ("fixture.h2", fixture_h2(), TopologyKind::BSQ),
    ] {
        let len = kind.vertex_count(dim);
        s.eq(
            id.into(),
            &format!("{kind}_6"),
            format!("explicit {len}-vertex listing is a Hamiltonian cycle of {kind}_6"),
            json!({ "length": len, "valid": true }),
            || {
                cycle_verdict(
                    fixture.vertices.len(),
                    validate_cycle(kind, dim, &fixture.vertices),
                )
            },
        );
    }

    s.eq(
        "bh2.block_rule".into(),
        "BH_2",
        "BSQ block adjacency is BH_2 adjacency under (a0, a1) = (pair1, pair2)",
        json!({ "blocks": 16, "matching": 16 }),
        || {
            let matching = (0..16u8)
                .filter(|&a| {
                    let mut bsq = bsq_block_neighbors(a).to_vec();
                    bsq.sort_unstable();
                    let mut bh: Vec<u8> = bh_neighbors(2, &BHVertex(vec![pair1(a), pair2(a)]))
                        .expect("coordinates in range")
                        .iter()
                        .map(|b| join_pairs(b.0[0], b.0[1]))
                        .collect();
                    bh.sort_unstable();
                    bsq == bh
                })
                .count();
            json!({ "blocks": 16, "matching": matching })
        },
    );

    s.eq(
        "bh2.equivalence".into(),
        "BH_2",
        "(a0, a1) and (a0 + 2, a1) have identical neighborhoods, and these are the only twins",
        json!({ "vertices": 16, "identical": 16, "twin_pairs": 8, "twins_are_shifts": true }),
        || {
            let g = CubeGraph::balanced_hypercube(2).expect("BH_2 is small");
            let shift = |w: VertexWord| {
                let mut a = BHVertex::decode(w, 2);
                a.0[0] = (a.0[0] + 2) % 4;
                a.encode()
            };
            let identical = g
                .vertices()
                .iter()
                .filter(|&&w| {
                    let i = g.index_of(w).expect("vertex");
                    let j = g.index_of(shift(w)).expect("vertex");
                    g.neighbors(i) == g.neighbors(j)
                })
                .count();
            let pairs = equivalent_pairs(&g);
            let shifts = pairs
                .iter()
                .all(|&(i, j)| shift(g.vertex(i)) == g.vertex(j));
            json!({
                "vertices": g.len(),
                "identical": identical,
                "twin_pairs": pairs.len(),
                "twins_are_shifts": shifts,
            })
        },
    );
}

fn cycle_verdict(
    len: usize,
    result: std::result::Result<(), crate::hamiltonian::CycleViolation>,
) -> Value {
    match result {
        Ok(()) => json!({ "length": len, "valid": true }),
        Err(v) => json!({ "length": len, "valid": false, "violation": v }),
    }
}

fn size_value(g: &CubeGraph) -> Value {
    let min = (0..g.len()).map(|i| g.degree(i)).min().unwrap_or(0);
    let max = (0..g.len()).map(|i| g.degree(i)).max().unwrap_or(0);
    json!({
        "vertices": g.len(),
        "edges": g.edge_count(),
        "degree": if min == max { json!(min) } else { json!([min, max]) },
        "connected": is_connected(g),
    })
}

fn sq_claims(s: &mut Suite, dim: Dimension) -> Result<()> {
    let n = dim.n();
    let k = dim.k();
    let topo = format!("SQ_{n}");
    let g = CubeGraph::materialize(TopologyKind::SQ, dim)?;
    let v = 1usize << n;

    s.eq(
        format!("sq{n}.size"),
        &topo,
        format!("{v} vertices, {n}-regular, connected"),
        json!({ "vertices": v, "edges": v * n / 2, "degree": n, "connected": true }),
        || size_value(&g),
    );
    s.eq(format!("sq{n}.girth"), &topo, "girth 3", json!(3), || {
        json!(girth(&g))
    });
    s.eq(
        format!("sq{n}.bipartite"),
        &topo,
        "not bipartite",
        json!(false),
        || json!(bipartition(&g).is_bipartite()),
    );
    s.eq(
        format!("sq{n}.clique_number"),
        &topo,
        "clique number 4",
        json!(4),
        || json!(clique_number(&g)),
    );

    let census = k4_census(&g);
    let tail00 = v / 4;
    s.eq(
        format!("sq{n}.k4"),
        &topo,
        format!(
            "vertices with u1u0 = 00 lie in exactly {k} K4s, all others in none; {} K4s in total",
            tail00 * k / 4
        ),
        json!({ "tail_00": [k], "other": [0], "k4": tail00 * k / 4 }),
        || {
            let mut zero = Vec::new();
            let mut other = Vec::new();
            for (i, &m) in census.membership.iter().enumerate() {
                if g.vertex(i).0 & 0b11 == 0 {
                    zero.push(m);
                } else {
                    other.push(m);
                }
            }
            for list in [&mut zero, &mut other] {
                list.sort_unstable();
                list.dedup();
            }
            json!({ "tail_00": zero, "other": other, "k4": census.cliques.len() })
        },
    );
    if k == 1 {
        s.eq(
            format!("sq{n}.k4_disjoint"),
            &topo,
            "the K4s are pairwise disjoint and cover exactly the vertices with u1u0 = 00",
            json!({ "pairwise_disjoint": true, "covered": tail00, "covered_tail_00": tail00 }),
            || {
                let covered: Vec<usize> =
                    (0..g.len()).filter(|&i| census.membership[i] > 0).collect();
                let on_tail = covered
                    .iter()
                    .filter(|&&i| g.vertex(i).0 & 0b11 == 0)
                    .count();
                json!({
                    "pairwise_disjoint": census.pairwise_disjoint(),
                    "covered": covered.len(),
                    "covered_tail_00": on_tail,
                })
            },
        );
    }

    let profile = invariant_profile(&g);
    s.push(
        RecordKind::Claim,
        format!("sq{n}.vertex_transitive"),
        &topo,
        "not vertex-transitive (refuted by an invariant witness)".into(),
        None,
        json!("refuted"),
        || {
            let cert = vertex_certificate_from(&g, &profile);
            (json!(cert), cert.is_refuted())
        },
    );
    s.push(
        RecordKind::Claim,
        format!("sq{n}.edge_transitive"),
        &topo,
        "not edge-transitive (refuted by an invariant witness)".into(),
        None,
        json!("refuted"),
        || {
            let cert = edge_certificate_from(&g, &profile);
            (json!(cert), cert.is_refuted())
        },
    );
    Ok(())
}

fn cube_claims(s: &mut Suite, kind: TopologyKind, dim: Dimension, seed: u64) -> Result<()> {
    let n = dim.n();
    let k = dim.k();
    let tag = kind.to_string().to_lowercase();
    let topo = format!("{kind}_{n}");
    let g = CubeGraph::materialize(kind, dim)?;
    let v = g.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 8) ^ kind as u64);

    s.eq(
        format!("{tag}{n}.size"),
        &topo,
        format!("{v} vertices, {n}-regular, connected"),
        json!({ "vertices": kind.vertex_count(dim), "edges": v * n / 2, "degree": n, "connected": true }),
        || size_value(&g),
    );

    match kind {
        TopologyKind::BSQ => s.eq(
            format!("{tag}{n}.bipartite"),
            &topo,
            "bipartite; the pair1-plus-tail parity class separates every edge",
            json!({ "bipartite": true, "class_separates_edges": true, "class_sizes": [v / 2, v / 2] }),
            || {
                let separates = g
                    .edges()
                    .all(|(a, b)| bsq_class(g.vertex(a), dim) != bsq_class(g.vertex(b), dim));
                let ones = g.vertices().iter().filter(|&&w| bsq_class(w, dim) == 1).count();
                json!({
                    "bipartite": bipartition(&g).is_bipartite(),
                    "class_separates_edges": separates,
                    "class_sizes": [v - ones, ones],
                })
            },
        ),
        _ => s.eq(
            format!("{tag}{n}.bipartite"),
            &topo,
            "not bipartite",
            json!({ "bipartite": false }),
            || json!({ "bipartite": bipartition(&g).is_bipartite() }),
        ),
    }

    let formula = diameter_formula(kind, dim)?;
    let from_zero = bfs_distances(&g, 0);
    let formula_text = match kind {
        TopologyKind::SSQ => "(n - 2) / 2 + 2",
        _ => "n",
    };
    s.push(
        RecordKind::Claim,
        format!("{tag}{n}.diameter"),
        &topo,
        format!(
            "diameter equals {formula_text} = {formula}, with a witness at that distance from 0"
        ),
        None,
        json!({ "diameter": formula }),
        || {
            let report = diameter(&g);
            let witness = from_zero
                .iter()
                .position(|&d| d == formula)
                .map(|i| g.label(i));
            let pass = report.exact() == Some(formula) && witness.is_some();
            (
                json!({ "diameter": report.exact(), "method": report, "witness": witness }),
                pass,
            )
        },
    );

    let (stated_vertex, corrected) = match kind {
        TopologyKind::SSQ => {
            let mut w = 0b11u64;
            for j in 1..=k {
                w |= 0b1101 << (4 * j - 2);
            }
            (VertexWord(w), 2 * k as u32 + 1)
        }
        _ => (VertexWord(dim.mask()), 3 * k as u32 + 1),
    };
    let stated_label = crate::bitcodec::format_vertex(stated_vertex, dim);
    s.discrepancy(
        format!("{tag}{n}.stated_witness"),
        &topo,
        format!(
            "{stated_label} was given as a diameter witness at distance {formula}; BFS gives {corrected}"
        ),
        json!({ "vertex": stated_label, "distance": formula }),
        json!({ "vertex": stated_label, "distance": corrected }),
        || {
            let i = g.index_of(stated_vertex).expect("witness is a vertex");
            json!({ "vertex": stated_label, "distance": from_zero[i] })
        },
    );

    let pairs: Vec<(usize, usize)> = if n == 6 {
        (0..v).flat_map(|a| (0..v).map(move |b| (a, b))).collect()
    } else {
        (0..AUTOMORPHISM_SAMPLES)
            .map(|_| (rng.random_range(0..v), rng.random_range(0..v)))
            .collect()
    };
    let map_name = if kind == TopologyKind::SSQ {
        "phi"
    } else {
        "psi"
    };
    s.eq(
        format!("{tag}{n}.automorphisms"),
        &topo,
        format!(
            "{map_name}(u, v) maps v to u, is a bijection and preserves every edge ({})",
            if n == 6 {
                "all ordered pairs"
            } else {
                "random pairs"
            }
        ),
        json!({ "pairs": pairs.len(), "failures": 0 }),
        || {
            let failures = pairs
                .par_iter()
                .filter(|&&(a, b)| {
                    let (u, w) = (g.vertex(a), g.vertex(b));
                    let spec = match kind {
                        TopologyKind::SSQ => build_phi(u, w, dim),
                        _ => build_psi(u, w, dim),
                    }
                    .expect("vertices of the graph");
                    spec.apply(w).ok() != Some(u) || verify_automorphism(&g, &spec).is_err()
                })
                .count();
            json!({ "pairs": pairs.len(), "failures": failures })
        },
    );

    let groups: Vec<(usize, Vec<usize>)> = match n {
        6 => (0..v).map(|a| (a, (0..v).collect())).collect(),
        _ => {
            let (sources, targets) = if n == 10 { (100, 100) } else { (20, 50) };
            (0..sources)
                .map(|_| {
                    let a = rng.random_range(0..v);
                    (a, (0..targets).map(|_| rng.random_range(0..v)).collect())
                })
                .collect()
        }
    };
    let pair_count: usize = groups.iter().map(|(_, t)| t.len()).sum();
    s.eq(
        format!("{tag}{n}.routing"),
        &topo,
        format!(
            "routes have BFS length, valid hops, and the blockwise distance sum equals BFS ({})",
            if n == 6 { "all pairs" } else { "random pairs" }
        ),
        json!({ "pairs": pair_count, "mismatches": 0 }),
        || {
            let mismatches: usize = groups
                .par_iter()
                .map(|(a, targets)| {
                    let dist = bfs_distances(&g, *a);
                    let u = g.vertex(*a);
                    targets
                        .iter()
                        .filter(|&&b| {
                            let w = g.vertex(b);
                            let p = route(kind, dim, u, w).expect("valid vertices");
                            let hops_ok = p
                                .vertices
                                .windows(2)
                                .all(|h| adjacent(kind, dim, h[0], h[1]).unwrap_or(false));
                            !(hops_ok
                                && p.vertices.first() == Some(&u)
                                && p.vertices.last() == Some(&w)
                                && p.len() as u32 == dist[b]
                                && distance_of(kind, dim, u, w).ok() == Some(dist[b]))
                        })
                        .count()
                })
                .sum();
            json!({ "pairs": pair_count, "mismatches": mismatches })
        },
    );

    let count = kind.vertex_count(dim);
    s.eq(
        format!("{tag}{n}.hamiltonian"),
        &topo,
        format!("the snake-product cycle visits all {count} vertices and closes"),
        json!({ "length": count, "valid": true }),
        || match hamiltonian_cycle(kind, dim) {
            Ok(c) => cycle_verdict(c.len(), validate_cycle(kind, dim, &c.vertices)),
            Err(e) => json!({ "error": e.to_string() }),
        },
    );

    if kind == TopologyKind::BSQ {
        s.discrepancy(
            format!("{tag}{n}.twins"),
            &topo,
            "pairs differing in one bit u_{4j+1} were stated to have identical neighborhoods; \
             no two vertices do",
            json!({ "same_neighborhood_pairs": v * k / 2 }),
            json!({ "same_neighborhood_pairs": 0 }),
            || json!({ "same_neighborhood_pairs": equivalent_pairs(&g).len() }),
        );
        s.eq(
            format!("{tag}{n}.block_twins"),
            &topo,
            format!(
                "each vertex has exactly {k} partners with the same neighbors across one block, \
                 each differing in one bit u_{{4j+1}}"
            ),
            json!({ "partners_per_vertex": [k], "all_differ_in_high_pair_bit": true }),
            || {
                let per_vertex: Vec<(usize, bool)> = g
                    .vertices()
                    .par_iter()
                    .map(|&u| {
                        let partners =
                            block_equivalent_partners(kind, dim, u).expect("valid vertex");
                        let ok = partners
                            .iter()
                            .all(|&w| differs_in_high_pair_bit(u, w, dim));
                        (partners.len(), ok)
                    })
                    .collect();
                let mut counts: Vec<usize> = per_vertex.iter().map(|p| p.0).collect();
                counts.sort_unstable();
                counts.dedup();
                json!({
                    "partners_per_vertex": counts,
                    "all_differ_in_high_pair_bit": per_vertex.iter().all(|p| p.1),
                })
            },
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_n() {
        let o = ClaimsOptions::default();
        assert!(matches!(
            verify_claims(&[7], &o),
            Err(Error::InvalidDimension(7))
        ));
        assert!(matches!(verify_claims(&[2], &o), Err(Error::Usage(_))));
        assert!(matches!(verify_claims(&[18], &o), Err(Error::Usage(_))));
        assert!(matches!(verify_claims(&[], &o), Err(Error::Usage(_))));
    }

    #[test]
    fn n6_passes_and_is_stable() {
        let o = ClaimsOptions::default();
        let a = verify_claims(&[6], &o).unwrap();
        if let Some(r) = a.failures().next() {
            panic!("{} failed: computed {}", r.id, r.computed);
        }
        assert!(a.pass);
        let b = verify_claims(&[6, 6], &o).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        let ids: Vec<&str> = a.records.iter().map(|r| r.id.as_str()).collect();
        for id in [
            "fixture.h1",
            "sq6.k4_disjoint",
            "bsq6.stated_witness",
            "ssq6.stated_witness",
            "bsq6.twins",
        ] {
            assert!(ids.contains(&id), "{id}");
        }
    }

    #[test]
    fn discrepancies_carry_stated_values() {
        let r = verify_claims(&[6], &ClaimsOptions::default()).unwrap();
        let find = |id: &str| r.records.iter().find(|x| x.id == id).unwrap();
        let b = find("bsq6.stated_witness");
        assert_eq!(b.kind, RecordKind::Discrepancy);
        assert_eq!(b.stated.as_ref().unwrap()["distance"], 6);
        assert_eq!(b.computed["distance"], 4);
        let s = find("ssq6.stated_witness");
        assert_eq!(s.stated.as_ref().unwrap()["vertex"], "110111");
        assert_eq!(s.computed["distance"], 3);
        assert_eq!(find("bsq6.diameter").computed["witness"], "001010");
    }

    #[test]
    fn timings_are_opt_in() {
        let r = verify_claims(&[6], &ClaimsOptions::default()).unwrap();
        assert!(!r.to_json().contains("elapsed_ms"));
        let o = ClaimsOptions {
            timings: true,
            ..ClaimsOptions::default()
        };
        let r = verify_claims(&[6], &o).unwrap();
        assert!(r.records.iter().all(|x| x.elapsed_ms.is_some()));
    }
}
