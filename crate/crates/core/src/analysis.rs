//! Brute-force analytics over a materialized [`CubeGraph`]: BFS distances,
//! girth, bipartiteness, triangle and `K4` censuses, clique number,
//! transitivity refutations and same-neighborhood pairs.
//!
//! Transitivity is only ever *refuted* here. Every automorphism preserves
//! degree, triangle count, `K4` membership and eccentricity, so two vertices
//! with different profiles cannot lie in one orbit. Equal profiles everywhere
//! prove nothing and are reported as "no invariant obstruction".

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::bitcodec::{is_valid_vertex, Dimension, VertexWord};
use crate::error::Result;
use crate::topology::{block_neighbors, CubeGraph, TopologyKind};

pub const UNREACHABLE: u32 = u32::MAX;

/// Graphs up to this many vertices get an all-sources diameter scan.
pub const FULL_SCAN_LIMIT: usize = 1 << 12;

const SAMPLED_SOURCES: usize = 64;

pub fn bfs_distances(g: &CubeGraph, src: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.len()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        let next = dist[x] + 1;
        for &y in g.neighbors(x) {
            let y = y as usize;
            if dist[y] == UNREACHABLE {
                dist[y] = next;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// `None` when some vertex is unreachable from `src`.
pub fn eccentricity(g: &CubeGraph, src: usize) -> Option<u32> {
    let dist = bfs_distances(g, src);
    if dist.contains(&UNREACHABLE) {
        None
    } else {
        dist.into_iter().max()
    }
}

pub fn unreachable_from(g: &CubeGraph, src: usize) -> usize {
    bfs_distances(g, src)
        .into_iter()
        .filter(|&d| d == UNREACHABLE)
        .count()
}

pub fn is_connected(g: &CubeGraph) -> bool {
    g.is_empty() || unreachable_from(g, 0) == 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum DiameterReport {
    /// Maximum eccentricity over every source.
    Exact {
        value: u32,
    },
    /// Eccentricity of vertex 0, valid because the kind is vertex-transitive.
    VertexTransitive {
        value: u32,
    },
    /// Maximum over a sample of sources; a lower bound only.
    SampledLowerBound {
        value: u32,
        sources: usize,
    },
    Disconnected {
        unreachable: usize,
    },
}

impl DiameterReport {
    /// The diameter when it is known exactly.
    pub fn exact(self) -> Option<u32> {
        match self {
            DiameterReport::Exact { value } | DiameterReport::VertexTransitive { value } => {
                Some(value)
            }
            _ => None,
        }
    }
}

pub fn diameter(g: &CubeGraph) -> DiameterReport {
    if g.is_empty() {
        return DiameterReport::Exact { value: 0 };
    }
    let missing = unreachable_from(g, 0);
    if missing > 0 {
        return DiameterReport::Disconnected {
            unreachable: missing,
        };
    }
    if g.len() <= FULL_SCAN_LIMIT {
        let value = (0..g.len())
            .into_par_iter()
            .map(|s| eccentricity(g, s).expect("connected"))
            .max()
            .unwrap_or(0);
        return DiameterReport::Exact { value };
    }
    match g.kind() {
        TopologyKind::SSQ | TopologyKind::BSQ | TopologyKind::Q | TopologyKind::BH => {
            DiameterReport::VertexTransitive {
                value: eccentricity(g, 0).expect("connected"),
            }
        }
        TopologyKind::SQ => {
            let step = g.len() / SAMPLED_SOURCES;
            let value = (0..SAMPLED_SOURCES)
                .into_par_iter()
                .map(|i| eccentricity(g, i * step).expect("connected"))
                .max()
                .unwrap_or(0);
            DiameterReport::SampledLowerBound {
                value,
                sources: SAMPLED_SOURCES,
            }
        }
    }
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &CubeGraph) -> Option<u32> {
    let mut best = UNREACHABLE;
    let mut dist = vec![UNREACHABLE; g.len()];
    let mut parent = vec![usize::MAX; g.len()];
    let mut touched = Vec::new();
    for s in 0..g.len() {
        if best == 3 {
            break;
        }
        dist[s] = 0;
        touched.push(s);
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(x) = queue.pop_front() {
            // any cycle found from here on has length >= 2 * dist[x] + 1
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for &y in g.neighbors(x) {
                let y = y as usize;
                if dist[y] == UNREACHABLE {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    touched.push(y);
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        for &t in &touched {
            dist[t] = UNREACHABLE;
            parent[t] = usize::MAX;
        }
        touched.clear();
    }
    (best != UNREACHABLE).then_some(best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Color (0 or 1) per vertex index.
    Coloring(Vec<u8>),
    /// Vertex indices of an odd cycle, in cyclic order.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Coloring(_))
    }
}

pub fn bipartition(g: &CubeGraph) -> Bipartition {
    let mut color = vec![u8::MAX; g.len()];
    let mut parent = vec![usize::MAX; g.len()];
    let mut depth = vec![0u32; g.len()];
    for root in 0..g.len() {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                let y = y as usize;
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return Bipartition::OddCycle(tree_cycle(&parent, &depth, x, y));
                }
            }
        }
    }
    Bipartition::Coloring(color)
}

/// Closes the BFS tree paths from `a` and `b` up to their common ancestor.
fn tree_cycle(parent: &[usize], depth: &[u32], mut a: usize, mut b: usize) -> Vec<usize> {
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

fn intersect_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleCensus {
    pub per_vertex: Vec<u32>,
    /// Triangle count per edge, keyed like [`CubeGraph::edges`].
    pub per_edge: HashMap<(usize, usize), u32>,
    pub total: usize,
}

pub fn triangle_census(g: &CubeGraph) -> TriangleCensus {
    let mut per_vertex = vec![0u32; g.len()];
    let mut per_edge = HashMap::with_capacity(g.edge_count());
    let mut total = 0;
    for (a, b) in g.edges() {
        let common = intersect_sorted(g.neighbors(a), g.neighbors(b)).len() as u32;
        per_edge.insert((a, b), common);
        per_vertex[a] += common;
        per_vertex[b] += common;
        total += common as usize;
    }
    // every triangle was seen once per edge, and each vertex twice per triangle
    for t in &mut per_vertex {
        *t /= 2;
    }
    TriangleCensus {
        per_vertex,
        per_edge,
        total: total / 3,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K4Census {
    /// Each 4-clique once, vertices ascending.
    pub cliques: Vec<[usize; 4]>,
    pub membership: Vec<u32>,
}

impl K4Census {
    pub fn pairwise_disjoint(&self) -> bool {
        self.membership.iter().all(|&m| m <= 1)
    }
}

pub fn k4_census(g: &CubeGraph) -> K4Census {
    let mut cliques = Vec::new();
    let mut membership = vec![0u32; g.len()];
    for a in 0..g.len() {
        for &b in g.neighbors(a).iter().filter(|&&b| b as usize > a) {
            let common: Vec<u32> = intersect_sorted(g.neighbors(a), g.neighbors(b as usize))
                .into_iter()
                .filter(|&c| c > b)
                .collect();
            for (ci, &c) in common.iter().enumerate() {
                for &d in &common[ci + 1..] {
                    if g.has_edge(c as usize, d as usize) {
                        let q = [a, b as usize, c as usize, d as usize];
                        for &v in &q {
                            membership[v] += 1;
                        }
                        cliques.push(q);
                    }
                }
            }
        }
    }
    K4Census {
        cliques,
        membership,
    }
}

/// A vertex adjacent to all four members of some listed `K4`, if any.
pub fn k5_extension(g: &CubeGraph, census: &K4Census) -> Option<[usize; 5]> {
    census.cliques.iter().find_map(|q| {
        let common = q[1..].iter().fold(g.neighbors(q[0]).to_vec(), |acc, &v| {
            intersect_sorted(&acc, g.neighbors(v))
        });
        common
            .first()
            .map(|&x| [q[0], q[1], q[2], q[3], x as usize])
    })
}

/// Size of a largest clique (Bron-Kerbosch with pivoting).
pub fn clique_number(g: &CubeGraph) -> usize {
    fn expand(g: &CubeGraph, size: usize, p: Vec<u32>, x: Vec<u32>, best: &mut usize) {
        if p.is_empty() {
            if x.is_empty() {
                *best = (*best).max(size);
            }
            return;
        }
        if size + p.len() <= *best {
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| intersect_sorted(&p, g.neighbors(u as usize)).len())
            .expect("p is non-empty");
        let candidates: Vec<u32> = p
            .iter()
            .copied()
            .filter(|v| g.neighbors(pivot as usize).binary_search(v).is_err())
            .collect();
        let mut p = p;
        let mut x = x;
        for v in candidates {
            let nb = g.neighbors(v as usize);
            expand(
                g,
                size + 1,
                intersect_sorted(&p, nb),
                intersect_sorted(&x, nb),
                best,
            );
            p.retain(|&w| w != v);
            let at = x.binary_search(&v).unwrap_or_else(|e| e);
            x.insert(at, v);
        }
    }

    let mut best = if g.is_empty() { 0 } else { 1 };
    expand(g, 0, (0..g.len() as u32).collect(), Vec::new(), &mut best);
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexProfile {
    pub degree: u32,
    pub triangles: u32,
    pub k4: u32,
    /// Omitted above [`FULL_SCAN_LIMIT`] vertices.
    pub eccentricity: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgeProfile {
    pub triangles: u32,
    /// Endpoint profiles, smaller first.
    pub endpoints: (VertexProfile, VertexProfile),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantProfile {
    pub vertices: Vec<VertexProfile>,
    pub edges: Vec<((usize, usize), EdgeProfile)>,
}

pub fn invariant_profile(g: &CubeGraph) -> InvariantProfile {
    let tri = triangle_census(g);
    let k4 = k4_census(g);
    let ecc: Vec<Option<u32>> = if g.len() <= FULL_SCAN_LIMIT {
        (0..g.len())
            .into_par_iter()
            .map(|s| eccentricity(g, s))
            .collect()
    } else {
        vec![None; g.len()]
    };
    let vertices: Vec<VertexProfile> = (0..g.len())
        .map(|v| VertexProfile {
            degree: g.degree(v) as u32,
            triangles: tri.per_vertex[v],
            k4: k4.membership[v],
            eccentricity: ecc[v],
        })
        .collect();
    let edges = g
        .edges()
        .map(|(a, b)| {
            let (pa, pb) = (vertices[a], vertices[b]);
            let endpoints = if pa <= pb { (pa, pb) } else { (pb, pa) };
            (
                (a, b),
                EdgeProfile {
                    triangles: tri.per_edge[&(a, b)],
                    endpoints,
                },
            )
        })
        .collect();
    InvariantProfile { vertices, edges }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TransitivityCertificate {
    NoInvariantObstruction,
    Refuted { witness: Witness },
}

impl TransitivityCertificate {
    pub fn is_refuted(&self) -> bool {
        matches!(self, TransitivityCertificate::Refuted { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    Vertices {
        first: String,
        second: String,
        first_profile: VertexProfile,
        second_profile: VertexProfile,
    },
    Edges {
        first: (String, String),
        second: (String, String),
        first_profile: EdgeProfile,
        second_profile: EdgeProfile,
    },
}

pub fn vertex_transitivity_certificate(g: &CubeGraph) -> TransitivityCertificate {
    vertex_certificate_from(g, &invariant_profile(g))
}

pub fn vertex_certificate_from(g: &CubeGraph, p: &InvariantProfile) -> TransitivityCertificate {
    let Some(&reference) = p.vertices.first() else {
        return TransitivityCertificate::NoInvariantObstruction;
    };
    match p.vertices.iter().position(|&q| q != reference) {
        None => TransitivityCertificate::NoInvariantObstruction,
        Some(i) => TransitivityCertificate::Refuted {
            witness: Witness::Vertices {
                first: g.label(0),
                second: g.label(i),
                first_profile: reference,
                second_profile: p.vertices[i],
            },
        },
    }
}

pub fn edge_transitivity_certificate(g: &CubeGraph) -> TransitivityCertificate {
    edge_certificate_from(g, &invariant_profile(g))
}

pub fn edge_certificate_from(g: &CubeGraph, p: &InvariantProfile) -> TransitivityCertificate {
    let Some(&((a, b), reference)) = p.edges.first() else {
        return TransitivityCertificate::NoInvariantObstruction;
    };
    match p.edges.iter().find(|(_, q)| *q != reference) {
        None => TransitivityCertificate::NoInvariantObstruction,
        Some(&((c, d), other)) => TransitivityCertificate::Refuted {
            witness: Witness::Edges {
                first: (g.label(a), g.label(b)),
                second: (g.label(c), g.label(d)),
                first_profile: reference,
                second_profile: other,
            },
        },
    }
}

/// All unordered pairs `(i, j)`, `i < j`, of vertices with identical
/// neighbor sets, sorted. Computed extensionally from the adjacency lists.
///
/// `BH_m` has such pairs (`a_0` and `a_0 + 2`). `BSQ_n` has none: the
/// partners that differ in bit `u_{4j+1}` agree on their block-`j` neighbors
/// only (see [`shares_block_neighborhood`]).
pub fn equivalent_pairs(g: &CubeGraph) -> Vec<(usize, usize)> {
    let mut groups: HashMap<&[u32], Vec<usize>> = HashMap::new();
    for v in 0..g.len() {
        groups.entry(g.neighbors(v)).or_default().push(v);
    }
    let mut pairs: Vec<(usize, usize)> = groups
        .values()
        .flat_map(|members| {
            members.iter().enumerate().flat_map(move |(i, &a)| {
                members[i + 1..].iter().map(move |&b| (a.min(b), a.max(b)))
            })
        })
        .collect();
    pairs.sort_unstable();
    pairs
}

/// Whether `u` and `v` differ exactly in one bit `u_{4j+1}`, `j >= 1`.
pub fn differs_in_high_pair_bit(u: VertexWord, v: VertexWord, dim: Dimension) -> bool {
    let diff = u.0 ^ v.0;
    (1..=dim.k()).any(|j| diff == 1u64 << (4 * j + 1))
}

/// Whether `u` and `v` have the same neighbors across block `j`.
pub fn shares_block_neighborhood(
    kind: TopologyKind,
    dim: Dimension,
    u: VertexWord,
    v: VertexWord,
    j: usize,
) -> Result<bool> {
    Ok(block_neighbors(kind, dim, u, j)? == block_neighbors(kind, dim, v, j)?)
}

/// Vertices `v != u` that share `u`'s neighbors across some block `j >= 1`,
/// found by scanning every candidate that differs from `u` in one block.
pub fn block_equivalent_partners(
    kind: TopologyKind,
    dim: Dimension,
    u: VertexWord,
) -> Result<Vec<VertexWord>> {
    let mut out = Vec::new();
    for j in 1..=dim.k() {
        let shift = 4 * j - 2;
        for b in 0..16u64 {
            let v = VertexWord((u.0 & !(0xF << shift)) | (b << shift));
            if v != u
                && is_valid_vertex(kind, dim, v)?
                && shares_block_neighborhood(kind, dim, u, v, j)?
            {
                out.push(v);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Bipartition class used for `BSQ_n`: sum of every `pair1` plus the tail,
/// mod 2.
pub fn bsq_class(u: VertexWord, dim: Dimension) -> u8 {
    let tail = (u.0 & 0b11) as u32;
    let heads: u32 = (1..=dim.k())
        .map(|j| ((u.0 >> (4 * j)) & 0b11) as u32)
        .sum();
    ((heads + tail) % 2) as u8
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitcodec::parse_vertex;

    fn d(n: usize) -> Dimension {
        Dimension::new(n).unwrap()
    }

    fn graph(kind: TopologyKind, n: usize) -> CubeGraph {
        CubeGraph::materialize(kind, d(n)).unwrap()
    }

    fn idx(g: &CubeGraph, s: &str) -> usize {
        g.index_of(parse_vertex(s, g.dimension().unwrap()).unwrap())
            .unwrap()
    }

    #[test]
    fn diameters_n6() {
        assert_eq!(diameter(&graph(TopologyKind::SSQ, 6)).exact(), Some(4));
        assert_eq!(diameter(&graph(TopologyKind::BSQ, 6)).exact(), Some(6));
        assert_eq!(diameter(&graph(TopologyKind::Q, 6)).exact(), Some(6));
    }

    #[test]
    fn bsq6_far_vertices() {
        let g = graph(TopologyKind::BSQ, 6);
        let dist = bfs_distances(&g, 0);
        assert_eq!(eccentricity(&g, 0), Some(6));
        let far: Vec<String> = (0..g.len())
            .filter(|&v| dist[v] == 6)
            .map(|v| g.label(v))
            .collect();
        assert_eq!(far, vec!["001010", "101010"]);
        assert_eq!(dist[idx(&g, "111111")], 4);
    }

    #[test]
    fn girth_values() {
        assert_eq!(girth(&graph(TopologyKind::SQ, 6)), Some(3));
        assert_eq!(girth(&graph(TopologyKind::SSQ, 6)), Some(3));
        assert_eq!(girth(&graph(TopologyKind::BSQ, 6)), Some(4));
        assert_eq!(girth(&graph(TopologyKind::Q, 6)), Some(4));
        assert_eq!(girth(&graph(TopologyKind::SSQ, 2)), Some(4));
    }

    #[test]
    fn bipartition_results() {
        match bipartition(&graph(TopologyKind::SQ, 6)) {
            Bipartition::OddCycle(c) => assert_eq!(c.len(), 3),
            other => panic!("expected odd cycle, got {other:?}"),
        }
        let g = graph(TopologyKind::BSQ, 6);
        let Bipartition::Coloring(colors) = bipartition(&g) else {
            panic!("BSQ_6 should be bipartite");
        };
        let flip = colors[0] ^ bsq_class(g.vertex(0), d(6));
        for (v, &c) in colors.iter().enumerate() {
            assert_eq!(c, bsq_class(g.vertex(v), d(6)) ^ flip);
        }
        let q = graph(TopologyKind::Q, 6);
        let Bipartition::Coloring(colors) = bipartition(&q) else {
            panic!("Q_6 should be bipartite");
        };
        for (v, &c) in colors.iter().enumerate() {
            assert_eq!(c as u32, q.vertex(v).0.count_ones() % 2);
        }
    }

    #[test]
    fn odd_cycle_is_a_cycle() {
        let g = graph(TopologyKind::SSQ, 10);
        let Bipartition::OddCycle(c) = bipartition(&g) else {
            panic!("SSQ_10 is not bipartite");
        };
        assert_eq!(c.len() % 2, 1);
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn k4_census_sq6() {
        let g = graph(TopologyKind::SQ, 6);
        let census = k4_census(&g);
        assert_eq!(census.cliques.len(), 4);
        assert!(census.pairwise_disjoint());
        for v in 0..g.len() {
            let expected = u32::from(g.vertex(v).0 & 0b11 == 0);
            assert_eq!(census.membership[v], expected, "{}", g.label(v));
        }
        assert_eq!(k5_extension(&g, &census), None);
        assert_eq!(clique_number(&g), 4);
        assert!(k4_census(&graph(TopologyKind::BSQ, 6)).cliques.is_empty());
    }

    #[test]
    fn k4_census_sq10() {
        let g = graph(TopologyKind::SQ, 10);
        let census = k4_census(&g);
        for v in 0..g.len() {
            let expected = if g.vertex(v).0 & 0b11 == 0 { 2 } else { 0 };
            assert_eq!(census.membership[v], expected);
        }
        assert_eq!(k5_extension(&g, &census), None);
        assert_eq!(clique_number(&g), 4);
    }

    #[test]
    fn clique_number_small_cases() {
        assert_eq!(clique_number(&graph(TopologyKind::Q, 6)), 2);
        assert_eq!(clique_number(&graph(TopologyKind::SSQ, 6)), 4);
        assert_eq!(clique_number(&graph(TopologyKind::SQ, 2)), 2);
    }

    #[test]
    fn sq6_certificates() {
        let g = graph(TopologyKind::SQ, 6);
        match vertex_transitivity_certificate(&g) {
            TransitivityCertificate::Refuted {
                witness:
                    Witness::Vertices {
                        first,
                        second,
                        first_profile,
                        second_profile,
                    },
            } => {
                assert_eq!((first.as_str(), second.as_str()), ("000000", "000001"));
                assert_eq!((first_profile.k4, second_profile.k4), (1, 0));
            }
            other => panic!("unexpected {other:?}"),
        }
        match edge_transitivity_certificate(&g) {
            TransitivityCertificate::Refuted {
                witness:
                    Witness::Edges {
                        first,
                        second,
                        first_profile,
                        second_profile,
                    },
            } => {
                assert_eq!(first, ("000000".into(), "000001".into()));
                assert_eq!(second, ("000000".into(), "000100".into()));
                assert_eq!((first_profile.triangles, second_profile.triangles), (0, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn variants_have_no_vertex_obstruction() {
        for kind in [TopologyKind::SSQ, TopologyKind::BSQ] {
            assert_eq!(
                vertex_transitivity_certificate(&graph(kind, 6)),
                TransitivityCertificate::NoInvariantObstruction,
                "{kind}"
            );
        }
    }

    #[test]
    fn triangle_counts() {
        let g = graph(TopologyKind::SQ, 6);
        let t = triangle_census(&g);
        // one K4 per zero-tail vertex, 4 triangles per K4
        assert_eq!(t.total, 16);
        assert_eq!(t.per_vertex[idx(&g, "000000")], 3);
        for (&(a, b), &c) in &t.per_edge {
            assert!(c <= t.per_vertex[a].min(t.per_vertex[b]));
        }
    }

    #[test]
    fn bsq6_has_no_twins_but_block_neighborhoods_coincide() {
        let dim = d(6);
        let g = graph(TopologyKind::BSQ, 6);
        assert!(equivalent_pairs(&g).is_empty());
        let (u, v) = (g.vertex(idx(&g, "000000")), g.vertex(idx(&g, "100000")));
        assert!(differs_in_high_pair_bit(u, v, dim));
        assert!(shares_block_neighborhood(TopologyKind::BSQ, dim, u, v, 1).unwrap());
        assert!(!shares_block_neighborhood(TopologyKind::BSQ, dim, u, v, 0).unwrap());
    }

    #[test]
    fn block_equivalent_partners_bsq10() {
        let dim = d(10);
        for x in (0..1u64 << 10).step_by(7) {
            let u = VertexWord(x);
            let partners = block_equivalent_partners(TopologyKind::BSQ, dim, u).unwrap();
            assert_eq!(partners.len(), dim.k());
            for p in partners {
                assert!(differs_in_high_pair_bit(u, p, dim));
            }
        }
    }

    #[test]
    fn equivalence_bh2() {
        let g = CubeGraph::balanced_hypercube(2).unwrap();
        let pairs: Vec<(String, String)> = equivalent_pairs(&g)
            .into_iter()
            .map(|(a, b)| (g.label(a), g.label(b)))
            .collect();
        assert_eq!(pairs.len(), 8);
        assert!(pairs.contains(&("(0,0)".into(), "(2,0)".into())));
    }

    #[test]
    fn forests_and_disconnected_graphs() {
        // path 0-1-2 plus an isolated edge 3-4
        let g = CubeGraph::from_adjacency(vec![vec![1], vec![0, 2], vec![1], vec![4], vec![3]]);
        assert_eq!(girth(&g), None);
        assert!(!is_connected(&g));
        assert_eq!(
            diameter(&g),
            DiameterReport::Disconnected { unreachable: 2 }
        );
        assert_eq!(eccentricity(&g, 0), None);
        assert!(bipartition(&g).is_bipartite());
        let triangle = CubeGraph::from_adjacency(vec![vec![1, 2], vec![0, 2], vec![0, 1]]);
        assert_eq!(bipartition(&triangle), Bipartition::OddCycle(vec![1, 0, 2]));
    }
}
