//! Adjacency oracles for the hypercube `Q_n`, the shuffle-cube `SQ_n`, its
//! simplified (`SSQ_n`) and balanced (`BSQ_n`) variants, and the balanced
//! hypercube `BH_m`.
//!
//! Two vertices of `SQ_n`, `SSQ_n` or `BSQ_n` are adjacent only if they
//! differ in exactly one block. Within a 4-bit block the rule is:
//!
//! * `SQ`: the XOR of the two blocks lies in `V_{s_2(u)}`, the V-set picked
//!   by the shared 2-bit tail;
//! * `SSQ`: the XOR lies in `V_00` (blocks restricted to `pair1 in {00,11}`);
//! * `BSQ`: `pair1` moves by `+-1 (mod 4)` and `pair2` either stays or moves
//!   by `(-1)^{u_{4j}}`.
//!
//! The 2-bit tail forms a 4-cycle: Hamming-1 for `Q`/`SQ`, and the mod-4
//! cycle `00-01-10-11-00` for `SSQ`/`BSQ`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bitcodec::{
    block_unchecked, format_vertex, is_valid_vertex, join_pairs, pair1, pair2,
    with_block_unchecked, Dimension, VertexWord,
};
use crate::error::{Error, Result};

/// Largest graph [`CubeGraph`] will materialize.
pub const VERTEX_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TopologyKind {
    Q,
    SQ,
    SSQ,
    BSQ,
    BH,
}

impl TopologyKind {
    pub const CUBES: [TopologyKind; 4] = [
        TopologyKind::Q,
        TopologyKind::SQ,
        TopologyKind::SSQ,
        TopologyKind::BSQ,
    ];

    pub fn vertex_count(self, dim: Dimension) -> u64 {
        match self {
            TopologyKind::SSQ => 1u64 << ((3 * dim.n() + 2) / 4),
            _ => 1u64 << dim.n(),
        }
    }
}

impl fmt::Display for TopologyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TopologyKind::Q => "Q",
            TopologyKind::SQ => "SQ",
            TopologyKind::SSQ => "SSQ",
            TopologyKind::BSQ => "BSQ",
            TopologyKind::BH => "BH",
        };
        f.write_str(s)
    }
}

impl FromStr for TopologyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q" => Ok(TopologyKind::Q),
            "sq" => Ok(TopologyKind::SQ),
            "ssq" => Ok(TopologyKind::SSQ),
            "bsq" => Ok(TopologyKind::BSQ),
            "bh" => Ok(TopologyKind::BH),
            _ => Err(Error::Usage(format!("unknown topology kind {s:?}"))),
        }
    }
}

const V_SETS: [[u8; 4]; 4] = [
    [0b1111, 0b0001, 0b0010, 0b0011],
    [0b0100, 0b0101, 0b0110, 0b0111],
    [0b1000, 0b1001, 0b1010, 0b1011],
    [0b1100, 0b1101, 0b1110, 0b1111],
];

/// The V-set row for a 2-bit tag, in table order.
pub fn v_set(tag: u8) -> [u8; 4] {
    V_SETS[(tag & 0b11) as usize]
}

pub fn ssq_block_adjacent(a: u8, b: u8) -> bool {
    V_SETS[0].contains(&(a ^ b))
}

pub fn bsq_block_adjacent(a: u8, b: u8) -> bool {
    let (a1, a2) = (pair1(a), pair2(a));
    let (b1, b2) = (pair1(b), pair2(b));
    let step = (b1 + 4 - a1) % 4;
    if step != 1 && step != 3 {
        return false;
    }
    let shift = if a1 & 1 == 0 { 1 } else { 3 };
    b2 == a2 || b2 == (a2 + shift) % 4
}

/// The four neighbors of a 4-bit block under the balanced rule.
pub fn bsq_block_neighbors(a: u8) -> [u8; 4] {
    let (a1, a2) = (pair1(a), pair2(a));
    let shift = if a1 & 1 == 0 { 1 } else { 3 };
    let up = (a1 + 1) % 4;
    let down = (a1 + 3) % 4;
    let moved = (a2 + shift) % 4;
    [
        join_pairs(up, a2),
        join_pairs(down, a2),
        join_pairs(up, moved),
        join_pairs(down, moved),
    ]
}

fn cycle4_adjacent(a: u8, b: u8) -> bool {
    let d = (b + 4 - a) % 4;
    d == 1 || d == 3
}

fn tail_adjacent(kind: TopologyKind, a: u8, b: u8) -> bool {
    match kind {
        TopologyKind::Q | TopologyKind::SQ => (a ^ b).count_ones() == 1,
        _ => cycle4_adjacent(a, b),
    }
}

fn check_vertex(kind: TopologyKind, dim: Dimension, u: VertexWord) -> Result<()> {
    if !is_valid_vertex(kind, dim, u)? {
        return Err(Error::InvalidVertex {
            kind,
            vertex: if u.0 & !dim.mask() == 0 {
                format_vertex(u, dim)
            } else {
                format!("{:#x}", u.0)
            },
        });
    }
    Ok(())
}

pub fn adjacent(kind: TopologyKind, dim: Dimension, u: VertexWord, v: VertexWord) -> Result<bool> {
    check_vertex(kind, dim, u)?;
    check_vertex(kind, dim, v)?;
    if u == v {
        return Ok(false);
    }
    if kind == TopologyKind::Q {
        return Ok((u.0 ^ v.0).count_ones() == 1);
    }
    let mut differing = dim
        .blocks()
        .filter(|&j| block_unchecked(u, j) != block_unchecked(v, j));
    let j = differing.next().expect("u != v");
    if differing.next().is_some() {
        return Ok(false);
    }
    let (a, b) = (block_unchecked(u, j), block_unchecked(v, j));
    if j == 0 {
        return Ok(tail_adjacent(kind, a, b));
    }
    Ok(match kind {
        TopologyKind::SQ => v_set(block_unchecked(u, 0)).contains(&(a ^ b)),
        TopologyKind::SSQ => ssq_block_adjacent(a, b),
        TopologyKind::BSQ => bsq_block_adjacent(a, b),
        TopologyKind::Q | TopologyKind::BH => unreachable!(),
    })
}

/// Neighbors of `u`, sorted ascending.
pub fn neighbors(kind: TopologyKind, dim: Dimension, u: VertexWord) -> Result<Vec<VertexWord>> {
    check_vertex(kind, dim, u)?;
    let mut out = Vec::with_capacity(dim.n());
    if kind == TopologyKind::Q {
        out.extend((0..dim.n()).map(|i| VertexWord(u.0 ^ (1 << i))));
    } else {
        let tail = block_unchecked(u, 0);
        match kind {
            TopologyKind::SQ => {
                out.push(VertexWord(u.0 ^ 0b01));
                out.push(VertexWord(u.0 ^ 0b10));
            }
            _ => {
                out.push(with_block_unchecked(u, 0, (tail + 1) % 4));
                out.push(with_block_unchecked(u, 0, (tail + 3) % 4));
            }
        }
        for j in 1..=dim.k() {
            let a = block_unchecked(u, j);
            let targets = match kind {
                TopologyKind::SQ => v_set(tail).map(|x| a ^ x),
                TopologyKind::SSQ => V_SETS[0].map(|x| a ^ x),
                TopologyKind::BSQ => bsq_block_neighbors(a),
                _ => unreachable!(),
            };
            out.extend(targets.iter().map(|&b| with_block_unchecked(u, j, b)));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Neighbors of `u` that differ from it in block `j`, sorted.
pub fn block_neighbors(
    kind: TopologyKind,
    dim: Dimension,
    u: VertexWord,
    j: usize,
) -> Result<Vec<VertexWord>> {
    if j > dim.k() {
        return Err(Error::IndexOutOfRange {
            what: "block",
            index: j,
            limit: dim.k(),
        });
    }
    let a = block_unchecked(u, j);
    Ok(neighbors(kind, dim, u)?
        .into_iter()
        .filter(|&v| block_unchecked(v, j) != a)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockLabel {
    /// Mod-4 cycle on the 2-bit tail.
    C4,
    /// The 8 blocks with `pair1 in {00,11}` under XOR-in-`V_00`.
    Ssq,
    /// All 16 blocks under the balanced rule.
    Bsq,
}

impl BlockLabel {
    pub fn for_kind(kind: TopologyKind) -> Option<BlockLabel> {
        match kind {
            TopologyKind::SSQ => Some(BlockLabel::Ssq),
            TopologyKind::BSQ => Some(BlockLabel::Bsq),
            _ => None,
        }
    }
}

const NO_NODE: u8 = u8::MAX;

/// A per-block factor graph with precomputed BFS tables.
#[derive(Debug, Clone)]
pub struct BlockGraph {
    pub label: BlockLabel,
    nodes: Vec<u8>,
    position: [u8; 16],
    adjacency: Vec<Vec<u8>>,
    dist: Vec<Vec<u8>>,
    next: Vec<Vec<u8>>,
}

impl BlockGraph {
    fn build(label: BlockLabel) -> Self {
        let (nodes, rule): (Vec<u8>, fn(u8, u8) -> bool) = match label {
            BlockLabel::C4 => ((0..4).collect(), cycle4_adjacent),
            BlockLabel::Ssq => (
                (0..16).filter(|&b| matches!(pair1(b), 0 | 3)).collect(),
                ssq_block_adjacent,
            ),
            BlockLabel::Bsq => ((0..16).collect(), bsq_block_adjacent),
        };
        let mut position = [NO_NODE; 16];
        for (i, &b) in nodes.iter().enumerate() {
            position[b as usize] = i as u8;
        }
        let adjacency: Vec<Vec<u8>> = nodes
            .iter()
            .map(|&a| {
                nodes
                    .iter()
                    .copied()
                    .filter(|&b| a != b && rule(a, b))
                    .collect()
            })
            .collect();
        let size = nodes.len();
        let mut dist = vec![vec![u8::MAX; size]; size];
        for (s, row) in dist.iter_mut().enumerate() {
            row[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &nb in &adjacency[x] {
                    let y = position[nb as usize] as usize;
                    if row[y] == u8::MAX {
                        row[y] = row[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        // next[a][t]: lowest-valued neighbor of a one step closer to t
        let mut next = vec![vec![NO_NODE; size]; size];
        for a in 0..size {
            for t in 0..size {
                if a == t {
                    continue;
                }
                next[a][t] = adjacency[a]
                    .iter()
                    .copied()
                    .filter(|&nb| dist[position[nb as usize] as usize][t] + 1 == dist[a][t])
                    .min()
                    .expect("block graphs are connected");
            }
        }
        BlockGraph {
            label,
            nodes,
            position,
            adjacency,
            dist,
            next,
        }
    }

    /// Shared, lazily built instance.
    pub fn get(label: BlockLabel) -> &'static BlockGraph {
        static C4: OnceLock<BlockGraph> = OnceLock::new();
        static SSQ: OnceLock<BlockGraph> = OnceLock::new();
        static BSQ: OnceLock<BlockGraph> = OnceLock::new();
        let cell = match label {
            BlockLabel::C4 => &C4,
            BlockLabel::Ssq => &SSQ,
            BlockLabel::Bsq => &BSQ,
        };
        cell.get_or_init(|| BlockGraph::build(label))
    }

    pub fn nodes(&self) -> &[u8] {
        &self.nodes
    }

    pub fn contains(&self, block: u8) -> bool {
        (block as usize) < 16 && self.position[block as usize] != NO_NODE
    }

    fn pos(&self, block: u8) -> usize {
        assert!(
            self.contains(block),
            "{block:#06b} is not a node of {:?}",
            self.label
        );
        self.position[block as usize] as usize
    }

    /// Sorted neighbors of a node.
    pub fn neighbors(&self, block: u8) -> &[u8] {
        &self.adjacency[self.pos(block)]
    }

    pub fn adjacent(&self, a: u8, b: u8) -> bool {
        self.contains(a) && self.contains(b) && self.neighbors(a).contains(&b)
    }

    pub fn distance(&self, a: u8, b: u8) -> u8 {
        self.dist[self.pos(a)][self.pos(b)]
    }

    /// Next block on a shortest path from `a` towards `target`; `None` once
    /// there.
    pub fn next_hop(&self, a: u8, target: u8) -> Option<u8> {
        let hop = self.next[self.pos(a)][self.pos(target)];
        (hop != NO_NODE).then_some(hop)
    }

    pub fn eccentricity(&self, a: u8) -> u8 {
        self.dist[self.pos(a)].iter().copied().max().unwrap_or(0)
    }
}

/// Vertex of the balanced hypercube: coordinates in `0..4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BHVertex(pub Vec<u8>);

impl BHVertex {
    pub fn new(coords: Vec<u8>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::IndexOutOfRange {
                what: "balanced hypercube dimension",
                index: 0,
                limit: 1,
            });
        }
        if let Some((position, &value)) = coords.iter().enumerate().find(|(_, &c)| c > 3) {
            return Err(Error::BadCoordinate { position, value });
        }
        Ok(BHVertex(coords))
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// Packs coordinate `i` into bits `2i, 2i+1`.
    pub fn encode(&self) -> VertexWord {
        VertexWord(
            self.0
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | (c as u64) << (2 * i)),
        )
    }

    pub fn decode(w: VertexWord, m: usize) -> BHVertex {
        BHVertex((0..m).map(|i| ((w.0 >> (2 * i)) & 3) as u8).collect())
    }
}

impl fmt::Display for BHVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The `2m` neighbors of `a` in `BH_m`, in definition order: `a_0 +- 1`,
/// then for each `i >= 1` the pair `(a_0 +- 1, a_i + (-1)^{a_0})`.
pub fn bh_neighbors(m: usize, a: &BHVertex) -> Result<Vec<BHVertex>> {
    if a.m() != m {
        return Err(Error::IndexOutOfRange {
            what: "balanced hypercube coordinate count",
            index: a.m(),
            limit: m,
        });
    }
    let a = BHVertex::new(a.0.clone())?;
    let a0 = a.0[0];
    let up = (a0 + 1) % 4;
    let down = (a0 + 3) % 4;
    let shift = if a0 % 2 == 0 { 1 } else { 3 };
    let mut out = Vec::with_capacity(2 * m);
    for head in [up, down] {
        let mut c = a.0.clone();
        c[0] = head;
        out.push(BHVertex(c));
    }
    for i in 1..m {
        for head in [up, down] {
            let mut c = a.0.clone();
            c[0] = head;
            c[i] = (c[i] + shift) % 4;
            out.push(BHVertex(c));
        }
    }
    Ok(out)
}

/// An immutable materialized graph. Vertices are kept in ascending label
/// order; neighbor lists hold dense indices, sorted.
#[derive(Debug, Clone)]
pub struct CubeGraph {
    kind: TopologyKind,
    dim: Option<Dimension>,
    width: usize,
    vertices: Vec<VertexWord>,
    adjacency: Vec<Vec<u32>>,
    edge_count: usize,
}

impl CubeGraph {
    pub fn materialize(kind: TopologyKind, dim: Dimension) -> Result<Self> {
        if kind == TopologyKind::BH {
            return Err(Error::Unsupported {
                kind,
                operation: "materialize by bit dimension (use balanced_hypercube)",
            });
        }
        let count = kind.vertex_count(dim);
        if count > VERTEX_CAP {
            return Err(Error::TooLarge {
                count,
                cap: VERTEX_CAP,
            });
        }
        let vertices: Vec<VertexWord> = (0..1u64 << dim.n())
            .map(VertexWord)
            .filter(|&u| is_valid_vertex(kind, dim, u).unwrap_or(false))
            .collect();
        debug_assert_eq!(vertices.len() as u64, count);
        let adjacency = vertices
            .iter()
            .map(|&u| {
                neighbors(kind, dim, u)
                    .expect("valid vertex")
                    .into_iter()
                    .map(|v| vertices.binary_search(&v).expect("neighbor is a vertex") as u32)
                    .collect()
            })
            .collect();
        Ok(Self::finish(kind, Some(dim), dim.n(), vertices, adjacency))
    }

    /// `BH_m`, with coordinates packed as in [`BHVertex::encode`].
    pub fn balanced_hypercube(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::IndexOutOfRange {
                what: "balanced hypercube dimension",
                index: 0,
                limit: 1,
            });
        }
        let count = 1u64.checked_shl(2 * m as u32).unwrap_or(u64::MAX);
        if m > 10 || count > VERTEX_CAP {
            return Err(Error::TooLarge {
                count,
                cap: VERTEX_CAP,
            });
        }
        let vertices: Vec<VertexWord> = (0..count).map(VertexWord).collect();
        let adjacency = vertices
            .iter()
            .map(|&u| {
                let mut nb: Vec<u32> = bh_neighbors(m, &BHVertex::decode(u, m))
                    .expect("in range")
                    .iter()
                    .map(|b| b.encode().0 as u32)
                    .collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        Ok(Self::finish(
            TopologyKind::BH,
            None,
            2 * m,
            vertices,
            adjacency,
        ))
    }

    #[cfg(test)]
    pub(crate) fn from_adjacency(adjacency: Vec<Vec<u32>>) -> Self {
        let vertices = (0..adjacency.len() as u64).map(VertexWord).collect();
        Self::finish(TopologyKind::Q, None, 8, vertices, adjacency)
    }

    fn finish(
        kind: TopologyKind,
        dim: Option<Dimension>,
        width: usize,
        vertices: Vec<VertexWord>,
        adjacency: Vec<Vec<u32>>,
    ) -> Self {
        let degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        CubeGraph {
            kind,
            dim,
            width,
            vertices,
            adjacency,
            edge_count: degree_sum / 2,
        }
    }

    pub fn kind(&self) -> TopologyKind {
        self.kind
    }

    /// Bit dimension; `None` for the balanced hypercube.
    pub fn dimension(&self) -> Option<Dimension> {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertex(&self, i: usize) -> VertexWord {
        self.vertices[i]
    }

    pub fn vertices(&self) -> &[VertexWord] {
        &self.vertices
    }

    pub fn index_of(&self, u: VertexWord) -> Option<usize> {
        self.vertices.binary_search(&u).ok()
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&(j as u32)).is_ok()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(i, nb)| {
            nb.iter()
                .map(|&j| j as usize)
                .filter(move |&j| i < j)
                .map(move |j| (i, j))
        })
    }

    /// Printable label of vertex `i`.
    pub fn label(&self, i: usize) -> String {
        match self.dim {
            Some(dim) => format_vertex(self.vertices[i], dim),
            None => BHVertex::decode(self.vertices[i], self.width / 2).to_string(),
        }
    }
}
