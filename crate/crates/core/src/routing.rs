//! Shortest-path routing for `SSQ_n` and `BSQ_n`.
//!
//! Both graphs decompose block by block: a shortest path fixes each
//! differing 4-bit block independently, then walks the 2-bit tail around its
//! 4-cycle. Distances therefore add across blocks.

use serde::Serialize;

use crate::bitcodec::{
    block_unchecked, format_vertex, h4_star, is_valid_vertex, pair1, with_block_unchecked,
    Dimension, VertexWord,
};
use crate::error::{Error, Result};
use crate::topology::{BlockGraph, BlockLabel, TopologyKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoutePath {
    pub kind: TopologyKind,
    pub dim: Dimension,
    /// Source first, destination last.
    pub vertices: Vec<VertexWord>,
}

impl RoutePath {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn labels(&self) -> Vec<String> {
        self.vertices
            .iter()
            .map(|&w| format_vertex(w, self.dim))
            .collect()
    }
}

/// Indices `j >= 1` of the 4-bit blocks where two vertices differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDiffSet {
    pub blocks: Vec<usize>,
}

impl BlockDiffSet {
    pub fn between(u: VertexWord, v: VertexWord, dim: Dimension) -> Self {
        let blocks: Vec<usize> = (1..=dim.k())
            .filter(|&j| block_unchecked(u, j) != block_unchecked(v, j))
            .collect();
        debug_assert_eq!(blocks.len() as u32, h4_star(u, v, dim));
        BlockDiffSet { blocks }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

fn block_graph(kind: TopologyKind) -> Result<&'static BlockGraph> {
    BlockLabel::for_kind(kind)
        .map(BlockGraph::get)
        .ok_or(Error::Unsupported {
            kind,
            operation: "block routing",
        })
}

fn check(kind: TopologyKind, dim: Dimension, w: VertexWord) -> Result<()> {
    if !is_valid_vertex(kind, dim, w)? {
        return Err(Error::InvalidVertex {
            kind,
            vertex: format_vertex(w, dim),
        });
    }
    Ok(())
}

fn tail_distance(a: u8, b: u8) -> u32 {
    let d = (b + 4 - a) % 4;
    d.min(4 - d) as u32
}

/// Tail values visited after `from` on the way to `to`: one step in the
/// shorter direction, two forward steps when opposite.
fn tail_walk(from: u8, to: u8) -> Vec<u8> {
    match (to + 4 - from) % 4 {
        0 => vec![],
        1 => vec![to],
        2 => vec![(from + 1) % 4, to],
        _ => vec![to],
    }
}

/// Closed-form distance: per-block factor distances plus the tail distance.
pub fn distance_of(
    kind: TopologyKind,
    dim: Dimension,
    u: VertexWord,
    v: VertexWord,
) -> Result<u32> {
    let graph = block_graph(kind)?;
    check(kind, dim, u)?;
    check(kind, dim, v)?;
    let blocks: u32 = (1..=dim.k())
        .map(|j| graph.distance(block_unchecked(u, j), block_unchecked(v, j)) as u32)
        .sum();
    Ok(blocks + tail_distance(block_unchecked(u, 0), block_unchecked(v, 0)))
}

fn finish_tail(path: &mut Vec<VertexWord>, dst: VertexWord) {
    let cur = *path.last().expect("path starts at the source");
    for t in tail_walk(block_unchecked(cur, 0), block_unchecked(dst, 0)) {
        path.push(with_block_unchecked(cur, 0, t));
    }
}

/// Routes in `SSQ_n`, fixing differing blocks in ascending order.
///
/// A block whose `pair1` already matches is fixed in one XOR step. Otherwise
/// the block is complemented (XOR `1111`), then `pair2` is corrected if it
/// still differs.
pub fn route_ssq(dim: Dimension, src: VertexWord, dst: VertexWord) -> Result<RoutePath> {
    let kind = TopologyKind::SSQ;
    check(kind, dim, src)?;
    check(kind, dim, dst)?;
    let mut path = vec![src];
    let mut cur = src;
    for j in BlockDiffSet::between(src, dst, dim).blocks {
        let target = block_unchecked(dst, j);
        let block = block_unchecked(cur, j);
        if pair1(block) != pair1(target) {
            cur = with_block_unchecked(cur, j, block ^ 0b1111);
            path.push(cur);
        }
        if block_unchecked(cur, j) != target {
            cur = with_block_unchecked(cur, j, target);
            path.push(cur);
        }
    }
    finish_tail(&mut path, dst);
    Ok(RoutePath {
        kind,
        dim,
        vertices: path,
    })
}

/// Routes in `BSQ_n` using next-hop tables of the 16-node block graph,
/// fixing differing blocks in ascending order.
pub fn route_bsq(dim: Dimension, src: VertexWord, dst: VertexWord) -> Result<RoutePath> {
    let kind = TopologyKind::BSQ;
    let graph = BlockGraph::get(BlockLabel::Bsq);
    check(kind, dim, src)?;
    check(kind, dim, dst)?;
    let mut path = vec![src];
    let mut cur = src;
    for j in BlockDiffSet::between(src, dst, dim).blocks {
        let target = block_unchecked(dst, j);
        while let Some(next) = graph.next_hop(block_unchecked(cur, j), target) {
            cur = with_block_unchecked(cur, j, next);
            path.push(cur);
        }
    }
    finish_tail(&mut path, dst);
    Ok(RoutePath {
        kind,
        dim,
        vertices: path,
    })
}

pub fn route(
    kind: TopologyKind,
    dim: Dimension,
    src: VertexWord,
    dst: VertexWord,
) -> Result<RoutePath> {
    match kind {
        TopologyKind::SSQ => route_ssq(dim, src, dst),
        TopologyKind::BSQ => route_bsq(dim, src, dst),
        _ => Err(Error::Unsupported {
            kind,
            operation: "routing",
        }),
    }
}

/// Diameter from the closed forms: `(n - 2) / 2 + 2` for `SSQ_n`, `n` for
/// `BSQ_n`.
pub fn diameter_formula(kind: TopologyKind, dim: Dimension) -> Result<u32> {
    let n = dim.n() as u32;
    match kind {
        TopologyKind::SSQ if n == 2 => Ok(2),
        TopologyKind::SSQ => Ok((n - 2) / 2 + 2),
        TopologyKind::BSQ => Ok(n),
        _ => Err(Error::Unsupported {
            kind,
            operation: "diameter formula",
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::bfs_distances;
    use crate::bitcodec::parse_vertex;
    use crate::topology::{adjacent, CubeGraph};

    fn d(n: usize) -> Dimension {
        Dimension::new(n).unwrap()
    }

    fn w(s: &str) -> VertexWord {
        parse_vertex(s, d(s.len())).unwrap()
    }

    #[test]
    fn ssq_examples() {
        let dim = d(6);
        let p = route_ssq(dim, w("000000"), w("000100")).unwrap();
        assert_eq!(p.labels(), ["000000", "000100"]);
        let p = route_ssq(dim, w("000000"), w("110000")).unwrap();
        assert_eq!(p.labels(), ["000000", "111100", "110000"]);
        let p = route_ssq(dim, w("000000"), w("111100")).unwrap();
        assert_eq!(p.labels(), ["000000", "111100"]);
        let p = route_ssq(dim, w("000000"), w("000010")).unwrap();
        assert_eq!(p.labels(), ["000000", "000001", "000010"]);
        let p = route_ssq(dim, w("000000"), w("000011")).unwrap();
        assert_eq!(p.labels(), ["000000", "000011"]);
        assert!(route_ssq(dim, w("010000"), w("000000")).is_err());
    }

    #[test]
    fn bsq_examples() {
        let dim = d(6);
        let p = route_bsq(dim, w("000000"), w("010000")).unwrap();
        assert_eq!(p.labels(), ["000000", "010000"]);
        let p = route_bsq(dim, w("101101"), w("101101")).unwrap();
        assert!(p.is_empty());
        assert_eq!(p.vertices.len(), 1);

        let g = CubeGraph::materialize(TopologyKind::BSQ, dim).unwrap();
        let oracle = bfs_distances(&g, 0)[g.index_of(w("001000")).unwrap()];
        assert_eq!(oracle, 4);
        let p = route_bsq(dim, w("000000"), w("001000")).unwrap();
        assert_eq!(p.len() as u32, oracle);
        for pair in p.vertices.windows(2) {
            assert!(adjacent(TopologyKind::BSQ, dim, pair[0], pair[1]).unwrap());
        }
    }

    #[test]
    fn distance_examples() {
        let dim = d(6);
        assert_eq!(
            distance_of(TopologyKind::SSQ, dim, w("000000"), w("000000")).unwrap(),
            0
        );
        assert_eq!(
            distance_of(TopologyKind::BSQ, dim, w("000000"), w("111111")).unwrap(),
            4
        );
        assert_eq!(
            distance_of(TopologyKind::BSQ, dim, w("000000"), w("001010")).unwrap(),
            6
        );
        assert_eq!(
            distance_of(TopologyKind::SSQ, dim, w("000000"), w("110111")).unwrap(),
            3
        );
        assert!(distance_of(TopologyKind::SQ, dim, w("000000"), w("000000")).is_err());
    }

    #[test]
    fn formulas() {
        assert_eq!(diameter_formula(TopologyKind::SSQ, d(6)).unwrap(), 4);
        assert_eq!(diameter_formula(TopologyKind::SSQ, d(10)).unwrap(), 6);
        assert_eq!(diameter_formula(TopologyKind::SSQ, d(2)).unwrap(), 2);
        assert_eq!(diameter_formula(TopologyKind::BSQ, d(10)).unwrap(), 10);
        assert!(diameter_formula(TopologyKind::SQ, d(10)).is_err());
    }

    #[test]
    fn exhaustive_n6() {
        let dim = d(6);
        for kind in [TopologyKind::SSQ, TopologyKind::BSQ] {
            let g = CubeGraph::materialize(kind, dim).unwrap();
            for s in 0..g.len() {
                let dist = bfs_distances(&g, s);
                for (t, &want) in dist.iter().enumerate() {
                    let (u, v) = (g.vertex(s), g.vertex(t));
                    let p = route(kind, dim, u, v).unwrap();
                    assert_eq!(p.len() as u32, want);
                    assert_eq!(distance_of(kind, dim, u, v).unwrap(), want);
                    assert_eq!((p.vertices[0], *p.vertices.last().unwrap()), (u, v));
                    let mut seen = p.vertices.clone();
                    seen.sort_unstable();
                    seen.dedup();
                    assert_eq!(seen.len(), p.vertices.len());
                    for pair in p.vertices.windows(2) {
                        assert!(
                            g.has_edge(g.index_of(pair[0]).unwrap(), g.index_of(pair[1]).unwrap())
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn per_block_cost_bounds() {
        let ssq = BlockGraph::get(BlockLabel::Ssq);
        assert!(ssq.nodes().iter().all(|&a| ssq.eccentricity(a) <= 2));
        let bsq = BlockGraph::get(BlockLabel::Bsq);
        assert!(bsq.nodes().iter().all(|&a| bsq.eccentricity(a) <= 4));
        assert!((0..4).all(|a| (0..4).all(|b| tail_distance(a, b) <= 2)));
    }

    #[test]
    #[allow(clippy::unusual_byte_groupings)] // grouped by block
    fn block_diff_set() {
        let dim = d(14);
        let s = BlockDiffSet::between(VertexWord(0), VertexWord(0b1111_0000_0001_11), dim);
        assert_eq!(s.blocks, vec![1, 3]);
        assert_eq!(
            s.len() as u32,
            h4_star(VertexWord(0), VertexWord(0b1111_0000_0001_11), dim)
        );
    }
}
