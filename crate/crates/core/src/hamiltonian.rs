//! Hamiltonian cycles of `SSQ_n` and `BSQ_n`.
//!
//! Cycles are built by a snake (boustrophedon) product. Start with the tail
//! 4-cycle; for each 4-bit block `j = 1..=k`, sweep the cycle built so far
//! forwards and backwards, once per node of the block's factor cycle. Each
//! step changes exactly one block by one factor edge, and every factor cycle
//! has even length, so the sweep closes up.
//!
//! The two explicit 6-dimensional cycles `H_1` (in `SSQ_6`) and `H_2` (in
//! `BSQ_6`) are kept verbatim as fixtures.

use std::collections::HashMap;

use serde::Serialize;

use crate::bitcodec::{
    format_vertex, is_valid_vertex, parse_vertex, with_block_unchecked, Dimension, VertexWord,
};
use crate::error::{Error, Result};
use crate::topology::{adjacent, BlockGraph, BlockLabel, TopologyKind, VERTEX_CAP};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorCycle {
    pub label: BlockLabel,
    pub nodes: Vec<u8>,
}

/// First Hamiltonian cycle of a block graph in lexicographic depth-first
/// order, starting from its smallest node.
pub fn factor_cycle(label: BlockLabel) -> FactorCycle {
    fn extend(g: &BlockGraph, path: &mut Vec<u8>, used: &mut [bool; 16]) -> bool {
        let last = *path.last().expect("non-empty");
        if path.len() == g.nodes().len() {
            return g.adjacent(last, path[0]);
        }
        for &next in g.neighbors(last) {
            if !used[next as usize] {
                used[next as usize] = true;
                path.push(next);
                if extend(g, path, used) {
                    return true;
                }
                path.pop();
                used[next as usize] = false;
            }
        }
        false
    }

    let g = BlockGraph::get(label);
    let start = g.nodes()[0];
    let mut path = vec![start];
    let mut used = [false; 16];
    used[start as usize] = true;
    assert!(
        extend(g, &mut path, &mut used),
        "{label:?} has a Hamiltonian cycle"
    );
    FactorCycle { label, nodes: path }
}

/// Snake traversal of `outer x inner`: sweep `inner` forwards at `outer[0]`,
/// backwards at `outer[1]`, and so on, then close along the outer edge from
/// the last outer node back to the first.
pub fn snake_product<A: Clone, B: Clone>(outer: &[A], inner: &[B]) -> Result<Vec<(A, B)>> {
    if outer.len() % 2 == 1 {
        return Err(Error::OddSweepCount(outer.len()));
    }
    let mut out = Vec::with_capacity(outer.len() * inner.len());
    for (r, a) in outer.iter().enumerate() {
        if r % 2 == 0 {
            out.extend(inner.iter().map(|b| (a.clone(), b.clone())));
        } else {
            out.extend(inner.iter().rev().map(|b| (a.clone(), b.clone())));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonianCycle {
    pub kind: TopologyKind,
    pub dim: Dimension,
    /// Cyclic order; the first vertex is not repeated at the end.
    pub vertices: Vec<VertexWord>,
}

impl HamiltonianCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.vertices
            .iter()
            .map(|&w| format_vertex(w, self.dim))
            .collect()
    }

    /// One vertex per line; the closing edge is implicit.
    pub fn to_lines(&self) -> String {
        let mut s = String::with_capacity(self.len() * (self.dim.n() + 1));
        for label in self.labels() {
            s.push_str(&label);
            s.push('\n');
        }
        s
    }
}

pub fn hamiltonian_cycle(kind: TopologyKind, dim: Dimension) -> Result<HamiltonianCycle> {
    let Some(label) = BlockLabel::for_kind(kind) else {
        return Err(Error::Unsupported {
            kind,
            operation: "Hamiltonian cycle construction",
        });
    };
    let count = kind.vertex_count(dim);
    if count > VERTEX_CAP {
        return Err(Error::TooLarge {
            count,
            cap: VERTEX_CAP,
        });
    }
    let tail = factor_cycle(BlockLabel::C4);
    let block = factor_cycle(label);
    let mut cycle: Vec<VertexWord> = tail.nodes.iter().map(|&t| VertexWord(t as u64)).collect();
    for j in 1..=dim.k() {
        cycle = snake_product(&block.nodes, &cycle)?
            .into_iter()
            .map(|(b, w)| with_block_unchecked(w, j, b))
            .collect();
    }
    Ok(HamiltonianCycle {
        kind,
        dim,
        vertices: cycle,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum CycleViolation {
    TooShort {
        len: usize,
    },
    InvalidVertex {
        position: usize,
        vertex: String,
    },
    Duplicate {
        vertex: String,
        first: usize,
        second: usize,
    },
    Missing {
        count: u64,
        example: String,
    },
    NotAdjacent {
        position: usize,
        from: String,
        to: String,
    },
}

/// Checks that `cycle` visits every vertex of the topology once and that
/// consecutive entries (including last to first) are adjacent.
pub fn validate_cycle(
    kind: TopologyKind,
    dim: Dimension,
    cycle: &[VertexWord],
) -> std::result::Result<(), CycleViolation> {
    if cycle.len() < 3 {
        return Err(CycleViolation::TooShort { len: cycle.len() });
    }
    let label = |w: VertexWord| format_vertex(w, dim);
    let mut seen: HashMap<VertexWord, usize> = HashMap::with_capacity(cycle.len());
    for (i, &w) in cycle.iter().enumerate() {
        if !is_valid_vertex(kind, dim, w).unwrap_or(false) {
            return Err(CycleViolation::InvalidVertex {
                position: i,
                vertex: if w.0 & !dim.mask() == 0 {
                    label(w)
                } else {
                    format!("{:#x}", w.0)
                },
            });
        }
        if let Some(&first) = seen.get(&w) {
            return Err(CycleViolation::Duplicate {
                vertex: label(w),
                first,
                second: i,
            });
        }
        seen.insert(w, i);
    }
    let expected = kind.vertex_count(dim);
    if (cycle.len() as u64) < expected {
        let example = (0..1u64 << dim.n())
            .map(VertexWord)
            .find(|w| is_valid_vertex(kind, dim, *w).unwrap_or(false) && !seen.contains_key(w))
            .expect("fewer entries than vertices");
        return Err(CycleViolation::Missing {
            count: expected - cycle.len() as u64,
            example: label(example),
        });
    }
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        if !adjacent(kind, dim, a, b).unwrap_or(false) {
            return Err(CycleViolation::NotAdjacent {
                position: i,
                from: label(a),
                to: label(b),
            });
        }
    }
    Ok(())
}

const H1: [&str; 32] = [
    "000000", "000100", "001000", "001100", "110000", "110100", "111000", "111100", "111101",
    "111001", "110101", "110001", "001101", "001001", "000101", "000001", "000010", "000110",
    "001010", "001110", "110010", "110110", "111010", "111110", "111111", "111011", "110111",
    "110011", "001111", "001011", "000111", "000011",
];

const H2: [&str; 64] = [
    "000000", "010000", "100000", "110000", "001100", "011100", "101100", "111100", "001000",
    "011000", "101000", "111000", "000100", "010100", "100100", "110100", "110101", "000101",
    "010101", "100101", "111001", "001001", "011001", "101001", "111101", "001101", "011101",
    "101101", "110001", "000001", "010001", "100001", "100010", "110010", "000010", "010010",
    "101110", "111110", "001110", "011110", "101010", "111010", "001010", "011010", "100110",
    "110110", "000110", "010110", "010111", "100111", "110111", "000111", "011011", "101011",
    "111011", "001011", "011111", "101111", "111111", "001111", "010011", "100011", "110011",
    "000011",
];

fn fixture(kind: TopologyKind, list: &[&str]) -> HamiltonianCycle {
    let dim = Dimension::new(6).expect("6 is a valid dimension");
    HamiltonianCycle {
        kind,
        dim,
        vertices: list
            .iter()
            .map(|s| parse_vertex(s, dim).expect("fixture strings are 6-bit"))
            .collect(),
    }
}

/// The explicit 32-vertex cycle of `SSQ_6`.
pub fn fixture_h1() -> HamiltonianCycle {
    fixture(TopologyKind::SSQ, &H1)
}

/// The explicit 64-vertex cycle of `BSQ_6`.
pub fn fixture_h2() -> HamiltonianCycle {
    fixture(TopologyKind::BSQ, &H2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitcodec::h4;

    fn d(n: usize) -> Dimension {
        Dimension::new(n).unwrap()
    }

    #[test]
    fn factor_cycles() {
        assert_eq!(factor_cycle(BlockLabel::C4).nodes, vec![0, 1, 2, 3]);
        let b = factor_cycle(BlockLabel::Ssq);
        assert_eq!(
            b.nodes,
            vec![0b0000, 0b0001, 0b0010, 0b0011, 0b1100, 0b1101, 0b1110, 0b1111]
        );
        let dg = BlockGraph::get(BlockLabel::Bsq);
        let c = factor_cycle(BlockLabel::Bsq);
        assert_eq!(c.nodes.len(), 16);
        for i in 0..16 {
            assert!(dg.adjacent(c.nodes[i], c.nodes[(i + 1) % 16]));
        }
        let mut sorted = c.nodes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..16).collect::<Vec<u8>>());
    }

    #[test]
    fn torus_snake() {
        let c4 = [0u8, 1, 2, 3];
        let cyc = snake_product(&c4, &c4).unwrap();
        assert_eq!(cyc.len(), 16);
        let step = |a: u8, b: u8| matches!((b + 4 - a) % 4, 1 | 3);
        for i in 0..16 {
            let ((a1, b1), (a2, b2)) = (cyc[i], cyc[(i + 1) % 16]);
            assert!((a1 == a2 && step(b1, b2)) || (b1 == b2 && step(a1, a2)));
        }
        assert_eq!(
            snake_product(&[0u8, 1, 2], &c4),
            Err(Error::OddSweepCount(3))
        );
    }

    #[test]
    fn ssq6_is_b_times_c4() {
        let cycle = hamiltonian_cycle(TopologyKind::SSQ, d(6)).unwrap();
        let b = factor_cycle(BlockLabel::Ssq);
        let expected: Vec<VertexWord> = snake_product(&b.nodes, &[0u8, 1, 2, 3])
            .unwrap()
            .into_iter()
            .map(|(x, t)| VertexWord(((x as u64) << 2) | t as u64))
            .collect();
        assert_eq!(cycle.vertices, expected);
        assert_eq!(
            validate_cycle(TopologyKind::SSQ, d(6), &cycle.vertices),
            Ok(())
        );
    }

    #[test]
    fn generated_cycles_validate() {
        for (kind, n, len) in [
            (TopologyKind::SSQ, 2, 4),
            (TopologyKind::SSQ, 6, 32),
            (TopologyKind::BSQ, 6, 64),
            (TopologyKind::SSQ, 10, 256),
            (TopologyKind::BSQ, 10, 1024),
            (TopologyKind::SSQ, 14, 2048),
        ] {
            let c = hamiltonian_cycle(kind, d(n)).unwrap();
            assert_eq!(c.len(), len);
            assert_eq!(
                validate_cycle(kind, d(n), &c.vertices),
                Ok(()),
                "{kind} {n}"
            );
            for i in 0..c.len() {
                assert_eq!(h4(c.vertices[i], c.vertices[(i + 1) % c.len()], d(n)), 1);
            }
        }
        assert!(hamiltonian_cycle(TopologyKind::SQ, d(6)).is_err());
    }

    #[test]
    fn fixtures() {
        let h1 = fixture_h1();
        assert_eq!(h1.len(), 32);
        assert_eq!(
            h1.labels()[..5],
            ["000000", "000100", "001000", "001100", "110000"]
        );
        assert_eq!(
            validate_cycle(TopologyKind::SSQ, d(6), &h1.vertices),
            Ok(())
        );
        let h2 = fixture_h2();
        assert_eq!(h2.len(), 64);
        assert_eq!(
            h2.labels()[..5],
            ["000000", "010000", "100000", "110000", "001100"]
        );
        assert_eq!(
            validate_cycle(TopologyKind::BSQ, d(6), &h2.vertices),
            Ok(())
        );
    }

    #[test]
    fn fixtures_need_mod4_tail() {
        // under Hamming-1 tail edges 01-10 is not an edge; the fixtures rely on it
        let h1 = fixture_h1();
        let hamming_tail_ok = (0..h1.len()).all(|i| {
            let (a, b) = (h1.vertices[i], h1.vertices[(i + 1) % h1.len()]);
            let (ta, tb) = (a.0 & 3, b.0 & 3);
            a.0 >> 2 != b.0 >> 2 || (ta ^ tb).count_ones() == 1
        });
        assert!(!hamming_tail_ok);
    }

    #[test]
    fn negative_controls() {
        let dim = d(6);
        let mut swapped = fixture_h1().vertices;
        swapped.swap(1, 5);
        assert!(matches!(
            validate_cycle(TopologyKind::SSQ, dim, &swapped),
            Err(CycleViolation::NotAdjacent { .. })
        ));
        let mut truncated = fixture_h2().vertices;
        truncated.pop();
        assert_eq!(
            validate_cycle(TopologyKind::BSQ, dim, &truncated),
            Err(CycleViolation::Missing {
                count: 1,
                example: "000011".into()
            })
        );
        let mut dup = fixture_h2().vertices;
        dup[3] = dup[0];
        assert!(matches!(
            validate_cycle(TopologyKind::BSQ, dim, &dup),
            Err(CycleViolation::Duplicate {
                first: 0,
                second: 3,
                ..
            })
        ));
        assert!(matches!(
            validate_cycle(TopologyKind::SSQ, dim, &fixture_h2().vertices),
            Err(CycleViolation::InvalidVertex { .. })
        ));
        assert_eq!(
            validate_cycle(TopologyKind::SSQ, dim, &[VertexWord(0)]),
            Err(CycleViolation::TooShort { len: 1 })
        );
    }

    #[test]
    fn line_output() {
        let h1 = fixture_h1();
        let text = h1.to_lines();
        assert_eq!(text.lines().count(), 32);
        assert!(text.starts_with("000000\n000100\n"));
    }
}
