//! Vertex-transitivity maps for `SSQ_n` (`phi`) and `BSQ_n` (`psi`).
//!
//! Both are built block by block from a target `u` and a source `v` so that
//! the map sends `v` to `u`.
//!
//! `phi` XORs every block with `u_4^j ^ v_4^j`. `psi` acts on each 4-bit
//! block as a symmetry of the 16-node balanced block graph: a translation
//! `(p1, p2) -> (p1 + a, p2 + b)` when `u_{4j}` and `v_{4j}` have the same
//! parity (so `a` is even), and a reflection `(p1, p2) -> (a - p1, b - p2)`
//! otherwise (so `a` is odd). The tail is rotated by `u_1u_0 - v_1v_0`.

use serde::Serialize;

use crate::bitcodec::{
    block_unchecked, format_vertex, is_valid_vertex, join_pairs, pair1, pair2,
    with_block_unchecked, Dimension, VertexWord,
};
use crate::error::{Error, Result};
use crate::topology::{CubeGraph, TopologyKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PsiMode {
    Translate,
    Reflect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PsiBlock {
    pub mode: PsiMode,
    /// Offset applied to `pair1`, mod 4.
    pub alpha: u8,
    /// Offset applied to `pair2`, mod 4.
    pub beta: u8,
}

impl PsiBlock {
    pub const IDENTITY: PsiBlock = PsiBlock {
        mode: PsiMode::Translate,
        alpha: 0,
        beta: 0,
    };

    pub fn apply(self, block: u8) -> u8 {
        let (p1, p2) = (pair1(block), pair2(block));
        match self.mode {
            PsiMode::Translate => join_pairs((p1 + self.alpha) % 4, (p2 + self.beta) % 4),
            PsiMode::Reflect => join_pairs((self.alpha + 4 - p1) % 4, (self.beta + 4 - p2) % 4),
        }
    }

    /// Translations must keep the parity of `pair1`, reflections must swap it.
    pub fn is_well_formed(self) -> bool {
        match self.mode {
            PsiMode::Translate => self.alpha.is_multiple_of(2),
            PsiMode::Reflect => self.alpha % 2 == 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "map", rename_all = "snake_case")]
pub enum AutomorphismSpec {
    Phi {
        dim: Dimension,
        /// XOR offset per block, index `j` in `0..=k`.
        offsets: Vec<u8>,
    },
    Psi {
        dim: Dimension,
        /// Entry `j - 1` describes block `j`.
        blocks: Vec<PsiBlock>,
        /// Rotation of the tail, mod 4.
        tail_shift: u8,
    },
}

impl AutomorphismSpec {
    pub fn kind(&self) -> TopologyKind {
        match self {
            AutomorphismSpec::Phi { .. } => TopologyKind::SSQ,
            AutomorphismSpec::Psi { .. } => TopologyKind::BSQ,
        }
    }

    pub fn dim(&self) -> Dimension {
        match self {
            AutomorphismSpec::Phi { dim, .. } | AutomorphismSpec::Psi { dim, .. } => *dim,
        }
    }

    pub fn is_well_formed(&self) -> bool {
        match self {
            AutomorphismSpec::Phi { dim, offsets } => {
                offsets.len() == dim.k() + 1
                    && offsets[0] < 4
                    && offsets[1..]
                        .iter()
                        .all(|&o| o < 16 && matches!(pair1(o), 0 | 3))
            }
            AutomorphismSpec::Psi {
                dim,
                blocks,
                tail_shift,
            } => {
                blocks.len() == dim.k()
                    && *tail_shift < 4
                    && blocks
                        .iter()
                        .all(|b| b.alpha < 4 && b.beta < 4 && b.is_well_formed())
            }
        }
    }

    /// Image of `w`. Does not check well-formedness, so corrupted specs can
    /// be applied and then rejected by [`verify_automorphism`].
    pub fn apply(&self, w: VertexWord) -> Result<VertexWord> {
        let kind = self.kind();
        let dim = self.dim();
        if !is_valid_vertex(kind, dim, w)? {
            return Err(Error::InvalidVertex {
                kind,
                vertex: format_vertex(w, dim),
            });
        }
        Ok(self.apply_unchecked(w))
    }

    fn apply_unchecked(&self, w: VertexWord) -> VertexWord {
        match self {
            AutomorphismSpec::Phi { offsets, .. } => {
                offsets.iter().enumerate().fold(w, |acc, (j, &o)| {
                    with_block_unchecked(acc, j, block_unchecked(acc, j) ^ o)
                })
            }
            AutomorphismSpec::Psi {
                blocks, tail_shift, ..
            } => {
                let tail = (block_unchecked(w, 0) + tail_shift) % 4;
                blocks
                    .iter()
                    .enumerate()
                    .fold(with_block_unchecked(w, 0, tail), |acc, (i, b)| {
                        let j = i + 1;
                        with_block_unchecked(acc, j, b.apply(block_unchecked(acc, j)))
                    })
            }
        }
    }
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

/// The `SSQ_n` automorphism taking `v` to `u`.
pub fn build_phi(u: VertexWord, v: VertexWord, dim: Dimension) -> Result<AutomorphismSpec> {
    check(TopologyKind::SSQ, dim, u)?;
    check(TopologyKind::SSQ, dim, v)?;
    let offsets = dim
        .blocks()
        .map(|j| block_unchecked(u, j) ^ block_unchecked(v, j))
        .collect();
    Ok(AutomorphismSpec::Phi { dim, offsets })
}

/// The `BSQ_n` automorphism taking `v` to `u`.
pub fn build_psi(u: VertexWord, v: VertexWord, dim: Dimension) -> Result<AutomorphismSpec> {
    check(TopologyKind::BSQ, dim, u)?;
    check(TopologyKind::BSQ, dim, v)?;
    let blocks = (1..=dim.k())
        .map(|j| {
            let (bu, bv) = (block_unchecked(u, j), block_unchecked(v, j));
            // parity of pair1 is the bit u_{4j}
            if (bu ^ bv) & 0b0100 == 0 {
                PsiBlock {
                    mode: PsiMode::Translate,
                    alpha: (pair1(bu) + 4 - pair1(bv)) % 4,
                    beta: (pair2(bu) + 4 - pair2(bv)) % 4,
                }
            } else {
                PsiBlock {
                    mode: PsiMode::Reflect,
                    alpha: (pair1(bu) + pair1(bv)) % 4,
                    beta: (pair2(bu) + pair2(bv)) % 4,
                }
            }
        })
        .collect();
    let tail_shift = (block_unchecked(u, 0) + 4 - block_unchecked(v, 0)) % 4;
    Ok(AutomorphismSpec::Psi {
        dim,
        blocks,
        tail_shift,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "failure", rename_all = "snake_case")]
pub enum AutomorphismViolation {
    KindMismatch {
        graph: TopologyKind,
        spec: TopologyKind,
    },
    /// The image of a vertex is not a vertex of the graph.
    LeavesVertexSet { vertex: String, image: String },
    /// Two vertices share an image.
    NotInjective {
        first: String,
        second: String,
        image: String,
    },
    EdgeNotPreserved {
        edge: (String, String),
        image: (String, String),
    },
}

/// Checks that `spec` permutes the vertices of `g` and maps every edge to an
/// edge. Exhaustive over all vertices and edges of `g`.
pub fn verify_automorphism(
    g: &CubeGraph,
    spec: &AutomorphismSpec,
) -> std::result::Result<(), AutomorphismViolation> {
    let dim = spec.dim();
    if g.kind() != spec.kind() || g.dimension() != Some(dim) {
        return Err(AutomorphismViolation::KindMismatch {
            graph: g.kind(),
            spec: spec.kind(),
        });
    }
    let label = |w: VertexWord| format_vertex(w, dim);
    let mut image = Vec::with_capacity(g.len());
    let mut preimage = vec![usize::MAX; g.len()];
    for (i, &w) in g.vertices().iter().enumerate() {
        let x = spec.apply_unchecked(w);
        let Some(t) = g.index_of(x) else {
            return Err(AutomorphismViolation::LeavesVertexSet {
                vertex: label(w),
                image: label(x),
            });
        };
        if preimage[t] != usize::MAX {
            return Err(AutomorphismViolation::NotInjective {
                first: label(g.vertex(preimage[t])),
                second: label(w),
                image: label(x),
            });
        }
        preimage[t] = i;
        image.push(t);
    }
    for (a, b) in g.edges() {
        if !g.has_edge(image[a], image[b]) {
            return Err(AutomorphismViolation::EdgeNotPreserved {
                edge: (g.label(a), g.label(b)),
                image: (g.label(image[a]), g.label(image[b])),
            });
        }
    }
    Ok(())
}
