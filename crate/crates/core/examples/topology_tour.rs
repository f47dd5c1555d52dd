//! Vertex sets, neighbors and block structure of each topology at n = 6.
//!
//! cargo run --example topology_tour

use shufflecube::bitcodec::{get_block, parse_vertex};
use shufflecube::topology::{neighbors, BlockGraph, BlockLabel};
use shufflecube::{CubeGraph, Dimension, TopologyKind};

fn main() -> shufflecube::Result<()> {
    let dim = Dimension::new(6)?;
    let u = parse_vertex("000000", dim)?;
    for kind in TopologyKind::CUBES {
        let g = CubeGraph::materialize(kind, dim)?;
        let nb: Vec<String> = neighbors(kind, dim, u)?
            .into_iter()
            .map(|w| w.display(dim))
            .collect();
        println!(
            "{kind}_6: {} vertices, {} edges; N(000000) = {}",
            g.len(),
            g.edge_count(),
            nb.join(" ")
        );
    }

    let w = parse_vertex("110110", dim)?;
    println!(
        "\n110110: block 1 = {}, tail = {}",
        get_block(w, 1, dim)?,
        get_block(w, 0, dim)?
    );

    for label in [BlockLabel::C4, BlockLabel::Ssq, BlockLabel::Bsq] {
        let b = BlockGraph::get(label);
        let ecc = b
            .nodes()
            .iter()
            .map(|&a| b.eccentricity(a))
            .max()
            .unwrap_or(0);
        println!(
            "block graph {label:?}: {} nodes, diameter {ecc}",
            b.nodes().len()
        );
    }
    Ok(())
}
