//! Twin vertices: BH_2 has pairs with identical neighborhoods; BSQ_n has
//! none, but vertices differing in bit u_{4j+1} agree on their block-j
//! neighbors.
//!
//! cargo run --example equivalent_vertices

use shufflecube::analysis::{block_equivalent_partners, equivalent_pairs};
use shufflecube::bitcodec::parse_vertex;
use shufflecube::topology::block_neighbors;
use shufflecube::{CubeGraph, Dimension, TopologyKind};

fn main() -> shufflecube::Result<()> {
    let bh = CubeGraph::balanced_hypercube(2)?;
    let twins = equivalent_pairs(&bh);
    println!("BH_2: {} twin pairs", twins.len());
    for (a, b) in twins.iter().take(4) {
        println!("  {} ~ {}", bh.label(*a), bh.label(*b));
    }

    let dim = Dimension::new(10)?;
    let bsq = CubeGraph::materialize(TopologyKind::BSQ, dim)?;
    println!("\nBSQ_10: {} twin pairs", equivalent_pairs(&bsq).len());
    let u = parse_vertex("0001000100", dim)?;
    for v in block_equivalent_partners(TopologyKind::BSQ, dim, u)? {
        let j = (1..=dim.k())
            .find(|&j| (u.0 ^ v.0) >> (4 * j + 1) & 1 == 1)
            .unwrap();
        let shared: Vec<String> = block_neighbors(TopologyKind::BSQ, dim, v, j)?
            .iter()
            .map(|w| w.display(dim))
            .collect();
        println!(
            "  {} and {} share block-{j} neighbors {}",
            u.display(dim),
            v.display(dim),
            shared.join(" ")
        );
    }
    Ok(())
}
