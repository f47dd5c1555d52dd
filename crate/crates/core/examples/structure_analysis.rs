//! Girth, bipartiteness, cliques, diameter and transitivity certificates.
//!
//! cargo run --release --example structure_analysis

use shufflecube::analysis::{
    bipartition, clique_number, diameter, edge_transitivity_certificate, girth, k4_census,
    vertex_transitivity_certificate,
};
use shufflecube::{CubeGraph, Dimension, TopologyKind};

fn main() -> shufflecube::Result<()> {
    for n in [6, 10] {
        let dim = Dimension::new(n)?;
        for kind in [TopologyKind::SQ, TopologyKind::SSQ, TopologyKind::BSQ] {
            let g = CubeGraph::materialize(kind, dim)?;
            let k4 = k4_census(&g);
            println!(
                "{kind}_{n}: girth {:?}, bipartite {}, clique number {}, {} K4s, diameter {:?}",
                girth(&g),
                bipartition(&g).is_bipartite(),
                clique_number(&g),
                k4.cliques.len(),
                diameter(&g).exact(),
            );
        }
    }

    let sq6 = CubeGraph::materialize(TopologyKind::SQ, Dimension::new(6)?)?;
    let vt = vertex_transitivity_certificate(&sq6);
    let et = edge_transitivity_certificate(&sq6);
    println!(
        "\nSQ_6 vertex transitivity: {}",
        serde_json::to_string_pretty(&vt).unwrap()
    );
    println!(
        "SQ_6 edge transitivity: {}",
        serde_json::to_string_pretty(&et).unwrap()
    );
    Ok(())
}
