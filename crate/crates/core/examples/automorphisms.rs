//! Builds the automorphism taking one vertex to another and checks it
//! against every edge.
//!
//! cargo run --example automorphisms -- 101101 010010

use shufflecube::bitcodec::parse_vertex;
use shufflecube::symmetry::{build_phi, build_psi, verify_automorphism};
use shufflecube::{CubeGraph, Dimension, TopologyKind};

fn main() -> shufflecube::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let dim = Dimension::new(6)?;
    let u = parse_vertex(args.first().map_or("111101", String::as_str), dim)?;
    let v = parse_vertex(args.get(1).map_or("000110", String::as_str), dim)?;

    let bsq = CubeGraph::materialize(TopologyKind::BSQ, dim)?;
    let psi = build_psi(u, v, dim)?;
    println!("psi = {psi:?}");
    println!("psi({}) = {}", v.display(dim), psi.apply(v)?.display(dim));
    println!(
        "automorphism of BSQ_6: {:?}",
        verify_automorphism(&bsq, &psi)
    );

    // phi needs SSQ vertices (pair1 of every block in {00, 11})
    let (a, b) = (parse_vertex("110001", dim)?, parse_vertex("001110", dim)?);
    let ssq = CubeGraph::materialize(TopologyKind::SSQ, dim)?;
    let phi = build_phi(a, b, dim)?;
    println!("\nphi = {phi:?}");
    println!("phi({}) = {}", b.display(dim), phi.apply(b)?.display(dim));
    println!(
        "automorphism of SSQ_6: {:?}",
        verify_automorphism(&ssq, &phi)
    );
    Ok(())
}
