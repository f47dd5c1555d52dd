//! Shortest paths in SSQ_n and BSQ_n, compared with BFS.
//!
//! cargo run --example routing -- bsq 10 0000000000 1111111111

use shufflecube::analysis::bfs_distances;
use shufflecube::bitcodec::parse_vertex;
use shufflecube::routing::{distance_of, route};
use shufflecube::{CubeGraph, Dimension, TopologyKind};

fn main() -> shufflecube::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind: TopologyKind = args.first().map_or("bsq", String::as_str).parse()?;
    let n: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let dim = Dimension::new(n)?;
    let zeros = "0".repeat(n);
    let u = parse_vertex(args.get(2).unwrap_or(&zeros), dim)?;
    let v = match args.get(3) {
        Some(s) => parse_vertex(s, dim)?,
        None => parse_vertex("001010", dim)?,
    };

    let path = route(kind, dim, u, v)?;
    for label in path.labels() {
        println!("{label}");
    }
    println!(
        "length {}, closed form {}",
        path.len(),
        distance_of(kind, dim, u, v)?
    );

    let g = CubeGraph::materialize(kind, dim)?;
    let bfs = bfs_distances(&g, g.index_of(u).unwrap())[g.index_of(v).unwrap()];
    println!("bfs {bfs}");
    Ok(())
}
