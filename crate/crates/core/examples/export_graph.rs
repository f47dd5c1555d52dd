//! Writes a graph as an edge list, DOT or JSON.
//!
//! cargo run --example export_graph -- bsq 6 dot > bsq6.dot

use shufflecube::cli::{cmd_generate, Format};
use shufflecube::{Dimension, TopologyKind};

fn main() -> shufflecube::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind: TopologyKind = args.first().map_or("ssq", String::as_str).parse()?;
    let n: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let format: Format = args.get(2).map_or("edges", String::as_str).parse()?;
    print!("{}", cmd_generate(kind, Dimension::new(n)?, format)?);
    Ok(())
}
