//! Snake-product Hamiltonian cycles, plus the two explicit 6-dimensional
//! cycles and a broken copy of one of them.
//!
//! cargo run --example hamiltonian_cycles

use shufflecube::hamiltonian::{fixture_h1, fixture_h2, hamiltonian_cycle, validate_cycle};
use shufflecube::{Dimension, TopologyKind};

fn main() -> shufflecube::Result<()> {
    for (kind, n) in [
        (TopologyKind::SSQ, 6),
        (TopologyKind::SSQ, 10),
        (TopologyKind::SSQ, 14),
        (TopologyKind::BSQ, 6),
        (TopologyKind::BSQ, 10),
    ] {
        let dim = Dimension::new(n)?;
        let c = hamiltonian_cycle(kind, dim)?;
        println!(
            "{kind}_{n}: {} vertices, starts {}, valid {:?}",
            c.len(),
            c.labels()[..4].join(" "),
            validate_cycle(kind, dim, &c.vertices)
        );
    }

    for c in [fixture_h1(), fixture_h2()] {
        println!(
            "fixture in {}_6: {:?}",
            c.kind,
            validate_cycle(c.kind, c.dim, &c.vertices)
        );
    }
    let mut broken = fixture_h1();
    broken.vertices.swap(3, 4);
    println!(
        "swapped: {:?}",
        validate_cycle(broken.kind, broken.dim, &broken.vertices)
    );
    Ok(())
}
