pub mod analysis;
pub mod bitcodec;
pub mod claims;
pub mod cli;
pub mod error;
pub mod hamiltonian;
pub mod routing;
pub mod symmetry;
pub mod topology;

pub use bitcodec::{Dimension, VertexWord};
pub use error::{Error, Result};
pub use topology::{BlockGraph, BlockLabel, CubeGraph, TopologyKind};
