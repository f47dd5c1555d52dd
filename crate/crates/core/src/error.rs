use thiserror::Error;

use crate::topology::TopologyKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {0} is not supported: n must satisfy n >= 2, n = 2 (mod 4) and n <= 62")]
    InvalidDimension(usize),

    #[error("malformed vertex {text:?} at position {position}: {reason}")]
    MalformedVertex {
        text: String,
        position: usize,
        reason: &'static str,
    },

    #[error("{what} index {index} out of range (limit {limit})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },

    #[error("value {value} does not fit block {block} (width {width} bits)")]
    BlockValueOutOfRange { block: usize, value: u8, width: u32 },

    #[error("vertex {vertex} is not a valid {kind} vertex")]
    InvalidVertex { kind: TopologyKind, vertex: String },

    #[error("{kind} does not support {operation}")]
    Unsupported {
        kind: TopologyKind,
        operation: &'static str,
    },

    #[error("graph would have {count} vertices, above the cap of {cap}")]
    TooLarge { count: u64, cap: u64 },

    #[error("balanced hypercube coordinate {value} at position {position} is outside 0..4")]
    BadCoordinate { position: usize, value: u8 },

    #[error("snake product needs an even number of sweeps, outer cycle has length {0}")]
    OddSweepCount(usize),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
