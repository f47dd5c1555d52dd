//! Vertex labels as `n`-bit words.
//!
//! A vertex `u = u_{n-1} ... u_1 u_0` is printed most significant bit first
//! and stored in a single `u64` with bit `i` holding `u_i`. The label splits
//! into a 2-bit tail (block 0, bits `u_1 u_0`) and `k = (n - 2) / 4` blocks of
//! four bits; block `j >= 1` covers `u_{4j+1} u_{4j} u_{4j-1} u_{4j-2}`. The
//! high half of a 4-bit block (`pair1`) and its low half (`pair2`) are read as
//! integers mod 4 by the balanced variant.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::topology::TopologyKind;

pub const MAX_BITS: usize = 62;

/// Number of label bits, restricted to `n = 2 (mod 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Dimension(usize);

impl Dimension {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 || n % 4 != 2 || n > MAX_BITS {
            return Err(Error::InvalidDimension(n));
        }
        Ok(Self(n))
    }

    pub fn n(self) -> usize {
        self.0
    }

    /// Number of 4-bit blocks.
    pub fn k(self) -> usize {
        (self.0 - 2) / 4
    }

    /// Block indices `0..=k`.
    pub fn blocks(self) -> std::ops::RangeInclusive<usize> {
        0..=self.k()
    }

    pub fn mask(self) -> u64 {
        (1u64 << self.0) - 1
    }
}

impl TryFrom<usize> for Dimension {
    type Error = Error;

    fn try_from(n: usize) -> Result<Self> {
        Self::new(n)
    }
}

impl From<Dimension> for usize {
    fn from(d: Dimension) -> usize {
        d.0
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct VertexWord(pub u64);

impl VertexWord {
    pub const ZERO: VertexWord = VertexWord(0);

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn bit(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    /// Printable form; see [`format_vertex`].
    pub fn display(self, dim: Dimension) -> String {
        format_vertex(self, dim)
    }
}

/// A single block of a vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockValue {
    pub j: usize,
    pub value: u8,
}

impl BlockValue {
    pub fn width(self) -> u32 {
        block_width(self.j)
    }

    /// High half of a 4-bit block, `u_{4j+1} u_{4j}`. For block 0 this is 0.
    pub fn pair1(self) -> u8 {
        pair1(self.value)
    }

    /// Low half of a 4-bit block, `u_{4j-1} u_{4j-2}`. For block 0 this is
    /// the whole tail.
    pub fn pair2(self) -> u8 {
        pair2(self.value)
    }
}

impl fmt::Display for BlockValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.value, width = self.width() as usize)
    }
}

pub fn pair1(block: u8) -> u8 {
    (block >> 2) & 0b11
}

pub fn pair2(block: u8) -> u8 {
    block & 0b11
}

pub fn join_pairs(pair1: u8, pair2: u8) -> u8 {
    ((pair1 & 0b11) << 2) | (pair2 & 0b11)
}

pub fn block_width(j: usize) -> u32 {
    if j == 0 {
        2
    } else {
        4
    }
}

fn block_shift(j: usize) -> usize {
    if j == 0 {
        0
    } else {
        4 * j - 2
    }
}

fn block_mask(j: usize) -> u64 {
    (1u64 << block_width(j)) - 1
}

fn check_block(j: usize, dim: Dimension) -> Result<()> {
    if j > dim.k() {
        return Err(Error::IndexOutOfRange {
            what: "block",
            index: j,
            limit: dim.k(),
        });
    }
    Ok(())
}

pub fn parse_vertex(text: &str, dim: Dimension) -> Result<VertexWord> {
    let n = dim.n();
    let bytes = text.as_bytes();
    if bytes.len() != n {
        return Err(Error::MalformedVertex {
            text: text.to_string(),
            position: bytes.len().min(n),
            reason: if bytes.len() < n {
                "too short"
            } else {
                "too long"
            },
        });
    }
    let mut value = 0u64;
    for (pos, &c) in bytes.iter().enumerate() {
        let bit = match c {
            b'0' => 0,
            b'1' => 1,
            _ => {
                return Err(Error::MalformedVertex {
                    text: text.to_string(),
                    position: pos,
                    reason: "expected '0' or '1'",
                })
            }
        };
        value = (value << 1) | bit;
    }
    Ok(VertexWord(value))
}

pub fn format_vertex(u: VertexWord, dim: Dimension) -> String {
    (0..dim.n())
        .rev()
        .map(|i| if u.bit(i) { '1' } else { '0' })
        .collect()
}

/// Reads block `j` (`u_4^j`).
pub fn get_block(u: VertexWord, j: usize, dim: Dimension) -> Result<BlockValue> {
    check_block(j, dim)?;
    Ok(BlockValue {
        j,
        value: block_unchecked(u, j),
    })
}

pub(crate) fn block_unchecked(u: VertexWord, j: usize) -> u8 {
    ((u.0 >> block_shift(j)) & block_mask(j)) as u8
}

pub(crate) fn with_block_unchecked(u: VertexWord, j: usize, value: u8) -> VertexWord {
    let shift = block_shift(j);
    let mask = block_mask(j) << shift;
    VertexWord((u.0 & !mask) | ((value as u64) << shift & mask))
}

/// Replaces block `j` with `value`, leaving every other bit untouched.
pub fn set_block(u: VertexWord, j: usize, value: u8, dim: Dimension) -> Result<VertexWord> {
    check_block(j, dim)?;
    if value as u64 > block_mask(j) {
        return Err(Error::BlockValueOutOfRange {
            block: j,
            value,
            width: block_width(j),
        });
    }
    Ok(with_block_unchecked(u, j, value))
}

/// The `j`-prefix `u_{n-1} ... u_{n-j}`.
pub fn prefix(u: VertexWord, j: usize, dim: Dimension) -> Result<String> {
    if j > dim.n() {
        return Err(Error::IndexOutOfRange {
            what: "prefix length",
            index: j,
            limit: dim.n(),
        });
    }
    Ok(format_vertex(u, dim)[..j].to_string())
}

/// The `k`-suffix `u_{k-1} ... u_0`.
pub fn suffix(u: VertexWord, k: usize, dim: Dimension) -> Result<String> {
    if k > dim.n() {
        return Err(Error::IndexOutOfRange {
            what: "suffix length",
            index: k,
            limit: dim.n(),
        });
    }
    let s = format_vertex(u, dim);
    Ok(s[dim.n() - k..].to_string())
}

pub fn hamming(u: VertexWord, v: VertexWord) -> u32 {
    (u.0 ^ v.0).count_ones()
}

/// Number of blocks `j` in `0..=k` where `u` and `v` differ.
pub fn h4(u: VertexWord, v: VertexWord, dim: Dimension) -> u32 {
    dim.blocks()
        .filter(|&j| block_unchecked(u, j) != block_unchecked(v, j))
        .count() as u32
}

/// Like [`h4`] but ignoring the 2-bit tail.
pub fn h4_star(u: VertexWord, v: VertexWord, dim: Dimension) -> u32 {
    (1..=dim.k())
        .filter(|&j| block_unchecked(u, j) != block_unchecked(v, j))
        .count() as u32
}

/// Whether `u` is a vertex of the given topology. Only the simplified
/// variant restricts its vertex set: every 4-bit block must have
/// `pair1 in {00, 11}`.
pub fn is_valid_vertex(kind: TopologyKind, dim: Dimension, u: VertexWord) -> Result<bool> {
    if u.0 & !dim.mask() != 0 {
        return Ok(false);
    }
    match kind {
        TopologyKind::Q | TopologyKind::SQ | TopologyKind::BSQ => Ok(true),
        TopologyKind::SSQ => Ok((1..=dim.k()).all(|j| {
            let p = pair1(block_unchecked(u, j));
            p == 0b00 || p == 0b11
        })),
        TopologyKind::BH => Err(Error::Unsupported {
            kind,
            operation: "binary vertex words",
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize) -> Dimension {
        Dimension::new(n).unwrap()
    }

    fn w(s: &str) -> VertexWord {
        parse_vertex(s, d(s.len())).unwrap()
    }

    #[test]
    fn dimension_rules() {
        assert!(Dimension::new(2).is_ok());
        assert_eq!(d(14).k(), 3);
        for bad in [0, 1, 3, 4, 5, 7, 8, 66] {
            assert_eq!(Dimension::new(bad), Err(Error::InvalidDimension(bad)));
        }
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("000000"), VertexWord(0));
        assert_eq!(w("000001"), VertexWord(1));
        let u = w("110111");
        assert_eq!(u, VertexWord(55));
        for i in [0, 1, 2, 4, 5] {
            assert!(u.bit(i));
        }
        assert!(!u.bit(3));
    }

    #[test]
    fn parse_errors_name_position() {
        match parse_vertex("0102x0", d(6)) {
            Err(Error::MalformedVertex { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_vertex("00000", d(6)),
            Err(Error::MalformedVertex { position: 5, .. })
        ));
        assert!(parse_vertex("0000000", d(6)).is_err());
    }

    #[test]
    fn block_access() {
        let u = w("110100");
        assert_eq!(get_block(u, 1, d(6)).unwrap().value, 0b1101);
        assert_eq!(get_block(u, 1, d(6)).unwrap().to_string(), "1101");
        assert_eq!(get_block(u, 0, d(6)).unwrap().to_string(), "00");
        let b = get_block(u, 1, d(6)).unwrap();
        assert_eq!((b.pair1(), b.pair2()), (3, 1));
        assert_eq!(
            format_vertex(set_block(VertexWord(0), 1, 0b1111, d(6)).unwrap(), d(6)),
            "111100"
        );
        assert!(matches!(
            get_block(u, 2, d(6)),
            Err(Error::IndexOutOfRange { index: 2, .. })
        ));
        assert!(set_block(u, 0, 4, d(6)).is_err());
    }

    #[test]
    fn prefix_suffix() {
        let u = w("110100");
        assert_eq!(prefix(u, 4, d(6)).unwrap(), "1101");
        assert_eq!(suffix(u, 2, d(6)).unwrap(), "00");
        assert_eq!(prefix(u, 0, d(6)).unwrap(), "");
        assert_eq!(suffix(u, 6, d(6)).unwrap(), "110100");
        assert!(prefix(u, 7, d(6)).is_err());
        assert!(suffix(u, 7, d(6)).is_err());
    }

    #[test]
    fn metrics() {
        assert_eq!(hamming(w("000000"), w("001111")), 4);
        assert_eq!(h4(w("000000"), w("000001"), d(6)), 1);
        assert_eq!(h4_star(w("000000"), w("000001"), d(6)), 0);
        assert_eq!(h4(w("110101"), w("000000"), d(6)), 2);
        assert_eq!(h4_star(w("110101"), w("000000"), d(6)), 1);
    }

    #[test]
    fn validity() {
        let n6 = d(6);
        assert!(!is_valid_vertex(TopologyKind::SSQ, n6, w("010000")).unwrap());
        assert!(is_valid_vertex(TopologyKind::SSQ, n6, w("110100")).unwrap());
        for x in 0..64 {
            assert!(is_valid_vertex(TopologyKind::SQ, n6, VertexWord(x)).unwrap());
        }
        assert!(!is_valid_vertex(TopologyKind::SQ, n6, VertexWord(64)).unwrap());
        assert!(is_valid_vertex(TopologyKind::BH, n6, VertexWord(0)).is_err());
    }

    #[test]
    fn valid_vertex_counts() {
        for n in [6, 10] {
            let dim = d(n);
            for kind in [
                TopologyKind::Q,
                TopologyKind::SQ,
                TopologyKind::SSQ,
                TopologyKind::BSQ,
            ] {
                let count = (0..1u64 << n)
                    .filter(|&x| is_valid_vertex(kind, dim, VertexWord(x)).unwrap())
                    .count();
                let expected = if kind == TopologyKind::SSQ {
                    1usize << ((3 * n + 2) / 4)
                } else {
                    1usize << n
                };
                assert_eq!(count, expected, "{kind} n={n}");
            }
        }
    }

    #[test]
    fn format_parse_exhaustive_n6() {
        let dim = d(6);
        for x in 0..64 {
            let u = VertexWord(x);
            assert_eq!(parse_vertex(&format_vertex(u, dim), dim).unwrap(), u);
        }
    }

    #[test]
    #[allow(clippy::unusual_byte_groupings)] // grouped by block
    fn blocks_reassemble() {
        let dim = d(14);
        let widths: u32 = dim.blocks().map(block_width).sum();
        assert_eq!(widths as usize, dim.n());
        let u = VertexWord(0b10_1101_0011_10);
        let rebuilt = dim.blocks().fold(VertexWord(0), |acc, j| {
            with_block_unchecked(acc, j, block_unchecked(u, j))
        });
        assert_eq!(rebuilt, u);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(10_000))]

            #[test]
            fn round_trip(x in 0u64..(1 << 14), n in prop::sample::select(vec![10usize, 14])) {
                let dim = d(n);
                let u = VertexWord(x & dim.mask());
                prop_assert_eq!(parse_vertex(&format_vertex(u, dim), dim).unwrap(), u);
            }

            #[test]
            fn set_touches_one_block(x in 0u64..(1 << 14), j in 0usize..4, v in 0u8..16) {
                let dim = d(14);
                let u = VertexWord(x);
                let v = v & ((1 << block_width(j)) - 1);
                let out = set_block(u, j, v, dim).unwrap();
                prop_assert_eq!(get_block(out, j, dim).unwrap().value, v);
                for other in dim.blocks().filter(|&o| o != j) {
                    prop_assert_eq!(block_unchecked(out, other), block_unchecked(u, other));
                }
            }
        }
    }
}
