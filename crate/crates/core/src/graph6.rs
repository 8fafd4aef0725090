//! graph6 encoding and decoding.
//!
//! The de-facto standard format: the vertex count as `N(n)` (one byte
//! `n + 63` for `n <= 62`, otherwise `~` followed by three 6-bit bytes),
//! then the upper triangle of the adjacency matrix in column-major order
//! (`x_{0,1} x_{0,2} x_{1,2} x_{0,3} ...`), packed big-endian into 6-bit
//! groups, each offset by 63. The final group is zero-padded.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("malformed header at byte {offset}: byte {byte:#04x} out of graph6 range")]
    MalformedHeader { offset: usize, byte: u8 },
    #[error("vertex count {n} out of range (limit {MAX_VERTICES}) in header at byte {offset}")]
    OutOfRangeN { n: usize, offset: usize },
    #[error("invalid graph6 byte {byte:#04x} at byte {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("record truncated: expected {expected} edge bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage starting at byte {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in final group at byte {offset}")]
    NonzeroPadding { offset: usize },
}

/// Encodes a graph as a single graph6 record (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // 63 <= n <= 64 here, but emit the standard 3-byte form.
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            group = (group << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes a single graph6 record. The input must be exactly one record
/// with no surrounding whitespace.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, mut pos) = decode_order(bytes)?;
    if n > MAX_VERTICES {
        return Err(Graph6Error::OutOfRangeN { n, offset: 0 });
    }
    let edge_bits = n * n.saturating_sub(1) / 2;
    let expected = edge_bits.div_ceil(6);
    let found = bytes.len() - pos;
    if found < expected {
        return Err(Graph6Error::Truncated { expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingGarbage {
            offset: pos + expected,
        });
    }
    let mut adj = vec![0u64; n];
    let mut bit_index = 0usize;
    let mut group = 0u8;
    let mut remaining = 0u8;
    let mut it = edge_positions(n);
    while bit_index < edge_bits {
        if remaining == 0 {
            let byte = bytes[pos];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte { offset: pos, byte });
            }
            group = byte - 63;
            remaining = 6;
            pos += 1;
        }
        let b = (group >> (remaining - 1)) & 1;
        remaining -= 1;
        let (row, col) = it.next().expect("edge position iterator is long enough");
        if b == 1 {
            adj[row] |= 1u64 << col;
            adj[col] |= 1u64 << row;
        }
        bit_index += 1;
    }
    if remaining > 0 && group & ((1 << remaining) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding { offset: pos - 1 });
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is valid"))
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let b0 = bytes[0];
    if b0 == b'~' {
        // Long form. We never emit the 8-byte (n > 258047) form, and reject
        // it on input as out of range anyway.
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                found: bytes.len(),
            });
        }
        if bytes[1] == b'~' {
            return Err(Graph6Error::OutOfRangeN {
                n: usize::MAX,
                offset: 0,
            });
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::MalformedHeader {
                    offset: 1 + i,
                    byte: b,
                });
            }
            n = (n << 6) | (b - 63) as usize;
        }
        Ok((n, 4))
    } else if (63..=126).contains(&b0) {
        Ok(((b0 - 63) as usize, 1))
    } else {
        Err(Graph6Error::MalformedHeader {
            offset: 0,
            byte: b0,
        })
    }
}

/// Upper-triangle positions in graph6 order: columns ascending, rows within.
fn edge_positions(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |col| (0..col).map(move |row| (row, col)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn roundtrip_identity_on_fixed_record() {
        let g = from_graph6("D?{").unwrap();
        assert_eq!(to_graph6(&g), "D?{");
        // D?{ is the 5-vertex star centered at the last vertex.
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(4), 4);
    }

    #[test]
    fn k3_encodes_and_decodes() {
        let k3 = Graph::complete(3).unwrap();
        let s = to_graph6(&k3);
        let back = from_graph6(&s).unwrap();
        assert_eq!(back, k3);
        assert_eq!(back.n(), 3);
        assert_eq!(back.edge_count(), 3);
    }

    #[test]
    fn out_of_range_order_is_rejected() {
        // Header claiming n = 100 (single-byte form caps at 62, so use '~').
        let mut rec = String::from("~");
        rec.push(63u8 as char);
        rec.push((63u8 + 1) as char);
        rec.push((63u8 + 36) as char); // 1*64 + 36 = 100
        let err = from_graph6(&rec).unwrap_err();
        assert_eq!(err, Graph6Error::OutOfRangeN { n: 100, offset: 0 });
    }

    #[test]
    fn trailing_garbage_names_offset() {
        let err = from_graph6("D?{?").unwrap_err();
        assert_eq!(err, Graph6Error::TrailingGarbage { offset: 3 });
    }

    #[test]
    fn truncated_record_is_rejected() {
        let err = from_graph6("D?").unwrap_err();
        assert_eq!(
            err,
            Graph6Error::Truncated {
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn malformed_header_byte() {
        let err = from_graph6("\n").unwrap_err();
        assert_eq!(
            err,
            Graph6Error::MalformedHeader {
                offset: 0,
                byte: b'\n'
            }
        );
    }

    #[test]
    fn empty_and_tiny_graphs() {
        for n in 0..4 {
            let g = Graph::empty(n).unwrap();
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn long_form_for_63_and_64() {
        for n in [63, 64] {
            let g = Graph::complete(n).unwrap();
            let s = to_graph6(&g);
            assert!(s.starts_with('~'));
            assert_eq!(from_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn named_graphs_roundtrip() {
        for name in ["petersen", "W_5", "hammer", "kite", "fig2_a", "K_7_less"] {
            let g = catalog(name).unwrap();
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
