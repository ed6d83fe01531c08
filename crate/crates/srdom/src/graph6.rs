//! graph6 encoding and decoding.
//!
//! The format packs the upper triangle of the adjacency matrix, read in
//! column order (0,1), (0,2), (1,2), (0,3), ..., into 6-bit groups offset
//! by 63, preceded by the vertex count in one of three size forms. Input
//! may carry the optional `>>graph6<<` header. Decoding is strict: every
//! byte must be in the printable range 63..=126, the size must use the
//! shortest form, the bit section must have exactly the right length, and
//! padding bits must be zero. Consequently `write` is a left and right
//! inverse of `parse` on accepted inputs.

use thiserror::Error;

use crate::graph::Graph;

/// Optional input header.
pub const HEADER: &str = ">>graph6<<";

const MAX_ORDER: u64 = (1 << 36) - 1;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("input starts with '>>' but the header is not '>>graph6<<'")]
    BadHeader,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidChar { offset: usize, byte: u8 },
    #[error("truncated input: expected {expected} bytes of edge bits, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("size at offset {offset} is not in canonical shortest form")]
    NonCanonicalSize { offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("order {order} exceeds the graph6 limit of 2^36 - 1")]
    OrderTooLarge { order: u64 },
}

fn check_byte(bytes: &[u8], index: usize, base: usize) -> Result<u64, Graph6Error> {
    match bytes.get(index) {
        None => Err(Graph6Error::Truncated {
            expected: index + 1,
            found: bytes.len(),
        }),
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(Graph6Error::InvalidChar {
            offset: base + index,
            byte: b,
        }),
    }
}

/// Reads the size field; returns (order, bytes consumed).
fn parse_size(bytes: &[u8], base: usize) -> Result<(u64, usize), Graph6Error> {
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let first = check_byte(bytes, 0, base)?;
    if first < 63 {
        return Ok((first, 1));
    }
    // first byte was '~'
    let second = check_byte(bytes, 1, base)?;
    if second < 63 {
        let mut n = 0u64;
        for i in 1..4 {
            n = (n << 6) | check_byte(bytes, i, base)?;
        }
        if n < 63 {
            return Err(Graph6Error::NonCanonicalSize { offset: base });
        }
        Ok((n, 4))
    } else {
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | check_byte(bytes, i, base)?;
        }
        if n < 258_048 {
            return Err(Graph6Error::NonCanonicalSize { offset: base });
        }
        Ok((n, 8))
    }
}

fn edge_bit_bytes(n: u64) -> usize {
    let bits = (n as u128) * (n as u128 - 1) / 2;
    bits.div_ceil(6) as usize
}

/// Decodes one graph6 line, with or without the standard header.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let (body, base) = match text.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None if text.starts_with(">>") => return Err(Graph6Error::BadHeader),
        None => (text.as_bytes(), 0),
    };
    let (n, size_len) = parse_size(body, base)?;
    let data = &body[size_len..];
    let expected = if n < 2 { 0 } else { edge_bit_bytes(n) };
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: base + size_len + expected,
        });
    }
    // input length bounds n*(n-1)/2, so the order fits in memory here
    let n = n as usize;
    let mut values = Vec::with_capacity(expected);
    for (i, _) in data.iter().enumerate() {
        values.push(check_byte(data, i, base + size_len)? as u8);
    }
    let bit = |k: usize| (values[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for pad in k..expected * 6 {
        if bit(pad) {
            return Err(Graph6Error::NonzeroPadding {
                offset: base + size_len + pad / 6,
            });
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are in range and loop-free"))
}

fn push_size(out: &mut Vec<u8>, n: u64) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Encodes a graph as one canonical graph6 line (no header).
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order() as u64;
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge { order: n });
    }
    let mut out = Vec::new();
    push_size(&mut out, n);
    let n = g.order();
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
