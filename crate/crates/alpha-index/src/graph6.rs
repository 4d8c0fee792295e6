//! graph6 text serialization.
//!
//! One record per line: a length header, then the upper triangle of the
//! adjacency matrix in column-major order, packed six bits per printable
//! byte at offset 63. Orders 63 and 64 use the `~`-prefixed long header.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Bits of the upper triangle, column by column: (0,1), (0,2), (1,2), ...
fn triangle_bits(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let mut bits = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for col in 1..n {
        for row in 0..col {
            bits.push(g.has_edge(row, col));
        }
    }
    bits
}

/// Encodes a graph as a graph6 record (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // long form: '~' then 18 bits, high group first
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let bits = triangle_bits(g);
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                value |= 1 << (5 - i);
            }
        }
        out.push(value + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 record. The whole input must be consumed; trailing
/// bytes, short records, and out-of-range characters are errors carrying
/// the offending byte offset.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::graph6(0, "empty record"));
    }

    let (n, pos): (usize, usize) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::graph6(1, "eight-byte order header exceeds the 64-vertex cap"));
        }
        if bytes.len() < 4 {
            return Err(Error::graph6(bytes.len(), "truncated long order header"));
        }
        let mut n = 0usize;
        for (i, &b) in bytes.iter().enumerate().take(4).skip(1) {
            if !(63..=126).contains(&b) {
                return Err(Error::graph6(i, format!("header byte {b} outside graph6 range")));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        let b = bytes[0];
        if !(63..=126).contains(&b) {
            return Err(Error::graph6(0, format!("header byte {b} outside graph6 range")));
        }
        ((b - 63) as usize, 1)
    };

    if n > MAX_VERTICES {
        return Err(Error::capacity(format!(
            "graph6 record declares {n} vertices, cap is {MAX_VERTICES}"
        )));
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let data_len = bit_count.div_ceil(6);
    if bytes.len() < pos + data_len {
        return Err(Error::graph6(
            bytes.len(),
            format!("record too short: need {data_len} data bytes after the header"),
        ));
    }
    if bytes.len() > pos + data_len {
        return Err(Error::graph6(pos + data_len, "trailing bytes after record"));
    }

    let mut g = Graph::empty(n)?;
    let mut bit_index = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = bytes[pos + bit_index / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::graph6(
                    pos + bit_index / 6,
                    format!("data byte {byte} outside graph6 range"),
                ));
            }
            let bit = (byte - 63) >> (5 - bit_index % 6) & 1;
            if bit == 1 {
                g.add_edge(row, col)?;
            }
            bit_index += 1;
        }
    }
    g.debug_check();
    Ok(g)
}
