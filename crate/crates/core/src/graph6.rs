//! graph6 encoding for graphs of order below 63.
//!
//! A line is one size byte `63 + n` followed by the upper triangle of the
//! adjacency matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`,
//! packed big-endian six bits per byte, each byte offset by 63, with the final
//! byte zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Orders at or above this need the multi-byte size header, which is not supported.
pub const GRAPH6_MAX_ORDER: usize = 63;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n >= GRAPH6_MAX_ORDER {
        return Err(Error::TooLarge {
            n,
            limit: GRAPH6_MAX_ORDER - 1,
        });
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((63 + n as u8) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 line. Surrounding whitespace (including the trailing LF)
/// is ignored.
pub fn decode(line: &str) -> Result<Graph> {
    let bytes = line.trim().as_bytes();
    let (&size, body) = bytes
        .split_first()
        .ok_or_else(|| Error::MalformedGraph6("empty line".into()))?;
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside [63, 126]")));
    }
    if size == 126 {
        return Err(Error::MalformedGraph6(
            "multi-byte order header (n >= 63) is not supported".into(),
        ));
    }
    let n = (size - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::MalformedGraph6(format!(
            "order {n} needs {} data bytes, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(Error::MalformedGraph6("nonzero padding bits".into()));
    }
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
    Graph::new(n, &edges)
}

/// Decodes a stream of graph6 lines, skipping blank lines and an optional
/// `>>graph6<<` header.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(|l| l.trim().trim_start_matches(">>graph6<<"))
        .filter(|l| !l.is_empty())
        .map(decode)
        .collect()
}
