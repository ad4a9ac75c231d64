//! graph6 encoding and decoding.
//!
//! Only the single-byte order form is supported (1 <= n <= 62): one byte
//! `n + 63`, then the upper-triangle adjacency bits in column order
//! (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups, each
//! group offset by 63. Padding bits must be zero; every byte must lie in
//! 0x3F..=0x7E. Conformance is bit-exact: any deviation is a parse error,
//! never a silent fix-up.

use crate::graph::{Graph, GraphError, MAX_VERTICES};

const OFFSET: u8 = 63;

/// Decodes one graph6 line (without the trailing newline).
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6 { at: 0, reason: "empty input" });
    }
    let (n, body) = parse_order(bytes)?;
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::UnsupportedOrder(n));
    }
    let pair_count = n * (n - 1) / 2;
    let need = pair_count.div_ceil(6);
    if body.len() != need {
        return Err(GraphError::Graph6 {
            at: bytes.len().min(1 + need),
            reason: "payload length does not match the declared order",
        });
    }
    let mut adj = vec![0u64; n];
    let mut t = 0usize; // pair index in column order
    for (gi, &b) in body.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(GraphError::Graph6 { at: 1 + gi, reason: "byte outside graph6 alphabet" });
        }
        let group = b - OFFSET;
        for bit in 0..6 {
            let set = group & (1 << (5 - bit)) != 0;
            if t < pair_count {
                if set {
                    let (i, j) = pair_at(t);
                    adj[i] |= 1u64 << j;
                    adj[j] |= 1u64 << i;
                }
            } else if set {
                return Err(GraphError::Graph6 { at: 1 + gi, reason: "nonzero padding bits" });
            }
            t += 1;
        }
    }
    Graph::from_adj_rows(adj)
}

/// Encodes a graph as one canonical graph6 line (no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    debug_assert!((1..=MAX_VERTICES).contains(&n));
    let pair_count = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + pair_count.div_ceil(6));
    out.push(n as u8 + OFFSET);
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push(group + OFFSET);
    }
    String::from_utf8(out).expect("graph6 alphabet is ASCII")
}

/// Splits off the order prefix. Multi-byte forms are decoded just far
/// enough to report the unsupported order accurately.
fn parse_order(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let b0 = bytes[0];
    if b0 == 126 {
        // '~' introduces the 18-bit (or with '~~' the 36-bit) order form.
        let long = bytes.get(1) == Some(&126);
        let (skip, width) = if long { (2, 6) } else { (1, 3) };
        let mut n = 0usize;
        for k in 0..width {
            let b = *bytes
                .get(skip + k)
                .ok_or(GraphError::Graph6 { at: skip + k, reason: "truncated order field" })?;
            if !(OFFSET..=126).contains(&b) {
                return Err(GraphError::Graph6 { at: skip + k, reason: "byte outside graph6 alphabet" });
            }
            n = (n << 6) | (b - OFFSET) as usize;
        }
        return Err(GraphError::UnsupportedOrder(n));
    }
    if !(OFFSET..126).contains(&b0) {
        return Err(GraphError::Graph6 { at: 0, reason: "byte outside graph6 alphabet" });
    }
    Ok(((b0 - OFFSET) as usize, &bytes[1..]))
}

/// Pair (i, j) with i < j at column-order index t.
fn pair_at(mut t: usize) -> (usize, usize) {
    let mut j = 1usize;
    while t >= j {
        t -= j;
        j += 1;
    }
    (t, j)
}
