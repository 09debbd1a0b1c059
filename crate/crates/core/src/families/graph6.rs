//! McKay's graph6 encoding.
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte
//! (most significant first) and offset by 63. `N(n)` is one byte for
//! `n <= 62` and `~` plus three bytes for `63 <= n <= 258047`.

use super::FormatError;
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> FormatError {
    FormatError::Graph6(msg.into())
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted; anything else malformed is rejected,
/// including nonzero padding bits.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte 0x{b:02x} outside the printable range 63..=126")));
    }

    let (n, body) = match bytes {
        [] => return Err(err("empty input")),
        [b'~', b'~', ..] => return Err(err("graphs with more than 258047 vertices are not supported")),
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated vertex count"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n <= 62 {
                return Err(err(format!("non-canonical long form for n = {n}")));
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(err(format!("{n} vertices exceed the cap of {MAX_VERTICES}")));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if (k..expected * 6).any(bit) {
        return Err(err("nonzero padding bits"));
    }
    Ok(g)
}
