//! graph6 encoding (header-less, as produced by nauty's `geng`/`showg`).
//!
//! Order is written as one byte `n + 63` for `n <= 62`, otherwise as `126`
//! followed by three 6-bit groups. The upper triangle is then packed column
//! by column (`(0,1), (0,2), (1,2), (0,3), ...`) six bits per byte, each byte
//! offset by 63.

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_order(&mut out, n);
    pack_bits(&mut out, n, |i, j| g.has_edge(i, j));
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub(crate) fn pack_bits(out: &mut Vec<u8>, n: usize, bit: impl Fn(usize, usize) -> bool) {
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | bit(i, j) as u8;
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
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are tolerated.
pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6("byte outside 63..=126".into()));
    }
    let (n, rest) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => return Err(Error::Graph6("order exceeds 258047".into())),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(Error::Graph6("truncated order".into())),
        [first, rest @ ..] => ((*first - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            cap: MAX_VERTICES,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for n = {n}, found {}",
            bits.div_ceil(6),
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n.max(1), &edges).and_then(|g| {
        if n == 0 {
            Err(Error::NoVertices)
        } else {
            Ok(g)
        }
    })
}
