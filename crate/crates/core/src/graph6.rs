//! graph6 codec.
//!
//! One graph per line, bytes 63..=126. The header encodes `n`; the body is
//! the upper triangle of the adjacency matrix in column order
//! (0,1), (0,2), (1,2), (0,3), ... packed six bits per byte, most
//! significant bit first, with zero padding. The optional `>>graph6<<`
//! file header is accepted and skipped.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Graph6Error, GraphError};
use crate::graph::Graph;
use crate::MAX_VERTICES;

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let start = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = line.as_bytes();
    if bytes.len() <= start {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate().skip(start) {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
    }
    let (n, body_start) = decode_order(bytes, start)?;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < need {
        return Err(Graph6Error::Truncated {
            expected: need,
            found: body.len(),
        });
    }
    if body.len() > need {
        return Err(Graph6Error::Trailing {
            offset: body_start + need,
            extra: body.len() - need,
        });
    }
    if need > 0 {
        let pad = need * 6 - bits;
        let last = body[need - 1] - 63;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::Padding {
                offset: body_start + need - 1,
            });
        }
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(&adj))
}

fn decode_order(bytes: &[u8], start: usize) -> Result<(usize, usize), Graph6Error> {
    let value = |from: usize, len: usize| -> Result<usize, Graph6Error> {
        let field = bytes.get(from..from + len).ok_or(Graph6Error::Header {
            offset: from,
            reason: "order field cut short",
        })?;
        Ok(field.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    if bytes[start] != 126 {
        return Ok(((bytes[start] - 63) as usize, start + 1));
    }
    if bytes.get(start + 1) == Some(&126) {
        let n = value(start + 2, 6)?;
        if n <= 258_047 {
            return Err(Graph6Error::Header {
                offset: start,
                reason: "8-byte order form used for n <= 258047",
            });
        }
        return Ok((n, start + 8));
    }
    let n = value(start + 1, 3)?;
    if n <= 62 {
        return Err(Graph6Error::Header {
            offset: start,
            reason: "4-byte order form used for n <= 62",
        });
    }
    Ok((n, start + 4))
}

/// Encodes a simple graph. Parallel edges are rejected.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    if !g.is_simple() {
        return Err(Graph6Error::Multigraph);
    }
    Ok(encode_adjacency(g.adjacency()))
}

pub(crate) fn encode_adjacency(adj: &[u64]) -> String {
    let n = adj.len();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for (j, row) in adj.iter().enumerate().take(n).skip(1) {
        for i in 0..j {
            acc = acc << 1 | (row >> i & 1) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
