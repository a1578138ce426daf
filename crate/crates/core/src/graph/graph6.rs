//! graph6 codec restricted to orders 1..=64.
//!
//! The order is written as `n + 63` for `n <= 62` and as `~` followed by
//! three 6-bit groups otherwise. The upper triangle is packed column by
//! column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte, each
//! byte offset by 63, with the last group zero-padded.

use super::{bit, Graph, MAX_ORDER};
use crate::error::{Error, Result};

pub const GRAPH6_HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(malformed(format!("byte 0x{b:02x} outside the printable graph6 range")))
    }
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut rec = text.strip_prefix(GRAPH6_HEADER.as_bytes()).unwrap_or(text);
    while let Some((&last, rest)) = rec.split_last() {
        if last == b'\n' || last == b'\r' {
            rec = rest;
        } else {
            break;
        }
    }
    let (&first, rest) = rec.split_first().ok_or_else(|| malformed("empty record"))?;
    let (n, body) = if first == b'~' {
        if rest.first() == Some(&b'~') {
            return Err(Error::UnsupportedOrder(usize::MAX));
        }
        if rest.len() < 3 {
            return Err(malformed("truncated long length prefix"));
        }
        let mut n = 0usize;
        for &b in &rest[..3] {
            n = (n << 6) | sextet(b)? as usize;
        }
        if n <= 62 {
            return Err(malformed(format!("non-minimal length prefix for order {n}")));
        }
        (n, &rest[3..])
    } else {
        (sextet(first)? as usize, rest)
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Error::UnsupportedOrder(n));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() != nbytes {
        return Err(malformed(format!(
            "order {n} needs {nbytes} data bytes, found {}",
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(body[k / 6])?;
            if byte & (0x20 >> (k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = sextet(body[nbytes - 1])?;
        let pad = 6 - nbits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Graph::from_rows(rows)
}

/// Encodes `g` as a graph6 record without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}
