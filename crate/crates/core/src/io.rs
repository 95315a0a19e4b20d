//! Text formats: graph6 and a plain edge list.
//!
//! graph6 follows the nauty `formats.txt` definition: a size header `N(n)`
//! followed by the upper triangle of the adjacency matrix, column by column,
//! packed six bits per printable byte (value + 63).

use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Graph6 {
        offset,
        message: message.into(),
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u8, ParseError> {
    let b = bytes[offset];
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(g6_err(
            offset,
            format!("byte 0x{b:02x} outside the printable range 63..=126"),
        ))
    }
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn decode_graph6(input: &[u8]) -> Result<Graph, ParseError> {
    let mut start = 0;
    if input.starts_with(HEADER.as_bytes()) {
        start = HEADER.len();
    }
    let mut end = input.len();
    while end > start && matches!(input[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let bytes = &input[..end];
    if start >= bytes.len() {
        return Err(g6_err(start, "missing size header"));
    }

    let (n, body_start) = if bytes[start] == 126 {
        if bytes.get(start + 1) == Some(&126) {
            return Err(g6_err(start + 1, "orders above 258047 are not supported"));
        }
        if bytes.len() < start + 4 {
            return Err(g6_err(bytes.len(), "truncated size header"));
        }
        let mut n = 0usize;
        for k in 1..4 {
            n = (n << 6) | sixbits(bytes, start + k)? as usize;
        }
        if n <= 62 {
            return Err(g6_err(
                start,
                format!("order {n} must use the one-byte header"),
            ));
        }
        (n, start + 4)
    } else {
        (sixbits(bytes, start)? as usize, start + 1)
    };
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge { n, max: MAX_ORDER }.into());
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < expected {
        return Err(g6_err(
            bytes.len(),
            format!(
                "body has {} bytes, expected {expected} for order {n}",
                body.len()
            ),
        ));
    }
    if body.len() > expected {
        return Err(g6_err(
            body_start + expected,
            "trailing bytes after graph body",
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    'outer: for (pos, _) in body.iter().enumerate() {
        let chunk = sixbits(bytes, body_start + pos)?;
        for b in (0..6).rev() {
            if k == nbits {
                break 'outer;
            }
            if chunk >> b & 1 == 1 {
                let (i, j) = triangle_pair(k);
                g.insert_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Maps a position in the column-major upper triangle to its pair `(i, j)`, `i < j`.
fn triangle_pair(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut base = 0;
    while base + j <= k {
        base += j;
        j += 1;
    }
    (k - base, j)
}

/// Writes the edge-list format: a `n m` header line followed by one `u v`
/// line per edge with `u < v`.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses the edge-list format. Blank lines and lines starting with `#` are skipped.
pub fn decode_edge_list(text: &str) -> Result<Graph, ParseError> {
    let err = |line: usize, message: String| ParseError::EdgeList { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `n m` header".into()))?;
    let [n, m] = parse_pair(header).map_err(|e| err(hline, e))?;
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge { n, max: MAX_ORDER }.into());
    }
    let mut g = Graph::empty(n)?;
    let mut count = 0;
    for (lineno, line) in lines {
        let [u, v] = parse_pair(line).map_err(|e| err(lineno, e))?;
        if u >= v {
            return Err(err(lineno, format!("expected u < v, found {u} {v}")));
        }
        if v >= n {
            return Err(err(lineno, format!("vertex {v} out of range for n = {n}")));
        }
        if g.has_edge(u, v) {
            return Err(err(lineno, format!("duplicate edge {u} {v}")));
        }
        g.insert_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(err(
            hline,
            format!("header declares {m} edges, found {count}"),
        ));
    }
    Ok(g)
}

fn parse_pair(line: &str) -> Result<[usize; 2], String> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(format!("expected two integers, found `{line}`"));
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| format!("`{f}` is not a non-negative integer"))?;
    }
    Ok(out)
}

/// Detects the format from content: an edge list starts with a digit, `#` or
/// whitespace; anything else is treated as graph6.
pub fn decode_auto(input: &[u8]) -> Result<Graph, ParseError> {
    let first = input.iter().copied().find(|b| !b.is_ascii_whitespace());
    match first {
        Some(b) if b.is_ascii_digit() || b == b'#' => {
            let text = std::str::from_utf8(input).map_err(|e| ParseError::EdgeList {
                line: 1,
                message: e.to_string(),
            })?;
            decode_edge_list(text)
        }
        _ => {
            let trimmed = input.trim_ascii();
            decode_graph6(trimmed)
        }
    }
}
