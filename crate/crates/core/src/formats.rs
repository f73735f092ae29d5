//! Text encodings: graph6 and a plain edge list.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) into 6-bit groups offset by 63. The order
//! prefix is one byte for `n <= 62`, `126` plus three bytes for `n <= 258047`, and
//! `126 126` plus six bytes beyond that.

use crate::graph::{Graph, GraphError, Vertex};

const HEADER: &str = ">>graph6<<";
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = (1 << 36) - 1;

fn parse_err(msg: impl Into<String>) -> GraphError {
    GraphError::Parse(msg.into())
}

fn sextet(byte: u8) -> Result<u8, GraphError> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(parse_err(format!(
            "graph6: byte {byte:#04x} outside the printable range 63..=126"
        )))
    }
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    let first = *bytes
        .first()
        .ok_or_else(|| parse_err("graph6: empty input"))?;
    if first != 126 {
        return Ok((sextet(first)? as usize, 1));
    }
    let (start, width) = if bytes.get(1) == Some(&126) {
        (2, 6)
    } else {
        (1, 3)
    };
    let digits = bytes
        .get(start..start + width)
        .ok_or_else(|| parse_err("graph6: truncated order header"))?;
    let mut n = 0usize;
    for &b in digits {
        n = (n << 6) | sextet(b)? as usize;
    }
    let minimal = if width == 3 {
        SHORT_MAX + 1
    } else {
        MEDIUM_MAX + 1
    };
    if n < minimal {
        return Err(parse_err(format!(
            "graph6: order {n} uses a non-minimal header"
        )));
    }
    Ok((n, start + width))
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing whitespace
/// are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, offset) = decode_order(bytes)?;
    let payload = &bytes[offset..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() != expected {
        return Err(parse_err(format!(
            "graph6: expected {expected} payload bytes for n = {n}, found {}",
            payload.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let s = sextet(payload[k / 6])?;
            if s >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // Validate padding bytes that carry no adjacency bits.
    for &b in payload {
        sextet(b)?;
    }
    Graph::from_edges(n, edges)
}

/// Encodes a graph as graph6 without header or newline.
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= LONG_MAX, "graph6 cannot encode {n} vertices");
    let mut out: Vec<u8> = Vec::new();
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else {
        let width = if n <= MEDIUM_MAX {
            out.push(126);
            3
        } else {
            out.extend([126, 126]);
            6
        };
        for i in (0..width).rev() {
            out.push(((n >> (6 * i)) & 63) as u8 + 63);
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses the edge-list format: a header line `n <count>` followed by one `u v` line
/// per edge with 0-based labels. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_err("edge list: missing header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| parse_err(format!("line {line_no}: bad vertex count {count:?}")))?,
        _ => {
            return Err(parse_err(format!(
                "line {line_no}: expected header `n <count>`"
            )))
        }
    };
    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = parts[..] else {
            return Err(parse_err(format!(
                "line {line_no}: expected `u v`, found {line:?}"
            )));
        };
        let label = |s: &str| -> Result<Vertex, GraphError> {
            s.parse()
                .map_err(|_| parse_err(format!("line {line_no}: bad vertex label {s:?}")))
        };
        edges.push((label(u)?, label(v)?));
    }
    Graph::from_edges(n, edges)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
