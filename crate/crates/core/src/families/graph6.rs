//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order, packed big-endian into 6-bit groups
//! offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

fn size_header(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else {
        vec![
            126,
            ((n >> 12) & 63) as u8 + 63,
            ((n >> 6) & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = size_header(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).unwrap()
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside printable range 63..126")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => return Err(Error::Graph6("orders above 258047 are not supported".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size header".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            if n <= 62 {
                return Err(Error::Graph6(format!("non-minimal size header for order {n}")));
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6(format!(
            "truncated payload: {} bytes, expected {need}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!(
            "trailing data: {} bytes, expected {need}",
            body.len()
        )));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        let pad = need * 6 - bits;
        if (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Reads graph6 lines, skipping blanks and `#` comments. Errors carry the
/// 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| Error::Parse { line: i + 1, message: e.to_string() })
        })
        .collect()
}
