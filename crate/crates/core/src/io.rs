//! graph6 text encoding and a plain edge-list text format.
//!
//! graph6 follows the published format description: an order field (one
//! byte for `n <= 62`, `~` plus three 6-bit digits up to `n = 258047`),
//! then the upper triangle of the adjacency matrix in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed into 6-bit groups offset by 63.
//! Orders above [`crate::graph::MAX_ORDER`] parse to an error since the
//! in-memory representation cannot hold them.
//!
//! The edge-list format is `"n m"` on the first line followed by `m` lines
//! `"u v"` with 0-based endpoints.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Encodes a graph as a graph6 string.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut bits = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            bits = (bits << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(63 + bits);
                bits = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (bits << (6 - nbits)));
    }
    String::from_utf8(out).unwrap()
}

/// Parses a graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid byte {b:#04x} at offset {i}")));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte order field for n >= 258048; far beyond the order cap
            return Err(Error::Graph6("order field exceeds the supported maximum".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated multi-byte order field".into()));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let g = Graph::empty(n)?; // rejects n above the order cap
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - pos < need {
        return Err(Error::Graph6(format!(
            "truncated bit field: need {need} bytes after the order, got {}",
            bytes.len() - pos
        )));
    }
    if bytes.len() - pos > need {
        return Err(Error::Graph6("trailing bytes after the bit field".into()));
    }
    let mut g = g;
    let mut group = 0u8;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                group = bytes[pos] - 63;
                pos += 1;
                left = 6;
            }
            if group & 0b100000 != 0 {
                g.add_edge(i, j);
            }
            group = (group << 1) & 0b111111;
            left -= 1;
        }
    }
    Ok(g)
}

/// Encodes a graph in the edge-list text format.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list text format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::EdgeList("empty input".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList("header must be \"n m\"".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList("header must be \"n m\"".into()))?;
    if it.next().is_some() {
        return Err(Error::EdgeList("header must be \"n m\"".into()));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad edge line {line:?}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad edge line {line:?}")))?;
        if it.next().is_some() {
            return Err(Error::EdgeList(format!("bad edge line {line:?}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::EdgeList(format!(
            "header promised {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn emit_k2() {
        // hand-encoded per the format description
        assert_eq!(emit_graph6(&families::complete(2).unwrap()), "A_");
    }

    #[test]
    fn parse_star_example() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        // canonical strings round-trip
        assert_eq!(emit_graph6(&g), "D?{");
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("D?"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("D?{{"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("D?\n{"), Err(Error::Graph6(_))));
        assert_eq!(parse_graph6("?"), Err(Error::EmptyGraph));
    }

    #[test]
    fn multibyte_order_round_trip() {
        let g = families::star(63).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        let back = parse_graph6(&s).unwrap();
        assert_eq!(back, g);
        let g64 = families::path(64).unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&g64)).unwrap(), g64);
    }

    #[test]
    fn order_above_cap_is_rejected() {
        // order field says 65: '~' then digits 0,1,1
        let s = "~?@@".to_string();
        assert_eq!(parse_graph6(&s), Err(Error::OrderTooLarge(65)));
    }

    #[test]
    fn header_is_tolerated() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = families::wheel(6).unwrap();
        let text = emit_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2 1\n0 5\n").is_err());
        assert!(parse_edge_list("2 2\n0 1\n").is_err());
    }
}
