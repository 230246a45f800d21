//! Graph file formats: plain edge lists and graph6.
//!
//! Edge lists start with a line `n m` followed by `m` lines `u v` with
//! 0-based ids. Blank lines and lines starting with `#` are skipped.

use std::fmt::Write as _;
use std::path::Path;

use intcomp_core::{Graph, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] intcomp_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse { line, msg: msg.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let nums = |line: usize, l: &str| -> Result<Vec<usize>, FormatError> {
        l.split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(line, format!("not a number: {t:?}"))))
            .collect()
    };
    let head = nums(hl, header)?;
    let [n, m] = head[..] else {
        return Err(parse_err(hl, "header must be `n m`"));
    };
    let mut g = Graph::new(n)?;
    let mut seen = 0;
    for (line, l) in lines {
        let pair = nums(line, l)?;
        let [u, v] = pair[..] else {
            return Err(parse_err(line, "edge must be `u v`"));
        };
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex out of range for n={n}")));
        }
        g.add_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(hl, format!("header promises {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// graph6 for graphs with at most 62 vertices.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut bits = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                x |= 1 << (5 - k);
            }
        }
        out.push((x + 63) as char);
    }
    out
}

pub fn parse_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(FormatError::Graph6("empty input".into()));
    };
    if !(63..=126).contains(&first) {
        return Err(FormatError::Graph6(format!("bad size byte {first}")));
    }
    if first == 126 {
        return Err(FormatError::Graph6(format!("more than 62 vertices; the cap is {MAX_VERTICES}")));
    }
    let n = (first - 63) as usize;
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() != 1 + need {
        return Err(FormatError::Graph6(format!("expected {} bytes for n={n}, got {}", 1 + need, bytes.len())));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6];
            if !(63..=126).contains(&byte) {
                return Err(FormatError::Graph6(format!("bad byte {byte}")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Reads a graph, picking the format from the extension (`.g6` is graph6,
/// anything else an edge list).
pub fn read_graph(path: &Path) -> Result<Graph, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    if path.extension().is_some_and(|e| e == "g6") {
        parse_graph6(&text)
    } else {
        parse_edge_list(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use intcomp_core::graph::named::*;

    #[test]
    fn edge_list_round_trip() {
        for g in [cycle(4), net(), Graph::new(3).unwrap(), path(1)] {
            assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
        let g = parse_edge_list("# a square\n4 4\n0 1\n1 2\n\n2 3\n3 0\n").unwrap();
        assert_eq!(g, cycle(4));
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n1 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // Reference encodings from the format description.
        assert_eq!(to_graph6(&complete(2)), "A_");
        assert_eq!(to_graph6(&path(3)), "Bg");
        assert_eq!(to_graph6(&Graph::new(0).unwrap()), "?");
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), complete(3));
    }

    #[test]
    fn graph6_round_trip() {
        for g in [cycle(5), net(), complete_bipartite(2, 3), star(7), Graph::new(9).unwrap()] {
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
        assert!(parse_graph6("Bgg").is_err());
        assert!(parse_graph6("~").is_err());
    }
}
