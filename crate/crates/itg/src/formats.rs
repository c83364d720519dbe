//! graph6 and edge-list text formats.
//!
//! graph6 packs the upper adjacency triangle, column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), into 6-bit chunks written as
//! bytes `63 + chunk`. The vertex count comes first: one byte for `n <= 62`,
//! `126` plus three bytes up to `258047`, `126 126` plus six bytes beyond.
//!
//! The edge-list format is a header line `n m` followed by `m` lines `u v`
//! with 0-based ids. A file may hold several graphs back to back; blank
//! lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use itg_core::Graph;

use crate::error::{Error, Result};

pub const GRAPH6_HEADER: &str = ">>graph6<<";

const SMALL_LIMIT: usize = 62;
const MEDIUM_LIMIT: usize = 258_047;
const LARGE_LIMIT: usize = (1 << 36) - 1;

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        line: 1,
        offset,
        message: message.into(),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header and trailing line
/// break are accepted; byte offsets in errors count from the start of `text`.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let raw = text.trim_end_matches(['\n', '\r']);
    let (start, body) = match raw.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, raw.as_bytes()),
    };
    match body.first() {
        None => return Err(g6_err(start, "empty input")),
        Some(b':') => return Err(g6_err(start, "sparse6 is not supported")),
        Some(b'&') => return Err(g6_err(start, "digraph6 is not supported")),
        _ => {}
    }
    if let Some(i) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_err(
            start + i,
            format!("byte {} outside 63..=126", body[i]),
        ));
    }
    let word = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
    };
    let need = |len: usize| {
        if body.len() < len {
            Err(g6_err(start + body.len(), "truncated size prefix"))
        } else {
            Ok(())
        }
    };
    let (n, pos) = if body[0] != 126 {
        (word(&body[..1]), 1)
    } else if body.get(1) != Some(&126) {
        need(4)?;
        (word(&body[1..4]), 4)
    } else {
        need(8)?;
        (word(&body[2..8]), 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[pos..];
    if data.len() != expected {
        let offset = start + pos + data.len().min(expected);
        return Err(g6_err(
            offset,
            format!(
                "expected {expected} data bytes for n = {n}, found {}",
                data.len()
            ),
        ));
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (data[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(g6_err(start + pos + expected - 1, "non-zero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// graph6 encoding without header or line break.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    let push_word = |out: &mut Vec<u8>, x: usize, chunks: usize| {
        for c in (0..chunks).rev() {
            out.push(63 + (x >> (6 * c) & 63) as u8);
        }
    };
    if n <= SMALL_LIMIT {
        push_word(&mut out, n, 1);
    } else if n <= MEDIUM_LIMIT {
        out.push(126);
        push_word(&mut out, n, 3);
    } else if n <= LARGE_LIMIT {
        out.extend([126, 126]);
        push_word(&mut out, n, 6);
    } else {
        return Err(Error::Graph6TooLarge(n));
    }
    let mut chunk = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(63 + chunk);
                chunk = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push(63 + (chunk << (6 - k % 6)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// `n m` header followed by one `u v` line per edge in canonical order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let bad = |message: String| Error::EdgeList {
        line: lineno,
        message,
    };
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| bad(format!("expected two integers, got {line:?}")))?;
        tok.parse()
            .map_err(|_| bad(format!("{tok:?} is not a non-negative integer")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(bad(format!("expected two integers, got {line:?}")));
    }
    Ok(pair)
}

/// Every graph in an edge-list text.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut out = Vec::new();
    while let Some((lineno, header)) = lines.next() {
        let (n, m) = parse_pair(header, lineno)?;
        let mut edges = Vec::with_capacity(m);
        for e in 0..m {
            let (ln, l) = lines.next().ok_or_else(|| Error::EdgeList {
                line: lineno,
                message: format!("header announces {m} edges, file ends after {e}"),
            })?;
            edges.push(parse_pair(l, ln)?);
        }
        let g = Graph::from_edges(n, edges).map_err(|e| Error::EdgeList {
            line: lineno,
            message: e.to_string(),
        })?;
        if g.size() != m {
            return Err(Error::EdgeList {
                line: lineno,
                message: format!("header announces {m} edges, {} are distinct", g.size()),
            });
        }
        out.push(g);
    }
    Ok(out)
}

/// Every graph in a graph6 text, one per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| match e {
                Error::Graph6 {
                    offset, message, ..
                } => Error::Graph6 {
                    line: i + 1,
                    offset,
                    message,
                },
                other => other,
            })
        })
        .collect()
}

/// Reads graph6 or edge-list text, telling them apart by the first
/// significant line: graph6 never uses digits, an edge-list header is only
/// digits.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.chars().all(|c| c.is_ascii_digit() || c.is_whitespace()) => {
            parse_edge_lists(text)
        }
        _ => parse_graph6_lines(text),
    }
}

pub fn read_graphs(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_graphs(&text)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Graph6,
    Edges,
}

pub fn render(g: &Graph, format: Format) -> Result<String> {
    match format {
        Format::Graph6 => Ok(to_graph6(g)? + "\n"),
        Format::Edges => Ok(to_edge_list(g)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itg_core::families::{complete, path};

    #[test]
    fn small_examples() {
        let k3 = complete(3).unwrap();
        assert_eq!(parse_graph6("Bw").unwrap(), k3);
        assert_eq!(parse_graph6("A_").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6("Bg").unwrap(), path(3).unwrap());
        assert_eq!(to_graph6(&k3).unwrap(), "Bw");
        assert_eq!(to_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(to_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), k3);
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_graph6("B!") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph6("Bww") {
            Err(Error::Graph6 { offset: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_graph6("B"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        // K3 needs 3 bits; the low three bits of the chunk are padding.
        assert!(parse_graph6("Bx").is_err());
        assert!(parse_graph6(":Fa@x^").is_err());
        assert!(parse_graph6("~?").is_err());
    }

    #[test]
    fn medium_size_prefix() {
        let g = path(70).unwrap();
        let s = to_graph6(&g).unwrap();
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 6]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_lists() {
        let text = "# two graphs\n3 2\n0 1\n1 2\n\n2 1\n1 0\n";
        let gs = parse_graphs(text).unwrap();
        assert_eq!(gs, vec![path(3).unwrap(), complete(2).unwrap()]);
        assert_eq!(to_edge_list(&gs[0]), "3 2\n0 1\n1 2\n");
        assert!(matches!(
            parse_edge_lists("3 2\n0 1\n"),
            Err(Error::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_lists("3 1\n0 5\n"),
            Err(Error::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_lists("3 1\n0 x\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
    }

    #[test]
    fn graph6_files() {
        let gs = parse_graphs("Bw\nBg\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert!(matches!(
            parse_graphs("Bw\nB!\n"),
            Err(Error::Graph6 {
                line: 2,
                offset: 1,
                ..
            })
        ));
    }
}
