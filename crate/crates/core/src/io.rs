//! Text formats: a plain edge list and graph6.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses `n m` followed by `m` lines `u v` (0-based). Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let [n, m] = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        edges.push(parse_pair(line)?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges.into_iter().map(|[u, v]| (u, v)))
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let bad = || Error::Parse(format!("expected two non-negative integers, got {line:?}"));
    if fields.len() != 2 {
        return Err(bad());
    }
    Ok([fields[0].parse().map_err(|_| bad())?, fields[1].parse().map_err(|_| bad())?])
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";

/// Encodes a graph in graph6 (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 is printable ASCII")
}

/// Decodes one graph6 line; an optional `>>graph6<<` header is accepted.
pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line);
    let data = line.as_bytes();
    let bad = |msg: &str| Error::Parse(format!("graph6: {msg}"));
    if data.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, rest) = match data {
        [] => return Err(bad("empty input")),
        [126, 126, r @ ..] if r.len() >= 6 => (r[..6].iter().fold(0, |a, &b| (a << 6) | six(b)), &r[6..]),
        [126, r @ ..] if r.len() >= 3 => (r[..3].iter().fold(0, |a, &b| (a << 6) | six(b)), &r[3..]),
        [126, ..] => return Err(bad("truncated order")),
        [b, r @ ..] => (six(*b), r),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(bad("adjacency length does not match the order"));
    }
    let bit = |k: usize| (six(rest[k / 6]) >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (k..rest.len() * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
    Graph::from_edges(n, edges)
}

/// Parses either format, guessing graph6 when the text is a single token.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    if !trimmed.contains(char::is_whitespace) && !trimmed.is_empty() {
        from_graph6(trimmed)
    } else {
        parse_edge_list(text)
    }
}

/// Serde adapter writing graphs as graph6 strings.
pub mod as_graph6 {
    use super::{from_graph6, to_graph6};
    use crate::graph::Graph;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_graph6(g))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let s = String::deserialize(d)?;
        from_graph6(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_graph6_strings() {
        // reference strings from the graph6 format description
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
        assert_eq!(to_graph6(&Graph::singleton()), "@");
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(to_graph6(&tri), "Bw");
        assert_eq!(from_graph6(">>graph6<<Bw").unwrap(), tri);
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err());
        assert!(from_graph6("Bx").is_err()); // padding bit set
        assert!(from_graph6("B\u{7f}").is_err());
    }

    #[test]
    fn large_order_prefix() {
        let g = Graph::edgeless(70);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("4 3\n0 1\n1 2\n# comment\n2 3\n").unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(write_edge_list(&g), "4 3\n0 1\n1 2\n2 3\n");
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n1 0\n").is_err());
        assert!(parse_edge_list("3 1\n1 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert_eq!(parse_edge_list("1 0\n").unwrap(), Graph::singleton());
    }

    #[test]
    fn format_detection() {
        assert_eq!(parse_graph("Bw\n").unwrap().size(), 3);
        assert_eq!(parse_graph("2 1\n0 1").unwrap().size(), 1);
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 1usize..20, mask in proptest::collection::vec(any::<bool>(), 190)) {
            let edges = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(mask.iter())
                .filter(|(_, &b)| b)
                .map(|(e, _)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
