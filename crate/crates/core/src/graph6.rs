//! graph6 and plain edge-list text formats.
//!
//! Only the short graph6 form is supported: one header byte `n + 63` for
//! `1 <= n <= 62`, then the upper triangle in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte, most significant
//! bit first, each byte offset by 63 and the last one zero-padded.

use crate::graph::{pair_count, MAX_ORDER};
use crate::{Error, Graph, Result, VertexSet};

const OFFSET: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Parses a single graph6 record. Trailing whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let end = text
        .iter()
        .rposition(|b| !b.is_ascii_whitespace())
        .map_or(0, |i| i + 1);
    let text = &text[..end];

    let (&head, payload) = text.split_first().ok_or_else(|| g6_err("empty input"))?;
    if let Some(&b) = text.iter().find(|b| !(OFFSET..=126).contains(b)) {
        return Err(g6_err(format!("byte {b} outside [63, 126]")));
    }
    if head == 126 {
        return Err(g6_err("long-form header (order above 62) is not supported"));
    }
    let n = usize::from(head - OFFSET);
    if n == 0 {
        return Err(g6_err("header encodes order 0"));
    }

    let bits = pair_count(n);
    let expected = bits.div_ceil(6);
    if payload.len() < expected {
        return Err(g6_err(format!(
            "truncated payload: order {n} needs {expected} bytes, found {}",
            payload.len()
        )));
    }
    if payload.len() > expected {
        return Err(g6_err(format!(
            "payload too long: order {n} needs {expected} bytes, found {}",
            payload.len()
        )));
    }

    let mut adj = vec![VertexSet::new(); n];
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = payload[bit / 6] - OFFSET;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            bit += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_ORDER);
    let bits = pair_count(n);
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list format: a line `n m`, then `m` lines `u v` (0-based).
/// Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line: usize, msg: String| Error::EdgeList { line, msg };
    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        match fields[..] {
            [a, b] => {
                let a = a.parse().map_err(|_| err(line, format!("`{a}` is not an integer")))?;
                let b = b.parse().map_err(|_| err(line, format!("`{b}` is not an integer")))?;
                Ok((a, b))
            }
            _ => Err(err(line, format!("expected two integers, found `{l}`"))),
        }
    };

    let (line, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header".into()))?;
    let (n, m) = pair(line, header)?;
    let edges = lines
        .map(|(line, l)| pair(line, l))
        .collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(err(
            line,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses either format: input whose first non-blank byte is a digit is an
/// edge list, anything else is graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    match trimmed.bytes().next() {
        Some(b) if b.is_ascii_digit() => parse_edge_list(trimmed),
        _ => {
            let first = trimmed.lines().next().unwrap_or("");
            parse_graph6(first.as_bytes())
        }
    }
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        emit_graph6(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decode_k2_by_hand() {
        // 'A' = 65 = 2 + 63; '_' = 95 = 0b100000 + 63: the single pair is set
        assert_eq!(parse_graph6(b"A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6(b"A?").unwrap(), Graph::empty(2));
        assert_eq!(emit_graph6(&Graph::complete(2)), "A_");
    }

    #[test]
    fn k1_is_at_sign() {
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(parse_graph6(b"@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn known_encodings() {
        // hand-packed: K3 = 111000, P4 = 101001, C5 = 101001 100100
        assert_eq!(emit_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(emit_graph6(&Graph::path(4)), "Ch");
        assert_eq!(emit_graph6(&Graph::complete(4)), "C~");
        assert_eq!(emit_graph6(&Graph::cycle(5)), "Dhc");
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_graph6(b"A"), Err(Error::Graph6(m)) if m.contains("truncated")));
        assert!(matches!(parse_graph6(b"A__"), Err(Error::Graph6(m)) if m.contains("too long")));
        assert!(parse_graph6(b"").is_err());
        assert!(parse_graph6(b"?").is_err());
        assert!(parse_graph6(b"A ").is_err());
        assert!(parse_graph6(b"A\x7f").is_err());
        assert!(parse_graph6(b"~??").is_err());
        assert!(parse_graph6(b"A!").is_err());
    }

    #[test]
    fn header_and_newline_tolerated() {
        assert_eq!(parse_graph6(b">>graph6<<A_\n").unwrap(), Graph::complete(2));
    }

    #[test]
    fn edge_list_format() {
        let g = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(emit_edge_list(&g), "3 2\n0 1\n1 2\n");
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::EdgeList { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::EdgeList { line: 2, .. })));
        assert_eq!(parse_edge_list("2 1\n0 0\n"), Err(Error::SelfLoop(0)));
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn autodetect() {
        assert_eq!(parse_graph("Bw\n").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph("  3 3\n0 1\n1 2\n0 2").unwrap(), Graph::complete(3));
    }

    #[test]
    fn exhaustive_roundtrip_up_to_seven() {
        for n in 1..=7usize {
            for code in 0..(1u64 << pair_count(n)) {
                let g = Graph::from_upper_triangle(n, code).unwrap();
                assert_eq!(parse_graph6(emit_graph6(&g).as_bytes()).unwrap(), g);
            }
        }
    }

    proptest! {
        #[test]
        fn roundtrip_random(n in 1usize..=62, seed in any::<u64>(), p in 0.0f64..1.0) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = Graph::random(&mut rng, n, p);
            let text = emit_graph6(&g);
            prop_assert_eq!(text.len(), 1 + pair_count(n).div_ceil(6));
            prop_assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g.clone());
            prop_assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
        }
    }
}
