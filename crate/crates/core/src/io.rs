//! graph6 and plain edge-list serialization.
//!
//! graph6 follows the published format: an order prefix (one byte `n + 63`
//! for `n ≤ 62`, otherwise `~` and three 6-bit groups), then the upper
//! triangle of the adjacency matrix column by column (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`), packed six bits per byte, most significant first,
//! each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::MAX_ORDER;

fn g6err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted; anything else that does not match the
/// encoding exactly, including nonzero padding bits, is rejected.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_graph6_with_cap(text, MAX_ORDER)
}

pub fn parse_graph6_with_cap(text: &str, cap: usize) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(g6err("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6err(format!("byte {b:#04x} outside the printable range")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(g6err("orders above 258047 are not supported"));
    } else if bytes.len() < 4 {
        return Err(g6err("truncated order prefix"));
    } else {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(g6err("long order prefix used for a small order"));
        }
        (n, &bytes[4..])
    };
    let cap = cap.min(MAX_ORDER);
    if n == 0 || n > cap {
        return Err(Error::OrderOutOfRange { n, cap });
    }
    let total_bits = n * (n - 1) / 2;
    let expected = total_bits.div_ceil(6);
    if body.len() != expected {
        return Err(g6err(format!(
            "expected {expected} edge bytes for order {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if total_bits % 6 != 0 {
        let pad = 6 - total_bits % 6;
        if (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(g6err("nonzero padding bits"));
        }
    }
    Graph::with_cap(n, &edges, cap)
}

/// Parses the edge-list format: a header line `n <order>` followed by one
/// `u v` pair per line. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_with_cap(text, MAX_ORDER)
}

pub fn parse_edge_list_with_cap(text: &str, cap: usize) -> Result<Graph> {
    let err = |line: usize, msg: String| Error::EdgeList { line, msg };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `n <order>` header".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", k] => k
            .parse::<usize>()
            .map_err(|_| err(hl, format!("bad order `{k}`")))?,
        _ => return Err(err(hl, format!("expected `n <order>`, found `{header}`"))),
    };
    let mut edges = Vec::new();
    for (ln, line) in lines {
        let parts: Vec<_> = line.split_whitespace().collect();
        let [u, v] = parts[..] else {
            return Err(err(ln, format!("expected `u v`, found `{line}`")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(ln, format!("bad vertex id `{s}`")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u >= n || v >= n {
            return Err(err(ln, format!("vertex id out of range for order {n}")));
        }
        if u == v {
            return Err(err(ln, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    Graph::with_cap(n, &edges, cap)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Decodes either format: text whose first meaningful line starts with `n `
/// is an edge list, anything else is graph6.
pub fn parse_graph_auto(text: &str, cap: usize) -> Result<Graph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first == "n" || first.starts_with("n ") || first.starts_with("n\t") {
        parse_edge_list_with_cap(text, cap)
    } else {
        parse_graph6_with_cap(first, cap)
    }
}
