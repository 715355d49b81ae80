//! Plain-text edge-list format: a header line `n m`, then exactly m lines
//! `u v` with 0 <= u < v < n. `#` starts a comment (rest of the line is
//! ignored) and blank lines are skipped.

use splitdel_core::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    /// Structurally bad input: bad header, bad tokens, wrong edge count.
    Malformed { line: usize, reason: String },
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    IndexOutOfRange { line: usize, v: Vertex, n: usize },
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Malformed { line, reason } => write!(f, "line {}: {}", line, reason),
            ParseError::DuplicateEdge { line, u, v } => {
                write!(f, "line {}: duplicate edge ({}, {})", line, u, v)
            }
            ParseError::IndexOutOfRange { line, v, n } => {
                write!(f, "line {}: vertex {} out of range (n = {})", line, v, n)
            }
        }
    }
}

impl std::error::Error for ParseError {}

fn malformed(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        reason: reason.into(),
    }
}

/// Parse an edge-list file into a graph with all vertices live.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| malformed(1, "missing `n m` header line"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| malformed(header_no, "header must be `n m`"))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| malformed(header_no, "header must be `n m`"))?;
    if it.next().is_some() {
        return Err(malformed(header_no, "header must be `n m`"));
    }

    let mut g = Graph::new(n);
    let mut count = 0usize;
    let mut last_line = header_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if count == m {
            return Err(malformed(
                line_no,
                format!("more than the declared {} edges", m),
            ));
        }
        let mut it = line.split_whitespace();
        let (u, v): (Vertex, Vertex) = match (
            it.next().and_then(|t| t.parse().ok()),
            it.next().and_then(|t| t.parse().ok()),
            it.next(),
        ) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(malformed(line_no, "edge line must be `u v`")),
        };
        for x in [u, v] {
            if x >= n {
                return Err(ParseError::IndexOutOfRange { line: line_no, v: x, n });
            }
        }
        if u >= v {
            return Err(malformed(line_no, "edges must be written with u < v"));
        }
        if g.has_edge(u, v) {
            return Err(ParseError::DuplicateEdge { line: line_no, u, v });
        }
        g.add_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(malformed(
            last_line,
            format!("expected {} edges, found {}", m, count),
        ));
    }
    Ok(g)
}

/// Render the live graph back to the file format, edges sorted ascending.
pub fn render_edge_list(g: &Graph) -> String {
    let mut edges = Vec::new();
    let live = g.live_vertices().to_vec();
    for (idx, &u) in live.iter().enumerate() {
        for &v in &live[idx + 1..] {
            if g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}
