//! The signed-graph text format.
//!
//! A graph file is plain text: optional comment lines starting with `#`, a
//! header line `sg <n> <m>`, then `m` edge lines `<u> <v> <+|->` with 0-based
//! vertex ids. Serialization is canonical (normalized edge order), so
//! `parse(serialize(g)) == g` and serializing a parse is idempotent.

use std::fmt;

use sgcg_core::{Sign, SignedGraph};

/// A parse failure located at a line and column (both 1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    BadHeader,
    BadInteger { what: &'static str },
    BadSign,
    MissingTokens { expected: &'static str },
    ExtraTokens,
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    ExtraEdgeLine { declared: usize },
    MissingEdges { declared: usize, got: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.col)?;
        match &self.kind {
            ParseErrorKind::MissingHeader => write!(f, "missing `sg <n> <m>` header"),
            ParseErrorKind::BadHeader => write!(f, "malformed header, expected `sg <n> <m>`"),
            ParseErrorKind::BadInteger { what } => write!(f, "expected an integer for {what}"),
            ParseErrorKind::BadSign => write!(f, "expected `+` or `-`"),
            ParseErrorKind::MissingTokens { expected } => {
                write!(f, "incomplete line, expected {expected}")
            }
            ParseErrorKind::ExtraTokens => write!(f, "unexpected trailing tokens"),
            ParseErrorKind::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            ParseErrorKind::DuplicateEdge { u, v } => {
                write!(f, "duplicate edge on the unordered pair {{{u}, {v}}}")
            }
            ParseErrorKind::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            ParseErrorKind::ExtraEdgeLine { declared } => {
                write!(f, "more edge lines than the {declared} declared in the header")
            }
            ParseErrorKind::MissingEdges { declared, got } => {
                write!(f, "header declares {declared} edges but only {got} were given")
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn is_significant(line: &str) -> bool {
    let trimmed = line.trim_start();
    !trimmed.is_empty() && !trimmed.starts_with('#')
}

fn parse_usize(lineno: usize, col: usize, tok: &str, what: &'static str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError {
        line: lineno,
        col,
        kind: ParseErrorKind::BadInteger { what },
    })
}

/// Parses a graph document into a validated [`SignedGraph`].
pub fn parse_graph(text: &str) -> Result<SignedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| is_significant(l));

    let (header_line, header) = lines.next().ok_or(ParseError {
        line: text.lines().count().max(1),
        col: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let toks = tokens(header);
    if toks.len() != 3 || toks[0].1 != "sg" {
        return Err(ParseError {
            line: header_line,
            col: toks.first().map(|t| t.0).unwrap_or(1),
            kind: ParseErrorKind::BadHeader,
        });
    }
    let n = parse_usize(header_line, toks[1].0, toks[1].1, "vertex count")?;
    let m = parse_usize(header_line, toks[2].0, toks[2].1, "edge count")?;

    let mut edges: Vec<(usize, usize, Sign)> = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    let mut last_line = header_line;
    for (lineno, line) in lines {
        if edges.len() == m {
            return Err(ParseError {
                line: lineno,
                col: 1,
                kind: ParseErrorKind::ExtraEdgeLine { declared: m },
            });
        }
        last_line = lineno;
        let toks = tokens(line);
        if toks.len() < 3 {
            return Err(ParseError {
                line: lineno,
                col: toks.last().map(|t| t.0).unwrap_or(1),
                kind: ParseErrorKind::MissingTokens { expected: "`<u> <v> <+|->`" },
            });
        }
        if toks.len() > 3 {
            return Err(ParseError { line: lineno, col: toks[3].0, kind: ParseErrorKind::ExtraTokens });
        }
        let u = parse_usize(lineno, toks[0].0, toks[0].1, "vertex id")?;
        let v = parse_usize(lineno, toks[1].0, toks[1].1, "vertex id")?;
        let sign = match toks[2].1 {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            _ => return Err(ParseError { line: lineno, col: toks[2].0, kind: ParseErrorKind::BadSign }),
        };
        // Validate in place so diagnostics carry the offending line.
        if u == v {
            return Err(ParseError {
                line: lineno,
                col: toks[0].0,
                kind: ParseErrorKind::SelfLoop { vertex: u },
            });
        }
        for (vertex, col) in [(u, toks[0].0), (v, toks[1].0)] {
            if vertex >= n {
                return Err(ParseError {
                    line: lineno,
                    col,
                    kind: ParseErrorKind::VertexOutOfRange { vertex, n },
                });
            }
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(ParseError {
                line: lineno,
                col: toks[0].0,
                kind: ParseErrorKind::DuplicateEdge { u: key.0, v: key.1 },
            });
        }
        edges.push((u, v, sign));
    }
    if edges.len() != m {
        return Err(ParseError {
            line: last_line,
            col: 1,
            kind: ParseErrorKind::MissingEdges { declared: m, got: edges.len() },
        });
    }
    Ok(SignedGraph::new(n, edges).expect("validated during parse"))
}

/// Serializes a graph in canonical form: header then normalized edges.
pub fn serialize_graph(g: &SignedGraph) -> String {
    let mut out = format!("sg {} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.sign));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k2() {
        let g = parse_graph("sg 2 1\n0 1 +\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_sign(0, 1), Some(Sign::Plus));
    }

    #[test]
    fn parses_signed_triangle_with_comments() {
        let g = parse_graph("# a triangle\nsg 3 3\n0 1 +\n1 2 +\n# middle comment\n0 2 -\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edge_sign(0, 2), Some(Sign::Minus));
    }

    #[test]
    fn duplicate_edge_is_located() {
        let err = parse_graph("sg 2 2\n0 1 +\n1 0 -\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.kind, ParseErrorKind::DuplicateEdge { u: 0, v: 1 });
    }

    #[test]
    fn header_and_token_diagnostics() {
        assert_eq!(parse_graph("").unwrap_err().kind, ParseErrorKind::MissingHeader);
        assert_eq!(parse_graph("graph 2 1\n").unwrap_err().kind, ParseErrorKind::BadHeader);
        let err = parse_graph("sg 2 x\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::BadInteger { what: "edge count" });
        assert_eq!((err.line, err.col), (1, 6));
        let err = parse_graph("sg 2 1\n0 1 *\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::BadSign);
        assert_eq!((err.line, err.col), (2, 5));
        let err = parse_graph("sg 2 1\n0 1\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::MissingTokens { .. }));
    }

    #[test]
    fn count_mismatches_are_reported() {
        let err = parse_graph("sg 3 2\n0 1 +\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingEdges { declared: 2, got: 1 });
        let err = parse_graph("sg 3 1\n0 1 +\n1 2 -\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.kind, ParseErrorKind::ExtraEdgeLine { declared: 1 });
    }

    #[test]
    fn out_of_range_vertex_is_located() {
        let err = parse_graph("sg 2 1\n0 5 +\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::VertexOutOfRange { vertex: 5, n: 2 });
        assert_eq!((err.line, err.col), (2, 3));
    }

    #[test]
    fn round_trip_is_canonical() {
        let g = parse_graph("sg 4 3\n3 2 -\n0 1 +\n2 0 +\n").unwrap();
        let text = serialize_graph(&g);
        assert_eq!(text, "sg 4 3\n0 1 +\n0 2 +\n2 3 -\n");
        let again = parse_graph(&text).unwrap();
        assert_eq!(again, g);
        assert_eq!(serialize_graph(&again), text);
    }
}
