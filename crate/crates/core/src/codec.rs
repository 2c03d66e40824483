//! Plain-text graph format.
//!
//! ```text
//! # comment
//! n 4
//! e 0 1 0
//! e 2 3 1
//! ```
//!
//! One `n <count>` header, then one `e <u> <v> <color>` line per edge (the
//! color column is absent for uncolored graphs). Blank lines and lines
//! starting with `#` are ignored. The writer emits edges sorted by `(u, v)`
//! with colors renamed into first-use order, so output is byte-stable and fit
//! for golden tests; the reader reports 1-based line numbers and rejects
//! improper colorings.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Color, ColoredGraph, ColoringError, Edge, Graph, Vertex};

/// Errors from parsing the text format.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParseError {
    /// No `n` header line.
    MissingHeader,
    /// A second `n` line at `line`.
    DuplicateHeader { line: usize },
    /// Unknown directive at `line`.
    BadDirective { line: usize },
    /// Wrong token count on a line.
    WrongFields {
        line: usize,
        expected: usize,
        got: usize,
    },
    /// Unparseable integer at `line`.
    BadNumber { line: usize },
    /// An `e` line before the `n` header.
    EdgeBeforeHeader { line: usize },
    /// Endpoint out of range at `line`.
    VertexOutOfRange { line: usize, v: Vertex, n: u32 },
    /// Loop edge at `line`.
    Loop { line: usize, v: Vertex },
    /// Edge repeated; `line` is the second occurrence.
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    /// The file declares an improper coloring.
    Improper {
        vertex: Vertex,
        first: Edge,
        second: Edge,
    },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MissingHeader => write!(f, "missing `n <count>` header line"),
            ParseError::DuplicateHeader { line } => {
                write!(f, "line {line}: repeated `n` header")
            }
            ParseError::BadDirective { line } => {
                write!(f, "line {line}: expected `n` or `e` directive")
            }
            ParseError::WrongFields {
                line,
                expected,
                got,
            } => write!(f, "line {line}: expected {expected} fields, got {got}"),
            ParseError::BadNumber { line } => write!(f, "line {line}: unparseable integer"),
            ParseError::EdgeBeforeHeader { line } => {
                write!(f, "line {line}: edge before `n` header")
            }
            ParseError::VertexOutOfRange { line, v, n } => {
                write!(f, "line {line}: vertex {v} out of range (n = {n})")
            }
            ParseError::Loop { line, v } => write!(f, "line {line}: loop edge at vertex {v}"),
            ParseError::DuplicateEdge { line, u, v } => {
                write!(f, "line {line}: duplicate edge ({u}, {v})")
            }
            ParseError::Improper {
                vertex,
                first,
                second,
            } => write!(
                f,
                "improper coloring: edges {first:?} and {second:?} at vertex {vertex} share a color"
            ),
        }
    }
}

impl core::error::Error for ParseError {}

/// Serializes an uncolored graph.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("e {} {}\n", e.u(), e.v()));
    }
    out
}

/// Serializes a colored graph with first-use normalized colors.
pub fn write_colored_graph(cg: &ColoredGraph) -> String {
    let norm = cg.normalize_colors();
    let mut out = format!("n {}\n", norm.graph().n());
    for (e, c) in norm.edge_colors() {
        out.push_str(&format!("e {} {} {}\n", e.u(), e.v(), c));
    }
    out
}

/// Parses an uncolored graph. Edge lines must have exactly two endpoints.
pub fn read_graph(text: &str) -> Result<Graph, ParseError> {
    let (n, items) = scan(text, false)?;
    let pairs: Vec<(Vertex, Vertex)> = items.iter().map(|&(u, v, _)| (u, v)).collect();
    Ok(Graph::new(n, &pairs).expect("scan validated the edge list"))
}

/// Parses a colored graph. Edge lines must carry a color; the coloring must
/// be proper.
pub fn read_colored_graph(text: &str) -> Result<ColoredGraph, ParseError> {
    let (n, items) = scan(text, true)?;
    let pairs: Vec<((Vertex, Vertex), Color)> =
        items.iter().map(|&(u, v, c)| ((u, v), c)).collect();
    match ColoredGraph::from_pairs(n, &pairs) {
        Ok(cg) => Ok(cg),
        Err(ColoringError::Improper {
            vertex,
            first,
            second,
        }) => Err(ParseError::Improper {
            vertex,
            first,
            second,
        }),
        Err(other) => unreachable!("scan validated the edge list: {other}"),
    }
}

type ScanItems = Vec<(Vertex, Vertex, Color)>;

fn scan(text: &str, colored: bool) -> Result<(u32, ScanItems), ParseError> {
    let mut n: Option<u32> = None;
    let mut items: Vec<(Vertex, Vertex, Color)> = Vec::new();
    let mut seen: BTreeSet<Edge> = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields[0] {
            "n" => {
                if n.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                if fields.len() != 2 {
                    return Err(ParseError::WrongFields {
                        line,
                        expected: 2,
                        got: fields.len(),
                    });
                }
                n = Some(parse_num(fields[1], line)?);
            }
            "e" => {
                let n = n.ok_or(ParseError::EdgeBeforeHeader { line })?;
                let expected = if colored { 4 } else { 3 };
                if fields.len() != expected {
                    return Err(ParseError::WrongFields {
                        line,
                        expected,
                        got: fields.len(),
                    });
                }
                let u: Vertex = parse_num(fields[1], line)?;
                let v: Vertex = parse_num(fields[2], line)?;
                let c: Color = if colored {
                    parse_num(fields[3], line)?
                } else {
                    0
                };
                for &x in &[u, v] {
                    if x >= n {
                        return Err(ParseError::VertexOutOfRange { line, v: x, n });
                    }
                }
                if u == v {
                    return Err(ParseError::Loop { line, v: u });
                }
                let e = Edge::new(u, v);
                if !seen.insert(e) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        u: e.u(),
                        v: e.v(),
                    });
                }
                items.push((u, v, c));
            }
            _ => return Err(ParseError::BadDirective { line }),
        }
    }
    match n {
        Some(n) => Ok((n, items)),
        None => Err(ParseError::MissingHeader),
    }
}

fn parse_num(token: &str, line: usize) -> Result<u32, ParseError> {
    token.parse().map_err(|_| ParseError::BadNumber { line })
}
