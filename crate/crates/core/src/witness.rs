//! Self-certifying embeddings of patterns into colored hosts.
//!
//! Every search routine returns a [`Witness`] rather than a bare yes/no, and
//! [`Witness::validate`] re-checks the claim from scratch: shape, injectivity,
//! edge presence, and pairwise distinct colors. Star-forest witnesses may be
//! partial (a prefix of the pattern's components), which is what the greedy
//! extension step works on; path witnesses are always complete.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{ColoredGraph, Edge, Graph, Vertex};
use crate::pattern::Pattern;

/// One embedded star: a center and its leaves.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StarComponent {
    pub center: Vertex,
    pub leaves: Vec<Vertex>,
}

/// Host-side realization of a pattern.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Embedding {
    /// Components in pattern order (sizes non-decreasing). May be a prefix.
    Stars(Vec<StarComponent>),
    /// Path vertices in traversal order.
    Path(Vec<Vertex>),
}

/// Errors from [`Witness::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WitnessError {
    /// Embedding kind does not match the pattern kind.
    ShapeMismatch,
    /// More components than the pattern has.
    TooManyComponents { got: usize, k: u32 },
    /// Component `index` has the wrong number of leaves.
    ComponentSize { index: usize, got: usize, want: u32 },
    /// Path witness has the wrong number of vertices.
    PathLength { got: usize, want: usize },
    /// A vertex is used twice across the embedding.
    VertexReused { v: Vertex },
    /// A vertex is not in the host.
    VertexOutOfRange { v: Vertex },
    /// A claimed edge is absent from the host.
    MissingEdge { e: Edge },
    /// Two witness edges share a color.
    ColorRepeated { color: u32 },
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessError::ShapeMismatch => write!(f, "embedding kind does not match pattern"),
            WitnessError::TooManyComponents { got, k } => {
                write!(f, "{got} components embedded but pattern has {k}")
            }
            WitnessError::ComponentSize { index, got, want } => {
                write!(f, "component {index} has {got} leaves, expected {want}")
            }
            WitnessError::PathLength { got, want } => {
                write!(f, "path witness has {got} vertices, expected {want}")
            }
            WitnessError::VertexReused { v } => write!(f, "vertex {v} used twice"),
            WitnessError::VertexOutOfRange { v } => write!(f, "vertex {v} not in host"),
            WitnessError::MissingEdge { e } => write!(f, "edge {e:?} absent from host"),
            WitnessError::ColorRepeated { color } => {
                write!(f, "color {color} appears on two witness edges")
            }
        }
    }
}

impl core::error::Error for WitnessError {}

/// A pattern together with its claimed embedding.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pattern: Pattern,
    embedding: Embedding,
}

impl Witness {
    pub fn new(pattern: Pattern, embedding: Embedding) -> Witness {
        Witness { pattern, embedding }
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    /// Host edges realizing the pattern, in embedding order.
    pub fn edges(&self) -> Vec<Edge> {
        match &self.embedding {
            Embedding::Stars(comps) => comps
                .iter()
                .flat_map(|c| c.leaves.iter().map(|&l| Edge::new(c.center, l)))
                .collect(),
            Embedding::Path(vs) => vs.windows(2).map(|w| Edge::new(w[0], w[1])).collect(),
        }
    }

    /// All embedded vertices in embedding order.
    pub fn vertices(&self) -> Vec<Vertex> {
        match &self.embedding {
            Embedding::Stars(comps) => comps
                .iter()
                .flat_map(|c| core::iter::once(c.center).chain(c.leaves.iter().copied()))
                .collect(),
            Embedding::Path(vs) => vs.clone(),
        }
    }

    /// Whether the embedding covers the whole pattern.
    pub fn is_complete(&self) -> bool {
        match (&self.pattern, &self.embedding) {
            (Pattern::Stars(fst), Embedding::Stars(comps)) => {
                comps.len() == fst.k() as usize
            }
            (Pattern::Path(l), Embedding::Path(vs)) => vs.len() == *l as usize + 1,
            _ => false,
        }
    }

    /// Structural check against the uncolored host: shape, injectivity, and
    /// edge presence.
    pub fn validate_structure(&self, g: &Graph) -> Result<(), WitnessError> {
        match (&self.pattern, &self.embedding) {
            (Pattern::Stars(fst), Embedding::Stars(comps)) => {
                if comps.len() > fst.k() as usize {
                    return Err(WitnessError::TooManyComponents {
                        got: comps.len(),
                        k: fst.k(),
                    });
                }
                for (i, comp) in comps.iter().enumerate() {
                    let want = fst.sizes()[i];
                    if comp.leaves.len() != want as usize {
                        return Err(WitnessError::ComponentSize {
                            index: i,
                            got: comp.leaves.len(),
                            want,
                        });
                    }
                }
            }
            (Pattern::Path(l), Embedding::Path(vs)) => {
                if vs.len() != *l as usize + 1 {
                    return Err(WitnessError::PathLength {
                        got: vs.len(),
                        want: *l as usize + 1,
                    });
                }
            }
            _ => return Err(WitnessError::ShapeMismatch),
        }
        let mut seen: Vec<Vertex> = Vec::new();
        for v in self.vertices() {
            if v >= g.n() {
                return Err(WitnessError::VertexOutOfRange { v });
            }
            if seen.contains(&v) {
                return Err(WitnessError::VertexReused { v });
            }
            seen.push(v);
        }
        for e in self.edges() {
            if !g.has_edge(e.u(), e.v()) {
                return Err(WitnessError::MissingEdge { e });
            }
        }
        Ok(())
    }

    /// Full check against the colored host: structure plus pairwise distinct
    /// edge colors.
    pub fn validate(&self, cg: &ColoredGraph) -> Result<(), WitnessError> {
        self.validate_structure(cg.graph())?;
        let mut used: Vec<u32> = Vec::new();
        for e in self.edges() {
            let c = cg.color_of(e);
            if used.contains(&c) {
                return Err(WitnessError::ColorRepeated { color: c });
            }
            used.push(c);
        }
        Ok(())
    }
}
