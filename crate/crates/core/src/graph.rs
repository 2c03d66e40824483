//! Undirected simple graphs and edge colorings.
//!
//! Vertices are dense indices `0..n`. Adjacency is stored as one bitset row
//! per vertex, so membership tests and degree counts are word operations at
//! the few-hundred-vertex scale this crate targets. Color identity is
//! positional rather than semantic: every property computed here is invariant
//! under renaming colors, and [`ColoredGraph::normalize_colors`] renames them
//! into first-use order for serialization and canonical forms.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Vertex index, dense from zero.
pub type Vertex = u32;

/// Edge color identifier.
pub type Color = u32;

/// Undirected edge with endpoints stored in increasing order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Builds an edge, normalizing endpoint order.
    ///
    /// # Panics
    ///
    /// Panics if `a == b`; loops are rejected earlier by [`Graph::new`], so
    /// hitting this from library code is a bug.
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        assert!(a != b, "loop edge at vertex {a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    /// Smaller endpoint.
    pub fn u(&self) -> Vertex {
        self.u
    }

    /// Larger endpoint.
    pub fn v(&self) -> Vertex {
        self.v
    }

    /// Whether `x` is an endpoint.
    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`.
    ///
    /// # Panics
    ///
    /// Panics if `x` is not an endpoint.
    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            assert!(x == self.v, "vertex {x} not on edge {self:?}");
            self.u
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Errors from graph construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphError {
    /// An endpoint is `>= n`.
    VertexOutOfRange { v: Vertex, n: u32 },
    /// Both endpoints coincide.
    Loop { v: Vertex },
    /// The same unordered pair appears twice.
    DuplicateEdge { u: Vertex, v: Vertex },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for graph on {n} vertices")
            }
            GraphError::Loop { v } => write!(f, "loop edge at vertex {v}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    stride: u32,
    adj: Vec<u64>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from unordered endpoint pairs.
    ///
    /// Pairs may be given in any order and orientation; they are normalized
    /// and sorted. Rejects loops, out-of-range endpoints, and duplicates.
    pub fn new(n: u32, pairs: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(GraphError::Loop { v: a });
            }
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge {
                    u: w[0].u,
                    v: w[0].v,
                });
            }
        }
        let stride = word_stride(n);
        let mut adj = vec![0u64; (n as usize) * (stride as usize)];
        for e in &edges {
            set_bit(&mut adj, stride, e.u, e.v);
            set_bit(&mut adj, stride, e.v, e.u);
        }
        Ok(Graph {
            n,
            stride,
            adj,
            edges,
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: u32) -> Graph {
        Graph::new(n, &[]).expect("edgeless graph is always valid")
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: u32) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                pairs.push((u, v));
            }
        }
        Graph::new(n, &pairs).expect("complete graph is always valid")
    }

    /// Number of vertices.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    /// Edges sorted by `(u, v)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Adjacency test in O(1).
    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        debug_assert!(a < self.n && b < self.n);
        a != b && test_bit(&self.adj, self.stride, a, b)
    }

    /// Degree of `v`.
    pub fn degree(&self, v: Vertex) -> u32 {
        debug_assert!(v < self.n);
        let row = self.row(v);
        row.iter().map(|w| w.count_ones()).sum()
    }

    /// All degrees, indexed by vertex.
    pub fn degrees(&self) -> Vec<u32> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree; `None` on the vertexless graph.
    pub fn min_degree(&self) -> Option<u32> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Maximum degree; `None` on the vertexless graph.
    pub fn max_degree(&self) -> Option<u32> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let base = (wi as u32) * 64;
            BitIter { word: w, base }
        })
    }

    fn row(&self, v: Vertex) -> &[u64] {
        let s = self.stride as usize;
        &self.adj[(v as usize) * s..(v as usize + 1) * s]
    }

    /// Subgraph induced by `keep`, with vertex `keep[i]` relabeled to `i`.
    ///
    /// `keep` must be duplicate-free and in range.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut back = vec![u32::MAX; self.n as usize];
        for (new, &old) in keep.iter().enumerate() {
            assert!(old < self.n, "induced vertex {old} out of range");
            assert!(back[old as usize] == u32::MAX, "duplicate vertex {old}");
            back[old as usize] = new as u32;
        }
        let mut pairs = Vec::new();
        for e in &self.edges {
            let a = back[e.u as usize];
            let b = back[e.v as usize];
            if a != u32::MAX && b != u32::MAX {
                pairs.push((a, b));
            }
        }
        Graph::new(keep.len() as u32, &pairs).expect("induced subgraph of a valid graph")
    }

    /// Largest induced subgraph of minimum degree at least `d + 1`, together
    /// with the surviving original vertex indices in increasing order.
    ///
    /// Iteratively deletes vertices of degree `<= d`; the result is the
    /// standard `(d+1)`-core and may be vertexless. Whenever the average
    /// degree of `self` exceeds `2d` the core is non-empty.
    pub fn peel_to_min_degree(&self, d: u32) -> (Graph, Vec<Vertex>) {
        let mut deg = self.degrees();
        let mut alive = vec![true; self.n as usize];
        let mut stack: Vec<Vertex> = (0..self.n).filter(|&v| deg[v as usize] <= d).collect();
        while let Some(v) = stack.pop() {
            if !alive[v as usize] {
                continue;
            }
            alive[v as usize] = false;
            for u in self.neighbors(v) {
                if alive[u as usize] {
                    deg[u as usize] -= 1;
                    if deg[u as usize] <= d {
                        stack.push(u);
                    }
                }
            }
        }
        let keep: Vec<Vertex> = (0..self.n).filter(|&v| alive[v as usize]).collect();
        (self.induced(&keep), keep)
    }
}

fn word_stride(n: u32) -> u32 {
    n.div_ceil(64).max(1)
}

fn set_bit(adj: &mut [u64], stride: u32, row: Vertex, col: Vertex) {
    adj[(row as usize) * (stride as usize) + (col / 64) as usize] |= 1u64 << (col % 64);
}

fn test_bit(adj: &[u64], stride: u32, row: Vertex, col: Vertex) -> bool {
    adj[(row as usize) * (stride as usize) + (col / 64) as usize] & (1u64 << (col % 64)) != 0
}

struct BitIter {
    word: u64,
    base: u32,
}

impl Iterator for BitIter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros();
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}

/// Errors from attaching a coloring to a graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ColoringError {
    /// Color vector length differs from the edge count.
    LengthMismatch { edges: usize, colors: usize },
    /// Two edges at `vertex` share a color.
    Improper {
        vertex: Vertex,
        first: Edge,
        second: Edge,
    },
    /// The underlying edge list was invalid.
    Graph(GraphError),
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::LengthMismatch { edges, colors } => {
                write!(f, "{colors} colors given for {edges} edges")
            }
            ColoringError::Improper {
                vertex,
                first,
                second,
            } => write!(
                f,
                "improper coloring: edges {first:?} and {second:?} at vertex {vertex} share a color"
            ),
            ColoringError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ColoringError {}

impl From<GraphError> for ColoringError {
    fn from(e: GraphError) -> Self {
        ColoringError::Graph(e)
    }
}

/// Errors from [`ColoredGraph::min_color_degree`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ColorDegreeError {
    /// The color degree of an edgeless graph is undefined.
    NoEdges,
    /// Properness was required but does not hold.
    Improper {
        vertex: Vertex,
        first: Edge,
        second: Edge,
    },
}

impl fmt::Display for ColorDegreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorDegreeError::NoEdges => {
                write!(f, "color degree is undefined on a graph with no edges")
            }
            ColorDegreeError::Improper {
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

impl core::error::Error for ColorDegreeError {}

/// A graph together with a total edge coloring.
///
/// The default constructor enforces properness. Arbitrary (possibly improper)
/// colorings are first-class citizens via [`ColoredGraph::with_any_coloring`],
/// because minimum color degree arguments apply to them as well; operations
/// whose contracts need properness say so.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredGraph {
    graph: Graph,
    /// Parallel to `graph.edges()`.
    colors: Vec<Color>,
}

impl ColoredGraph {
    /// Attaches `colors[i]` to `graph.edges()[i]` and validates properness.
    pub fn new(graph: Graph, colors: Vec<Color>) -> Result<ColoredGraph, ColoringError> {
        let cg = ColoredGraph::with_any_coloring(graph, colors)?;
        match cg.properness_violation() {
            None => Ok(cg),
            Some((vertex, first, second)) => Err(ColoringError::Improper {
                vertex,
                first,
                second,
            }),
        }
    }

    /// Attaches a coloring without the properness check.
    pub fn with_any_coloring(
        graph: Graph,
        colors: Vec<Color>,
    ) -> Result<ColoredGraph, ColoringError> {
        if graph.edges.len() != colors.len() {
            return Err(ColoringError::LengthMismatch {
                edges: graph.edges.len(),
                colors: colors.len(),
            });
        }
        Ok(ColoredGraph { graph, colors })
    }

    /// Builds graph and proper coloring in one step from `((a, b), color)`
    /// triples.
    pub fn from_pairs(
        n: u32,
        items: &[((Vertex, Vertex), Color)],
    ) -> Result<ColoredGraph, ColoringError> {
        let pairs: Vec<(Vertex, Vertex)> = items.iter().map(|&(p, _)| p).collect();
        let graph = Graph::new(n, &pairs)?;
        let mut colors = vec![0; items.len()];
        for &((a, b), c) in items {
            let e = Edge::new(a, b);
            let idx = graph
                .edges
                .binary_search(&e)
                .expect("edge present by construction");
            colors[idx] = c;
        }
        ColoredGraph::new(graph, colors)
    }

    /// Underlying graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Colors parallel to `graph().edges()`.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Color of an edge.
    ///
    /// # Panics
    ///
    /// Panics if the edge is absent.
    pub fn color_of(&self, e: Edge) -> Color {
        let idx = self
            .graph
            .edges
            .binary_search(&e)
            .unwrap_or_else(|_| panic!("edge {e:?} not in graph"));
        self.colors[idx]
    }

    /// Iterates `(edge, color)` in edge order.
    pub fn edge_colors(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.graph
            .edges
            .iter()
            .copied()
            .zip(self.colors.iter().copied())
    }

    /// First properness violation as `(vertex, edge, edge)`, scanning vertices
    /// in increasing order, or `None` when the coloring is proper.
    pub fn properness_violation(&self) -> Option<(Vertex, Edge, Edge)> {
        let mut incident: Vec<Vec<(Color, Edge)>> = vec![Vec::new(); self.graph.n as usize];
        for (e, c) in self.edge_colors() {
            incident[e.u as usize].push((c, e));
            incident[e.v as usize].push((c, e));
        }
        for v in 0..self.graph.n {
            let list = &mut incident[v as usize];
            list.sort_unstable();
            for w in list.windows(2) {
                if w[0].0 == w[1].0 {
                    return Some((v, w[0].1, w[1].1));
                }
            }
        }
        None
    }

    /// Whether the coloring is proper.
    pub fn is_proper(&self) -> bool {
        self.properness_violation().is_none()
    }

    /// Number of distinct colors used.
    pub fn distinct_color_count(&self) -> u32 {
        let mut cs: Vec<Color> = self.colors.clone();
        cs.sort_unstable();
        cs.dedup();
        cs.len() as u32
    }

    /// Distinct colors incident to `v`.
    pub fn color_degree(&self, v: Vertex) -> u32 {
        let mut cs: Vec<Color> = self
            .edge_colors()
            .filter(|(e, _)| e.touches(v))
            .map(|(_, c)| c)
            .collect();
        cs.sort_unstable();
        cs.dedup();
        cs.len() as u32
    }

    /// Minimum over all vertices of the number of distinct incident colors.
    ///
    /// Undefined (error) when the graph has no edges. With `proper_required`
    /// the coloring is checked and an improper one is an error; otherwise any
    /// coloring is accepted. Under a proper coloring this equals the minimum
    /// degree.
    pub fn min_color_degree(&self, proper_required: bool) -> Result<u32, ColorDegreeError> {
        if self.colors.is_empty() {
            return Err(ColorDegreeError::NoEdges);
        }
        if proper_required {
            if let Some((vertex, first, second)) = self.properness_violation() {
                return Err(ColorDegreeError::Improper {
                    vertex,
                    first,
                    second,
                });
            }
        }
        Ok((0..self.graph.n)
            .map(|v| self.color_degree(v))
            .min()
            .expect("graph with edges has vertices"))
    }

    /// Renames colors into first-use order along the sorted edge list, so two
    /// colorings differing only by color names map to the same result.
    pub fn normalize_colors(&self) -> ColoredGraph {
        let mut rename: Vec<(Color, Color)> = Vec::new();
        let mut next: Color = 0;
        let mut colors = Vec::with_capacity(self.colors.len());
        for &c in &self.colors {
            let mapped = match rename.iter().find(|&&(old, _)| old == c) {
                Some(&(_, new)) => new,
                None => {
                    rename.push((c, next));
                    next += 1;
                    next - 1
                }
            };
            colors.push(mapped);
        }
        ColoredGraph {
            graph: self.graph.clone(),
            colors,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_factorized() -> ColoredGraph {
        ColoredGraph::from_pairs(
            4,
            &[
                ((0, 1), 0),
                ((2, 3), 0),
                ((0, 2), 1),
                ((1, 3), 1),
                ((0, 3), 2),
                ((1, 2), 2),
            ],
        )
        .unwrap()
    }

    // ---- edges and construction ----

    #[test]
    fn edge_normalizes_orientation() {
        let e = Edge::new(5, 2);
        assert_eq!((e.u(), e.v()), (2, 5));
        assert_eq!(e.other(2), 5);
        assert!(e.touches(5) && !e.touches(3));
    }

    #[test]
    #[should_panic]
    fn edge_rejects_loop() {
        let _ = Edge::new(3, 3);
    }

    #[test]
    fn graph_rejects_bad_input() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::Loop { v: 1 }));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn graph_sorts_edges() {
        let g = Graph::new(4, &[(3, 2), (0, 1), (2, 0)]).unwrap();
        let got: Vec<(u32, u32)> = g.edges().iter().map(|e| (e.u(), e.v())).collect();
        assert_eq!(got, vec![(0, 1), (0, 2), (2, 3)]);
    }

    #[test]
    fn degrees_and_neighbors() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (2, 3)]).unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(4), 0);
        assert_eq!(g.min_degree(), Some(0));
        assert_eq!(g.max_degree(), Some(3));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(g.neighbors(3).collect::<Vec<_>>(), vec![0, 2]);
        assert!(g.has_edge(3, 0) && !g.has_edge(1, 2));
    }

    #[test]
    fn wide_graph_uses_multiple_words() {
        let g = Graph::new(130, &[(0, 129), (64, 65), (128, 129)]).unwrap();
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(65, 64));
        assert_eq!(g.degree(129), 2);
        assert_eq!(g.neighbors(129).collect::<Vec<_>>(), vec![0, 128]);
    }

    #[test]
    fn complete_graph_counts() {
        let g = Graph::complete(6);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.min_degree(), Some(5));
    }

    // ---- induced subgraphs and peeling ----

    #[test]
    fn induced_relabels() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let h = g.induced(&[1, 2, 3]);
        assert_eq!(h.n(), 3);
        let got: Vec<(u32, u32)> = h.edges().iter().map(|e| (e.u(), e.v())).collect();
        assert_eq!(got, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn peel_keeps_cycle_drops_tree() {
        // C4 with a pendant path: peeling at d=1 must leave exactly the cycle.
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6)]).unwrap();
        let (core, keep) = g.peel_to_min_degree(1);
        assert_eq!(keep, vec![0, 1, 2, 3]);
        assert_eq!(core.edge_count(), 4);
        assert_eq!(core.min_degree(), Some(2));
    }

    #[test]
    fn peel_can_empty() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (core, keep) = g.peel_to_min_degree(1);
        assert_eq!(core.n(), 0);
        assert!(keep.is_empty());
    }

    #[test]
    fn peel_result_exceeds_d() {
        let g = Graph::complete(5);
        let (core, keep) = g.peel_to_min_degree(2);
        assert_eq!(keep.len(), 5);
        assert!(core.min_degree().unwrap() >= 3);
    }

    // ---- colorings ----

    #[test]
    fn proper_coloring_accepted() {
        let cg = k4_factorized();
        assert!(cg.is_proper());
        assert_eq!(cg.distinct_color_count(), 3);
        assert_eq!(cg.color_of(Edge::new(3, 2)), 0);
    }

    #[test]
    fn improper_coloring_rejected_with_location() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let err = ColoredGraph::new(g, vec![7, 7]).unwrap_err();
        match err {
            ColoringError::Improper {
                vertex,
                first,
                second,
            } => {
                assert_eq!(vertex, 1);
                assert_eq!(first, Edge::new(0, 1));
                assert_eq!(second, Edge::new(1, 2));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn length_mismatch_rejected() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            ColoredGraph::new(g, vec![0]).unwrap_err(),
            ColoringError::LengthMismatch {
                edges: 2,
                colors: 1
            }
        );
    }

    #[test]
    fn cycle_two_coloring_is_proper() {
        let cg = ColoredGraph::from_pairs(4, &[((0, 1), 0), ((1, 2), 1), ((2, 3), 0), ((3, 0), 1)])
            .unwrap();
        assert!(cg.is_proper());
        assert_eq!(cg.min_color_degree(true).unwrap(), 2);
    }

    // ---- color degree ----

    #[test]
    fn color_degree_examples() {
        assert_eq!(k4_factorized().min_color_degree(true).unwrap(), 3);

        let star =
            ColoredGraph::from_pairs(4, &[((0, 1), 0), ((0, 2), 1), ((0, 3), 2)]).unwrap();
        // Leaves see one color each.
        assert_eq!(star.min_color_degree(true).unwrap(), 1);

        let mono_triangle = ColoredGraph::with_any_coloring(
            Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap(),
            vec![5, 5, 5],
        )
        .unwrap();
        assert_eq!(mono_triangle.min_color_degree(false).unwrap(), 1);
        assert!(matches!(
            mono_triangle.min_color_degree(true),
            Err(ColorDegreeError::Improper { .. })
        ));
    }

    #[test]
    fn color_degree_needs_edges() {
        let cg = ColoredGraph::new(Graph::empty(4), vec![]).unwrap();
        assert_eq!(
            cg.min_color_degree(false).unwrap_err(),
            ColorDegreeError::NoEdges
        );
    }

    #[test]
    fn isolated_vertex_gives_zero_color_degree() {
        let cg = ColoredGraph::from_pairs(3, &[((0, 1), 0)]).unwrap();
        assert_eq!(cg.min_color_degree(true).unwrap(), 0);
    }

    // ---- normalization ----

    #[test]
    fn normalize_uses_first_use_order() {
        let cg = ColoredGraph::from_pairs(4, &[((0, 1), 9), ((1, 2), 4), ((2, 3), 9)]).unwrap();
        let norm = cg.normalize_colors();
        assert_eq!(norm.colors(), &[0, 1, 0]);
        assert_eq!(norm.normalize_colors().colors(), norm.colors());
    }
}
