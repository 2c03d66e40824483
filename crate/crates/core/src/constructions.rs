//! Deterministic generators for the extremal and lower-bound graphs, plus
//! their closed-form edge counts.
//!
//! The star-forest constructions follow one template: a set C of universal
//! vertices (too few to host every component) over an inner graph engineered
//! so the components that must avoid C cannot all be embedded. The colored
//! variant bounds the inner palette at f(c), one less than the total size of
//! the k - c smallest components, so those components cannot find enough
//! distinct colors; the uncolored variant bounds the inner maximum degree
//! instead. Universal-vertex edges always take fresh colors the inner graph
//! never uses, assigned greedily, which keeps properness trivial and plays
//! no part in the counting arguments.
//!
//! The path family is different: unions of fixed blocks (properly 3-colored
//! K4's, XOR-colored K4,4's) whose colorings admit no long rainbow path, and
//! the XOR coloring of a complete graph on the Boolean cube, whose color
//! classes are the nonzero cube translations.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Color, ColoredGraph, Graph, Vertex};
use crate::oracle::{self, OracleError};
use crate::pattern::{Pattern, StarForest};

/// Generator failures.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConstructionError {
    /// A component index c or i reached past the k components.
    ComponentOutOfRange { index: u32, k: u32 },
    /// Split graph asked for a clique larger than the whole graph.
    CliqueTooLarge { k: u32, n: u32 },
    /// More matchings requested than fit at a single vertex (f > m - 1).
    PaletteTooLarge { f: u64, m: u32 },
    /// Degree bound above m - 1.
    DegreeTooLarge { d: u32, m: u32 },
    /// Too few vertices for the requested construction.
    OrderTooSmall { n: u32, needed: u64 },
    /// Block unions need n divisible by the block size.
    NotDivisible { n: u32, modulus: u32 },
    /// Cube dimension outside 1..=max.
    CubeOutOfRange { k: u32, max: u32 },
    /// The clique coloring search hit a resource limit (this is not a
    /// nonexistence verdict).
    Oracle(OracleError),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::ComponentOutOfRange { index, k } => {
                write!(f, "component index {index} out of range for {k} components")
            }
            ConstructionError::CliqueTooLarge { k, n } => {
                write!(f, "clique size {k} exceeds vertex count {n}")
            }
            ConstructionError::PaletteTooLarge { f: colors, m } => {
                write!(f, "{colors} matchings do not fit on {m} vertices")
            }
            ConstructionError::DegreeTooLarge { d, m } => {
                write!(f, "degree {d} impossible on {m} vertices")
            }
            ConstructionError::OrderTooSmall { n, needed } => {
                write!(f, "need at least {needed} vertices, got {n}")
            }
            ConstructionError::NotDivisible { n, modulus } => {
                write!(f, "n = {n} is not a positive multiple of {modulus}")
            }
            ConstructionError::CubeOutOfRange { k, max } => {
                write!(f, "cube dimension {k} outside 1..={max}")
            }
            ConstructionError::Oracle(e) => write!(f, "coloring search failed: {e}"),
        }
    }
}

impl core::error::Error for ConstructionError {}

impl From<OracleError> for ConstructionError {
    fn from(e: OracleError) -> ConstructionError {
        ConstructionError::Oracle(e)
    }
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

// ---------------------------------------------------------------------------
// formulas
// ---------------------------------------------------------------------------

/// Inner palette budget: one less than the total edge count of the k - c
/// smallest components.
pub fn f_value(forest: &StarForest, c: u32) -> Result<u64, ConstructionError> {
    let k = forest.k();
    if c >= k {
        return Err(ConstructionError::ComponentOutOfRange { index: c, k });
    }
    let keep = (k - c) as usize;
    Ok(forest.sizes()[..keep].iter().map(|&s| s as u64).sum::<u64>() - 1)
}

/// Edge count of the colored construction: the universal part plus f(c)
/// maximum matchings, except that with k - 1 universal vertices the inner
/// graph is bounded-degree and its count rounds once overall.
pub fn h_edge_count(forest: &StarForest, n: u32, c: u32) -> Result<u64, ConstructionError> {
    let k = forest.k();
    if c >= k {
        return Err(ConstructionError::ComponentOutOfRange { index: c, k });
    }
    if n < c {
        return Err(ConstructionError::OrderTooSmall {
            n,
            needed: c as u64,
        });
    }
    let nc = (n - c) as u64;
    let base = choose2(c as u64) + c as u64 * nc;
    if c + 1 < k {
        Ok(base + f_value(forest, c)? * (nc / 2))
    } else {
        let d = (forest.sizes()[0] - 1) as u64;
        Ok(base + d * nc / 2)
    }
}

/// Edge count of the uncolored construction with i universal vertices over
/// an inner graph of maximum degree one less than the (k - i)-th component
/// size.
pub fn h_prime_edge_count(forest: &StarForest, n: u32, i: u32) -> Result<u64, ConstructionError> {
    let k = forest.k();
    if i >= k {
        return Err(ConstructionError::ComponentOutOfRange { index: i, k });
    }
    if n < i {
        return Err(ConstructionError::OrderTooSmall {
            n,
            needed: i as u64,
        });
    }
    let ni = (n - i) as u64;
    let d = (forest.size(k - i) - 1) as u64;
    Ok(i as u64 * ni + choose2(i as u64) + d * ni / 2)
}

/// Exact classical Turán number of a star forest for large n: the best of
/// the k candidate constructions.
pub fn llp_bound(forest: &StarForest, n: u32) -> Result<u64, ConstructionError> {
    let k = forest.k();
    if n < k {
        return Err(ConstructionError::OrderTooSmall {
            n,
            needed: k as u64,
        });
    }
    (0..k)
        .map(|i| h_prime_edge_count(forest, n, i))
        .try_fold(0, |acc, v| v.map(|v| acc.max(v)))
}

/// Classical Turán number of the k-edge matching, valid for n ≥ 2k - 1:
/// the larger of the (k - 1)-clique join and the complete graph on 2k - 1
/// vertices (which wins at small n).
pub fn eg_matching_bound(n: u64, k: u32) -> u64 {
    assert!(k >= 1, "matchings have at least one edge");
    let k = k as u64;
    let join = choose2(k - 1) + (k - 1) * (n + 1).saturating_sub(k);
    join.max(choose2(2 * k - 1))
}

/// The c in 0..k maximizing [`h_edge_count`], ties toward smaller c. All
/// candidate constructions must be feasible at this n.
pub fn best_c(forest: &StarForest, n: u32) -> Result<u32, ConstructionError> {
    let k = forest.k();
    let mut best = (0u32, 0u64);
    for c in 0..k {
        let needed = if c + 1 < k {
            c as u64 + f_value(forest, c)? + 1
        } else {
            c as u64 + forest.sizes()[0] as u64
        };
        if (n as u64) < needed {
            return Err(ConstructionError::OrderTooSmall { n, needed });
        }
        let v = h_edge_count(forest, n, c)?;
        if c == 0 || v > best.1 {
            best = (c, v);
        }
    }
    Ok(best.0)
}

// ---------------------------------------------------------------------------
// building blocks
// ---------------------------------------------------------------------------

/// Clique on k vertices completely joined to n - k independent vertices.
pub fn split_graph(n: u32, k: u32) -> Result<Graph, ConstructionError> {
    if k > n {
        return Err(ConstructionError::CliqueTooLarge { k, n });
    }
    let mut pairs = Vec::new();
    for a in 0..k {
        for b in a + 1..n {
            pairs.push((a, b));
        }
    }
    Ok(Graph::new(n, &pairs).expect("clique-join pairs are simple"))
}

/// The densest graph on m vertices admitting a proper coloring with exactly
/// f colors: f rounds of the round-robin schedule, each a maximum matching
/// of floor(m / 2) edges.
pub fn edge_maximal_colorable(m: u32, f: u32) -> Result<ColoredGraph, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::OrderTooSmall { n: 0, needed: 1 });
    }
    if f > m - 1 {
        return Err(ConstructionError::PaletteTooLarge { f: f as u64, m });
    }
    let mut items: Vec<((Vertex, Vertex), Color)> = Vec::new();
    if m.is_multiple_of(2) {
        // One vertex sits out of the rotation and pairs with the round
        // index; the rest pair up symmetrically around it.
        let w = m - 1;
        for r in 0..f {
            items.push(((w, r), r));
            for i in 1..m / 2 {
                let a = (r + i) % w;
                let b = (r + w - i) % w;
                items.push(((a, b), r));
            }
        }
    } else {
        // Odd m: rotate over all m vertices; vertex r sits the round out.
        for r in 0..f {
            for i in 1..=(m - 1) / 2 {
                let a = (r + i) % m;
                let b = (r + m - i) % m;
                items.push(((a, b), r));
            }
        }
    }
    let cg = ColoredGraph::from_pairs(m, &items)
        .expect("round-robin rounds are disjoint matchings");
    debug_assert_eq!(cg.graph().edge_count(), f as u64 * (m as u64 / 2));
    Ok(cg)
}

/// The densest graph on m vertices with maximum degree d: a circulant on
/// the floor(d / 2) nearest distances, plus (for odd d) the antipodal
/// matching when m is even, or alternate edges of the long-chord cycle when
/// m is odd, leaving a single vertex of degree d - 1.
pub fn edge_maximal_bounded_degree(m: u32, d: u32) -> Result<Graph, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::OrderTooSmall { n: 0, needed: 1 });
    }
    if d > m - 1 {
        return Err(ConstructionError::DegreeTooLarge { d, m });
    }
    let mut pairs: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    let mut put = |a: u32, b: u32| {
        pairs.insert((a.min(b), a.max(b)));
    };
    for v in 0..m {
        for i in 1..=d / 2 {
            put(v, (v + i) % m);
        }
    }
    if d % 2 == 1 {
        if m.is_multiple_of(2) {
            for i in 0..m / 2 {
                put(i, i + m / 2);
            }
        } else {
            // The chord of length (m - 1) / 2 traces a Hamilton cycle
            // (gcd 1 with m); taking its edges alternately is a maximum
            // matching, and these chords are longer than any circulant
            // distance used above.
            let step = (m - 1) / 2;
            let mut x = 0u32;
            for _ in 0..(m - 1) / 2 {
                let y = (x + step) % m;
                put(x, y);
                x = (y + step) % m;
            }
        }
    }
    let pairs: Vec<(Vertex, Vertex)> = pairs.into_iter().collect();
    let g = Graph::new(m, &pairs).expect("circulant distances stay distinct");
    debug_assert_eq!(g.edge_count(), m as u64 * d as u64 / 2);
    Ok(g)
}

/// Greedy proper coloring of `extra` pairs on top of per-vertex used-color
/// sets, taking the smallest free color at or above `floor`.
fn greedy_color_into(
    items: &mut Vec<((Vertex, Vertex), Color)>,
    used: &mut [BTreeSet<Color>],
    pairs: impl Iterator<Item = (Vertex, Vertex)>,
    floor: Color,
) {
    for (a, b) in pairs {
        let mut col = floor;
        while used[a as usize].contains(&col) || used[b as usize].contains(&col) {
            col += 1;
        }
        used[a as usize].insert(col);
        used[b as usize].insert(col);
        items.push(((a, b), col));
    }
}

// ---------------------------------------------------------------------------
// star-forest constructions
// ---------------------------------------------------------------------------

/// The colored lower-bound construction: c universal vertices over an inner
/// graph that is either f(c)-colorable edge-maximal (c ≤ k - 2) or
/// bounded-degree (c = k - 1), universal edges in fresh colors. Contains no
/// rainbow copy of the forest.
pub fn h_construction(
    forest: &StarForest,
    n: u32,
    c: u32,
) -> Result<ColoredGraph, ConstructionError> {
    let k = forest.k();
    if c >= k {
        return Err(ConstructionError::ComponentOutOfRange { index: c, k });
    }
    let mut items: Vec<((Vertex, Vertex), Color)> = Vec::new();
    let mut used: Vec<BTreeSet<Color>> = vec![BTreeSet::new(); n as usize];
    let inner_palette = if c + 1 < k {
        let f = f_value(forest, c)?;
        let needed = c as u64 + f + 1;
        if (n as u64) < needed {
            return Err(ConstructionError::OrderTooSmall { n, needed });
        }
        let inner = edge_maximal_colorable(n - c, f as u32)?;
        for (e, col) in inner.edge_colors() {
            items.push(((e.u() + c, e.v() + c), col));
        }
        f as u32
    } else {
        let d = forest.sizes()[0] - 1;
        let needed = c as u64 + d as u64 + 1;
        if (n as u64) < needed {
            return Err(ConstructionError::OrderTooSmall { n, needed });
        }
        let inner = edge_maximal_bounded_degree(n - c, d)?;
        let shifted = inner.edges().iter().map(|e| (e.u() + c, e.v() + c));
        greedy_color_into(&mut items, &mut used, shifted, 0);
        items.iter().map(|&(_, col)| col + 1).max().unwrap_or(0)
    };
    let universal = (0..c).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    greedy_color_into(&mut items, &mut used, universal, inner_palette);
    let cg = ColoredGraph::from_pairs(n, &items)
        .expect("disjoint palettes keep the coloring proper");
    debug_assert_eq!(
        cg.graph().edge_count(),
        h_edge_count(forest, n, c).expect("feasible parameters"),
    );
    Ok(cg)
}

/// The uncolored lower-bound construction: i universal vertices over a
/// bounded-degree inner graph. Contains no copy of the forest at all.
pub fn h_prime_construction(
    forest: &StarForest,
    n: u32,
    i: u32,
) -> Result<Graph, ConstructionError> {
    let k = forest.k();
    if i >= k {
        return Err(ConstructionError::ComponentOutOfRange { index: i, k });
    }
    let d = forest.size(k - i) - 1;
    let needed = i as u64 + d as u64 + 1;
    if (n as u64) < needed {
        return Err(ConstructionError::OrderTooSmall { n, needed });
    }
    let inner = edge_maximal_bounded_degree(n - i, d)?;
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    for a in 0..i {
        for b in a + 1..n {
            pairs.push((a, b));
        }
    }
    pairs.extend(inner.edges().iter().map(|e| (e.u() + i, e.v() + i)));
    let g = Graph::new(n, &pairs).expect("universal join stays simple");
    debug_assert_eq!(
        g.edge_count(),
        h_prime_edge_count(forest, n, i).expect("feasible parameters"),
    );
    Ok(g)
}

// ---------------------------------------------------------------------------
// path-family constructions
// ---------------------------------------------------------------------------

/// Disjoint properly-3-colored K4 blocks, each with its own palette: minimum
/// degree 3, yet no rainbow path of length 3 (the two halves of any 3-edge
/// path inside a block repeat a color class).
pub fn k4_union(n: u32) -> Result<ColoredGraph, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::OrderTooSmall { n, needed: 4 });
    }
    if !n.is_multiple_of(4) {
        return Err(ConstructionError::NotDivisible { n, modulus: 4 });
    }
    let mut items = Vec::with_capacity(6 * (n as usize / 4));
    for b in 0..n / 4 {
        let v = 4 * b;
        let c = 3 * b;
        items.push(((v, v + 1), c));
        items.push(((v + 2, v + 3), c));
        items.push(((v, v + 2), c + 1));
        items.push(((v + 1, v + 3), c + 1));
        items.push(((v, v + 3), c + 2));
        items.push(((v + 1, v + 2), c + 2));
    }
    Ok(ColoredGraph::from_pairs(n, &items).expect("one-factorized blocks are proper"))
}

/// Disjoint K4,4 blocks colored by the XOR table: edge (u_i, v_j) gets color
/// i XOR j, the same four colors in every block. 2n edges with no rainbow
/// path of length 4.
pub fn k44_union(n: u32) -> Result<ColoredGraph, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::OrderTooSmall { n, needed: 8 });
    }
    if !n.is_multiple_of(8) {
        return Err(ConstructionError::NotDivisible { n, modulus: 8 });
    }
    let mut items = Vec::with_capacity(16 * (n as usize / 8));
    for b in 0..n / 8 {
        let base = 8 * b;
        for i in 0..4 {
            for j in 0..4 {
                items.push(((base + i, base + 4 + j), i ^ j));
            }
        }
    }
    Ok(ColoredGraph::from_pairs(n, &items).expect("XOR rows and columns are permutations"))
}

const MAX_CUBE_DIM: u32 = 10;

/// Complete graph on the k-dimensional Boolean cube, edge {u, v} colored
/// u XOR v. Every color class is a perfect matching, and the XOR telescope
/// along any Hamilton path kills one color, so no rainbow path uses all
/// 2^k - 1 colors.
pub fn boolean_cube_clique(k: u32) -> Result<ColoredGraph, ConstructionError> {
    if k == 0 || k > MAX_CUBE_DIM {
        return Err(ConstructionError::CubeOutOfRange { k, max: MAX_CUBE_DIM });
    }
    let n = 1u32 << k;
    let mut items = Vec::with_capacity((n as usize * (n as usize - 1)) / 2);
    for u in 0..n {
        for v in u + 1..n {
            items.push(((u, v), u ^ v));
        }
    }
    Ok(ColoredGraph::from_pairs(n, &items).expect("XOR translations are matchings"))
}

/// Exhaustive search for a proper coloring of the complete graph on c
/// vertices with no rainbow path of length l. `Ok(None)` is a proof that
/// none exists; resource exhaustion is an error, never a verdict.
pub fn rainbow_free_clique_search(
    c: u32,
    l: u32,
    budget: Option<u64>,
) -> Result<Option<ColoredGraph>, ConstructionError> {
    assert!(c >= 2, "cliques below two vertices have no colorings to search");
    assert!(l >= 1, "path length must be at least 1");
    Ok(oracle::exists_rainbow_free_coloring(
        &Graph::complete(c),
        &Pattern::Path(l),
        budget,
    )?)
}

// ---------------------------------------------------------------------------
// catalog dispatch
// ---------------------------------------------------------------------------

/// Identifier of a generator together with its parameters, for the CLI and
/// for table generation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConstructionId {
    SplitGraph { n: u32, k: u32 },
    HStarForest { forest: StarForest, n: u32, c: u32 },
    HPrime { forest: StarForest, n: u32, i: u32 },
    K4Union { n: u32 },
    K44Union { n: u32 },
    BooleanCubeClique { k: u32 },
    RainbowFreeClique { c: u32, l: u32 },
}

/// What a generator produced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConstructionOutput {
    Plain(Graph),
    Colored(ColoredGraph),
}

impl ConstructionOutput {
    pub fn graph(&self) -> &Graph {
        match self {
            ConstructionOutput::Plain(g) => g,
            ConstructionOutput::Colored(cg) => cg.graph(),
        }
    }

    pub fn colored(&self) -> Option<&ColoredGraph> {
        match self {
            ConstructionOutput::Plain(_) => None,
            ConstructionOutput::Colored(cg) => Some(cg),
        }
    }
}

impl ConstructionId {
    /// Stable kebab-case generator name.
    pub fn name(&self) -> &'static str {
        match self {
            ConstructionId::SplitGraph { .. } => "split-graph",
            ConstructionId::HStarForest { .. } => "h-star-forest",
            ConstructionId::HPrime { .. } => "h-prime",
            ConstructionId::K4Union { .. } => "k4-union",
            ConstructionId::K44Union { .. } => "k44-union",
            ConstructionId::BooleanCubeClique { .. } => "boolean-cube-clique",
            ConstructionId::RainbowFreeClique { .. } => "rainbow-free-clique",
        }
    }

    /// Closed-form edge count, when the parameters admit one. For the clique
    /// search this is the clique's edge count: any coloring found colors all
    /// of it.
    pub fn predicted_edge_count(&self) -> Option<u64> {
        match self {
            ConstructionId::SplitGraph { n, k } if k <= n => {
                Some(choose2(*k as u64) + *k as u64 * (*n as u64 - *k as u64))
            }
            ConstructionId::SplitGraph { .. } => None,
            ConstructionId::HStarForest { forest, n, c } => h_edge_count(forest, *n, *c).ok(),
            ConstructionId::HPrime { forest, n, i } => h_prime_edge_count(forest, *n, *i).ok(),
            ConstructionId::K4Union { n } if *n > 0 && n % 4 == 0 => Some(3 * *n as u64 / 2),
            ConstructionId::K4Union { .. } => None,
            ConstructionId::K44Union { n } if *n > 0 && n % 8 == 0 => Some(2 * *n as u64),
            ConstructionId::K44Union { .. } => None,
            ConstructionId::BooleanCubeClique { k } if *k >= 1 && *k <= MAX_CUBE_DIM => {
                Some(choose2(1u64 << k))
            }
            ConstructionId::BooleanCubeClique { .. } => None,
            ConstructionId::RainbowFreeClique { c, .. } => Some(choose2(*c as u64)),
        }
    }

    /// Runs the generator. `Ok(None)` only for a clique search that proved
    /// nonexistence; `budget` applies only to that search.
    pub fn build(
        &self,
        budget: Option<u64>,
    ) -> Result<Option<ConstructionOutput>, ConstructionError> {
        use ConstructionOutput::{Colored, Plain};
        match self {
            ConstructionId::SplitGraph { n, k } => split_graph(*n, *k).map(|g| Some(Plain(g))),
            ConstructionId::HStarForest { forest, n, c } => {
                h_construction(forest, *n, *c).map(|cg| Some(Colored(cg)))
            }
            ConstructionId::HPrime { forest, n, i } => {
                h_prime_construction(forest, *n, *i).map(|g| Some(Plain(g)))
            }
            ConstructionId::K4Union { n } => k4_union(*n).map(|cg| Some(Colored(cg))),
            ConstructionId::K44Union { n } => k44_union(*n).map(|cg| Some(Colored(cg))),
            ConstructionId::BooleanCubeClique { k } => {
                boolean_cube_clique(*k).map(|cg| Some(Colored(cg)))
            }
            ConstructionId::RainbowFreeClique { c, l } => {
                Ok(rainbow_free_clique_search(*c, *l, budget)?.map(Colored))
            }
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionId::SplitGraph { n, k } => write!(f, "split-graph(n={n}, k={k})"),
            ConstructionId::HStarForest { forest, n, c } => {
                let pat = Pattern::Stars(forest.clone());
                write!(f, "h-star-forest(F={pat}, n={n}, c={c})")
            }
            ConstructionId::HPrime { forest, n, i } => {
                let pat = Pattern::Stars(forest.clone());
                write!(f, "h-prime(F={pat}, n={n}, i={i})")
            }
            ConstructionId::K4Union { n } => write!(f, "k4-union(n={n})"),
            ConstructionId::K44Union { n } => write!(f, "k44-union(n={n})"),
            ConstructionId::BooleanCubeClique { k } => write!(f, "boolean-cube-clique(k={k})"),
            ConstructionId::RainbowFreeClique { c, l } => {
                write!(f, "rainbow-free-clique(c={c}, l={l})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search;

    fn forest(sizes: &[u32]) -> StarForest {
        StarForest::new(sizes.to_vec()).unwrap()
    }

    // ---- f and the edge-count formulas ----

    #[test]
    fn f_value_examples() {
        assert_eq!(f_value(&forest(&[1, 1]), 1).unwrap(), 0);
        let f222 = forest(&[2, 2, 2]);
        assert_eq!(f_value(&f222, 0).unwrap(), 5);
        assert_eq!(f_value(&f222, 1).unwrap(), 3);
        assert_eq!(f_value(&f222, 2).unwrap(), 1);

        let big = forest(&[5, 4, 4, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1]);
        assert_eq!(big.edge_count(), 34);
        assert_eq!(f_value(&big, 0).unwrap(), 33);

        assert_eq!(
            f_value(&f222, 3),
            Err(ConstructionError::ComponentOutOfRange { index: 3, k: 3 })
        );
    }

    #[test]
    fn h_edge_count_examples() {
        assert_eq!(h_edge_count(&forest(&[1, 1]), 10, 1).unwrap(), 9);
        assert_eq!(h_edge_count(&forest(&[2, 2]), 10, 0).unwrap(), 15);
        assert_eq!(h_edge_count(&forest(&[2, 2]), 10, 1).unwrap(), 13);
        // Product-then-floor in the c = k - 1 case: both factors odd.
        assert_eq!(h_edge_count(&forest(&[4, 4]), 8, 1).unwrap(), 7 + 10);
    }

    #[test]
    fn h_prime_edge_count_examples() {
        assert_eq!(h_prime_edge_count(&forest(&[1, 1]), 10, 1).unwrap(), 9);
        assert_eq!(h_prime_edge_count(&forest(&[2, 2]), 10, 0).unwrap(), 5);
        assert_eq!(h_prime_edge_count(&forest(&[3]), 9, 0).unwrap(), 9);
    }

    #[test]
    fn llp_bound_examples() {
        assert_eq!(llp_bound(&forest(&[1, 1]), 6).unwrap(), 5);
        assert_eq!(llp_bound(&forest(&[2]), 6).unwrap(), 3);
        assert_eq!(llp_bound(&forest(&[2, 2]), 10).unwrap(), 13);
        // Small-n slack: the formula gives 2 at n = 3 although the triangle
        // (3 edges, no two disjoint) beats it; callers compare against the
        // oracle separately.
        assert_eq!(llp_bound(&forest(&[1, 1]), 3).unwrap(), 2);
        assert_eq!(
            llp_bound(&forest(&[1, 1]), 1),
            Err(ConstructionError::OrderTooSmall { n: 1, needed: 2 })
        );
    }

    #[test]
    fn eg_bound_examples() {
        assert_eq!(eg_matching_bound(4, 2), 3);
        assert_eq!(eg_matching_bound(6, 2), 5);
        // The clique term wins at small n.
        assert_eq!(eg_matching_bound(3, 2), 3);
        assert_eq!(eg_matching_bound(100, 1), 0);
    }

    #[test]
    fn best_c_examples() {
        assert_eq!(best_c(&forest(&[1, 1, 1]), 100).unwrap(), 2);
        assert_eq!(best_c(&forest(&[2, 2]), 100).unwrap(), 0);
        assert_eq!(best_c(&forest(&[3, 3]), 100).unwrap(), 0);
    }

    #[test]
    fn best_c_breaks_ties_downward() {
        // At n = 2 both columns of the two-edge matching give one edge.
        let f = forest(&[1, 1]);
        assert_eq!(h_edge_count(&f, 2, 0).unwrap(), h_edge_count(&f, 2, 1).unwrap());
        assert_eq!(best_c(&f, 2).unwrap(), 0);
    }

    #[test]
    fn best_c_agrees_with_direct_argmax() {
        for sizes in [
            &[1, 1][..],
            &[1, 1, 1, 1],
            &[2, 2],
            &[3, 3, 3],
            &[1, 2, 3],
            &[2, 3],
        ] {
            let f = forest(sizes);
            let direct = (0..f.k())
                .map(|c| (c, h_edge_count(&f, 50, c).unwrap()))
                .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
                .unwrap()
                .0;
            assert_eq!(best_c(&f, 50).unwrap(), direct, "{sizes:?}");
        }
    }

    // ---- building blocks ----

    #[test]
    fn split_graph_shapes() {
        let star = split_graph(5, 1).unwrap();
        assert_eq!(star.edge_count(), 4);
        assert_eq!(star.degree(0), 4);

        let k4 = split_graph(4, 4).unwrap();
        assert_eq!(k4.edge_count(), 6);

        let g = split_graph(6, 3).unwrap();
        assert_eq!(g.edge_count(), 3 + 9);
        for a in 3..6 {
            for b in a + 1..6 {
                assert!(!g.has_edge(a, b), "independent part has edge {a}-{b}");
            }
        }

        assert_eq!(split_graph(6, 0).unwrap().edge_count(), 0);
        assert_eq!(
            split_graph(3, 4),
            Err(ConstructionError::CliqueTooLarge { k: 4, n: 3 })
        );
    }

    #[test]
    fn colorable_examples() {
        let k4 = edge_maximal_colorable(4, 3).unwrap();
        assert_eq!(k4.graph().edge_count(), 6);
        assert_eq!(k4.distinct_color_count(), 3);

        assert_eq!(edge_maximal_colorable(5, 2).unwrap().graph().edge_count(), 4);

        let pm = edge_maximal_colorable(6, 1).unwrap();
        assert_eq!(pm.graph().edge_count(), 3);
        assert!(pm.graph().degrees().iter().all(|&d| d == 1));

        assert_eq!(
            edge_maximal_colorable(4, 4),
            Err(ConstructionError::PaletteTooLarge { f: 4, m: 4 })
        );
        assert_eq!(
            edge_maximal_colorable(0, 0),
            Err(ConstructionError::OrderTooSmall { n: 0, needed: 1 })
        );
    }

    #[test]
    fn colorable_classes_are_maximum_matchings() {
        for m in 1..=12u32 {
            for f in 0..m {
                let cg = edge_maximal_colorable(m, f).unwrap();
                assert!(cg.is_proper());
                assert_eq!(cg.graph().edge_count(), f as u64 * (m as u64 / 2));
                for color in 0..f {
                    let size = cg.colors().iter().filter(|&&c| c == color).count();
                    assert_eq!(size as u64, m as u64 / 2, "m={m} f={f} color={color}");
                }
            }
        }
    }

    #[test]
    fn bounded_degree_examples() {
        let cycle = edge_maximal_bounded_degree(6, 2).unwrap();
        assert_eq!(cycle.edge_count(), 6);
        assert!(cycle.degrees().iter().all(|&d| d == 2));

        let g = edge_maximal_bounded_degree(5, 3).unwrap();
        assert_eq!(g.edge_count(), 7);
        let mut ds = g.degrees();
        ds.sort_unstable();
        assert_eq!(ds, vec![2, 3, 3, 3, 3]);

        assert_eq!(edge_maximal_bounded_degree(4, 0).unwrap().edge_count(), 0);
        assert_eq!(
            edge_maximal_bounded_degree(4, 4),
            Err(ConstructionError::DegreeTooLarge { d: 4, m: 4 })
        );
    }

    #[test]
    fn bounded_degree_sequence_is_exact() {
        for m in 1..=14u32 {
            for d in 0..m {
                let g = edge_maximal_bounded_degree(m, d).unwrap();
                assert_eq!(g.edge_count(), m as u64 * d as u64 / 2, "m={m} d={d}");
                let mut ds = g.degrees();
                ds.sort_unstable();
                if (m * d) % 2 == 0 {
                    assert!(ds.iter().all(|&x| x == d), "m={m} d={d} {ds:?}");
                } else {
                    assert_eq!(ds[0], d - 1, "m={m} d={d}");
                    assert!(ds[1..].iter().all(|&x| x == d), "m={m} d={d} {ds:?}");
                }
            }
        }
    }

    // ---- the H constructions ----

    #[test]
    fn h_construction_star_case() {
        let cg = h_construction(&forest(&[1, 1]), 10, 1).unwrap();
        assert_eq!(cg.graph().edge_count(), 9);
        assert_eq!(cg.graph().degree(0), 9);
        assert!(search::find_rainbow_star_forest(&cg, &forest(&[1, 1])).is_none());
    }

    #[test]
    fn h_construction_colored_case() {
        let cg = h_construction(&forest(&[2, 2]), 10, 0).unwrap();
        assert_eq!(cg.graph().edge_count(), 15);
        assert_eq!(cg.distinct_color_count(), 3);
        assert!(search::find_rainbow_star_forest(&cg, &forest(&[2, 2])).is_none());
    }

    #[test]
    fn h_construction_bounded_case() {
        let cg = h_construction(&forest(&[2, 2]), 10, 1).unwrap();
        assert_eq!(cg.graph().edge_count(), 13);
        assert!(cg.is_proper());
        assert!(search::find_rainbow_star_forest(&cg, &forest(&[2, 2])).is_none());
    }

    #[test]
    fn h_construction_counts_match_formula() {
        for sizes in [&[1, 1][..], &[2, 2], &[1, 2, 3], &[2, 2, 2], &[3, 3]] {
            let f = forest(sizes);
            for n in [12u32, 15, 20] {
                for c in 0..f.k() {
                    let cg = h_construction(&f, n, c).unwrap();
                    assert!(cg.is_proper());
                    assert_eq!(
                        cg.graph().edge_count(),
                        h_edge_count(&f, n, c).unwrap(),
                        "F={sizes:?} n={n} c={c}"
                    );
                }
            }
        }
    }

    #[test]
    fn h_construction_infeasible() {
        assert_eq!(
            h_construction(&forest(&[2, 2]), 3, 0),
            Err(ConstructionError::OrderTooSmall { n: 3, needed: 4 })
        );
    }

    #[test]
    fn h_prime_shapes() {
        let star = h_prime_construction(&forest(&[1, 1]), 10, 1).unwrap();
        assert_eq!(star.edge_count(), 9);
        assert_eq!(star.degree(0), 9);

        let m = h_prime_construction(&forest(&[2, 2]), 10, 0).unwrap();
        assert_eq!(m.edge_count(), 5);
        assert!(m.degrees().iter().all(|&d| d <= 1));

        let cyc = h_prime_construction(&forest(&[3]), 9, 0).unwrap();
        assert_eq!(cyc.edge_count(), 9);
        assert!(cyc.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn h_prime_is_forest_free() {
        let mut nodes = 0;
        for sizes in [&[1, 1][..], &[2, 2], &[1, 2]] {
            let f = forest(sizes);
            for i in 0..f.k() {
                let g = h_prime_construction(&f, 12, i).unwrap();
                assert!(
                    !crate::oracle::contains_pattern(&g, &Pattern::Stars(f.clone()), &mut nodes),
                    "F={sizes:?} i={i}"
                );
            }
        }
    }

    // ---- path-family constructions ----

    #[test]
    fn k4_union_blocks() {
        let one = k4_union(4).unwrap();
        assert_eq!(one.graph().edge_count(), 6);
        assert_eq!(one.distinct_color_count(), 3);
        assert_eq!(one.graph().min_degree(), Some(3));
        let (len, _) = search::longest_rainbow_path(&one).unwrap();
        assert_eq!(len, 2);

        let two = k4_union(8).unwrap();
        assert_eq!(two.graph().edge_count(), 12);
        // Fresh palette per block.
        assert_eq!(two.distinct_color_count(), 6);
        assert_eq!(two.graph().min_degree(), Some(3));

        assert_eq!(
            k4_union(6),
            Err(ConstructionError::NotDivisible { n: 6, modulus: 4 })
        );
        assert_eq!(
            k4_union(0),
            Err(ConstructionError::OrderTooSmall { n: 0, needed: 4 })
        );
    }

    #[test]
    fn k44_union_blocks() {
        let one = k44_union(8).unwrap();
        assert_eq!(one.graph().edge_count(), 16);
        assert_eq!(one.distinct_color_count(), 4);
        assert!(one.graph().degrees().iter().all(|&d| d == 4));
        assert!(search::find_rainbow_path(&one, 4).is_none());
        let (len, _) = search::longest_rainbow_path(&one).unwrap();
        assert_eq!(len, 3);

        // Shared palette across blocks.
        let two = k44_union(16).unwrap();
        assert_eq!(two.graph().edge_count(), 32);
        assert_eq!(two.distinct_color_count(), 4);

        assert_eq!(
            k44_union(4),
            Err(ConstructionError::NotDivisible { n: 4, modulus: 8 })
        );
    }

    #[test]
    fn k44_four_cycles_use_two_or_four_colors() {
        let cg = k44_union(8).unwrap();
        // Four-cycles of K4,4: u_i, v_j, u_k, v_l with i < k, j < l.
        for i in 0..4u32 {
            for k in i + 1..4 {
                for j in 0..4u32 {
                    for l in j + 1..4 {
                        let mut cols = vec![
                            cg.color_of(crate::graph::Edge::new(i, 4 + j)),
                            cg.color_of(crate::graph::Edge::new(k, 4 + j)),
                            cg.color_of(crate::graph::Edge::new(k, 4 + l)),
                            cg.color_of(crate::graph::Edge::new(i, 4 + l)),
                        ];
                        cols.sort_unstable();
                        cols.dedup();
                        assert!(
                            cols.len() == 2 || cols.len() == 4,
                            "cycle ({i},{j},{k},{l}) uses {} colors",
                            cols.len()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cube_clique_structure() {
        let k1 = boolean_cube_clique(1).unwrap();
        assert_eq!(k1.graph().edge_count(), 1);

        let k2 = boolean_cube_clique(2).unwrap();
        assert_eq!(k2.graph().edge_count(), 6);
        assert_eq!(k2.distinct_color_count(), 3);

        let k3 = boolean_cube_clique(3).unwrap();
        assert_eq!(k3.graph().edge_count(), 28);
        assert_eq!(k3.distinct_color_count(), 7);
        // Each class is a perfect matching of the 8 vertices.
        for color in 1..8u32 {
            let class: Vec<_> = k3
                .edge_colors()
                .filter(|&(_, c)| c == color)
                .map(|(e, _)| e)
                .collect();
            assert_eq!(class.len(), 4);
            let mut covered: Vec<Vertex> = class.iter().flat_map(|e| [e.u(), e.v()]).collect();
            covered.sort_unstable();
            covered.dedup();
            assert_eq!(covered.len(), 8);
        }

        assert_eq!(
            boolean_cube_clique(0),
            Err(ConstructionError::CubeOutOfRange { k: 0, max: MAX_CUBE_DIM })
        );
        assert_eq!(
            boolean_cube_clique(11),
            Err(ConstructionError::CubeOutOfRange { k: 11, max: MAX_CUBE_DIM })
        );
    }

    // ---- clique search ----

    #[test]
    fn clique_search_small_cases() {
        let k4p3 = rainbow_free_clique_search(4, 3, None).unwrap().unwrap();
        assert!(k4p3.is_proper());
        assert_eq!(k4p3.graph().edge_count(), 6);
        assert!(search::find_rainbow_path(&k4p3, 3).is_none());

        // No 4-edge path fits in K4 at all.
        assert!(rainbow_free_clique_search(4, 4, None).unwrap().is_some());

        // Every edge is a rainbow 1-edge path.
        assert!(rainbow_free_clique_search(2, 1, None).unwrap().is_none());
    }

    #[test]
    fn clique_search_budget_is_an_error() {
        let got = rainbow_free_clique_search(5, 4, Some(10));
        assert_eq!(
            got,
            Err(ConstructionError::Oracle(OracleError::BudgetExceeded {
                spent: 11
            }))
        );
    }

    // ---- dispatch ----

    #[test]
    fn id_names_and_display() {
        let id = ConstructionId::HStarForest {
            forest: forest(&[1, 1]),
            n: 10,
            c: 1,
        };
        assert_eq!(id.name(), "h-star-forest");
        assert_eq!(alloc::format!("{id}"), "h-star-forest(F=M2, n=10, c=1)");
        assert_eq!(
            alloc::format!("{}", ConstructionId::SplitGraph { n: 5, k: 1 }),
            "split-graph(n=5, k=1)"
        );
    }

    #[test]
    fn predictions_match_builds() {
        let ids = [
            ConstructionId::SplitGraph { n: 9, k: 3 },
            ConstructionId::HStarForest {
                forest: forest(&[2, 2]),
                n: 10,
                c: 1,
            },
            ConstructionId::HPrime {
                forest: forest(&[2, 2]),
                n: 10,
                i: 0,
            },
            ConstructionId::K4Union { n: 8 },
            ConstructionId::K44Union { n: 8 },
            ConstructionId::BooleanCubeClique { k: 3 },
            ConstructionId::RainbowFreeClique { c: 4, l: 3 },
        ];
        for id in &ids {
            let out = id.build(None).unwrap().expect("all these succeed");
            assert_eq!(
                out.graph().edge_count(),
                id.predicted_edge_count().unwrap(),
                "{id}"
            );
        }
        assert_eq!(
            ConstructionId::K4Union { n: 6 }.predicted_edge_count(),
            None
        );
    }

    #[test]
    fn build_surfaces_errors_and_misses() {
        let bad = ConstructionId::K44Union { n: 12 };
        assert!(bad.build(None).is_err());

        let miss = ConstructionId::RainbowFreeClique { c: 2, l: 1 };
        assert_eq!(miss.build(None).unwrap(), None);
    }
}
