//! Exact Turán-style oracles at small vertex counts.
//!
//! Two quantities are computed by exhaustive search over isomorphism classes:
//!
//! * the classical Turán number — the most edges an n-vertex graph can have
//!   with no copy of the pattern at all, and
//! * the rainbow Turán number — the most edges an n-vertex graph can have
//!   while admitting SOME proper edge coloring with no rainbow copy.
//!
//! Both iterate graph classes in decreasing edge count and stop at the first
//! edge level that admits a witness, so dense answers touch few classes. The
//! coloring side enumerates proper colorings up to color permutation
//! (restricted-growth assignment: each edge's color is at most one past the
//! largest color used before it) and abandons a branch the moment a rainbow
//! copy exists among the already-colored edges, which is irreversible.
//!
//! Everything here is exact; when a node budget runs out the call fails
//! loudly instead of returning a partial answer.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::canonical_key;
use crate::graph::{Color, ColoredGraph, Edge, Graph, Vertex};
use crate::pattern::Pattern;
use crate::search::{self, SearchStats, VSet};

/// Largest n the enumeration-backed oracles accept.
pub const MAX_ORACLE_N: u32 = 8;

/// Oracle failures.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleError {
    /// n outside the supported range `1..=MAX_ORACLE_N`.
    UnsupportedN { n: u32 },
    /// The configured node budget ran out before the search finished.
    BudgetExceeded { spent: u64 },
    /// Path length does not divide the vertex count.
    NotDivisible { n: u64, l: u32 },
}

impl core::fmt::Display for OracleError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            OracleError::UnsupportedN { n } => {
                write!(f, "n = {n} outside supported range 1..={MAX_ORACLE_N}")
            }
            OracleError::BudgetExceeded { spent } => {
                write!(f, "node budget exhausted after {spent} steps")
            }
            OracleError::NotDivisible { n, l } => {
                write!(f, "path bound needs l | n, got n = {n}, l = {l}")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// Which Turán number a report describes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleKind {
    /// No copy of the pattern at all.
    Classical,
    /// No rainbow copy under some proper coloring.
    Rainbow,
}

/// Extremal witness attached to a report.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReportWitness {
    /// Pattern-free graph (classical).
    Plain(Graph),
    /// Properly colored graph with no rainbow pattern (rainbow).
    Colored(ColoredGraph),
}

impl ReportWitness {
    /// Edge count of the witness graph.
    pub fn edge_count(&self) -> u64 {
        match self {
            ReportWitness::Plain(g) => g.edge_count(),
            ReportWitness::Colored(cg) => cg.graph().edge_count(),
        }
    }
}

/// Outcome of an exhaustive Turán computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchReport {
    pub kind: OracleKind,
    pub n: u32,
    pub pattern: Pattern,
    /// The extremal edge count.
    pub value: u64,
    pub witness: ReportWitness,
    /// Isomorphism classes examined before the answer was certain.
    pub graphs_enumerated: u64,
    /// Color assignments tried across all coloring searches (0 for
    /// classical runs, which test containment instead of colorings).
    pub colorings_tested: u64,
    /// Wall-clock milliseconds; this library always reports 0 and leaves
    /// timing to callers that have a clock.
    pub elapsed_ms: u64,
    /// Seed of a randomized pre-pass if one was used (never set here; the
    /// search is fully deterministic).
    pub seed: Option<u64>,
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

/// All graphs on `n` unlabeled vertices, one representative per isomorphism
/// class, in canonical-key order.
///
/// Classes are grown by attaching a new vertex to every representative on
/// one vertex fewer in every possible way and deduplicating canonically;
/// deleting the added vertex shows every class is reached.
pub fn enumerate_graphs(n: u32) -> Result<Vec<Graph>, OracleError> {
    if n == 0 || n > MAX_ORACLE_N {
        return Err(OracleError::UnsupportedN { n });
    }
    let mut reps = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut classes: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for g in &reps {
            let base: Vec<(Vertex, Vertex)> =
                g.edges().iter().map(|e| (e.u(), e.v())).collect();
            for mask in 0u32..(1 << (m - 1)) {
                let mut pairs = base.clone();
                for b in 0..m - 1 {
                    if mask & (1 << b) != 0 {
                        pairs.push((b, m - 1));
                    }
                }
                let candidate =
                    Graph::new(m, &pairs).expect("vertex extension keeps the graph simple");
                let key = canonical_key(&candidate).expect("within canonical-form caps");
                classes.entry(key).or_insert(candidate);
            }
        }
        reps = classes.into_values().collect();
    }
    Ok(reps)
}

// ---------------------------------------------------------------------------
// rainbow-free coloring search
// ---------------------------------------------------------------------------

/// Searches for a proper edge coloring of `g` with no rainbow copy of
/// `pattern`. `None` is a proof that every proper coloring contains one.
///
/// `budget` caps color-assignment steps; exceeding it aborts the whole call
/// (no partial verdicts).
pub fn exists_rainbow_free_coloring(
    g: &Graph,
    pattern: &Pattern,
    budget: Option<u64>,
) -> Result<Option<ColoredGraph>, OracleError> {
    let mut spent = 0;
    rainbow_free_coloring_counted(g, pattern, budget, &mut spent)
}

pub(crate) fn rainbow_free_coloring_counted(
    g: &Graph,
    pattern: &Pattern,
    budget: Option<u64>,
    spent: &mut u64,
) -> Result<Option<ColoredGraph>, OracleError> {
    let order = expansion_order(g);
    let mut bt = Backtracker {
        order: &order,
        adj: vec![Vec::new(); g.n() as usize],
        masks: ColorMasks::new(g.n(), g.edge_count() as usize),
        assigned: Vec::with_capacity(order.len()),
        pattern,
        budget,
        spent,
    };
    if !bt.assign(0)? {
        return Ok(None);
    }
    let items: Vec<((Vertex, Vertex), Color)> = order
        .iter()
        .zip(&bt.assigned)
        .map(|(e, &c)| ((e.u(), e.v()), c))
        .collect();
    let cg = ColoredGraph::from_pairs(g.n(), &items)
        .expect("backtracker colorings are proper by construction");
    Ok(Some(cg))
}

/// Orders edges so each one touches previously ordered edges when possible;
/// rainbow constraints then bind as early as possible.
fn expansion_order(g: &Graph) -> Vec<Edge> {
    let degrees = g.degrees();
    let edges = g.edges();
    let mut seen = vec![false; g.n() as usize];
    let mut used = vec![false; edges.len()];
    let mut out = Vec::with_capacity(edges.len());
    for _ in 0..edges.len() {
        let mut pick = usize::MAX;
        let mut pick_key = (0u32, 0u64);
        for (i, e) in edges.iter().enumerate() {
            if used[i] {
                continue;
            }
            let anchored = seen[e.u() as usize] as u32 + seen[e.v() as usize] as u32;
            let weight = degrees[e.u() as usize] as u64 + degrees[e.v() as usize] as u64;
            if pick == usize::MAX || (anchored, weight) > pick_key {
                pick = i;
                pick_key = (anchored, weight);
            }
        }
        used[pick] = true;
        seen[edges[pick].u() as usize] = true;
        seen[edges[pick].v() as usize] = true;
        out.push(edges[pick]);
    }
    out
}

/// Per-vertex bitmask of colors in use; restricted-growth assignment keeps
/// color ids below the edge count.
struct ColorMasks {
    words: usize,
    bits: Vec<u64>,
}

impl ColorMasks {
    fn new(n: u32, max_colors: usize) -> ColorMasks {
        let words = max_colors.div_ceil(64).max(1);
        ColorMasks {
            words,
            bits: vec![0; words * n as usize],
        }
    }

    fn test(&self, v: Vertex, c: Color) -> bool {
        self.bits[v as usize * self.words + (c / 64) as usize] & (1 << (c % 64)) != 0
    }

    fn set(&mut self, v: Vertex, c: Color) {
        self.bits[v as usize * self.words + (c / 64) as usize] |= 1 << (c % 64);
    }

    fn clear(&mut self, v: Vertex, c: Color) {
        self.bits[v as usize * self.words + (c / 64) as usize] &= !(1 << (c % 64));
    }
}

struct Backtracker<'a> {
    order: &'a [Edge],
    /// Adjacency over the colored prefix, grown and shrunk in lockstep with
    /// assignments.
    adj: Vec<Vec<(Vertex, Color)>>,
    masks: ColorMasks,
    assigned: Vec<Color>,
    pattern: &'a Pattern,
    budget: Option<u64>,
    spent: &'a mut u64,
}

impl Backtracker<'_> {
    fn assign(&mut self, i: usize) -> Result<bool, OracleError> {
        if i == self.order.len() {
            return Ok(true);
        }
        let e = self.order[i];
        let fresh = self.assigned.iter().copied().max().map_or(0, |m| m + 1);
        for c in 0..=fresh {
            if self.masks.test(e.u(), c) || self.masks.test(e.v(), c) {
                continue;
            }
            *self.spent += 1;
            if let Some(b) = self.budget {
                if *self.spent > b {
                    return Err(OracleError::BudgetExceeded { spent: *self.spent });
                }
            }
            self.masks.set(e.u(), c);
            self.masks.set(e.v(), c);
            self.adj[e.u() as usize].push((e.v(), c));
            self.adj[e.v() as usize].push((e.u(), c));
            self.assigned.push(c);
            let doomed = self.forced_rainbow(e, c);
            if !doomed && self.assign(i + 1)? {
                return Ok(true);
            }
            self.assigned.pop();
            self.adj[e.v() as usize].pop();
            self.adj[e.u() as usize].pop();
            self.masks.clear(e.v(), c);
            self.masks.clear(e.u(), c);
        }
        Ok(false)
    }

    /// Does the colored prefix now contain a rainbow copy? For paths only
    /// copies through the new edge need checking; a copy avoiding it would
    /// have fired earlier.
    fn forced_rainbow(&self, e: Edge, c: Color) -> bool {
        match self.pattern {
            Pattern::Path(l) => forced_rainbow_path(&self.adj, e, c, *l),
            Pattern::Stars(f) => search::forest_exists_on_adj(&self.adj, f),
        }
    }
}

/// Rainbow path of exactly `l` edges using edge `e` (already colored `c`),
/// within the given adjacency. Grows the two ends independently: all left
/// extensions happen before any right extension, so each path is visited
/// once.
fn forced_rainbow_path(adj: &[Vec<(Vertex, Color)>], e: Edge, c: Color, l: u32) -> bool {
    if l == 1 {
        return true;
    }
    let mut used_v = VSet::new(adj.len() as u32);
    used_v.set(e.u());
    used_v.set(e.v());
    let mut used_c = vec![c];
    two_sided(adj, e.u(), e.v(), l - 1, true, &mut used_v, &mut used_c)
}

fn two_sided(
    adj: &[Vec<(Vertex, Color)>],
    left: Vertex,
    right: Vertex,
    remaining: u32,
    allow_left: bool,
    used_v: &mut VSet,
    used_c: &mut Vec<Color>,
) -> bool {
    if remaining == 0 {
        return true;
    }
    if allow_left {
        for &(w, cc) in &adj[left as usize] {
            if used_v.test(w) || used_c.contains(&cc) {
                continue;
            }
            used_v.set(w);
            used_c.push(cc);
            if two_sided(adj, w, right, remaining - 1, true, used_v, used_c) {
                return true;
            }
            used_c.pop();
            used_v.clear(w);
        }
    }
    for &(w, cc) in &adj[right as usize] {
        if used_v.test(w) || used_c.contains(&cc) {
            continue;
        }
        used_v.set(w);
        used_c.push(cc);
        if two_sided(adj, left, w, remaining - 1, false, used_v, used_c) {
            return true;
        }
        used_c.pop();
        used_v.clear(w);
    }
    false
}

// ---------------------------------------------------------------------------
// Turán numbers
// ---------------------------------------------------------------------------

/// Exact rainbow Turán number: the most edges an n-vertex graph can have
/// while some proper coloring of it avoids rainbow copies of the pattern.
pub fn ex_rainbow(
    n: u32,
    pattern: &Pattern,
    budget: Option<u64>,
) -> Result<SearchReport, OracleError> {
    let by_count = classes_by_edge_count(n)?;
    let mut graphs_enumerated = 0;
    let mut spent = 0;
    for (m, bucket) in by_count.iter().enumerate().rev() {
        for g in bucket {
            graphs_enumerated += 1;
            if let Some(cg) = rainbow_free_coloring_counted(g, pattern, budget, &mut spent)? {
                return Ok(SearchReport {
                    kind: OracleKind::Rainbow,
                    n,
                    pattern: pattern.clone(),
                    value: m as u64,
                    witness: ReportWitness::Colored(cg),
                    graphs_enumerated,
                    colorings_tested: spent,
                    elapsed_ms: 0,
                    seed: None,
                });
            }
        }
    }
    unreachable!("the empty graph is always rainbow-free");
}

/// Exact classical Turán number: the most edges an n-vertex graph can have
/// with no copy of the pattern, rainbow or otherwise.
pub fn ex_classical(
    n: u32,
    pattern: &Pattern,
    budget: Option<u64>,
) -> Result<SearchReport, OracleError> {
    let by_count = classes_by_edge_count(n)?;
    let mut graphs_enumerated = 0;
    let mut nodes = 0;
    for (m, bucket) in by_count.iter().enumerate().rev() {
        for g in bucket {
            graphs_enumerated += 1;
            let hit = contains_pattern(g, pattern, &mut nodes);
            if let Some(b) = budget {
                if nodes > b {
                    return Err(OracleError::BudgetExceeded { spent: nodes });
                }
            }
            if !hit {
                return Ok(SearchReport {
                    kind: OracleKind::Classical,
                    n,
                    pattern: pattern.clone(),
                    value: m as u64,
                    witness: ReportWitness::Plain(g.clone()),
                    graphs_enumerated,
                    colorings_tested: 0,
                    elapsed_ms: 0,
                    seed: None,
                });
            }
        }
    }
    unreachable!("the empty graph contains no pattern");
}

fn classes_by_edge_count(n: u32) -> Result<Vec<Vec<Graph>>, OracleError> {
    let max_m = (n as usize * (n as usize - 1)) / 2;
    let mut buckets: Vec<Vec<Graph>> = vec![Vec::new(); max_m + 1];
    for g in enumerate_graphs(n)? {
        let m = g.edge_count() as usize;
        buckets[m].push(g);
    }
    Ok(buckets)
}

/// Uncolored containment via the detectors: give every edge its own color,
/// and copies coincide with rainbow copies.
pub(crate) fn contains_pattern(g: &Graph, pattern: &Pattern, nodes: &mut u64) -> bool {
    let colors: Vec<Color> = (0..g.edge_count() as Color).collect();
    let cg = ColoredGraph::with_any_coloring(g.clone(), colors)
        .expect("one color per edge always fits");
    let mut stats = SearchStats::default();
    let hit = match pattern {
        Pattern::Stars(f) => search::find_rainbow_star_forest_stats(&cg, f, &mut stats).is_some(),
        Pattern::Path(l) => search::find_rainbow_path_stats(&cg, *l, &mut stats).is_some(),
    };
    *nodes += stats.nodes;
    hit
}

// ---------------------------------------------------------------------------
// closed-form bounds
// ---------------------------------------------------------------------------

/// Upper bound `ceil((3l - 2) / 2) * n` on the rainbow Turán number of the
/// l-edge path. Well-defined for all l ≥ 1, vacuous at l = 1.
pub fn rainbow_path_upper(n: u64, l: u32) -> u64 {
    assert!(l >= 1, "path length must be at least 1");
    ((3 * l as u64 - 2).div_ceil(2)) * n
}

/// Exact classical Turán number `(l - 1) * n / 2` of the l-edge path when
/// l divides n (disjoint complete graphs on l vertices are extremal).
pub fn classical_path_bound(n: u64, l: u32) -> Result<u64, OracleError> {
    assert!(l >= 1, "path length must be at least 1");
    if !n.is_multiple_of(l as u64) {
        return Err(OracleError::NotDivisible { n, l });
    }
    Ok((l as u64 - 1) * n / 2)
}

/// Upper bound `n(k - 1) + (k - 1)(4k - 3)` on the rainbow Turán number of
/// the k-edge matching; the additive term is the exact constant the linear
/// bound carries.
pub fn rainbow_matching_upper(n: u64, k: u32) -> u64 {
    assert!(k >= 1, "matchings have at least one edge");
    let k = k as u64;
    n * (k - 1) + (k - 1) * (4 * k - 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::StarForest;

    fn pattern(s: &str) -> Pattern {
        Pattern::parse(s).unwrap()
    }

    #[test]
    fn class_counts_match_known_sequence() {
        // Unlabeled simple graphs on 1..=7 vertices.
        let expected = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &want) in expected.iter().enumerate() {
            let n = i as u32 + 1;
            assert_eq!(enumerate_graphs(n).unwrap().len(), want, "n = {n}");
        }
    }

    #[test]
    fn four_vertex_classes_by_edges() {
        let mut hist = [0usize; 7];
        for g in enumerate_graphs(4).unwrap() {
            hist[g.edge_count() as usize] += 1;
        }
        assert_eq!(hist, [1, 1, 2, 3, 2, 1, 1]);
    }

    #[test]
    fn enumeration_rejects_out_of_range() {
        assert_eq!(
            enumerate_graphs(0),
            Err(OracleError::UnsupportedN { n: 0 })
        );
        assert_eq!(
            enumerate_graphs(9),
            Err(OracleError::UnsupportedN { n: 9 })
        );
    }

    #[test]
    fn k4_admits_rainbow_p3_free_coloring() {
        let cg = exists_rainbow_free_coloring(&Graph::complete(4), &pattern("P3"), None)
            .unwrap()
            .expect("the one-factorization works");
        assert!(cg.is_proper());
        assert!(search::find_rainbow_path(&cg, 3).is_none());
    }

    #[test]
    fn k5_forces_a_rainbow_p4() {
        let got = exists_rainbow_free_coloring(&Graph::complete(5), &pattern("P4"), None).unwrap();
        assert!(got.is_none());
    }

    #[test]
    fn pattern_absent_makes_any_coloring_work() {
        // K3 has no two disjoint edges.
        let cg = exists_rainbow_free_coloring(&Graph::complete(3), &pattern("M2"), None)
            .unwrap()
            .expect("no matching of two exists at all");
        assert!(cg.is_proper());
        assert_eq!(cg.graph().edge_count(), 3);
    }

    #[test]
    fn budget_exhaustion_is_loud() {
        let got = exists_rainbow_free_coloring(&Graph::complete(5), &pattern("P4"), Some(10));
        assert_eq!(got, Err(OracleError::BudgetExceeded { spent: 11 }));
    }

    #[test]
    fn star_pattern_backtracking_agrees_with_path_equivalent() {
        // A single star with two edges is the same graph as the 2-edge path.
        for n in 2..=5u32 {
            for g in enumerate_graphs(n).unwrap() {
                let via_star =
                    exists_rainbow_free_coloring(&g, &pattern("S2"), None).unwrap();
                let via_path =
                    exists_rainbow_free_coloring(&g, &pattern("P2"), None).unwrap();
                assert_eq!(via_star.is_some(), via_path.is_some());
            }
        }
    }

    #[test]
    fn rainbow_turan_small_values() {
        let r = ex_rainbow(4, &pattern("P3"), None).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.witness.edge_count(), 6);

        let r = ex_rainbow(3, &pattern("M2"), None).unwrap();
        assert_eq!(r.value, 3);

        let r = ex_rainbow(4, &pattern("M2"), None).unwrap();
        assert_eq!(r.value, 6);

        // Any edge is a rainbow 1-edge path, so only the empty graph avoids
        // them.
        let r = ex_rainbow(3, &pattern("P1"), None).unwrap();
        assert_eq!(r.value, 0);
    }

    #[test]
    fn rainbow_witnesses_revalidate() {
        for (n, pat) in [(4, "P3"), (4, "M2"), (5, "P2"), (4, "S1,2")] {
            let r = ex_rainbow(n, &pattern(pat), None).unwrap();
            let cg = match &r.witness {
                ReportWitness::Colored(cg) => cg,
                ReportWitness::Plain(_) => panic!("rainbow reports carry colorings"),
            };
            assert!(cg.is_proper());
            assert_eq!(cg.graph().n(), n);
            assert_eq!(cg.graph().edge_count(), r.value);
            assert!(r.value <= (n as u64) * (n as u64 - 1) / 2);
            let found = match &r.pattern {
                Pattern::Stars(f) => search::find_rainbow_star_forest(cg, f).is_some(),
                Pattern::Path(l) => search::find_rainbow_path(cg, *l).is_some(),
            };
            assert!(!found, "witness for {pat} contains a rainbow copy");
        }
    }

    #[test]
    fn classical_turan_small_values() {
        let r = ex_classical(4, &pattern("M2"), None).unwrap();
        assert_eq!(r.value, 3);

        let r = ex_classical(6, &pattern("M2"), None).unwrap();
        assert_eq!(r.value, 5);

        let r = ex_classical(4, &pattern("P2"), None).unwrap();
        assert_eq!(r.value, 2);

        let r = ex_classical(3, &pattern("P1"), None).unwrap();
        assert_eq!(r.value, 0);
    }

    #[test]
    fn classical_witnesses_revalidate() {
        for (n, pat) in [(4, "M2"), (6, "M2"), (5, "P3"), (5, "S1,2")] {
            let r = ex_classical(n, &pattern(pat), None).unwrap();
            let g = match &r.witness {
                ReportWitness::Plain(g) => g,
                ReportWitness::Colored(_) => panic!("classical reports carry plain graphs"),
            };
            assert_eq!(g.edge_count(), r.value);
            let mut sink = 0;
            assert!(!contains_pattern(g, &r.pattern, &mut sink));
        }
    }

    #[test]
    fn rainbow_dominates_classical() {
        for (n, pat) in [(4, "M2"), (5, "M2"), (4, "P2"), (5, "P3"), (4, "S1,2")] {
            let rb = ex_rainbow(n, &pattern(pat), None).unwrap().value;
            let cl = ex_classical(n, &pattern(pat), None).unwrap().value;
            assert!(rb >= cl, "({n}, {pat}): {rb} < {cl}");
        }
    }

    #[test]
    fn rainbow_monotone_in_n() {
        let vals: Vec<u64> = (3..=5)
            .map(|n| ex_rainbow(n, &pattern("P3"), None).unwrap().value)
            .collect();
        assert!(vals[0] <= vals[1] && vals[1] <= vals[2], "{vals:?}");
    }

    #[test]
    fn rainbow_monotone_in_forest_growth() {
        // Growing a component can only allow more edges.
        let small = StarForest::new(vec![1, 1]).unwrap();
        let large = StarForest::new(vec![1, 2]).unwrap();
        let vs = ex_rainbow(5, &Pattern::Stars(small), None).unwrap().value;
        let vl = ex_rainbow(5, &Pattern::Stars(large), None).unwrap().value;
        assert!(vs <= vl);
    }

    #[test]
    fn expansion_order_touches_prefix() {
        let g = Graph::new(6, &[(0, 1), (2, 3), (1, 2), (4, 5), (0, 2)]).unwrap();
        let order = expansion_order(&g);
        assert_eq!(order.len(), 5);
        // After the first edge, every edge that CAN touch the prefix does;
        // (4,5) necessarily comes last.
        assert_eq!(order[4], Edge::new(4, 5));
    }

    #[test]
    fn path_bound_formulas() {
        assert_eq!(rainbow_path_upper(10, 4), 50);
        assert_eq!(rainbow_path_upper(10, 1), 10);
        assert_eq!(rainbow_path_upper(8, 3), 32);

        assert_eq!(classical_path_bound(8, 4), Ok(12));
        assert_eq!(classical_path_bound(6, 3), Ok(6));
        assert_eq!(classical_path_bound(4, 2), Ok(2));
        assert_eq!(
            classical_path_bound(7, 3),
            Err(OracleError::NotDivisible { n: 7, l: 3 })
        );
    }

    #[test]
    fn matching_bound_formula() {
        assert_eq!(rainbow_matching_upper(12, 2), 17);
        assert_eq!(rainbow_matching_upper(100, 1), 0);
        assert_eq!(rainbow_matching_upper(10, 3), 2 * 10 + 2 * 9);
    }
}
