//! Exhaustive rainbow-subgraph detectors.
//!
//! All searches are complete: `None` means no rainbow copy exists, full stop.
//! Exploration order is fixed (lowest vertex, then lowest color), so returned
//! witnesses are deterministic and usable in regression tests. Every witness
//! re-validates against the host.
//!
//! Star forests are embedded largest component first, trying candidate
//! centers in decreasing-degree order; components of equal size are forced
//! into increasing center order, which removes the factorial of permutations
//! among interchangeable components without losing completeness. Paths are
//! depth-first walks over (endpoint, used vertices, used colors).

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Color, ColoredGraph, Vertex};
use crate::pattern::{Pattern, StarForest};
use crate::witness::{Embedding, StarComponent, Witness};

/// Exploration counters, for reports.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct SearchStats {
    /// Partial embeddings expanded.
    pub nodes: u64,
}

/// Search failures.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchError {
    /// The host has no edges, so path lengths are undefined rather than 0.
    EdgelessHost,
}

impl core::fmt::Display for SearchError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SearchError::EdgelessHost => write!(f, "host graph has no edges"),
        }
    }
}

impl core::error::Error for SearchError {}

/// Neighbor lists annotated with edge colors, sorted by neighbor index.
pub(crate) fn colored_adjacency(cg: &ColoredGraph) -> Vec<Vec<(Vertex, Color)>> {
    let mut adj: Vec<Vec<(Vertex, Color)>> = vec![Vec::new(); cg.graph().n() as usize];
    for (e, c) in cg.edge_colors() {
        adj[e.u() as usize].push((e.v(), c));
        adj[e.v() as usize].push((e.u(), c));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

pub(crate) struct VSet {
    words: Vec<u64>,
}

impl VSet {
    pub(crate) fn new(n: u32) -> VSet {
        VSet {
            words: vec![0; (n as usize).div_ceil(64).max(1)],
        }
    }

    pub(crate) fn test(&self, v: Vertex) -> bool {
        self.words[(v / 64) as usize] & (1 << (v % 64)) != 0
    }

    pub(crate) fn set(&mut self, v: Vertex) {
        self.words[(v / 64) as usize] |= 1 << (v % 64);
    }

    pub(crate) fn clear(&mut self, v: Vertex) {
        self.words[(v / 64) as usize] &= !(1 << (v % 64));
    }
}

// ---------------------------------------------------------------------------
// rainbow paths
// ---------------------------------------------------------------------------

/// Finds a rainbow path with exactly `l` edges, if one exists.
///
/// `l >= 1`. The coloring is usually proper, but completeness does not
/// depend on it.
pub fn find_rainbow_path(cg: &ColoredGraph, l: u32) -> Option<Witness> {
    find_rainbow_path_stats(cg, l, &mut SearchStats::default())
}

/// As [`find_rainbow_path`], recording exploration counters.
pub fn find_rainbow_path_stats(
    cg: &ColoredGraph,
    l: u32,
    stats: &mut SearchStats,
) -> Option<Witness> {
    assert!(l >= 1, "path length must be at least 1");
    let n = cg.graph().n();
    if (l as u64) + 1 > n as u64 || (l as u64) > cg.graph().edge_count() {
        return None;
    }
    let adj = colored_adjacency(cg);
    let mut used_v = VSet::new(n);
    let mut used_c: Vec<Color> = Vec::with_capacity(l as usize);
    let mut path: Vec<Vertex> = Vec::with_capacity(l as usize + 1);
    for s in 0..n {
        path.push(s);
        used_v.set(s);
        if extend_path(&adj, l, &mut path, &mut used_v, &mut used_c, stats) {
            let w = Witness::new(Pattern::Path(l), Embedding::Path(path.clone()));
            debug_assert!(w.validate(cg).is_ok());
            return Some(w);
        }
        used_v.clear(s);
        path.pop();
    }
    None
}

fn extend_path(
    adj: &[Vec<(Vertex, Color)>],
    l: u32,
    path: &mut Vec<Vertex>,
    used_v: &mut VSet,
    used_c: &mut Vec<Color>,
    stats: &mut SearchStats,
) -> bool {
    if path.len() == l as usize + 1 {
        return true;
    }
    let last = *path.last().expect("path is never empty here");
    for &(u, c) in &adj[last as usize] {
        if used_v.test(u) || used_c.contains(&c) {
            continue;
        }
        stats.nodes += 1;
        path.push(u);
        used_v.set(u);
        used_c.push(c);
        if extend_path(adj, l, path, used_v, used_c, stats) {
            return true;
        }
        used_c.pop();
        used_v.clear(u);
        path.pop();
    }
    false
}

/// Threshold query with a node cap: `Some(answer)` when the search finished
/// within `budget` expansions, `None` when the cap hit first. Used where an
/// exhaustive answer is wanted but not at any price.
pub(crate) fn find_rainbow_path_capped(
    cg: &ColoredGraph,
    l: u32,
    budget: u64,
) -> Option<Option<Witness>> {
    assert!(l >= 1, "path length must be at least 1");
    let n = cg.graph().n();
    if (l as u64) + 1 > n as u64 || (l as u64) > cg.graph().edge_count() {
        return Some(None);
    }
    let adj = colored_adjacency(cg);
    let mut used_v = VSet::new(n);
    let mut used_c: Vec<Color> = Vec::with_capacity(l as usize);
    let mut path: Vec<Vertex> = Vec::with_capacity(l as usize + 1);
    let mut remaining = budget;
    for s in 0..n {
        path.push(s);
        used_v.set(s);
        match extend_path_capped(&adj, l, &mut path, &mut used_v, &mut used_c, &mut remaining) {
            Some(true) => {
                let w = Witness::new(Pattern::Path(l), Embedding::Path(path.clone()));
                debug_assert!(w.validate(cg).is_ok());
                return Some(Some(w));
            }
            Some(false) => {}
            None => return None,
        }
        used_v.clear(s);
        path.pop();
    }
    Some(None)
}

/// `Some(true)` found, `Some(false)` subtree exhausted, `None` out of budget.
fn extend_path_capped(
    adj: &[Vec<(Vertex, Color)>],
    l: u32,
    path: &mut Vec<Vertex>,
    used_v: &mut VSet,
    used_c: &mut Vec<Color>,
    remaining: &mut u64,
) -> Option<bool> {
    if path.len() == l as usize + 1 {
        return Some(true);
    }
    let last = *path.last().expect("path is never empty here");
    for &(u, c) in &adj[last as usize] {
        if used_v.test(u) || used_c.contains(&c) {
            continue;
        }
        if *remaining == 0 {
            return None;
        }
        *remaining -= 1;
        path.push(u);
        used_v.set(u);
        used_c.push(c);
        let sub = extend_path_capped(adj, l, path, used_v, used_c, remaining);
        if sub == Some(true) {
            return Some(true);
        }
        used_c.pop();
        used_v.clear(u);
        path.pop();
        sub?;
    }
    Some(false)
}

/// Length of the longest rainbow path together with a witness.
///
/// Requires at least one edge; a single edge is already a rainbow path of
/// length 1, so the result is always at least that.
pub fn longest_rainbow_path(cg: &ColoredGraph) -> Result<(u32, Witness), SearchError> {
    longest_rainbow_path_stats(cg, &mut SearchStats::default())
}

/// As [`longest_rainbow_path`], recording exploration counters.
pub fn longest_rainbow_path_stats(
    cg: &ColoredGraph,
    stats: &mut SearchStats,
) -> Result<(u32, Witness), SearchError> {
    if cg.graph().edge_count() == 0 {
        return Err(SearchError::EdgelessHost);
    }
    let n = cg.graph().n();
    let adj = colored_adjacency(cg);
    let distinct = cg.distinct_color_count();
    let mut used_v = VSet::new(n);
    let mut used_c: Vec<Color> = Vec::new();
    let mut path: Vec<Vertex> = Vec::new();
    let mut best: (u32, Option<Vec<Vertex>>) = (0, None);
    for s in 0..n {
        path.push(s);
        used_v.set(s);
        grow_longest(
            &adj, distinct, &mut path, &mut used_v, &mut used_c, &mut best, stats,
        );
        used_v.clear(s);
        path.pop();
    }
    let (len, vs) = best;
    let vs = vs.expect("a graph with an edge has a rainbow path of length 1");
    let w = Witness::new(Pattern::Path(len), Embedding::Path(vs));
    debug_assert!(w.validate(cg).is_ok());
    Ok((len, w))
}

fn grow_longest(
    adj: &[Vec<(Vertex, Color)>],
    distinct: u32,
    path: &mut Vec<Vertex>,
    used_v: &mut VSet,
    used_c: &mut Vec<Color>,
    best: &mut (u32, Option<Vec<Vertex>>),
    stats: &mut SearchStats,
) {
    let len = (path.len() - 1) as u32;
    if len > best.0 {
        *best = (len, Some(path.clone()));
    }
    // No rainbow path can use more colors than exist.
    if len + (distinct - len) <= best.0 {
        return;
    }
    let last = *path.last().expect("path is never empty here");
    for &(u, c) in &adj[last as usize] {
        if used_v.test(u) || used_c.contains(&c) {
            continue;
        }
        stats.nodes += 1;
        path.push(u);
        used_v.set(u);
        used_c.push(c);
        grow_longest(adj, distinct, path, used_v, used_c, best, stats);
        used_c.pop();
        used_v.clear(u);
        path.pop();
    }
}

// ---------------------------------------------------------------------------
// rainbow star forests
// ---------------------------------------------------------------------------

/// Finds a rainbow copy of the star forest, if one exists.
pub fn find_rainbow_star_forest(cg: &ColoredGraph, forest: &StarForest) -> Option<Witness> {
    find_rainbow_star_forest_stats(cg, forest, &mut SearchStats::default())
}

/// As [`find_rainbow_star_forest`], recording exploration counters.
pub fn find_rainbow_star_forest_stats(
    cg: &ColoredGraph,
    forest: &StarForest,
    stats: &mut SearchStats,
) -> Option<Witness> {
    if forest.vertex_count() > cg.graph().n() as u64
        || forest.edge_count() > cg.graph().edge_count()
    {
        return None;
    }
    let adj = colored_adjacency(cg);
    let mut sizes_desc: Vec<u32> = forest.sizes().to_vec();
    sizes_desc.reverse();

    let n = cg.graph().n();
    let mut center_order: Vec<Vertex> = (0..n).collect();
    center_order.sort_by_key(|&v| (core::cmp::Reverse(adj[v as usize].len()), v));

    let mut st = ForestSearch {
        adj: &adj,
        sizes_desc: &sizes_desc,
        center_order: &center_order,
        used_v: VSet::new(n),
        used_c: Vec::with_capacity(forest.edge_count() as usize),
        comps: Vec::with_capacity(sizes_desc.len()),
        stats,
    };
    if !st.place(0) {
        return None;
    }
    let mut comps = st.comps;
    // Components were embedded largest first; report them in pattern order.
    comps.sort_by_key(|c| (c.leaves.len(), c.center));
    let w = Witness::new(
        Pattern::Stars(forest.clone()),
        Embedding::Stars(comps),
    );
    debug_assert!(w.validate(cg).is_ok());
    Some(w)
}

/// Existence-only forest search over a prebuilt adjacency, for callers that
/// maintain incremental edge sets (the coloring backtracker).
pub(crate) fn forest_exists_on_adj(adj: &[Vec<(Vertex, Color)>], forest: &StarForest) -> bool {
    let mut sizes_desc: Vec<u32> = forest.sizes().to_vec();
    sizes_desc.reverse();
    let mut center_order: Vec<Vertex> = (0..adj.len() as u32).collect();
    center_order.sort_by_key(|&v| (core::cmp::Reverse(adj[v as usize].len()), v));
    let mut stats = SearchStats::default();
    let mut st = ForestSearch {
        adj,
        sizes_desc: &sizes_desc,
        center_order: &center_order,
        used_v: VSet::new(adj.len() as u32),
        used_c: Vec::with_capacity(forest.edge_count() as usize),
        comps: Vec::with_capacity(sizes_desc.len()),
        stats: &mut stats,
    };
    st.place(0)
}

struct ForestSearch<'a, 'b> {
    adj: &'a [Vec<(Vertex, Color)>],
    sizes_desc: &'a [u32],
    center_order: &'a [Vertex],
    used_v: VSet,
    used_c: Vec<Color>,
    comps: Vec<StarComponent>,
    stats: &'b mut SearchStats,
}

impl ForestSearch<'_, '_> {
    fn place(&mut self, comp: usize) -> bool {
        if comp == self.sizes_desc.len() {
            return true;
        }
        let s = self.sizes_desc[comp];
        // Interchangeable equal-size components: force increasing centers.
        let min_center = if comp > 0 && self.sizes_desc[comp - 1] == s {
            Some(self.comps[comp - 1].center)
        } else {
            None
        };
        for &center in self.center_order {
            if (self.adj[center as usize].len() as u32) < s {
                // Orders are degree-descending, so nothing later fits either.
                break;
            }
            if self.used_v.test(center) {
                continue;
            }
            if let Some(mc) = min_center {
                if center <= mc {
                    continue;
                }
            }
            self.stats.nodes += 1;
            self.used_v.set(center);
            self.comps.push(StarComponent {
                center,
                leaves: Vec::with_capacity(s as usize),
            });
            if self.pick_leaves(comp, center, s, 0) {
                return true;
            }
            self.comps.pop();
            self.used_v.clear(center);
        }
        false
    }

    fn pick_leaves(&mut self, comp: usize, center: Vertex, remaining: u32, from: usize) -> bool {
        if remaining == 0 {
            return self.place(comp + 1);
        }
        let s = self.sizes_desc[comp];
        for idx in from..self.adj[center as usize].len() {
            let (u, c) = self.adj[center as usize][idx];
            if self.used_v.test(u) || self.used_c.contains(&c) {
                continue;
            }
            // A single-edge star is the same star from either end; keep the
            // center at the smaller endpoint.
            if s == 1 && u < center {
                continue;
            }
            self.stats.nodes += 1;
            self.used_v.set(u);
            self.used_c.push(c);
            self.comps[comp].leaves.push(u);
            if self.pick_leaves(comp, center, remaining - 1, idx + 1) {
                return true;
            }
            self.comps[comp].leaves.pop();
            self.used_c.pop();
            self.used_v.clear(u);
        }
        false
    }
}

// ---------------------------------------------------------------------------
// greedy extension
// ---------------------------------------------------------------------------

/// Greedily extends a partial star-forest witness, one component per center.
///
/// `partial` must be a valid prefix witness for its (star forest) pattern and
/// `centers` supplies one host vertex per missing component, in pattern
/// order; component `j + i` is centered at `centers[i]`. Each star grabs, one
/// edge at a time, the lowest-indexed incident edge whose endpoint and color
/// are both unused. Returns the extended witness (still a prefix when
/// `centers` does not cover all remaining components), or `None` when the
/// input is invalid or some center cannot complete its star.
pub fn greedy_star_extension(
    cg: &ColoredGraph,
    centers: &[Vertex],
    partial: &Witness,
) -> Option<Witness> {
    let forest = match partial.pattern() {
        Pattern::Stars(f) => f.clone(),
        Pattern::Path(_) => return None,
    };
    let mut comps = match partial.embedding() {
        Embedding::Stars(cs) => cs.clone(),
        Embedding::Path(_) => return None,
    };
    if partial.validate(cg).is_err() {
        return None;
    }
    let j = comps.len();
    if j + centers.len() > forest.k() as usize {
        return None;
    }

    let adj = colored_adjacency(cg);
    let mut used_v = VSet::new(cg.graph().n());
    let mut used_c: Vec<Color> = Vec::new();
    for v in partial.vertices() {
        used_v.set(v);
    }
    for e in partial.edges() {
        used_c.push(cg.color_of(e));
    }

    for (i, &center) in centers.iter().enumerate() {
        if center >= cg.graph().n() || used_v.test(center) {
            return None;
        }
        used_v.set(center);
        let s = forest.sizes()[j + i];
        let mut leaves = Vec::with_capacity(s as usize);
        for _ in 0..s {
            let pick = adj[center as usize]
                .iter()
                .find(|&&(u, c)| !used_v.test(u) && !used_c.contains(&c))
                .copied();
            match pick {
                Some((u, c)) => {
                    used_v.set(u);
                    used_c.push(c);
                    leaves.push(u);
                }
                None => return None,
            }
        }
        comps.push(StarComponent { center, leaves });
    }

    let w = Witness::new(Pattern::Stars(forest), Embedding::Stars(comps));
    debug_assert!(w.validate(cg).is_ok());
    Some(w)
}
