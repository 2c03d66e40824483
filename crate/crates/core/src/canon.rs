//! Canonical keys for graphs and colored graphs.
//!
//! Two graphs get equal keys exactly when they are isomorphic; two colored
//! graphs get equal keys exactly when some vertex relabeling plus color
//! renaming maps one onto the other. The key is the lexicographically least
//! upper-triangle adjacency string (plus, for colored graphs, the first-use
//! normalized color word) over all vertex relabelings compatible with an
//! iterated degree refinement. Restricting to refinement-compatible
//! relabelings skips permutations that provably cannot attain the minimum
//! within their cells' ordering, so the result equals full enumeration while
//! staying fast on irregular graphs; highly symmetric graphs fall back to the
//! full factorial of each cell, guarded by an explicit budget.
//!
//! Intended for small orders (the exact oracle's range). Hard limits: at most
//! [`MAX_CANON_N`] vertices and [`PERM_BUDGET`] candidate relabelings.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Color, ColoredGraph, Graph, Vertex};

/// Largest vertex count accepted.
pub const MAX_CANON_N: u32 = 16;

/// Largest number of candidate relabelings explored.
pub const PERM_BUDGET: u64 = 10_000_000;

/// Errors from canonicalization.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CanonError {
    /// More vertices than [`MAX_CANON_N`].
    TooLarge { n: u32, max: u32 },
    /// The refinement left symmetry classes whose permutation count exceeds
    /// [`PERM_BUDGET`].
    TooExpensive { permutations: u64, budget: u64 },
}

impl fmt::Display for CanonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonError::TooLarge { n, max } => {
                write!(f, "canonical form limited to {max} vertices, got {n}")
            }
            CanonError::TooExpensive {
                permutations,
                budget,
            } => write!(
                f,
                "canonical form would explore {permutations} relabelings (budget {budget})"
            ),
        }
    }
}

impl core::error::Error for CanonError {}

/// Canonical key of an uncolored graph.
pub fn canonical_key(g: &Graph) -> Result<Vec<u8>, CanonError> {
    canonical(g, None)
}

/// Canonical key of a colored graph, invariant under vertex relabeling and
/// color renaming. The coloring need not be proper.
pub fn canonical_key_colored(cg: &ColoredGraph) -> Result<Vec<u8>, CanonError> {
    canonical(cg.graph(), Some(cg.colors()))
}

fn canonical(g: &Graph, colors: Option<&[Color]>) -> Result<Vec<u8>, CanonError> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(CanonError::TooLarge { n, max: MAX_CANON_N });
    }

    // Color-class sizes are invariant under color renaming, so they may seed
    // the refinement; color identities themselves may not.
    let edge_tags: Vec<u64> = match colors {
        Some(cs) => {
            let mut class_size: BTreeMap<Color, u64> = BTreeMap::new();
            for &c in cs {
                *class_size.entry(c).or_insert(0) += 1;
            }
            cs.iter().map(|c| class_size[c]).collect()
        }
        None => vec![0; g.edge_count() as usize],
    };

    let cells = refine(g, colors, &edge_tags);

    let mut permutations: u64 = 1;
    for cell in &cells {
        for k in 1..=cell.len() as u64 {
            permutations = permutations.saturating_mul(k);
        }
        if permutations > PERM_BUDGET {
            return Err(CanonError::TooExpensive {
                permutations,
                budget: PERM_BUDGET,
            });
        }
    }

    let mut min = Minimizer::new(g, colors, &cells);
    min.run();
    let (best_adj, best_colors) = min.best.expect("at least one relabeling considered");

    let mut key = Vec::with_capacity(1 + 16 + best_colors.len());
    key.push(n as u8);
    key.extend_from_slice(&best_adj.to_be_bytes());
    key.extend_from_slice(&best_colors);
    Ok(key)
}

/// Iterated degree refinement. Returns the vertex classes ordered by their
/// (label-independent) signature rank.
fn refine(g: &Graph, colors: Option<&[Color]>, edge_tags: &[u64]) -> Vec<Vec<Vertex>> {
    let n = g.n() as usize;
    if n == 0 {
        return Vec::new();
    }

    // Incident (neighbor, tag) lists; tags are color-class sizes or zero.
    let mut incident: Vec<Vec<(Vertex, u64)>> = vec![Vec::new(); n];
    for (idx, e) in g.edges().iter().enumerate() {
        incident[e.u() as usize].push((e.v(), edge_tags[idx]));
        incident[e.v() as usize].push((e.u(), edge_tags[idx]));
    }

    // Base signature: degree, plus color-name-free coloring data when present.
    let mut sigs: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let mut sig = vec![g.degree(v as Vertex) as u64];
            if let Some(cs) = colors {
                let mut incident_colors: Vec<Color> = g
                    .edges()
                    .iter()
                    .zip(cs)
                    .filter(|(e, _)| e.touches(v as Vertex))
                    .map(|(_, &c)| c)
                    .collect();
                incident_colors.sort_unstable();
                incident_colors.dedup();
                sig.push(incident_colors.len() as u64);
                let mut tags: Vec<u64> =
                    incident[v].iter().map(|&(_, t)| t).collect();
                tags.sort_unstable();
                sig.extend(tags);
            }
            sig
        })
        .collect();

    let mut class = assign_ids(&sigs);
    loop {
        let class_count = count_classes(&class);
        if class_count == n {
            break;
        }
        sigs = (0..n)
            .map(|v| {
                let mut sig = vec![class[v] as u64];
                let mut items: Vec<u64> = incident[v]
                    .iter()
                    .map(|&(u, t)| ((class[u as usize] as u64) << 32) | t)
                    .collect();
                items.sort_unstable();
                sig.extend(items);
                sig
            })
            .collect();
        let next = assign_ids(&sigs);
        if count_classes(&next) == class_count {
            break;
        }
        class = next;
    }

    let class_count = count_classes(&class);
    let mut cells: Vec<Vec<Vertex>> = vec![Vec::new(); class_count];
    for v in 0..n {
        cells[class[v] as usize].push(v as Vertex);
    }
    cells
}

/// Dense ids in signature sort order, so ids are label-independent.
fn assign_ids(sigs: &[Vec<u64>]) -> Vec<u32> {
    let mut order: BTreeMap<&Vec<u64>, u32> = BTreeMap::new();
    for sig in sigs {
        order.insert(sig, 0);
    }
    for (next, id) in order.values_mut().enumerate() {
        *id = next as u32;
    }
    sigs.iter().map(|s| order[s]).collect()
}

fn count_classes(class: &[u32]) -> usize {
    class.iter().map(|&c| c as usize).max().map_or(0, |m| m + 1)
}

struct Minimizer<'a> {
    g: &'a Graph,
    colors: Option<&'a [Color]>,
    /// `arrangement[p]` is the old vertex placed at new position `p`.
    arrangement: Vec<Vertex>,
    /// Start position of each cell within `arrangement`.
    offsets: Vec<usize>,
    cell_lens: Vec<usize>,
    bitpos: Vec<u8>,
    best: Option<(u128, Vec<u8>)>,
    scratch: Vec<(u8, u8, Color)>,
}

impl<'a> Minimizer<'a> {
    fn new(g: &'a Graph, colors: Option<&'a [Color]>, cells: &[Vec<Vertex>]) -> Minimizer<'a> {
        let n = g.n() as usize;
        let mut arrangement = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(cells.len());
        let mut cell_lens = Vec::with_capacity(cells.len());
        for cell in cells {
            offsets.push(arrangement.len());
            cell_lens.push(cell.len());
            arrangement.extend_from_slice(cell);
        }
        let mut bitpos = vec![0u8; n * n];
        let mut pos = 0u8;
        for i in 0..n {
            for j in (i + 1)..n {
                bitpos[i * n + j] = pos;
                pos += 1;
            }
        }
        Minimizer {
            g,
            colors,
            arrangement,
            offsets,
            cell_lens,
            bitpos,
            best: None,
            scratch: Vec::with_capacity(g.edge_count() as usize),
        }
    }

    fn run(&mut self) {
        self.rec(0, 0);
    }

    fn rec(&mut self, cell: usize, pos: usize) {
        if cell == self.offsets.len() {
            self.consider();
            return;
        }
        let len = self.cell_lens[cell];
        if pos == len {
            self.rec(cell + 1, 0);
            return;
        }
        let start = self.offsets[cell];
        for i in pos..len {
            self.arrangement.swap(start + pos, start + i);
            self.rec(cell, pos + 1);
            self.arrangement.swap(start + pos, start + i);
        }
    }

    fn consider(&mut self) {
        let n = self.g.n() as usize;
        let mut q = [0u32; MAX_CANON_N as usize];
        for (p, &old) in self.arrangement.iter().enumerate() {
            q[old as usize] = p as u32;
        }
        let mut adj: u128 = 0;
        for e in self.g.edges() {
            let a = q[e.u() as usize];
            let b = q[e.v() as usize];
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            adj |= 1u128 << self.bitpos[(i as usize) * n + (j as usize)];
        }
        if let Some((best_adj, _)) = &self.best {
            if adj > *best_adj {
                return;
            }
            if adj == *best_adj && self.colors.is_none() {
                return;
            }
        }
        let color_word = match self.colors {
            None => Vec::new(),
            Some(cs) => {
                self.scratch.clear();
                for (idx, e) in self.g.edges().iter().enumerate() {
                    let a = q[e.u() as usize];
                    let b = q[e.v() as usize];
                    let (i, j) = if a < b { (a, b) } else { (b, a) };
                    self.scratch.push((i as u8, j as u8, cs[idx]));
                }
                self.scratch.sort_unstable();
                // First-use renaming yields the least color word for this
                // relabeling over all color renamings.
                let mut rename: Vec<(Color, u8)> = Vec::new();
                let mut word = Vec::with_capacity(self.scratch.len());
                for &(_, _, c) in self.scratch.iter() {
                    let mapped = match rename.iter().find(|&&(old, _)| old == c) {
                        Some(&(_, new)) => new,
                        None => {
                            let new = rename.len() as u8;
                            rename.push((c, new));
                            new
                        }
                    };
                    word.push(mapped);
                }
                word
            }
        };
        let better = match &self.best {
            None => true,
            Some((best_adj, best_word)) => {
                adj < *best_adj || (adj == *best_adj && color_word < *best_word)
            }
        };
        if better {
            self.best = Some((adj, color_word));
        }
    }
}
