//! Target patterns: star forests and paths.
//!
//! A star forest is a disjoint union of stars, recorded by its component
//! sizes (edge counts) in non-decreasing order. `M<k>`, the matching of size
//! `k`, is the star forest with `k` components of size one. `P<l>` is the
//! path with `l` edges.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors from building or parsing patterns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PatternError {
    /// A star forest needs at least one component.
    NoComponents,
    /// Star sizes must be at least one.
    ZeroSize,
    /// Paths must have at least one edge.
    ZeroLength,
    /// Unrecognized pattern text.
    Syntax { input: String },
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::NoComponents => write!(f, "star forest needs at least one component"),
            PatternError::ZeroSize => write!(f, "star sizes must be at least 1"),
            PatternError::ZeroLength => write!(f, "path length must be at least 1"),
            PatternError::Syntax { input } => write!(
                f,
                "cannot parse pattern {input:?}: expected M<k>, S<a,b,...>, or P<l>"
            ),
        }
    }
}

impl core::error::Error for PatternError {}

/// Disjoint union of stars with sizes sorted non-decreasingly, all >= 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StarForest {
    sizes: Vec<u32>,
}

impl StarForest {
    /// Builds a star forest; sizes may be given in any order.
    pub fn new(sizes: impl Into<Vec<u32>>) -> Result<StarForest, PatternError> {
        let mut sizes = sizes.into();
        if sizes.is_empty() {
            return Err(PatternError::NoComponents);
        }
        if sizes.contains(&0) {
            return Err(PatternError::ZeroSize);
        }
        sizes.sort_unstable();
        Ok(StarForest { sizes })
    }

    /// The matching of size `k`.
    pub fn matching(k: u32) -> Result<StarForest, PatternError> {
        StarForest::new(alloc::vec![1; k as usize])
    }

    /// Component sizes, non-decreasing.
    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    /// Number of components `k`.
    pub fn k(&self) -> u32 {
        self.sizes.len() as u32
    }

    /// Size of the `i`-th smallest component (1-based, so `size(1)` is the
    /// smallest).
    pub fn size(&self, i: u32) -> u32 {
        self.sizes[(i - 1) as usize]
    }

    /// Total number of edges.
    pub fn edge_count(&self) -> u64 {
        self.sizes.iter().map(|&s| s as u64).sum()
    }

    /// Total number of vertices (each star of size `s` has `s + 1`).
    pub fn vertex_count(&self) -> u64 {
        self.edge_count() + self.k() as u64
    }

    /// Count of components of size exactly 1.
    pub fn s(&self) -> u32 {
        self.sizes.iter().filter(|&&x| x == 1).count() as u32
    }

    /// Count of components of size exactly 2.
    pub fn t(&self) -> u32 {
        self.sizes.iter().filter(|&&x| x == 2).count() as u32
    }

    /// Count of components of size at least 3.
    pub fn p(&self) -> u32 {
        self.sizes.iter().filter(|&&x| x >= 3).count() as u32
    }

    /// Whether every component is a single edge.
    pub fn is_matching(&self) -> bool {
        self.sizes.iter().all(|&x| x == 1)
    }
}

impl fmt::Display for StarForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_matching() {
            return write!(f, "M{}", self.k());
        }
        write!(f, "S")?;
        for (i, s) in self.sizes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A search target: either a star forest or a path with `l` edges.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Pattern {
    Stars(StarForest),
    Path(u32),
}

impl Pattern {
    /// Parses `M<k>`, `S<a,b,...>`, or `P<l>`.
    ///
    /// Star sizes may appear in any order; they are stored sorted.
    pub fn parse(input: &str) -> Result<Pattern, PatternError> {
        let text = input.trim();
        let syntax = || PatternError::Syntax {
            input: String::from(input),
        };
        let (head, rest) = text.split_at(text.len().min(1));
        match head {
            "M" => {
                let k: u32 = rest.parse().map_err(|_| syntax())?;
                if k == 0 {
                    return Err(PatternError::NoComponents);
                }
                Ok(Pattern::Stars(StarForest::matching(k)?))
            }
            "S" => {
                if rest.is_empty() {
                    return Err(syntax());
                }
                let mut sizes = Vec::new();
                for part in rest.split(',') {
                    sizes.push(part.trim().parse::<u32>().map_err(|_| syntax())?);
                }
                Ok(Pattern::Stars(StarForest::new(sizes)?))
            }
            "P" => {
                let l: u32 = rest.parse().map_err(|_| syntax())?;
                if l == 0 {
                    return Err(PatternError::ZeroLength);
                }
                Ok(Pattern::Path(l))
            }
            _ => Err(syntax()),
        }
    }

    /// Number of edges of the pattern.
    pub fn edge_count(&self) -> u64 {
        match self {
            Pattern::Stars(fst) => fst.edge_count(),
            Pattern::Path(l) => *l as u64,
        }
    }

    /// Number of vertices of the pattern.
    pub fn vertex_count(&self) -> u64 {
        match self {
            Pattern::Stars(fst) => fst.vertex_count(),
            Pattern::Path(l) => *l as u64 + 1,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Stars(fst) => write!(f, "{fst}"),
            Pattern::Path(l) => write!(f, "P{l}"),
        }
    }
}
