//! Rainbow Turán toolkit: extremal constructions for star forests and paths,
//! exhaustive rainbow-subgraph detectors, exact small-order Turán oracles, and
//! a randomized property harness.
//!
//! A *proper* edge coloring gives incident edges distinct colors. A copy of a
//! pattern inside a colored host is *rainbow* when its edges carry pairwise
//! distinct colors. The quantities of interest are the classical Turán number
//! (maximum edges of an `n`-vertex graph with no copy of `F`) and its rainbow
//! analogue (maximum edges over hosts admitting a proper coloring with no
//! rainbow copy of `F`).
//!
//! The crate is `no_std` + `alloc`: every operation is pure and deterministic,
//! including the seeded harness. File handling, JSON, and the command line
//! front end live in the companion `rtk` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod codec;
pub mod constructions;
pub mod graph;
pub mod harness;
pub mod oracle;
pub mod pattern;
mod rng;
pub mod search;
pub mod witness;

pub use graph::{Color, ColoredGraph, Edge, Graph, Vertex};
pub use pattern::{Pattern, StarForest};
pub use witness::Witness;
