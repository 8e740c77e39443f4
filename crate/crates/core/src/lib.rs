//! Constructive Hamiltonicity for bi-powers of bipartite graphs.
//!
//! The bi-power `G_B^t` of a graph joins two vertices whenever their distance
//! in `G` is odd and at most `t`. For a connected bipartite graph with a
//! perfect matching, `G_B^3` is Hamilton-laceable; this crate builds the
//! corresponding paths and cycles explicitly, checks them with independent
//! verifiers, and extends the construction to locally finite infinite graphs
//! through finite, re-checkable certificates.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, hashing and the
//! command-line front end live in the companion `bipower-cli` crate.

#![no_std]
#![deny(rust_2018_idioms, unused_must_use)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod bipower;
pub mod enumerate;
pub mod gallery;
pub mod graph;
pub mod ham;
pub mod infinite;
pub mod matching;
pub mod verify;

mod dsu;

pub use bipower::{bipower, power};
pub use graph::{Bipartition, Graph, GraphError, ParseError, Side, Vertex};
pub use ham::{HamCycle, HamError, HamPath};
pub use matching::{Matching, MatchingError};
