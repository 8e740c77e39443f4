//! Finite certificates for Hamiltonian circles in bi-powers of locally
//! finite infinite graphs.
//!
//! An infinite graph is given lazily by a neighbor oracle and a perfect
//! matching oracle. Everything checked here is finite: nested truncations,
//! their lifted spanning trees and Hamiltonian cycles, a stabilized diagonal
//! subsequence of those cycles, the cut bounds of the limit graph they span,
//! and separator samples standing in for ends.

mod certificate;
mod faithful;
mod lazy;
mod menger;
mod sequence;
mod tree;

pub use certificate::{
    cut_sizes, cycle_cover_check, end_degree_bound, infinite_certificate, limit_graph, recheck_certificate, Certificate,
    CertificateError, CycleCoverReport, EndDegreeError, LimitReport, Recheck, CUT_BOUND,
};
pub use faithful::{faithfulness_check, FaithfulnessError, FaithfulnessReport, SeparatorReport};
pub use lazy::{
    family, truncate_saturated, DoubleRay, Label, Ladder, LazyGraph, MatchedBinaryTree, OracleError, Truncation,
    FAMILY_NAMES,
};
pub use menger::{disjoint_paths, DisjointPaths, MengerError};
pub use sequence::{
    cycle_sequence, stabilization_check, step_reports, CycleSequence, Host, SequenceError, Stabilization, Stage, Step, StepReport,
    WindowReport,
};
pub use tree::{
    canonical_lift, lift_tree, matched_quotient, normal_spanning_tree, normal_spanning_tree_guided, pair_cut,
    RootedTree, TreeError,
};
