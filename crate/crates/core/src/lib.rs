//! Exhaustive decision and verification of (2,3)-cordial digraphs.
//!
//! A `{0,1}` vertex labeling `f` of a digraph induces the arc labeling
//! `g(u -> v) = f(v) - f(u)` with values in `{-1, 0, 1}`. The labeling is
//! (2,3)-cordial when `f` is friendly (zeros and ones differ in count by at
//! most one) and the three arc-label counts differ pairwise by at most one.
//!
//! - [`digraph`] and [`labeling`]: value types and the induced labeling.
//! - [`search`]: exhaustive search over friendly labelings.
//! - [`constructions`]: explicit labelings for cycles, paths and stars.
//! - [`enumeration`]: orientations, free trees, tournaments.
//! - [`harness`]: verification campaigns, appendix fixtures, DOT export.

pub mod constructions;
pub mod digraph;
pub mod enumeration;
pub mod harness;
pub mod labeling;
pub mod search;

pub use digraph::{Arc, Digraph, DigraphError, ParseError, Vertex};
pub use harness::{CampaignReport, Failure, Workers};
pub use labeling::{
    induce_arc_labels, is_cordial_labeling, lambda, CordialityResult, LambdaTriple, VertexLabeling,
};
pub use search::{
    count_cordial_labelings, find_cordial_labeling, friendly_labelings, is_23_cordial,
    search_stats, SearchStats,
};
