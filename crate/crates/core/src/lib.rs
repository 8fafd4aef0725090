//! Exact search and verification engine for dominating clique minors.
//!
//! A graph `G` contains a dominating `K_t` minor if there is an ordered
//! sequence of `t` pairwise disjoint non-empty connected branch sets such
//! that every vertex of a later set has a neighbor in each earlier set.
//! The largest such `t` is the dominating Hadwiger number `h_d(G)`.
//!
//! The crate provides:
//! - immutable bitset graphs on at most 64 vertices with graph6 I/O and a
//!   catalog of named graphs ([`graph`], [`catalog`]);
//! - exact invariants: independence, clique and chromatic numbers, general
//!   maximum matching ([`invariants`], [`matching`]);
//! - induced-subgraph containment ([`pattern`]);
//! - the dominating-minor solver, verifier and certificates ([`minor`]);
//! - seagull packing and the four-condition feasibility report ([`seagull`]);
//! - certificate builders that follow constructive proof outlines
//!   ([`construct`]);
//! - a parametric theorem verdict suite ([`theorems`]);
//! - exhaustive enumeration of graphs with independence number at most two
//!   and checkpointed counterexample hunts ([`hunt`]).

pub mod canon;
pub mod catalog;
pub mod construct;
pub mod graph;
pub mod graph6;
pub mod hunt;
pub mod invariants;
pub mod matching;
pub mod minor;
pub mod pattern;
pub mod seagull;
pub mod theorems;

pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use minor::{HdOutcome, MinorCertificate, SearchOutcome};
