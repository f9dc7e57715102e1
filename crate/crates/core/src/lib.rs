//! Rainbow matchings in general graphs.
//!
//! Given `3n - 2` matchings of size `n` in an arbitrary graph, there is always
//! a matching of size `n` whose edges come from pairwise distinct members of
//! the family. This crate builds that matching constructively, together with
//! the machinery the construction rests on:
//!
//! * [`graph`]: edges, graphs, matchings, alternating paths and rainbow
//!   assignments.
//! * [`matching`]: exact maximum matching (Edmonds' blossom search),
//!   augmenting-path extraction, perfect/near-perfect matchings and
//!   hypomatchability.
//! * [`reach`]: odd/even alternating reachability (`OR`, `ER`, `DR`) from a
//!   source or from all exposed vertices, with a brute-force oracle.
//! * [`gallai_edmonds`]: the canonical Gallai-Edmonds decomposition adapted
//!   to a given maximum matching, and its verifier.
//! * [`enrich`]: enriching edges, by definition and by structure.
//! * [`rainbow`]: multicolored augmenting paths and the rainbow-matching
//!   growth loop, plus an exact backtracking oracle.
//! * [`extremal`]: the tight families showing the bounds cannot be lowered
//!   naively.
//! * [`enumerate`]: graph and matching enumeration for exhaustive checks.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod enrich;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod gallai_edmonds;
pub mod graph;
pub mod matching;
pub mod rainbow;
pub mod reach;

mod blossom;

pub use error::{Error, Result};
pub use graph::{
    validate_alternating_path, validate_matching, verify_rainbow, AlternatingPath, ColoredFamily,
    Edge, Graph, Label, Matching, RainbowMatching, Vertex,
};
