//! Counting P3-convex sets of graphs.
//!
//! A vertex set `S` is P3-convex when every vertex outside `S` has at most one
//! neighbor in `S`. The crate provides a brute-force oracle, polynomial-time
//! counters for trees and threshold graphs, the reduction from counting
//! independent sets, exponential-time exact counters for general graphs and
//! a few exhaustive verifiers for extremal statements.

pub mod auto;
pub mod error;
pub mod exact;
pub mod extremal;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod reduction;
pub mod threshold;
pub mod tree;

/// Arbitrary-precision count.
pub type Count = num_bigint::BigUint;

pub use error::{Error, Result};
pub use graph::{is_p3_convex, Graph, VertexSet};
pub use oracle::{enumerate_convex_sets, noc_bruteforce, noi_bruteforce};
pub use threshold::{noc_threshold, recognize_threshold};
pub use tree::noc_tree;
pub use auto::noc_auto;

/// Serializes a [`Count`] as a decimal string.
pub mod count_serde {
    use super::Count;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(count: &Count, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(count)
    }
}
