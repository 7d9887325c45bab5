//! Exponential-time exact counting for general graphs.
//!
//! Every scheme here colors part of the graph explicitly, propagates the
//! forced colors and counts the completions on an independent set as the
//! independent sets of an auxiliary graph.

pub mod coloring;
pub mod decompose;
mod engine;
pub mod generic;
pub mod independent;
pub mod kl;
pub mod structured;

pub use coloring::{build_aux_graph, propagate, Color, PartialColoring, PropagationResult};
pub use decompose::{decompose, DecompositionTrace, MajorBlock, Star, Variant};
pub use generic::{noc_generic, noc_generic_with_cap, GenericCount, DEFAULT_ENUMERATION_CAP};
pub use independent::{find_independent_set, noi_branching, Strategy};
pub use kl::{noc_kl, noc_kl_with_cap, KLPartition, KlCount};
pub use structured::{enumeration_size, noc_structured, StructuredCount};
