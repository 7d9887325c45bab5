//! The basic scheme: fix an independent set `I`, enumerate all colorings of
//! `G - I`, and count the completions on `I` as independent sets of the
//! auxiliary graph.

use super::engine::{sum_over_patterns, LocalFactor};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Count;

/// Default largest number of enumerated vertices.
pub const DEFAULT_ENUMERATION_CAP: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericCount {
    pub noc: Count,
    pub colorings_enumerated: u64,
}

pub fn noc_generic(g: &Graph, i: &VertexSet) -> Result<GenericCount> {
    noc_generic_with_cap(g, i, DEFAULT_ENUMERATION_CAP)
}

pub fn noc_generic_with_cap(g: &Graph, i: &VertexSet, cap: usize) -> Result<GenericCount> {
    if i.universe() != g.vertex_count() {
        return Err(Error::Precondition(format!(
            "independent set over {} vertices given for a graph on {}",
            i.universe(),
            g.vertex_count()
        )));
    }
    let independent = i.to_vec();
    if !g.is_independent(&independent) {
        return Err(Error::Precondition("I is not independent".into()));
    }
    let enumerated = g.vertex_count() - independent.len();
    if enumerated > cap.min(63) {
        return Err(Error::CapExceeded {
            what: "enumerated vertices",
            size: enumerated,
            cap: cap.min(63),
        });
    }
    let factors: Vec<LocalFactor> = g.vertices().filter(|&v| !i.contains(v)).map(LocalFactor::free).collect();
    let outcome = sum_over_patterns(g, &factors, &independent);
    Ok(GenericCount {
        noc: outcome.noc,
        colorings_enumerated: outcome.colorings_enumerated,
    })
}
