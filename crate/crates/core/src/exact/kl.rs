//! Counting on graphs whose vertices split into independent parts and
//! cliques. Each clique meets a convex set in nothing, one vertex or all of
//! it; the largest independent part is left to the auxiliary graph.

use serde::{Deserialize, Serialize};

use super::engine::{sum_over_patterns, LocalFactor};
use super::generic::DEFAULT_ENUMERATION_CAP;
use super::structured::block_factor;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Count;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KLPartition {
    pub independent_parts: Vec<Vec<usize>>,
    pub clique_parts: Vec<Vec<usize>>,
}

impl KLPartition {
    /// Checks that the parts partition `V(g)` into independent sets and cliques.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut owner = vec![false; g.vertex_count()];
        for part in self.independent_parts.iter().chain(&self.clique_parts) {
            for &v in part {
                g.check_vertex(v)?;
                if std::mem::replace(&mut owner[v], true) {
                    return Err(Error::Precondition(format!("vertex {v} is in two parts")));
                }
            }
        }
        if let Some(v) = owner.iter().position(|&o| !o) {
            return Err(Error::Precondition(format!("vertex {v} is in no part")));
        }
        if let Some(part) = self.independent_parts.iter().find(|p| !g.is_independent(p)) {
            return Err(Error::Precondition(format!("part {part:?} is not independent")));
        }
        if let Some(part) = self.clique_parts.iter().find(|p| !g.is_clique(p)) {
            return Err(Error::Precondition(format!("part {part:?} is not a clique")));
        }
        Ok(())
    }

    /// A `(1, 1)` partition if `g` is split.
    pub fn split(g: &Graph) -> Option<Self> {
        let (clique, independent) = g.split_partition()?;
        Some(Self {
            independent_parts: vec![independent],
            clique_parts: vec![clique],
        })
    }

    /// A `(2, 0)` partition if `g` is bipartite.
    pub fn bipartite(g: &Graph) -> Option<Self> {
        let sides = g.bipartition()?;
        let (a, b): (Vec<usize>, Vec<usize>) = g.vertices().partition(|&v| !sides[v]);
        Some(Self {
            independent_parts: vec![a, b],
            clique_parts: Vec::new(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlCount {
    pub noc: Count,
    pub colorings_enumerated: u64,
}

pub fn noc_kl(g: &Graph, part: &KLPartition) -> Result<KlCount> {
    noc_kl_with_cap(g, part, DEFAULT_ENUMERATION_CAP)
}

/// `cap` bounds the vertices of the non-largest independent parts, which are
/// enumerated freely.
pub fn noc_kl_with_cap(g: &Graph, part: &KLPartition, cap: usize) -> Result<KlCount> {
    part.validate(g)?;
    // largest part, lowest position on ties
    let largest = (0..part.independent_parts.len()).max_by_key(|&i| (part.independent_parts[i].len(), std::cmp::Reverse(i)));
    let free: Vec<usize> = part
        .independent_parts
        .iter()
        .enumerate()
        .filter(|&(i, _)| Some(i) != largest)
        .flat_map(|(_, p)| p.iter().copied())
        .collect();
    if free.len() > cap.min(63) {
        return Err(Error::CapExceeded {
            what: "enumerated vertices",
            size: free.len(),
            cap: cap.min(63),
        });
    }
    let mut factors: Vec<LocalFactor> = part
        .clique_parts
        .iter()
        .filter(|c| !c.is_empty())
        .map(|c| block_factor(c.clone()))
        .collect();
    factors.extend(free.into_iter().map(LocalFactor::free));
    let independent = largest.map(|i| part.independent_parts[i].clone()).unwrap_or_default();
    let outcome = sum_over_patterns(g, &factors, &independent);
    Ok(KlCount {
        noc: outcome.noc,
        colorings_enumerated: outcome.colorings_enumerated,
    })
}
