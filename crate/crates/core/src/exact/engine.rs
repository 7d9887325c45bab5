//! The sum shared by every exact scheme: enumerate combinations of local
//! black patterns, reject inconsistent ones, propagate, and count the ways
//! to finish the coloring on the independent set.

use num_bigint::BigUint;

use super::coloring::{build_aux_graph, has_colored_conflict, propagate, Color, PartialColoring};
use super::independent::noi_branching;
use crate::graph::Graph;
use crate::Count;

/// A group of vertices together with the black/white patterns allowed on it.
#[derive(Clone, Debug)]
pub(crate) struct LocalFactor {
    pub vertices: Vec<usize>,
    /// `patterns[k][i]` is true when `vertices[i]` is black in pattern `k`.
    pub patterns: Vec<Vec<bool>>,
}

impl LocalFactor {
    pub fn free(v: usize) -> Self {
        Self {
            vertices: vec![v],
            patterns: vec![vec![false], vec![true]],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct EngineOutcome {
    pub noc: Count,
    pub colorings_enumerated: u64,
}

/// Sums over the Cartesian product of the factors' patterns. Vertices in
/// `independent` start uncolored; factors must cover every other vertex.
pub(crate) fn sum_over_patterns(g: &Graph, factors: &[LocalFactor], independent: &[usize]) -> EngineOutcome {
    let mut noc = BigUint::ZERO;
    let mut enumerated = 0u64;
    if factors.iter().any(|f| f.patterns.is_empty()) {
        return EngineOutcome {
            noc,
            colorings_enumerated: 0,
        };
    }
    let mut pi = PartialColoring::uncolored(g.vertex_count());
    let mut choice = vec![0usize; factors.len()];
    loop {
        for (factor, &k) in factors.iter().zip(&choice) {
            for (&v, &black) in factor.vertices.iter().zip(&factor.patterns[k]) {
                pi.set(v, if black { Color::Black } else { Color::White });
            }
        }
        enumerated += 1;
        if !has_colored_conflict(g, &pi) {
            let pr = propagate(g, &pi);
            if pr.valid {
                let remaining: Vec<usize> = independent
                    .iter()
                    .copied()
                    .filter(|&v| pr.coloring.get(v) == Color::Uncolored)
                    .collect();
                if remaining.is_empty() {
                    noc += 1u32;
                } else {
                    let h = build_aux_graph(g, &pr, &remaining).expect("independent vertices stay uncolored");
                    noc += noi_branching(&h);
                }
            }
        }

        let mut i = 0;
        loop {
            if i == factors.len() {
                return EngineOutcome {
                    noc,
                    colorings_enumerated: enumerated,
                };
            }
            choice[i] += 1;
            if choice[i] < factors[i].patterns.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}
