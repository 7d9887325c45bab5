//! Exact counting over a three-phase decomposition.
//!
//! A convex set meets a major block in no vertex, one vertex or all of it, so
//! a block of size `|M|` contributes `|M| + 2` local patterns. Stars contribute
//! their full local count and leftover vertices are free.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;

use super::decompose::{decompose, DecompositionTrace, Variant};
use super::engine::{sum_over_patterns, LocalFactor};
use crate::generators::star;
use crate::graph::Graph;
use crate::oracle::enumerate_convex_sets;
use crate::Count;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredCount {
    pub noc: Count,
    pub colorings_enumerated: u64,
    pub trace: DecompositionTrace,
}

pub fn noc_structured(g: &Graph, variant: Variant) -> StructuredCount {
    let trace = decompose(g, variant);
    let mut factors = Vec::new();
    for block in &trace.blocks {
        factors.push(block_factor(block.vertices()));
    }
    for s in &trace.stars {
        factors.push(LocalFactor {
            vertices: std::iter::once(s.center).chain(s.leaves.iter().copied()).collect(),
            patterns: star_patterns(s.leaves.len()).to_vec(),
        });
    }
    factors.extend(trace.leftover.iter().map(|&v| LocalFactor::free(v)));
    let outcome = sum_over_patterns(g, &factors, &trace.independent);
    StructuredCount {
        noc: outcome.noc,
        colorings_enumerated: outcome.colorings_enumerated,
        trace,
    }
}

/// Composite colorings the counter will enumerate for `trace`.
pub fn enumeration_size(trace: &DecompositionTrace) -> Count {
    let blocks: BigUint = trace.blocks.iter().map(|b| BigUint::from(b.len() + 2)).product();
    let stars: BigUint = trace
        .stars
        .iter()
        .map(|s| BigUint::from(star_patterns(s.leaves.len()).len()))
        .product();
    blocks * stars * (BigUint::one() << trace.t)
}

/// All white, each single vertex black, all black.
pub(crate) fn block_factor(vertices: Vec<usize>) -> LocalFactor {
    let k = vertices.len();
    let mut patterns = vec![vec![false; k]];
    patterns.extend((0..k).map(|i| (0..k).map(|j| j == i).collect()));
    if k >= 2 {
        patterns.push(vec![true; k]);
    }
    LocalFactor { vertices, patterns }
}

/// Local convex patterns of `K_{1,leaves}`, center first, from the oracle.
pub(crate) fn star_patterns(leaves: usize) -> &'static [Vec<bool>] {
    static CACHE: OnceLock<Vec<Vec<Vec<bool>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        (0..=5)
            .map(|k| {
                let shape = star(k + 1).expect("star on at least one vertex");
                enumerate_convex_sets(&shape)
                    .expect("tiny star is within the oracle cap")
                    .masks()
                    .map(|s| (0..=k).map(|v| s >> v & 1 == 1).collect())
                    .collect()
            })
            .collect()
    });
    &cache[leaves]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::oracle::noc_bruteforce;

    fn noc(g: &Graph, v: Variant) -> u64 {
        noc_structured(g, v).noc.try_into().unwrap()
    }

    #[test]
    fn star_pattern_counts() {
        assert_eq!(star_patterns(3).len(), 12);
        assert_eq!(star_patterns(4).len(), 21);
        assert_eq!(star_patterns(5).len(), 38);
    }

    #[test]
    fn named_examples() {
        for v in Variant::ALL {
            assert_eq!(noc(&path(6).unwrap(), v), 37);
            assert_eq!(noc(&cycle(5).unwrap(), v), 17);
        }
        let k5 = noc_structured(&complete(5).unwrap(), Variant::A);
        assert_eq!(k5.noc, BigUint::from(7u32));
        assert_eq!(k5.colorings_enumerated, 7);
        assert_eq!(noc(&Graph::empty(0), Variant::A), 1);
    }

    #[test]
    fn instrumentation_matches_prediction() {
        for seed in 0..80u64 {
            let g = random_gnp(7 + seed as usize % 7, [0.1, 0.3, 0.5, 0.8][seed as usize % 4], seed).unwrap();
            for v in Variant::ALL {
                let result = noc_structured(&g, v);
                assert_eq!(BigUint::from(result.colorings_enumerated), enumeration_size(&result.trace));
                assert_eq!(result.noc, noc_bruteforce(&g).unwrap(), "seed {seed} variant {v}");
            }
        }
    }
}
