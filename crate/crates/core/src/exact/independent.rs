//! Counting independent sets by branching, and finding large independent sets.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MASK_CAP};
use crate::Count;

/// Number of independent sets of `g`, the empty set included.
///
/// Factorizes over connected components and branches on a maximum-degree
/// vertex `v` via `noi(G) = noi(G - v) + noi(G - N[v])`. Paths, cycles,
/// cliques and components on at most three vertices are counted directly.
pub fn noi_branching(g: &Graph) -> Count {
    let mut total = BigUint::one();
    for component in g.connected_components() {
        if component.len() == 1 {
            total <<= 1u32;
            continue;
        }
        let (sub, _) = g.induced_subgraph(&component).expect("component vertices are valid");
        total *= match sub.masks() {
            Some(masks) => BigUint::from(count_connected(masks, full_mask(sub.vertex_count()))),
            None => noi_large_connected(&sub),
        };
    }
    total
}

/// Connected graphs above the mask width: branch until components fit.
fn noi_large_connected(g: &Graph) -> Count {
    let pivot = max_degree_vertex(g.vertices(), |v| g.degree(v));
    let mut without_v = VertexSet::new(g.vertex_count());
    without_v.insert(pivot);
    let mut without_closed = without_v.clone();
    for &u in g.neighbors(pivot) {
        without_closed.insert(u);
    }
    let (a, _) = g.delete_vertices(&without_v).expect("valid vertex set");
    let (b, _) = g.delete_vertices(&without_closed).expect("valid vertex set");
    noi_branching(&a) + noi_branching(&b)
}

fn full_mask(n: usize) -> u128 {
    debug_assert!(n <= MASK_CAP);
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

fn max_degree_vertex(vertices: impl Iterator<Item = usize>, degree: impl Fn(usize) -> usize) -> usize {
    // max_by_key keeps the last maximum, so compare on reversed index too
    vertices
        .max_by_key(|&v| (degree(v), std::cmp::Reverse(v)))
        .expect("nonempty vertex set")
}

fn component_of(masks: &[u128], alive: u128, start: usize) -> u128 {
    let mut comp = 1u128 << start;
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= masks[v];
        }
        next &= alive & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

/// Independent sets inside `alive`, which may be disconnected and never holds
/// all 128 vertices of an edgeless graph, so the count fits a `u128`.
fn count(masks: &[u128], alive: u128) -> u128 {
    let mut rest = alive;
    let mut total = 1u128;
    while rest != 0 {
        let comp = component_of(masks, rest, rest.trailing_zeros() as usize);
        rest &= !comp;
        total *= count_connected(masks, comp);
    }
    total
}

fn count_connected(masks: &[u128], comp: u128) -> u128 {
    let k = comp.count_ones() as usize;
    if k <= 3 {
        return bits_of_subsets(masks, comp);
    }
    let degree = |v: usize| (masks[v] & comp).count_ones() as usize;
    let degrees: Vec<usize> = bits(comp).map(degree).collect();
    let max = *degrees.iter().max().unwrap();
    let edges: usize = degrees.iter().sum::<usize>() / 2;
    if max == k - 1 && edges == k * (k - 1) / 2 {
        return k as u128 + 1;
    }
    if max <= 2 {
        return if edges == k { lucas(k) } else { fibonacci(k + 2) };
    }
    let v = max_degree_vertex(bits(comp), degree);
    count(masks, comp & !(1u128 << v)) + count(masks, comp & !(masks[v] | 1u128 << v))
}

fn bits_of_subsets(masks: &[u128], comp: u128) -> u128 {
    let vs: Vec<usize> = bits(comp).collect();
    (0u32..1 << vs.len())
        .filter(|s| {
            let chosen: u128 = vs
                .iter()
                .enumerate()
                .filter(|(i, _)| s >> i & 1 == 1)
                .fold(0, |acc, (_, &v)| acc | 1u128 << v);
            bits(chosen).all(|v| masks[v] & chosen == 0)
        })
        .count() as u128
}

fn fibonacci(k: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}

/// `L_k = F(k-1) + F(k+1)`, the independent-set count of `C_k`.
fn lucas(k: usize) -> u128 {
    fibonacci(k - 1) + fibonacci(k + 1)
}

/// How [`find_independent_set`] picks its set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Repeatedly take a minimum-degree vertex (lowest index on ties) and
    /// delete its closed neighborhood. Size at least `n / (Δ + 1)`.
    Greedy,
    /// The larger color class of a 2-coloring. Size at least `n / 2`.
    Bipartite,
    /// A caller-supplied set, checked for independence.
    Provided(VertexSet),
}

pub fn find_independent_set(g: &Graph, strategy: &Strategy) -> Result<VertexSet> {
    let n = g.vertex_count();
    match strategy {
        Strategy::Greedy => {
            let all: Vec<usize> = g.vertices().collect();
            Ok(VertexSet::from_vertices(n, greedy_independent(g, &all)).expect("vertices in range"))
        }
        Strategy::Bipartite => {
            let sides = g
                .bipartition()
                .ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
            let ones = sides.iter().filter(|&&s| s).count();
            let pick = ones > n - ones;
            Ok(VertexSet::from_vertices(n, (0..n).filter(|&v| sides[v] == pick)).expect("vertices in range"))
        }
        Strategy::Provided(set) => {
            if set.universe() != n {
                return Err(Error::Precondition(format!(
                    "set over {} vertices given for a graph on {n}",
                    set.universe()
                )));
            }
            if !g.is_independent(&set.to_vec()) {
                return Err(Error::Precondition("provided set is not independent".into()));
            }
            Ok(set.clone())
        }
    }
}

/// Greedy minimum-degree independent set within the subgraph induced by `vertices`.
pub(crate) fn greedy_independent(g: &Graph, vertices: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut alive = vec![false; n];
    for &v in vertices {
        alive[v] = true;
    }
    let mut degree = vec![0usize; n];
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); vertices.len().max(1)];
    for &v in vertices {
        degree[v] = g.neighbors(v).iter().filter(|&&u| alive[u]).count();
        buckets[degree[v]].insert(v);
    }
    let mut chosen = Vec::new();
    while let Some(v) = buckets.iter().find_map(|b| b.first().copied()) {
        chosen.push(v);
        let closed: Vec<usize> = std::iter::once(v)
            .chain(g.neighbors(v).iter().copied().filter(|&u| alive[u]))
            .collect();
        for x in closed {
            alive[x] = false;
            buckets[degree[x]].remove(&x);
            for &u in g.neighbors(x) {
                if alive[u] {
                    buckets[degree[u]].remove(&u);
                    degree[u] -= 1;
                    buckets[degree[u]].insert(u);
                }
            }
        }
    }
    chosen.sort_unstable();
    chosen
}
