//! Deterministic graph families and seeded random graphs.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::threshold::CreationStep;

fn require(ok: bool, message: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(message()))
    }
}

/// `K_{1,n-1}` with center 0.
pub fn star(n: usize) -> Result<Graph> {
    require(n >= 1, || "star needs n >= 1".into())?;
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

/// `P_n` on `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, || "path needs n >= 1".into())?;
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, || "cycle needs n >= 3".into())?;
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, || "complete graph needs n >= 1".into())?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    require(a + b >= 1, || "complete bipartite graph needs a + b >= 1".into())?;
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn edgeless(n: usize) -> Graph {
    Graph::empty(n)
}

/// Triangle `{0, 1, 2}` with the pendant vertex 3 attached to 0.
pub fn paw() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).expect("static edge list")
}

/// `g1 + g2`, with the vertices of `g2` shifted by `|V(g1)|`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let offset = g1.vertex_count();
    Graph::from_edges(
        offset + g2.vertex_count(),
        g1.edges().chain(g2.edges().map(|(u, v)| (u + offset, v + offset))),
    )
    .expect("union of valid graphs")
}

/// Decodes a Prüfer sequence of length `n - 2` into a labeled tree on `n` vertices.
pub fn tree_from_prufer(sequence: &[usize]) -> Result<Graph> {
    let n = sequence.len() + 2;
    if let Some(&bad) = sequence.iter().find(|&&x| x >= n) {
        return Err(Error::InvalidParameter(format!(
            "Prüfer entry {bad} out of range for n = {n}"
        )));
    }
    let mut degree = vec![1usize; n];
    for &x in sequence {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in sequence {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, edges)
}

/// Builds a threshold graph: vertex `i` is added at step `i`, either isolated
/// or adjacent to every earlier vertex. The first step's tag is irrelevant.
pub fn threshold_from_sequence(steps: &[CreationStep]) -> Result<Graph> {
    require(!steps.is_empty(), || "creation sequence must be nonempty".into())?;
    let edges = steps
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &step)| step == CreationStep::Universal)
        .flat_map(|(v, _)| (0..v).map(move |u| (u, v)));
    Graph::from_edges(steps.len(), edges)
}

/// Erdős–Rényi `G(n, p)`: each pair `u < v`, visited in lexicographic order,
/// becomes an edge with probability `p`. Reproducible from `seed`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    require((0.0..=1.0).contains(&p), || format!("edge probability {p} outside [0, 1]"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Uniform random labeled tree on `n >= 1` vertices, via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    require(n >= 1, || "tree needs n >= 1".into())?;
    if n == 1 {
        return Ok(Graph::empty(1));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sequence: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_prufer(&sequence)
}
