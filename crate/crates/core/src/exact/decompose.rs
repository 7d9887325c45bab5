//! Three-phase vertex decomposition used by the structured counter.
//!
//! Phase 1 repeatedly removes a major block: a vertex together with the
//! largest nontrivial component of its neighborhood. Phase 2 removes stars
//! `K_{1,k}` from the now triangle-free residual while some vertex has degree
//! at least `k`. Phase 3 splits what is left into an independent set and
//! leftover vertices.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::independent::greedy_independent;
use crate::error::Error;
use crate::graph::Graph;

/// Which stars Phase 2 extracts: `K_{1,3}`, `K_{1,4}` or `K_{1,5}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    A,
    B,
    C,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::A, Variant::B, Variant::C];

    /// Number of leaves of the extracted stars.
    pub fn star_leaves(self) -> usize {
        match self {
            Variant::A => 3,
            Variant::B => 4,
            Variant::C => 5,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::A => "A",
            Variant::B => "B",
            Variant::C => "C",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" | "a" => Ok(Variant::A),
            "B" | "b" => Ok(Variant::B),
            "C" | "c" => Ok(Variant::C),
            _ => Err(Error::InvalidParameter(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MajorBlock {
    /// The vertex whose neighborhood component was taken.
    pub apex: usize,
    /// The component, sorted.
    pub component: Vec<usize>,
}

impl MajorBlock {
    pub fn len(&self) -> usize {
        self.component.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Apex first, then the component.
    pub fn vertices(&self) -> Vec<usize> {
        std::iter::once(self.apex).chain(self.component.iter().copied()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Star {
    pub center: usize,
    pub leaves: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionTrace {
    pub variant: Variant,
    pub blocks: Vec<MajorBlock>,
    pub stars: Vec<Star>,
    pub independent: Vec<usize>,
    pub leftover: Vec<usize>,
    /// Vertices in blocks.
    pub p: usize,
    /// Vertices in stars.
    pub q: usize,
    /// Leftover vertices.
    pub t: usize,
    /// Independent-set size.
    pub r: usize,
    /// Whether the residual after Phase 1 had no triangle.
    pub phase1_triangle_free: bool,
    /// Maximum degree of the residual after Phase 2.
    pub phase2_max_degree: usize,
    /// Phase 3 fell back on the greedy rule (residual degree above 2).
    pub phase3_greedy: bool,
}

pub fn decompose(g: &Graph, variant: Variant) -> DecompositionTrace {
    let n = g.vertex_count();
    let mut alive = vec![true; n];

    let mut blocks = Vec::new();
    while let Some(block) = best_major_block(g, &alive) {
        for v in block.vertices() {
            alive[v] = false;
        }
        blocks.push(block);
    }
    let phase1_triangle_free = is_triangle_free(g, &alive);

    let mut stars = Vec::new();
    let k = variant.star_leaves();
    let mut degree: Vec<usize> = (0..n).map(|v| live_degree(g, &alive, v)).collect();
    loop {
        let center = (0..n)
            .filter(|&v| alive[v] && degree[v] >= k)
            .max_by_key(|&v| (degree[v], std::cmp::Reverse(v)));
        let Some(center) = center else { break };
        let leaves: Vec<usize> = g.neighbors(center).iter().copied().filter(|&u| alive[u]).take(k).collect();
        for &v in std::iter::once(&center).chain(&leaves) {
            alive[v] = false;
            for &u in g.neighbors(v) {
                degree[u] = degree[u].saturating_sub(1);
            }
        }
        stars.push(Star { center, leaves });
    }
    let residual: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let phase2_max_degree = residual.iter().map(|&v| live_degree(g, &alive, v)).max().unwrap_or(0);

    let phase3_greedy = phase2_max_degree > 2;
    let independent = if phase3_greedy {
        greedy_independent(g, &residual)
    } else {
        path_cycle_independent(g, &alive)
    };
    let in_i: BTreeSet<usize> = independent.iter().copied().collect();
    let leftover: Vec<usize> = residual.iter().copied().filter(|v| !in_i.contains(v)).collect();

    DecompositionTrace {
        variant,
        p: blocks.iter().map(MajorBlock::len).sum(),
        q: stars.iter().map(|s| 1 + s.leaves.len()).sum(),
        t: leftover.len(),
        r: independent.len(),
        blocks,
        stars,
        independent,
        leftover,
        phase1_triangle_free,
        phase2_max_degree,
        phase3_greedy,
    }
}

fn live_degree(g: &Graph, alive: &[bool], v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&u| alive[u]).count()
}

/// The vertex with the largest nontrivial neighborhood component, lowest
/// index first on ties, with that vertex's lowest-starting largest component.
fn best_major_block(g: &Graph, alive: &[bool]) -> Option<MajorBlock> {
    let mut best: Option<MajorBlock> = None;
    for v in g.vertices().filter(|&v| alive[v]) {
        let nbhd: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| alive[u]).collect();
        if nbhd.len() < 2 || best.as_ref().is_some_and(|b| b.component.len() >= nbhd.len()) {
            continue;
        }
        let (sub, map) = g.induced_subgraph(&nbhd).expect("live vertices are valid");
        for comp in sub.connected_components() {
            if comp.len() < 2 || best.as_ref().is_some_and(|b| b.component.len() >= comp.len()) {
                continue;
            }
            let mut component: Vec<usize> = comp.iter().map(|&i| map[i]).collect();
            component.sort_unstable();
            best = Some(MajorBlock { apex: v, component });
        }
    }
    best
}

fn is_triangle_free(g: &Graph, alive: &[bool]) -> bool {
    g.edges()
        .filter(|&(u, v)| alive[u] && alive[v])
        .all(|(u, v)| !g.neighbors(u).iter().any(|&w| alive[w] && w != v && g.has_edge(v, w)))
}

/// Maximum independent set of a residual whose components are paths and
/// cycles. Paths start at their lower-index end; cycles start at their lowest
/// vertex, head towards its lower neighbor and take every other vertex.
fn path_cycle_independent(g: &Graph, alive: &[bool]) -> Vec<usize> {
    let n = g.vertex_count();
    let nbrs = |v: usize| -> Vec<usize> { g.neighbors(v).iter().copied().filter(|&u| alive[u]).collect() };
    let mut seen = vec![false; n];
    let mut chosen = Vec::new();
    for start in 0..n {
        if !alive[start] || seen[start] {
            continue;
        }
        // find the component, then the start of the walk
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            for u in nbrs(comp[i]) {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        let is_cycle = comp.len() >= 3 && comp.iter().all(|&v| nbrs(v).len() == 2);
        let first = if is_cycle {
            *comp.iter().min().unwrap()
        } else {
            comp.iter().copied().filter(|&v| nbrs(v).len() <= 1).min().unwrap()
        };
        let mut walk = vec![first];
        let mut prev = usize::MAX;
        let mut cur = first;
        loop {
            let next = nbrs(cur).into_iter().filter(|&u| u != prev && u != first).min();
            match next {
                Some(u) if !walk.contains(&u) => {
                    walk.push(u);
                    prev = cur;
                    cur = u;
                }
                _ => break,
            }
        }
        let limit = if is_cycle { walk.len() - 1 } else { walk.len() };
        chosen.extend(walk[..limit].iter().step_by(2).copied());
    }
    chosen.sort_unstable();
    chosen
}
