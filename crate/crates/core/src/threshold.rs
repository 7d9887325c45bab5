//! Threshold graphs: recognition by peeling and the closed-form convex-set count.
//!
//! A threshold graph is built from one vertex by repeatedly adding an isolated
//! or a universal vertex. Recognition reverses that: it peels a currently
//! isolated or currently universal vertex until nothing is left, or gets stuck
//! on a residual that contains an induced `P4`, `C4` or `2K2`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::tree::noc_star_closed;
use crate::Count;

/// One step of a creation sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CreationStep {
    Isolated,
    Universal,
}

impl CreationStep {
    pub fn letter(self) -> char {
        match self {
            CreationStep::Isolated => 'I',
            CreationStep::Universal => 'U',
        }
    }
}

/// Parses a string of `I`/`U` letters (case-insensitive).
pub fn parse_creation_sequence(text: &str) -> Result<Vec<CreationStep>> {
    text.chars()
        .map(|c| match c.to_ascii_uppercase() {
            'I' => Ok(CreationStep::Isolated),
            'U' => Ok(CreationStep::Universal),
            other => Err(Error::InvalidParameter(format!(
                "creation step {other:?} is neither I nor U"
            ))),
        })
        .collect()
}

/// Wrapper so a sequence can be written as `IUIU`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CreationSequence(pub Vec<CreationStep>);

impl fmt::Display for CreationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl FromStr for CreationSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_creation_sequence(s).map(CreationSequence)
    }
}

/// Structure of a recognized threshold graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdProfile {
    /// Build order; the first entry is the base vertex and is tagged `Isolated`.
    pub creation_sequence: Vec<CreationStep>,
    /// `order[i]` is the vertex of `g` added at step `i`.
    pub order: Vec<usize>,
    /// Clique side of the canonical split partition. Isolated vertices are
    /// always placed on the independent side, so for edgeless graphs this is empty.
    pub clique_part: VertexSet,
    pub independent_part: VertexSet,
    /// Degree-0 vertices.
    pub s0: VertexSet,
    /// Degree-1 vertices of the independent side.
    pub s1: VertexSet,
    /// Correction term for sets meeting the clique in its unique universal
    /// vertex, computed on the graph with its isolated vertices removed.
    pub n_u: Count,
    pub min_degree: usize,
}

/// Which forbidden induced subgraph a witness spans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ForbiddenShape {
    P4,
    C4,
    TwoK2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThresholdVerdict {
    Threshold(ThresholdProfile),
    NotThreshold {
        /// Four vertices inducing `shape`; searched for when the stuck residual is small.
        witness: Option<([usize; 4], ForbiddenShape)>,
    },
}

impl ThresholdVerdict {
    pub fn profile(&self) -> Option<&ThresholdProfile> {
        match self {
            ThresholdVerdict::Threshold(p) => Some(p),
            ThresholdVerdict::NotThreshold { .. } => None,
        }
    }
}

/// Residuals up to this size are scanned for a forbidden 4-vertex witness.
const WITNESS_SEARCH_LIMIT: usize = 64;

pub fn recognize_threshold(g: &Graph) -> ThresholdVerdict {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n.max(1)];
    for v in g.vertices() {
        buckets[degree[v]].insert(v);
    }
    let mut alive = vec![true; n];
    let mut peeled: Vec<(usize, CreationStep)> = Vec::with_capacity(n);

    for remaining in (1..=n).rev() {
        let isolated = buckets[0].first().copied();
        let universal = buckets[remaining - 1].first().copied();
        let (v, step) = match (isolated, universal) {
            (Some(i), Some(u)) if u < i => (u, CreationStep::Universal),
            (Some(i), _) => (i, CreationStep::Isolated),
            (None, Some(u)) => (u, CreationStep::Universal),
            (None, None) => {
                let residual: Vec<usize> = g.vertices().filter(|&v| alive[v]).collect();
                let witness = (residual.len() <= WITNESS_SEARCH_LIMIT)
                    .then(|| find_forbidden_quadruple(g, &residual))
                    .flatten();
                return ThresholdVerdict::NotThreshold { witness };
            }
        };
        alive[v] = false;
        buckets[degree[v]].remove(&v);
        for &u in g.neighbors(v) {
            if alive[u] {
                buckets[degree[u]].remove(&u);
                degree[u] -= 1;
                buckets[degree[u]].insert(u);
            }
        }
        peeled.push((v, step));
    }

    peeled.reverse();
    let mut creation_sequence: Vec<CreationStep> = peeled.iter().map(|&(_, s)| s).collect();
    if let Some(first) = creation_sequence.first_mut() {
        *first = CreationStep::Isolated;
    }
    let order: Vec<usize> = peeled.iter().map(|&(v, _)| v).collect();
    ThresholdVerdict::Threshold(build_profile(g, creation_sequence, order))
}

fn build_profile(g: &Graph, creation_sequence: Vec<CreationStep>, order: Vec<usize>) -> ThresholdProfile {
    let n = g.vertex_count();
    let mut clique_part = VertexSet::new(n);
    for (i, &v) in order.iter().enumerate() {
        if creation_sequence[i] == CreationStep::Universal {
            clique_part.insert(v);
        }
    }
    // the base vertex joins the clique side once some universal vertex touches it
    if let Some(&base) = order.first() {
        if g.degree(base) > 0 {
            clique_part.insert(base);
        }
    }
    let mut independent_part = VertexSet::new(n);
    let mut s0 = VertexSet::new(n);
    let mut s1 = VertexSet::new(n);
    for v in g.vertices().filter(|&v| !clique_part.contains(v)) {
        independent_part.insert(v);
        match g.degree(v) {
            0 => s0.insert(v),
            1 => s1.insert(v),
            _ => {}
        }
    }
    let core_min_degree = g.vertices().map(|v| g.degree(v)).filter(|&d| d > 0).min();
    let n_u = match core_min_degree {
        Some(1) => (BigUint::one() << s1.len()) - BigUint::one(),
        _ => BigUint::ZERO,
    };
    ThresholdProfile {
        creation_sequence,
        order,
        clique_part,
        independent_part,
        s0,
        s1,
        n_u,
        min_degree: g.min_degree().unwrap_or(0),
    }
}

fn classify_quadruple(g: &Graph, quad: [usize; 4]) -> Option<ForbiddenShape> {
    let mut degrees = [0usize; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(quad[i], quad[j]) {
                degrees[i] += 1;
                degrees[j] += 1;
                edges += 1;
            }
        }
    }
    degrees.sort_unstable();
    match (edges, degrees) {
        (3, [1, 1, 2, 2]) => Some(ForbiddenShape::P4),
        (4, [2, 2, 2, 2]) => Some(ForbiddenShape::C4),
        (2, [1, 1, 1, 1]) => Some(ForbiddenShape::TwoK2),
        _ => None,
    }
}

/// Scans all 4-subsets of `vertices` for an induced `P4`, `C4` or `2K2`.
pub fn find_forbidden_quadruple(g: &Graph, vertices: &[usize]) -> Option<([usize; 4], ForbiddenShape)> {
    let k = vertices.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    let quad = [vertices[a], vertices[b], vertices[c], vertices[d]];
                    if let Some(shape) = classify_quadruple(g, quad) {
                        return Some((quad, shape));
                    }
                }
            }
        }
    }
    None
}

fn is_star(g: &Graph) -> bool {
    let n = g.vertex_count();
    n >= 2
        && g.edge_count() == n - 1
        && g.vertices().any(|v| g.degree(v) == n - 1)
}

/// Exact convex-set count of a threshold graph.
///
/// Isolated vertices each double the count. What remains is empty, a star, or
/// a graph with `δ >= 1` and at least one universal vertex, for which
/// `noc = (|S| + 1) + |K| + N_U + 2^|S1|` on the canonical split partition.
pub fn noc_threshold(g: &Graph) -> Result<Count> {
    let profile = match recognize_threshold(g) {
        ThresholdVerdict::Threshold(p) => p,
        ThresholdVerdict::NotThreshold { .. } => return Err(Error::NotThreshold),
    };
    let doubling = BigUint::one() << profile.s0.len();
    if profile.s0.len() == g.vertex_count() {
        return Ok(doubling);
    }
    let (core, _) = g.delete_vertices(&profile.s0)?;
    if is_star(&core) {
        return Ok(doubling * noc_star_closed(core.vertex_count())?);
    }
    let core_profile = match recognize_threshold(&core) {
        ThresholdVerdict::Threshold(p) => p,
        ThresholdVerdict::NotThreshold { .. } => {
            unreachable!("induced subgraphs of threshold graphs are threshold")
        }
    };
    debug_assert!(core_profile.min_degree >= 1);
    Ok(doubling * formula(&core_profile))
}

fn formula(p: &ThresholdProfile) -> Count {
    let s1_power = BigUint::one() << p.s1.len();
    BigUint::from(p.independent_part.len() + 1)
        + BigUint::from(p.clique_part.len())
        + &p.n_u
        + s1_power
}
