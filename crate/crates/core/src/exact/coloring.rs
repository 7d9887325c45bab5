//! Partial black/white colorings, forced-color propagation and the auxiliary
//! graph on the still-uncolored independent-set vertices.
//!
//! Black vertices are the members of a convex set. A coloring is consistent
//! when no white vertex sees two black neighbors. Propagation applies two
//! rules to uncolored vertices until nothing changes:
//!
//! * a white vertex with a black neighbor turns its uncolored neighbors white;
//! * an uncolored vertex with two black neighbors turns black.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Color {
    Black,
    White,
    Uncolored,
}

/// One state per vertex of a specific graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialColoring {
    states: Vec<Color>,
}

impl PartialColoring {
    pub fn uncolored(n: usize) -> Self {
        Self {
            states: vec![Color::Uncolored; n],
        }
    }

    pub fn from_states(states: Vec<Color>) -> Self {
        Self { states }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn get(&self, v: usize) -> Color {
        self.states[v]
    }

    pub fn set(&mut self, v: usize, color: Color) {
        self.states[v] = color;
    }

    pub fn states(&self) -> &[Color] {
        &self.states
    }

    pub fn vertices_with(&self, color: Color) -> impl Iterator<Item = usize> + '_ {
        self.states
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == color)
            .map(|(v, _)| v)
    }
}

/// Outcome of [`propagate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropagationResult {
    /// The fixpoint when valid; the unchanged input otherwise.
    pub coloring: PartialColoring,
    /// Vertices uncolored in the input and colored by propagation.
    pub forced: VertexSet,
    pub valid: bool,
}

/// True if some white vertex already has two black neighbors.
pub fn has_colored_conflict(g: &Graph, pi: &PartialColoring) -> bool {
    pi.vertices_with(Color::White).any(|v| {
        g.neighbors(v)
            .iter()
            .filter(|&&u| pi.get(u) == Color::Black)
            .take(2)
            .count()
            >= 2
    })
}

/// Least fixpoint of the two forcing rules starting from `pi`.
///
/// The result does not depend on the order the rules fire in: colors are
/// never revised and both rule conditions only grow as more vertices get
/// colored. A vertex that both rules want to color ends up white with two
/// black neighbors whichever fires first, so invalidity is order-independent
/// too, and an invalid outcome reports the input coloring unchanged.
pub fn propagate(g: &Graph, pi: &PartialColoring) -> PropagationResult {
    let n = g.vertex_count();
    assert_eq!(pi.len(), n, "coloring belongs to a graph on {} vertices", pi.len());
    let invalid = || PropagationResult {
        coloring: pi.clone(),
        forced: VertexSet::new(n),
        valid: false,
    };

    let mut states = pi.states.clone();
    let mut black_count = vec![0usize; n];
    for v in pi.vertices_with(Color::Black) {
        for &u in g.neighbors(v) {
            black_count[u] += 1;
        }
    }
    if (0..n).any(|v| states[v] == Color::White && black_count[v] >= 2) {
        return invalid();
    }

    let mut whitened_around = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).collect();
    while let Some(v) = queue.pop_front() {
        match states[v] {
            Color::White if black_count[v] >= 1 && !whitened_around[v] => {
                whitened_around[v] = true;
                for &u in g.neighbors(v) {
                    if states[u] == Color::Uncolored {
                        states[u] = Color::White;
                        if black_count[u] >= 2 {
                            return invalid();
                        }
                        queue.push_back(u);
                    }
                }
            }
            Color::Uncolored if black_count[v] >= 2 => {
                states[v] = Color::Black;
                for &u in g.neighbors(v) {
                    black_count[u] += 1;
                    if states[u] == Color::White && black_count[u] >= 2 {
                        return invalid();
                    }
                    queue.push_back(u);
                }
            }
            _ => {}
        }
    }

    let mut forced = VertexSet::new(n);
    for (v, &state) in states.iter().enumerate() {
        if pi.get(v) == Color::Uncolored && state != Color::Uncolored {
            forced.insert(v);
        }
    }
    PropagationResult {
        coloring: PartialColoring { states },
        forced,
        valid: true,
    }
}

/// Graph on `remaining` (vertex `i` stands for `remaining[i]`) joining two
/// vertices when they share a white neighbor. Its independent sets are exactly
/// the ways to blacken a subset of `remaining` without breaking convexity.
pub fn build_aux_graph(g: &Graph, pr: &PropagationResult, remaining: &[usize]) -> Result<Graph> {
    if !pr.valid {
        return Err(Error::Precondition("propagation result is invalid".into()));
    }
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in remaining.iter().enumerate() {
        g.check_vertex(v)?;
        if pr.coloring.get(v) != Color::Uncolored {
            return Err(Error::Precondition(format!("vertex {v} is already colored")));
        }
        if index[v] != usize::MAX {
            return Err(Error::Precondition(format!("vertex {v} listed twice")));
        }
        index[v] = i;
    }
    let mut edges = Vec::new();
    for w in pr.coloring.vertices_with(Color::White) {
        let touched: Vec<usize> = g
            .neighbors(w)
            .iter()
            .filter(|&&u| index[u] != usize::MAX)
            .map(|&u| index[u])
            .collect();
        for (a, &x) in touched.iter().enumerate() {
            for &y in &touched[a + 1..] {
                edges.push((x, y));
            }
        }
    }
    for &v in remaining {
        if g.neighbors(v).iter().any(|&u| index[u] != usize::MAX) {
            return Err(Error::Precondition(format!(
                "remaining vertices are not independent (vertex {v})"
            )));
        }
    }
    Graph::from_edges(remaining.len(), edges)
}
