//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! A [`Graph`] keeps sorted adjacency lists and, for graphs with at most
//! [`MASK_CAP`] vertices, a parallel `u128` neighbor-mask per vertex. The mask
//! view is what the subset-enumeration code paths run on.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count for which the bitset view is maintained.
pub const MASK_CAP: usize = 128;

/// A set of vertices of one specific graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self { bits }
    }

    /// Builds a set from explicit members, rejecting indices outside `0..universe`.
    pub fn from_vertices(universe: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = Self::new(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: universe,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Builds a set from the low `universe` bits of `mask`.
    pub fn from_mask(universe: usize, mask: u128) -> Self {
        let mut set = Self::new(universe);
        for v in 0..universe.min(128) {
            if mask >> v & 1 == 1 {
                set.insert(v);
            }
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The set as a bitmask, when the universe fits into 128 bits.
    pub fn as_mask(&self) -> Option<u128> {
        (self.universe() <= 128).then(|| self.iter().fold(0u128, |m, v| m | 1u128 << v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }
}

/// A finite simple undirected graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    masks: Option<Vec<u128>>,
    edge_count: usize,
}

/// JSON shape of a graph: `{"n": int, "edges": [[u, v], ...]}` with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![Vec::new(); n])
    }

    /// Builds a graph from an edge list. Parallel edges collapse; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        vertex_count: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_adjacency(adjacency))
    }

    fn from_adjacency(mut adjacency: Vec<Vec<usize>>) -> Self {
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let masks = (adjacency.len() <= MASK_CAP).then(|| {
            adjacency
                .iter()
                .map(|list| list.iter().fold(0u128, |m, &u| m | 1u128 << u))
                .collect()
        });
        Self {
            adjacency,
            masks,
            edge_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.masks {
            Some(masks) => masks[u] >> v & 1 == 1,
            None => self.adjacency[u].binary_search(&v).is_ok(),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Minimum degree, `None` on the null graph.
    pub fn min_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).min()
    }

    /// Maximum degree, `None` on the null graph.
    pub fn max_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).max()
    }

    /// Neighbor bitmask of `v`; only available when `n <= MASK_CAP`.
    pub fn neighbor_mask(&self, v: usize) -> Option<u128> {
        self.masks.as_ref().map(|masks| masks[v])
    }

    /// All neighbor masks; only available when `n <= MASK_CAP`.
    pub fn masks(&self) -> Option<&[u128]> {
        self.masks.as_deref()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut component = Vec::new();
            while let Some(v) = queue.pop_front() {
                component.push(v);
                for &u in &self.adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// True for graphs with exactly one component. The null graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.connected_components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1 && self.edge_count + 1 == self.vertex_count() && self.is_connected()
    }

    /// A proper 2-coloring (`false`/`true` per vertex), if one exists. Each
    /// component's smallest vertex gets `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                let s = side[v].unwrap();
                for &u in &self.adjacency[v] {
                    match side[u] {
                        None => {
                            side[u] = Some(!s);
                            queue.push_back(u);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// A split partition `(clique, independent)` if the graph is split.
    ///
    /// Uses the degree-sequence test: with degrees sorted non-increasingly and
    /// `m = max{i : d_i >= i - 1}`, the graph is split iff
    /// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`, and then the top `m` vertices
    /// form a clique.
    pub fn split_partition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut order: Vec<usize> = self.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let degrees: Vec<usize> = order.iter().map(|&v| self.degree(v)).collect();
        let m = (1..=degrees.len())
            .filter(|&i| degrees[i - 1] + 1 >= i)
            .max()
            .unwrap_or(0);
        let head: usize = degrees[..m].iter().sum();
        let tail: usize = degrees[m..].iter().sum();
        if head != m * m.saturating_sub(1) + tail {
            return None;
        }
        let mut clique = order[..m].to_vec();
        let mut independent = order[m..].to_vec();
        clique.sort_unstable();
        independent.sort_unstable();
        debug_assert!(self.is_clique(&clique) && self.is_independent(&independent));
        Some((clique, independent))
    }

    pub fn is_split(&self) -> bool {
        self.split_partition().is_some()
    }

    /// `G - uv`; a fresh graph.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut adjacency = self.adjacency.clone();
        adjacency[u].retain(|&x| x != v);
        adjacency[v].retain(|&x| x != u);
        Ok(Self::from_adjacency(adjacency))
    }

    /// `G - S`, relabelled densely; the second component maps new indices to old ones.
    pub fn delete_vertices(&self, removed: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if removed.universe() > self.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "vertex set over {} vertices used with a graph on {}",
                removed.universe(),
                self.vertex_count()
            )));
        }
        let kept: Vec<usize> = self.vertices().filter(|&v| !removed.contains(v)).collect();
        self.induced_subgraph(&kept)
    }

    /// `G[U]`, relabelled in increasing order of the kept vertices; the second
    /// component maps new indices to old ones.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut kept = vertices.to_vec();
        kept.sort_unstable();
        kept.dedup();
        for &v in &kept {
            self.check_vertex(v)?;
        }
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let adjacency = kept
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter(|&&u| index[u] != usize::MAX)
                    .map(|&u| index[u])
                    .collect()
            })
            .collect();
        Ok((Self::from_adjacency(adjacency), kept))
    }

    /// Edge-list text: a header line `n m` followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the edge-list format. Lines starting with `#` and blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, line)| (i + 1, line.trim()))
            .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing \"n m\" header".into(),
        })?;
        let [n, m] = parse_pair(header_line, header)?;

        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, text) = lines.next().ok_or(Error::Parse {
                line: header_line,
                message: format!("header announces {m} edges but fewer lines follow"),
            })?;
            let [u, v] = parse_pair(line, text)?;
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex index out of range for n = {n}"),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line,
                    message: format!("self-loop at vertex {u}"),
                });
            }
            edges.push((u, v));
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                message: format!("unexpected line after the {m} announced edges"),
            });
        }
        Graph::from_edges(n, edges)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.vertex_count(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Graph> {
        Graph::from_edges(json.n, json.edges.iter().map(|&[u, v]| (u, v)))
    }
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, found {:?}", text),
        });
    }
    let mut out = [0usize; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| Error::Parse {
            line,
            message: format!("{field:?} is not a nonnegative integer"),
        })?;
    }
    Ok(out)
}

/// True iff every vertex outside `set` has at most one neighbor inside it.
pub fn is_p3_convex(g: &Graph, set: &VertexSet) -> bool {
    g.vertices().filter(|&v| !set.contains(v)).all(|v| {
        g.neighbors(v).iter().filter(|&&u| set.contains(u)).take(2).count() <= 1
    })
}

/// Mask form of [`is_p3_convex`] for graphs inside the bitset cap.
#[inline]
pub(crate) fn is_p3_convex_mask(masks: &[u128], set: u128) -> bool {
    masks
        .iter()
        .enumerate()
        .all(|(v, &nb)| set >> v & 1 == 1 || {
            let inside = nb & set;
            inside & inside.wrapping_sub(1) == 0
        })
}
