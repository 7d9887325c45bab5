//! Exhaustive checks of extremal statements on small labeled graphs and trees.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{path, tree_from_prufer};
use crate::graph::Graph;
use crate::oracle::{noc_bruteforce, DEFAULT_ORACLE_CAP};
use crate::tree::{noc_path_recurrence, noc_star_closed, noc_tree, root_tree, subtree_counts};
use crate::Count;

type EdgeList = Vec<(usize, usize)>;

fn out_of_range(what: &str, n: usize, lo: usize, hi: usize) -> Error {
    Error::InvalidParameter(format!("{what} needs {lo} <= n <= {hi}, got {n}"))
}

/// Every labeled tree on `n` vertices, in Prüfer-code order.
pub fn all_labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(2..=9).contains(&n) {
        return Err(out_of_range("tree enumeration", n, 2, 9));
    }
    let total = n.pow(n as u32 - 2);
    Ok((0..total).map(move |mut code| {
        let sequence: Vec<usize> = (0..n - 2)
            .map(|_| {
                let digit = code % n;
                code /= n;
                digit
            })
            .collect();
        tree_from_prufer(&sequence).expect("digits are below n")
    }))
}

/// Every labeled graph on `n` vertices; bit `i` of the index selects the
/// `i`-th pair in lexicographic order.
pub fn all_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(1..=7).contains(&n) {
        return Err(out_of_range("graph enumeration", n, 1, 7));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok((0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are in range")
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotonicityViolation {
    pub edge: (usize, usize),
    #[serde(with = "crate::count_serde")]
    pub noc_g: Count,
    #[serde(with = "crate::count_serde")]
    pub noc_without_edge: Count,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotonicityReport {
    pub n: usize,
    pub edges_checked: usize,
    pub violations: Vec<MonotonicityViolation>,
    pub holds: bool,
}

/// Deleting any single edge never decreases the count.
pub fn verify_edge_monotonicity(g: &Graph) -> Result<MonotonicityReport> {
    let edges: EdgeList = g.edges().collect();
    verify_edge_monotonicity_on(g, &edges)
}

/// As [`verify_edge_monotonicity`], restricted to the given edges.
pub fn verify_edge_monotonicity_on(g: &Graph, edges: &[(usize, usize)]) -> Result<MonotonicityReport> {
    let noc_g = noc_bruteforce(g)?;
    let mut violations = Vec::new();
    for &(u, v) in edges {
        let noc_without_edge = noc_bruteforce(&g.delete_edge(u, v)?)?;
        if noc_without_edge < noc_g {
            violations.push(MonotonicityViolation {
                edge: (u, v),
                noc_g: noc_g.clone(),
                noc_without_edge,
            });
        }
    }
    Ok(MonotonicityReport {
        n: g.vertex_count(),
        edges_checked: edges.len(),
        holds: violations.is_empty(),
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningTreeViolation {
    pub tree_edges: EdgeList,
    #[serde(with = "crate::count_serde")]
    pub noc_tree: Count,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningTreeReport {
    pub n: usize,
    pub m: usize,
    #[serde(with = "crate::count_serde")]
    pub noc_g: Count,
    pub trees_checked: usize,
    pub violations: Vec<SpanningTreeViolation>,
    pub holds: bool,
}

/// Every spanning tree `T` of a connected graph with a cycle has
/// `noc(T) > noc(G)`. Trees are found among the `(n-1)`-edge subsets.
pub fn verify_spanning_tree_strict(g: &Graph) -> Result<SpanningTreeReport> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n < 3 || m < n || !g.is_connected() {
        return Err(Error::Precondition(format!(
            "need a connected graph with |E| >= |V| >= 3, got n = {n}, m = {m}"
        )));
    }
    if n > DEFAULT_ORACLE_CAP || m > 31 {
        return Err(Error::CapExceeded {
            what: "spanning-tree check",
            size: m,
            cap: 31,
        });
    }
    let noc_g = noc_bruteforce(g)?;
    let edges: EdgeList = g.edges().collect();
    let mut trees_checked = 0;
    let mut violations = Vec::new();
    let mut subset: u32 = (1 << (n - 1)) - 1;
    while subset < 1 << m {
        let chosen: EdgeList = (0..m).filter(|i| subset >> i & 1 == 1).map(|i| edges[i]).collect();
        if is_acyclic(n, &chosen) {
            trees_checked += 1;
            let t = Graph::from_edges(n, chosen.iter().copied())?;
            let noc_t = noc_bruteforce(&t)?;
            if noc_t <= noc_g {
                violations.push(SpanningTreeViolation {
                    tree_edges: chosen,
                    noc_tree: noc_t,
                });
            }
        }
        // next subset of the same size (Gosper's hack)
        let low = subset & subset.wrapping_neg();
        let ripple = subset + low;
        subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
    Ok(SpanningTreeReport {
        n,
        m,
        noc_g,
        trees_checked,
        holds: violations.is_empty(),
        violations,
    })
}

/// `n - 1` edges without a cycle form a spanning tree.
fn is_acyclic(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    edges.iter().all(|&(u, v)| {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
        a != b
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Scope {
    /// All connected labeled graphs.
    Connected,
    /// All labeled trees.
    Trees,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Shape {
    Star,
    Path,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Achiever {
    pub edges: EdgeList,
    /// Sorted in decreasing order.
    pub degree_sequence: Vec<usize>,
    pub shape: Shape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarMaximalityReport {
    pub n: usize,
    pub scope: Scope,
    pub graphs_scanned: usize,
    #[serde(with = "crate::count_serde")]
    pub max_noc: Count,
    #[serde(with = "crate::count_serde")]
    pub bound: Count,
    pub achievers: Vec<Achiever>,
    pub holds: bool,
}

/// Scans all connected graphs (`2 <= n <= 6`, or 7 with `allow_n7`) or all
/// trees (`2 <= n <= 9`) and checks that the maximum count is `2^{n-1} + n`,
/// reached exactly by the stars and, for `n` = 4 and 5, also by the paths.
pub fn verify_star_maximality(n: usize, scope: Scope, allow_n7: bool) -> Result<StarMaximalityReport> {
    let graphs: Box<dyn Iterator<Item = Graph>> = match scope {
        Scope::Connected => {
            let hi = if allow_n7 { 7 } else { 6 };
            if !(2..=hi).contains(&n) {
                return Err(out_of_range("connected-graph scan", n, 2, hi));
            }
            Box::new(all_labeled_graphs(n)?.filter(Graph::is_connected))
        }
        Scope::Trees => Box::new(all_labeled_trees(n)?),
    };
    let bound = noc_star_closed(n)?;
    let mut max_noc = BigUint::ZERO;
    let mut achievers = Vec::new();
    let mut graphs_scanned = 0;
    for g in graphs {
        graphs_scanned += 1;
        let noc = match scope {
            Scope::Trees => noc_tree(&g)?,
            Scope::Connected => noc_bruteforce(&g)?,
        };
        if noc > max_noc {
            max_noc = noc.clone();
            achievers.clear();
        }
        if noc == max_noc {
            let mut degree_sequence: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
            degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
            achievers.push(Achiever {
                edges: g.edges().collect(),
                shape: shape_of(&g, &degree_sequence),
                degree_sequence,
            });
        }
    }
    let stars = achievers.iter().filter(|a| a.shape == Shape::Star).count();
    let paths = achievers.iter().filter(|a| a.shape == Shape::Path).count();
    let labeled_stars = if n == 2 { 1 } else { n };
    let labeled_paths = if n == 4 || n == 5 { (1..=n).product::<usize>() / 2 } else { 0 };
    let holds = max_noc == bound && stars == labeled_stars && paths == labeled_paths && stars + paths == achievers.len();
    Ok(StarMaximalityReport {
        n,
        scope,
        graphs_scanned,
        max_noc,
        bound,
        achievers,
        holds,
    })
}

/// Classifies connected graphs by degree sequence. Paths on up to three
/// vertices are stars.
fn shape_of(g: &Graph, sorted_degrees: &[usize]) -> Shape {
    let n = g.vertex_count();
    if !g.is_tree() {
        return Shape::Other;
    }
    if n <= 2 || (sorted_degrees[0] == n - 1 && sorted_degrees[1..].iter().all(|&d| d == 1)) {
        return Shape::Star;
    }
    if sorted_degrees[0] == 2 {
        return Shape::Path;
    }
    Shape::Other
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapViolation {
    pub tree_edges: EdgeList,
    pub leaf: usize,
    pub gap: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WgGapReport {
    pub n: usize,
    pub trees_checked: usize,
    pub pairs_checked: usize,
    /// Smallest `W - G` seen, if any tree qualified.
    pub min_gap: Option<i64>,
    pub violations: Vec<GapViolation>,
    pub holds: bool,
}

/// For every tree on `n` vertices that is neither a star nor a path and each
/// leaf `r`, the subtree `T - r` rooted at the neighbor of `r` has at least
/// `n - 1` more white-root sets than white-root-under-black sets.
pub fn verify_wg_gap(n: usize) -> Result<WgGapReport> {
    if !(2..=8).contains(&n) {
        return Err(out_of_range("gap check", n, 2, 8));
    }
    let mut report = WgGapReport {
        n,
        trees_checked: 0,
        pairs_checked: 0,
        min_gap: None,
        violations: Vec::new(),
        holds: true,
    };
    for t in all_labeled_trees(n)? {
        let max_degree = t.max_degree().unwrap_or(0);
        if max_degree == n - 1 || max_degree <= 2 {
            continue;
        }
        report.trees_checked += 1;
        for leaf in t.vertices().filter(|&v| t.degree(v) == 1) {
            let rooted = root_tree(&t, leaf)?;
            let neighbor = t.neighbors(leaf)[0];
            let counts = subtree_counts(&rooted).swap_remove(neighbor);
            let gap = counts.white.to_i64().unwrap() - counts.white_under_black.to_i64().unwrap();
            report.pairs_checked += 1;
            report.min_gap = Some(report.min_gap.map_or(gap, |m| m.min(gap)));
            if gap < n as i64 - 1 {
                report.violations.push(GapViolation {
                    tree_edges: t.edges().collect(),
                    leaf,
                    gap,
                });
            }
        }
    }
    report.holds = report.violations.is_empty();
    Ok(report)
}

/// Known path and star counts for `n = 1..=10`.
pub const REFERENCE_PATH_COUNTS: [u32; 10] = [2, 4, 7, 12, 21, 37, 65, 114, 200, 351];
pub const REFERENCE_STAR_COUNTS: [u32; 10] = [2, 4, 7, 12, 21, 38, 71, 136, 265, 522];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub n: usize,
    #[serde(with = "crate::count_serde")]
    pub path: Count,
    #[serde(with = "crate::count_serde")]
    pub star: Count,
}

/// Path and star counts for `1 <= n <= n_max`. The path column comes from the
/// tree DP and is cross-checked against the recurrence.
pub fn table1(n_max: usize) -> Result<Vec<Table1Row>> {
    if n_max < 1 {
        return Err(Error::InvalidParameter("table needs n_max >= 1".into()));
    }
    (1..=n_max)
        .map(|n| {
            let dp = noc_tree(&path(n)?)?;
            let recurrence = noc_path_recurrence(n)?;
            if dp != recurrence {
                return Err(Error::Inconsistent(format!(
                    "path count for n = {n}: DP {dp}, recurrence {recurrence}"
                )));
            }
            Ok(Table1Row {
                n,
                path: dp,
                star: noc_star_closed(n)?,
            })
        })
        .collect()
}

/// Whether the rows agree with the reference values wherever those exist.
pub fn table1_matches_reference(rows: &[Table1Row]) -> bool {
    rows.iter().filter(|r| r.n <= 10).all(|r| {
        r.path == BigUint::from(REFERENCE_PATH_COUNTS[r.n - 1]) && r.star == BigUint::from(REFERENCE_STAR_COUNTS[r.n - 1])
    })
}

/// Right-aligned text table.
pub fn format_table1(rows: &[Table1Row]) -> String {
    let cells: Vec<[String; 3]> = rows
        .iter()
        .map(|r| [r.n.to_string(), r.path.to_string(), r.star.to_string()])
        .collect();
    let header = ["n", "noc(P_n)", "noc(K_1,n-1)"];
    let widths: Vec<usize> = (0..3)
        .map(|c| cells.iter().map(|row| row[c].len()).chain([header[c].len()]).max().unwrap())
        .collect();
    let line = |row: [&str; 3]| {
        format!(
            "{:>w0$}  {:>w1$}  {:>w2$}\n",
            row[0],
            row[1],
            row[2],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2]
        )
    };
    let mut out = line(header);
    for row in &cells {
        out += &line([&row[0], &row[1], &row[2]]);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AllConvexReport {
    pub n: usize,
    pub graphs_checked: usize,
    /// Graphs where every subset is convex.
    pub all_convex: usize,
    pub violations: Vec<EdgeList>,
    pub holds: bool,
}

/// Every vertex subset is convex exactly when the maximum degree is at most 1.
pub fn verify_all_convex_characterization(n: usize) -> Result<AllConvexReport> {
    let full = BigUint::one() << n;
    let mut report = AllConvexReport {
        n,
        graphs_checked: 0,
        all_convex: 0,
        violations: Vec::new(),
        holds: true,
    };
    for g in all_labeled_graphs(n)? {
        report.graphs_checked += 1;
        let every_set = noc_bruteforce(&g)? == full;
        report.all_convex += every_set as usize;
        if every_set != (g.max_degree().unwrap_or(0) <= 1) {
            report.violations.push(g.edges().collect());
        }
    }
    report.holds = report.violations.is_empty();
    Ok(report)
}
