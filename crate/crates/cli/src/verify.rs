//! Verification suites. Each prints a JSON report whose `pass` field decides
//! the exit code; failed checks name the offending instance.

use std::process::ExitCode;

use clap::Subcommand;
use serde_json::{json, Value};

use p3convex::extremal::{
    all_labeled_graphs, format_table1, table1, table1_matches_reference, verify_edge_monotonicity,
    verify_edge_monotonicity_on, verify_spanning_tree_strict, verify_star_maximality, verify_wg_gap, Scope,
};
use p3convex::generators::random_gnp;
use p3convex::oracle::DEFAULT_ORACLE_CAP;
use p3convex::reduction::{
    build_split_reduction, has_two_disjoint_induced_k14, verify_reduction_identity_with, HCounting, Reduction,
};
use p3convex::Graph;

use crate::input::load_graph;
use crate::{emit, CliError};

/// Witnesses kept in a report.
const MAX_WITNESSES: usize = 5;

#[derive(Subcommand)]
pub enum Suite {
    /// Counting identity and structure of the split-graph construction.
    Reduction {
        /// Check every labeled graph on this many vertices (at most 7).
        #[arg(long)]
        exhaustive_n: Option<usize>,
        /// Check this many seeded random graphs.
        #[arg(long)]
        random: Option<usize>,
        /// Largest vertex count of the random graphs.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check a single graph (file or gen: spec).
        #[arg(long)]
        graph: Option<String>,
    },
    /// Deleting an edge never lowers the count.
    Monotonicity {
        #[arg(long)]
        graph: Option<String>,
        /// Random (graph, edge) pairs to check when no graph is given.
        #[arg(long, default_value_t = 1000)]
        random: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Every spanning tree has strictly more convex sets than the graph.
    SpanningTree {
        #[arg(long)]
        graph: Option<String>,
        /// Check all connected graphs with |E| >= |V| up to this many vertices.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Maximum count over connected graphs (or trees) and its achievers.
    Extremal {
        #[arg(long)]
        n: usize,
        /// Scan labeled trees (n <= 9) instead of connected graphs (n <= 6).
        #[arg(long)]
        trees: bool,
        /// Allow the 2^21-graph connected scan at n = 7.
        #[arg(long)]
        allow_n7: bool,
    },
    /// Path and star counts against the reference table.
    Table1 {
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Print the aligned table instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// The W - G gap on all qualifying trees up to n vertices.
    WgGap {
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
}

pub fn run(suite: Suite) -> Result<ExitCode, CliError> {
    let (pass, report) = match suite {
        Suite::Reduction {
            exhaustive_n,
            random,
            max_n,
            seed,
            graph,
        } => reduction(exhaustive_n, random, max_n, seed, graph)?,
        Suite::Monotonicity {
            graph,
            random,
            max_n,
            seed,
        } => monotonicity(graph, random, max_n, seed)?,
        Suite::SpanningTree { graph, max_n } => spanning_tree(graph, max_n)?,
        Suite::Extremal { n, trees, allow_n7 } => {
            let scope = if trees { Scope::Trees } else { Scope::Connected };
            let report = verify_star_maximality(n, scope, allow_n7)?;
            (report.holds, to_value(&report))
        }
        Suite::Table1 { n, text } => {
            let rows = table1(n)?;
            let pass = table1_matches_reference(&rows);
            if text {
                emit(&format_table1(&rows));
                return Ok(exit(pass));
            }
            (pass, json!({ "rows": to_value(&rows) }))
        }
        Suite::WgGap { n } => {
            if !(2..=8).contains(&n) {
                return Err(CliError::Usage(format!("--n must be in 2..=8, got {n}")));
            }
            let reports = (2..=n).map(verify_wg_gap).collect::<Result<Vec<_>, _>>()?;
            let pass = reports.iter().all(|r| r.holds);
            (pass, json!({ "per_n": to_value(&reports) }))
        }
    };
    let mut report = report;
    report["pass"] = json!(pass);
    emit(&format!("{}\n", serde_json::to_string_pretty(&report).expect("reports serialize")));
    Ok(exit(pass))
}

fn exit(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn to_value<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("reports serialize")
}

fn edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

fn reduction(
    exhaustive_n: Option<usize>,
    random: Option<usize>,
    max_n: usize,
    seed: u64,
    graph: Option<String>,
) -> Result<(bool, Value), CliError> {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    if let Some(spec) = &graph {
        graphs.push((spec.clone(), load_graph(spec, seed)?));
    }
    let exhaustive_n = match (exhaustive_n, random, &graph) {
        (None, None, None) => Some(5),
        (n, _, _) => n,
    };
    if let Some(n) = exhaustive_n {
        graphs.extend(all_labeled_graphs(n)?.enumerate().map(|(i, g)| (format!("labeled n={n} #{i}"), g)));
    }
    if let Some(count) = random {
        if max_n == 0 {
            return Err(CliError::Usage("--max-n must be positive".into()));
        }
        for i in 0..count as u64 {
            let n = 1 + (i as usize % max_n);
            let p = [0.2, 0.4, 0.6, 0.8][i as usize % 4];
            graphs.push((format!("gnp({n}, {p}) seed {}", seed + i), random_gnp(n, p, seed + i)?));
        }
    }

    let mut identity_failures = 0;
    let mut structural_failures = 0;
    let mut witnesses = Vec::new();
    for (label, g) in &graphs {
        let h_size = g.vertex_count() + g.edge_count() + 1;
        let method = if h_size <= DEFAULT_ORACLE_CAP {
            HCounting::Oracle { cap: DEFAULT_ORACLE_CAP }
        } else {
            HCounting::SplitPartition
        };
        let report = verify_reduction_identity_with(g, method)?;
        let (split, disjoint_claws) = match build_split_reduction(g) {
            Reduction::Identity => (true, false),
            Reduction::Split(out) => (out.h.is_split(), has_two_disjoint_induced_k14(&out.h)),
        };
        let structural_ok = split && !disjoint_claws;
        identity_failures += !report.identity_holds as usize;
        structural_failures += !structural_ok as usize;
        if (!report.identity_holds || !structural_ok) && witnesses.len() < MAX_WITNESSES {
            witnesses.push(json!({
                "instance": label,
                "edges": edges(g),
                "h_is_split": split,
                "h_has_two_disjoint_induced_k14": disjoint_claws,
                "identity": to_value(&report),
            }));
        }
    }
    let pass = identity_failures == 0 && structural_failures == 0;
    Ok((
        pass,
        json!({
            "suite": "reduction",
            "graphs_checked": graphs.len(),
            "identity_failures": identity_failures,
            "structural_failures": structural_failures,
            "witnesses": witnesses,
        }),
    ))
}

fn monotonicity(graph: Option<String>, random: usize, max_n: usize, seed: u64) -> Result<(bool, Value), CliError> {
    if let Some(spec) = graph {
        let g = load_graph(&spec, seed)?;
        let report = verify_edge_monotonicity(&g)?;
        let mut value = to_value(&report);
        value["suite"] = json!("monotonicity");
        value["edges"] = json!(edges(&g));
        return Ok((report.holds, value));
    }
    if max_n < 2 {
        return Err(CliError::Usage("--max-n must be at least 2".into()));
    }
    let mut pairs = 0;
    let mut attempt = 0u64;
    let mut witnesses = Vec::new();
    while pairs < random {
        let n = 2 + (attempt as usize % (max_n - 1));
        let g = random_gnp(n, 0.5, seed + attempt)?;
        attempt += 1;
        let all: Vec<(usize, usize)> = g.edges().collect();
        if all.is_empty() {
            continue;
        }
        let edge = all[(attempt as usize * 7919) % all.len()];
        let report = verify_edge_monotonicity_on(&g, &[edge])?;
        if !report.holds && witnesses.len() < MAX_WITNESSES {
            witnesses.push(json!({ "edges": all, "violation": to_value(&report.violations) }));
        }
        pairs += 1;
    }
    Ok((
        witnesses.is_empty(),
        json!({ "suite": "monotonicity", "pairs_checked": pairs, "witnesses": witnesses }),
    ))
}

fn spanning_tree(graph: Option<String>, max_n: usize) -> Result<(bool, Value), CliError> {
    if let Some(spec) = graph {
        let g = load_graph(&spec, 0)?;
        let report = verify_spanning_tree_strict(&g)?;
        let mut value = to_value(&report);
        value["suite"] = json!("spanning-tree");
        return Ok((report.holds, value));
    }
    if !(3..=7).contains(&max_n) {
        return Err(CliError::Usage(format!("--max-n must be in 3..=7, got {max_n}")));
    }
    let mut graphs_checked = 0;
    let mut trees_checked = 0;
    let mut witnesses = Vec::new();
    for n in 3..=max_n {
        for g in all_labeled_graphs(n)? {
            if g.edge_count() < n || !g.is_connected() {
                continue;
            }
            let report = verify_spanning_tree_strict(&g)?;
            graphs_checked += 1;
            trees_checked += report.trees_checked;
            if !report.holds && witnesses.len() < MAX_WITNESSES {
                witnesses.push(json!({ "edges": edges(&g), "report": to_value(&report) }));
            }
        }
    }
    Ok((
        witnesses.is_empty(),
        json!({
            "suite": "spanning-tree",
            "graphs_checked": graphs_checked,
            "trees_checked": trees_checked,
            "witnesses": witnesses,
        }),
    ))
}
