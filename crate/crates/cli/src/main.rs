//! `p3convex`: count P3-convex sets, run the verification suites, generate
//! graphs and benchmark the structured counters.

mod bench;
mod input;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use p3convex::auto::{noc_auto_detailed, Route};
use p3convex::exact::{
    find_independent_set, noc_generic_with_cap, noc_kl_with_cap, noc_structured, KLPartition, Strategy, Variant,
    DEFAULT_ENUMERATION_CAP,
};
use p3convex::oracle::{noc_bruteforce_with_cap, DEFAULT_ORACLE_CAP};
use p3convex::{noc_threshold, noc_tree, Count, Graph};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] p3convex::Error),
}

#[derive(Parser)]
#[command(name = "p3convex", version, about = "Exact counting of P3-convex vertex sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the convex sets of one graph.
    #[command(after_help = input::FAMILIES_HELP)]
    Count(CountArgs),
    /// Run a verification suite and print a JSON report; exits 1 on any failed check.
    #[command(subcommand)]
    Verify(verify::Suite),
    /// Print a generated graph as an edge list.
    #[command(after_help = input::FAMILIES_HELP)]
    Generate {
        /// Generator spec such as star:5 or gnp:8:0.5.
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time the structured counters over graph families.
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algo {
    Auto,
    Oracle,
    Tree,
    Threshold,
    Generic,
    #[value(name = "structured-A")]
    StructuredA,
    #[value(name = "structured-B")]
    StructuredB,
    #[value(name = "structured-C")]
    StructuredC,
    Kl,
}

impl Algo {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_owned()
    }
}

#[derive(Args)]
struct CountArgs {
    /// Edge-list or .json file, or gen:<family:params>.
    input: String,
    #[arg(long, value_enum, default_value_t = Algo::Auto, ignore_case = true)]
    algo: Algo,
    /// JSON file with independent_parts and clique_parts, for --algo kl.
    #[arg(long)]
    partition: Option<String>,
    /// Size limit for the oracle, generic and kl counters.
    #[arg(long)]
    cap: Option<usize>,
    /// Seed for random generator specs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

fn count(args: CountArgs) -> Result<ExitCode, CliError> {
    let g = input::load_graph(&args.input, args.seed)?;
    if args.partition.is_some() && args.algo != Algo::Kl {
        return Err(CliError::Usage("--partition only applies to --algo kl".into()));
    }
    let (noc, instrumentation) = run_algo(&g, &args)?;
    if args.json {
        let out = json!({
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "algo": args.algo.name(),
            "noc": noc.to_string(),
            "instrumentation": instrumentation,
        });
        emit(&format!("{out}\n"));
    } else {
        emit(&format!("{noc}\n"));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_algo(g: &Graph, args: &CountArgs) -> Result<(Count, Value), CliError> {
    let structured = |variant: Variant| {
        let result = noc_structured(g, variant);
        let t = &result.trace;
        let instrumentation = json!({
            "colorings_enumerated": result.colorings_enumerated,
            "p": t.p, "q": t.q, "t": t.t, "r": t.r,
            "blocks": t.blocks.len(),
            "stars": t.stars.len(),
        });
        (result.noc, instrumentation)
    };
    Ok(match args.algo {
        Algo::Auto => {
            let detailed = noc_auto_detailed(g);
            let mut routes = serde_json::Map::new();
            for (_, route) in &detailed.components {
                let name = match route {
                    Route::Tree => "tree".to_owned(),
                    Route::Threshold => "threshold".to_owned(),
                    Route::Structured(v) => format!("structured-{v}"),
                };
                let seen = routes.entry(name).or_insert(json!(0));
                *seen = json!(seen.as_u64().unwrap_or(0) + 1);
            }
            (detailed.noc, json!({ "components": detailed.components.len(), "routes": routes }))
        }
        Algo::Oracle => (noc_bruteforce_with_cap(g, args.cap.unwrap_or(DEFAULT_ORACLE_CAP))?, json!({})),
        Algo::Tree => (noc_tree(g)?, json!({})),
        Algo::Threshold => (noc_threshold(g)?, json!({})),
        Algo::Generic => {
            let i = find_independent_set(g, &Strategy::Greedy)?;
            let result = noc_generic_with_cap(g, &i, args.cap.unwrap_or(DEFAULT_ENUMERATION_CAP))?;
            let instrumentation = json!({
                "colorings_enumerated": result.colorings_enumerated,
                "independent_set_size": i.len(),
            });
            (result.noc, instrumentation)
        }
        Algo::StructuredA => structured(Variant::A),
        Algo::StructuredB => structured(Variant::B),
        Algo::StructuredC => structured(Variant::C),
        Algo::Kl => {
            let (part, source) = match &args.partition {
                Some(path) => {
                    let text =
                        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
                    let part: KLPartition =
                        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
                    (part, "file")
                }
                None => KLPartition::bipartite(g)
                    .map(|p| (p, "bipartite"))
                    .or_else(|| KLPartition::split(g).map(|p| (p, "split")))
                    .ok_or_else(|| {
                        CliError::Usage("graph is neither bipartite nor split; pass --partition".into())
                    })?,
            };
            let result = noc_kl_with_cap(g, &part, args.cap.unwrap_or(DEFAULT_ENUMERATION_CAP))?;
            let instrumentation = json!({
                "colorings_enumerated": result.colorings_enumerated,
                "partition": source,
                "k": part.independent_parts.len(),
                "l": part.clique_parts.len(),
            });
            (result.noc, instrumentation)
        }
    })
}

/// Writes to stdout; a closed pipe (`| head`) is not an error worth a panic.
pub fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(args) => count(args),
        Command::Verify(suite) => verify::run(suite),
        Command::Generate { spec, seed } => {
            let spec = spec.strip_prefix("gen:").unwrap_or(&spec).to_owned();
            input::generate(&spec, seed).map(|g| {
                emit(&g.to_edge_list());
                ExitCode::SUCCESS
            })
        }
        Command::Bench(args) => bench::run(args),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}
