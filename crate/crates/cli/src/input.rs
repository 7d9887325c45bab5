//! Graph inputs: edge-list or JSON files, and `family:params` generator specs.

use std::fs;
use std::path::Path;

use p3convex::generators::*;
use p3convex::graph::{Graph, GraphJson};
use p3convex::threshold::parse_creation_sequence;

use crate::CliError;

pub const FAMILIES_HELP: &str = "\
Generator specs (prefix with gen: where a file could also be given):
  path:N  star:N  cycle:N  complete:N  edgeless:N  paw
  kbip:A:B          complete bipartite K_{A,B}
  gnp:N:P           Erdős–Rényi G(N, P), seeded by --seed
  tree:N            uniform random labeled tree, seeded by --seed
  prufer:A,B,...    tree decoded from a Prüfer sequence
  threshold:SEQ     threshold graph from a creation sequence such as IUIU";

/// A file path, or a generator spec after `gen:`.
pub fn load_graph(input: &str, seed: u64) -> Result<Graph, CliError> {
    match input.strip_prefix("gen:") {
        Some(spec) => generate(spec, seed),
        None => read_graph_file(Path::new(input)),
    }
}

fn read_graph_file(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    if path.extension().is_some_and(|ext| ext == "json") {
        let json: GraphJson =
            serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        Ok(Graph::from_json(&json)?)
    } else {
        Ok(Graph::parse_edge_list(&text)?)
    }
}

/// Builds the graph described by `family:params`.
pub fn generate(spec: &str, seed: u64) -> Result<Graph, CliError> {
    let mut parts = spec.split(':');
    let family = parts.next().unwrap_or_default();
    let params: Vec<&str> = parts.collect();
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(CliError::Usage(format!("{family} takes {k} parameter(s), got {}", params.len())))
        }
    };
    let int = |i: usize| -> Result<usize, CliError> {
        params[i]
            .parse()
            .map_err(|_| CliError::Usage(format!("{family}: {:?} is not a nonnegative integer", params[i])))
    };
    let graph = match family {
        "path" => {
            arity(1)?;
            path(int(0)?)?
        }
        "star" => {
            arity(1)?;
            star(int(0)?)?
        }
        "cycle" => {
            arity(1)?;
            cycle(int(0)?)?
        }
        "complete" => {
            arity(1)?;
            complete(int(0)?)?
        }
        "edgeless" => {
            arity(1)?;
            edgeless(int(0)?)
        }
        "paw" => {
            arity(0)?;
            paw()
        }
        "kbip" | "complete_bipartite" => {
            arity(2)?;
            complete_bipartite(int(0)?, int(1)?)?
        }
        "gnp" => {
            arity(2)?;
            let p: f64 = params[1]
                .parse()
                .map_err(|_| CliError::Usage(format!("gnp: {:?} is not a probability", params[1])))?;
            random_gnp(int(0)?, p, seed)?
        }
        "tree" => {
            arity(1)?;
            random_tree(int(0)?, seed)?
        }
        "prufer" => {
            arity(1)?;
            let code = if params[0].is_empty() {
                Vec::new()
            } else {
                params[0]
                    .split(',')
                    .map(|x| x.trim().parse().map_err(|_| CliError::Usage(format!("prufer: bad entry {x:?}"))))
                    .collect::<Result<Vec<usize>, _>>()?
            };
            tree_from_prufer(&code)?
        }
        "threshold" => {
            arity(1)?;
            threshold_from_sequence(&parse_creation_sequence(params[0])?)?
        }
        _ => return Err(CliError::Usage(format!("unknown graph family {family:?}\n{FAMILIES_HELP}"))),
    };
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        assert_eq!(generate("star:5", 0).unwrap(), star(5).unwrap());
        assert_eq!(generate("kbip:2:3", 0).unwrap(), complete_bipartite(2, 3).unwrap());
        assert_eq!(generate("prufer:1,1", 0).unwrap().degree(1), 3);
        assert_eq!(generate("prufer:", 0).unwrap(), complete(2).unwrap());
        assert_eq!(generate("threshold:IUIU", 0).unwrap().edge_count(), 4);
        assert_eq!(generate("gnp:8:0.5", 7).unwrap(), random_gnp(8, 0.5, 7).unwrap());
        assert!(generate("star", 0).is_err());
        assert!(generate("star:x", 0).is_err());
        assert!(generate("moebius:4", 0).is_err());
        assert!(generate("cycle:2", 0).is_err());
    }
}
