//! Instrumented runs of the structured counters. Reports what was enumerated
//! and how long it took; asserts nothing.

use std::process::ExitCode;
use std::time::Instant;

use clap::Args;

use p3convex::exact::{noc_structured, Variant};

use crate::input::generate;
use crate::{emit, CliError};

#[derive(Args)]
pub struct BenchArgs {
    /// Comma-separated single-parameter families.
    #[arg(long, default_value = "path,cycle,star,complete")]
    families: String,
    /// Inclusive vertex range `a..b`.
    #[arg(long, default_value = "5..12")]
    n_range: String,
    /// Comma-separated variants.
    #[arg(long, default_value = "A,B,C")]
    variants: String,
    /// CSV output (the default output is an aligned table).
    #[arg(long)]
    csv: bool,
}

const HEADER: [&str; 6] = ["family", "n", "variant", "colorings_enumerated", "wall_time_ms", "noc"];

fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("expected a range like 5..12, got {text:?}"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn run(args: BenchArgs) -> Result<ExitCode, CliError> {
    let (lo, hi) = parse_range(&args.n_range)?;
    let variants: Vec<Variant> = args
        .variants
        .split(',')
        .map(|v| v.trim().parse::<Variant>())
        .collect::<Result<_, _>>()?;
    let mut rows: Vec<[String; 6]> = Vec::new();
    for family in args.families.split(',').map(str::trim) {
        for n in lo..=hi {
            let g = generate(&format!("{family}:{n}"), 0)?;
            for &variant in &variants {
                let start = Instant::now();
                let result = noc_structured(&g, variant);
                let ms = start.elapsed().as_secs_f64() * 1e3;
                rows.push([
                    family.to_owned(),
                    n.to_string(),
                    variant.to_string(),
                    result.colorings_enumerated.to_string(),
                    format!("{ms:.3}"),
                    result.noc.to_string(),
                ]);
            }
        }
    }
    if args.csv {
        let mut out = HEADER.join(",") + "\n";
        for row in &rows {
            out += &(row.join(",") + "\n");
        }
        emit(&out);
    } else {
        let widths: Vec<usize> = (0..6)
            .map(|c| rows.iter().map(|r| r[c].len()).chain([HEADER[c].len()]).max().unwrap())
            .collect();
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            emit(&(padded.join("  ") + "\n"));
        };
        line(HEADER.to_vec());
        for row in &rows {
            line(row.iter().map(String::as_str).collect());
        }
    }
    Ok(ExitCode::SUCCESS)
}
