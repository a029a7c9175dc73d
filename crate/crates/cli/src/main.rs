//! `pdim`: exact partition dimension / twin number toolbox.

use pdim_cli::suites;

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use pdim_core::families::FamilySpec;
use pdim_core::iso::{self, canonical_form};
use pdim_core::solver::{
    metric_dimension, partition_dimension, partition_dimension_naive, Outcome,
};
use pdim_core::twins::{twin_decomposition, TwinKind};
use pdim_core::{diameter, parse_graph6, write_graph6, Graph};

#[derive(Parser)]
#[command(name = "pdim", version, about = "Partition dimension and twin number of small connected graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print invariants of a graph as JSON.
    Invariants {
        /// graph6 string, family spec (e.g. "H:3:9"), or "-" for stdin.
        input: String,
        /// Also compute the metric dimension (expensive on twin-free graphs).
        #[arg(long)]
        beta: bool,
        /// Search node budget for the exact solver.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Generate a named family member and print its graph6 line.
    Gen {
        /// Family spec, e.g. "H:3:9", "Tk2:3", "star:9".
        spec: String,
    },
    /// Solve the partition dimension exactly.
    Solve {
        /// graph6 string, family spec, or "-" for stdin.
        input: String,
        /// Use the unpruned reference solver (n <= 8).
        #[arg(long)]
        naive: bool,
        #[arg(long)]
        budget: Option<u64>,
        /// Worker threads (affects batch subcommands; a single solve is
        /// sequential by design).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        /// One of: table2, twin-n-2, bp-n-1, bp-n-2, refutation, realization.
        suite: String,
        /// Order for the catalog suites (default 9).
        #[arg(long)]
        n: Option<usize>,
        /// graph6 catalog file for the exhaustive suites.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Emit a CSV census of a catalog, one row per graph with tau >= min-tau.
    Classify {
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long, default_value_t = 1)]
        min_tau: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Enumerate all connected graphs of an order (n <= 9) as a graph6 catalog.
    GenCatalog {
        #[arg(long)]
        n: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode, String> {
    match Cli::parse().command {
        Command::Invariants { input, beta, budget } => {
            let g = read_graph(&input)?;
            cmd_invariants(&g, beta, budget)
        }
        Command::Gen { spec } => {
            let g = FamilySpec::parse(&spec).map_err(|e| e.to_string())?
                .generate()
                .map_err(|e| e.to_string())?;
            println!("{}", write_graph6(&g).map_err(|e| e.to_string())?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { input, naive, budget, threads } => {
            configure_threads(threads)?;
            let g = read_graph(&input)?;
            cmd_solve(&g, naive, budget)
        }
        Command::Verify { suite, n, catalog, budget, threads } => {
            configure_threads(threads)?;
            cmd_verify(&suite, n, catalog.as_deref(), budget)
        }
        Command::Classify { catalog, min_tau, budget, threads } => {
            configure_threads(threads)?;
            cmd_classify(&catalog, min_tau, budget)
        }
        Command::GenCatalog { n, out, threads } => {
            configure_threads(threads)?;
            cmd_gen_catalog(n, out.as_deref())
        }
    }
}

fn configure_threads(threads: Option<usize>) -> Result<(), String> {
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    Ok(())
}

/// graph6 line, family spec (recognized by the ':' separator, which cannot
/// occur in graph6 data), or "-" for one line of stdin.
fn read_graph(input: &str) -> Result<Graph, String> {
    let text;
    let input = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
        text = buf;
        text.trim()
    } else {
        input
    };
    if input.contains(':') {
        FamilySpec::parse(input)
            .and_then(|s| s.generate())
            .map_err(|e| e.to_string())
    } else {
        parse_graph6(input).map_err(|e| e.to_string())
    }
}

fn cmd_invariants(g: &Graph, beta: bool, budget: Option<u64>) -> Result<ExitCode, String> {
    let td = twin_decomposition(g);
    let diam = diameter(g).map_err(|e| e.to_string())?;
    let res = partition_dimension(g, budget).map_err(|e| e.to_string())?;
    let classes: Vec<_> = td
        .classes
        .iter()
        .map(|c| {
            json!({"vertices": c.vertices, "kind": match c.kind {
                TwinKind::True => "true",
                TwinKind::False => "false",
                TwinKind::Singleton => "singleton",
            }})
        })
        .collect();
    let mut out = json!({
        "graph6": write_graph6(g).map_err(|e| e.to_string())?,
        "n": g.n(),
        "edges": g.edge_count(),
        "diameter": diam,
        "twin_classes": classes,
        "tau": td.tau(),
        "stats": {
            "nodes_expanded": res.stats.nodes_expanded,
            "partitions_tested": res.stats.partitions_tested,
        },
    });
    if beta {
        out["beta"] = json!(metric_dimension(g).map_err(|e| e.to_string())?.value);
    }
    let exhausted = match &res.outcome {
        Outcome::Exact { value, witness } => {
            out["beta_p"] = json!(value);
            out["witness"] = json!(witness.parts());
            false
        }
        Outcome::Unknown { lower, upper } => {
            out["beta_p"] = serde_json::Value::Null;
            out["beta_p_lower"] = json!(lower);
            out["beta_p_upper"] = json!(upper);
            true
        }
    };
    println!("{}", serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?);
    if exhausted {
        return Err("search budget exhausted; result above is a bound interval".into());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(g: &Graph, naive: bool, budget: Option<u64>) -> Result<ExitCode, String> {
    let res = if naive {
        partition_dimension_naive(g).map_err(|e| e.to_string())?
    } else {
        partition_dimension(g, budget).map_err(|e| e.to_string())?
    };
    match &res.outcome {
        Outcome::Exact { value, witness } => {
            let out = json!({
                "beta_p": value,
                "witness": witness.parts(),
                "stats": {
                    "nodes_expanded": res.stats.nodes_expanded,
                    "partitions_tested": res.stats.partitions_tested,
                    "levels_exhausted": res.stats.levels_exhausted,
                },
            });
            println!("{}", serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?);
            Ok(ExitCode::SUCCESS)
        }
        Outcome::Unknown { lower, upper } => Err(format!(
            "search budget exhausted: beta_p is in {lower}..={upper} but not decided"
        )),
    }
}

fn load_catalog(path: &std::path::Path) -> Result<Vec<Graph>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        format!(
            "cannot read catalog {}: {e}; generate one with `pdim gen-catalog --n 9 --out {}`",
            path.display(),
            path.display()
        )
    })?;
    iso::ingest_catalog(&text).map_err(|e| e.to_string())
}

fn cmd_verify(
    suite: &str,
    n: Option<usize>,
    catalog: Option<&std::path::Path>,
    budget: Option<u64>,
) -> Result<ExitCode, String> {
    let need_catalog = || -> Result<Vec<Graph>, String> {
        let path = catalog.ok_or_else(|| {
            "this suite needs --catalog FILE; generate one with `pdim gen-catalog --n 9 --out FILE`"
                .to_string()
        })?;
        load_catalog(path)
    };
    let report = match suite {
        "table2" => suites::suite_table2(n.unwrap_or(12)),
        "twin-n-2" => suites::suite_twin_n_minus_2(),
        "bp-n-1" => {
            let n = n.unwrap_or(9);
            suites::suite_bp_n_minus_1(n, &need_catalog()?, budget)
        }
        "bp-n-2" => {
            let n = n.unwrap_or(9);
            if n < 9 {
                eprintln!("note: n = {n} is outside the n >= 9 hypothesis; exploratory run");
            }
            suites::suite_bp_n_minus_2(n, &need_catalog()?, budget)
        }
        "refutation" => {
            let orders = match n {
                Some(x) => vec![x],
                None => vec![9, 10],
            };
            suites::suite_refutation(&orders, budget)
        }
        "realization" => suites::suite_realization(budget),
        other => return Err(format!("unknown suite '{other}'")),
    }
    .map_err(|e| e.to_string())?;
    println!("{}", serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?);
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_classify(
    path: &std::path::Path,
    min_tau: usize,
    budget: Option<u64>,
) -> Result<ExitCode, String> {
    use rayon::prelude::*;
    let graphs = load_catalog(path)?;
    let rows: Vec<Result<Option<String>, String>> = graphs
        .par_iter()
        .map(|g| {
            let td = twin_decomposition(g);
            if td.tau() < min_tau {
                return Ok(None);
            }
            let kinds: Vec<TwinKind> =
                td.tau_sets.iter().map(|&i| td.classes[i].kind).collect();
            let kind = if kinds.iter().all(|&k| k == kinds[0]) {
                match kinds[0] {
                    TwinKind::True => "clique",
                    TwinKind::False => "independent",
                    TwinKind::Singleton => "singleton",
                }
            } else {
                "mixed"
            };
            let res = partition_dimension(g, budget).map_err(|e| e.to_string())?;
            let bp = match res.outcome {
                Outcome::Exact { value, .. } => value.to_string(),
                Outcome::Unknown { lower, upper } => format!("{lower}..{upper}"),
            };
            let form = canonical_form(g).map_err(|e| e.to_string())?;
            Ok(Some(format!("{form},{},{},{kind},{bp}", g.n(), td.tau())))
        })
        .collect();
    println!("canonical_form,n,tau,tau_kind,beta_p_or_bound");
    let mut out: Vec<String> = Vec::new();
    for r in rows {
        if let Some(row) = r? {
            out.push(row);
        }
    }
    out.sort();
    for row in out {
        println!("{row}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen_catalog(n: usize, out: Option<&std::path::Path>) -> Result<ExitCode, String> {
    use rayon::prelude::*;
    if n == 0 || n > iso::ENUMERATION_LIMIT {
        return Err(format!("gen-catalog supports 1 <= n <= {}", iso::ENUMERATION_LIMIT));
    }
    let mut level = vec![Graph::empty(1).map_err(|e| e.to_string())?];
    for _ in 1..n {
        let mut forms: Vec<String> = level
            .par_iter()
            .flat_map_iter(|g| {
                iso::augmentations(g).map(|h| canonical_form(&h).expect("n <= 9"))
            })
            .collect();
        forms.sort();
        forms.dedup();
        level = forms
            .iter()
            .map(|f| parse_graph6(f).expect("canonical form round-trips"))
            .collect();
    }
    let text = iso::write_catalog(&level).map_err(|e| e.to_string())?;
    match out {
        Some(path) => std::fs::write(path, &text).map_err(|e| e.to_string())?,
        None => print!("{text}"),
    }
    eprintln!("wrote {} graphs of order {n}", level.len());
    Ok(ExitCode::SUCCESS)
}
