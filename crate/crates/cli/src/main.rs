//! Command-line front end: exact cop numbers, pattern checks, bound
//! verification over graph6 corpora, reproducible random generation, and
//! an interactive play mode with a human robber.
//!
//! Exit codes: 0 success / verified, 1 violations or capture failure
//! found, 2 usage or input error.

mod play;

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use coprobber_core::game::{cop_number_with_budget, solve, DEFAULT_STATE_BUDGET};
use coprobber_core::graph::Graph;
use coprobber_core::graph6::parse_graph6;
use coprobber_core::harness::corpus::{gen_random_connected, read_graph6_stream};
use coprobber_core::harness::report::{emit_csv, emit_json};
use coprobber_core::harness::{verify_theorem, CopNumberCache, SpecId, TheoremSpec, VerifyOptions};
use coprobber_core::pattern::{contains_induced, make_pattern, parse_pattern_name};
use coprobber_core::strategy::Strategy;

#[derive(Parser)]
#[command(name = "coprobber", version, about = "Cops-and-robbers workbench for small graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact cop number of one graph or every graph in a file.
    #[command(group(ArgGroup::new("src").required(true).args(["graph6", "input"])))]
    Copnum {
        /// One graph6 line.
        #[arg(long)]
        graph6: Option<String>,
        /// File of graph6 lines (or - for stdin).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Stop the search at this many cops.
        #[arg(long)]
        max_k: Option<usize>,
        /// Write the winning solve table ("cops;robber;turn;win;steps" lines).
        #[arg(long, requires = "graph6")]
        dump_table: Option<PathBuf>,
    },
    /// Report whether a named pattern occurs as an induced subgraph.
    Check {
        /// Pattern name: P5, C4, claw, paw, coP5, H1(2), H2(2), 2+2, 2P2, ...
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        graph6: String,
    },
    /// Verify a bound specification over a graph6 corpus.
    Verify {
        /// Spec id: T1, T2, T3, C1, T4, T5, L1, PR1, PR2, CONJ1, CONJ2.
        #[arg(long)]
        spec: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        /// Linear forest parts for T4, e.g. 2,3 or 2+3.
        #[arg(long)]
        forest: Option<String>,
        /// File of graph6 lines (or - for stdin).
        #[arg(long)]
        input: PathBuf,
        /// Also play the linked strategy against the optimal robber.
        #[arg(long)]
        with_strategy: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Append-only cop-number cache file.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Worker threads for the verification fan-out.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Reproducible random connected graphs, one graph6 line each.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        /// Generator seed; a fixed constant when omitted, never wall-clock.
        #[arg(long, default_value_t = 12345)]
        seed: u64,
        #[arg(long)]
        count: usize,
    },
    /// Interactive play: you move the robber, the program moves the cops.
    Play {
        #[arg(long)]
        graph6: String,
        #[arg(long)]
        k: usize,
        /// Cop policy: "optimal" or a strategy name such as path_push(4),
        /// cycle_trap(1), claw_cycle(5), guard_vertex(4), guard_edge(3), house.
        #[arg(long, default_value = "optimal")]
        cops: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.cmd {
        Cmd::Copnum { graph6, input, max_k, dump_table } => cmd_copnum(graph6, input, max_k, dump_table),
        Cmd::Check { pattern, graph6 } => cmd_check(&pattern, &graph6),
        Cmd::Verify { spec, k, l, forest, input, with_strategy, format, cache, jobs } => {
            cmd_verify(&spec, k, l, forest.as_deref(), &input, with_strategy, format, cache, jobs)
        }
        Cmd::Gen { n, p, seed, count } => {
            let graphs = gen_random_connected(n, p, seed, count).map_err(|e| e.to_string())?;
            let mut out = std::io::stdout().lock();
            for g in &graphs {
                writeln!(out, "{}", coprobber_core::graph6::emit_graph6(g)).map_err(|e| e.to_string())?;
            }
            Ok(0)
        }
        Cmd::Play { graph6, k, cops } => {
            let g = parse_graph6(&graph6).map_err(|e| e.to_string())?;
            play::run_play(&g, k, &cops)
        }
    }
}

fn read_graphs(path: &PathBuf) -> Result<Vec<(usize, Graph)>, String> {
    let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
        Box::new(BufReader::new(std::io::stdin()))
    } else {
        Box::new(BufReader::new(
            File::open(path).map_err(|e| format!("{}: {e}", path.display()))?,
        ))
    };
    read_graph6_stream(reader)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())
}

fn cmd_copnum(
    graph6: Option<String>,
    input: Option<PathBuf>,
    max_k: Option<usize>,
    dump_table: Option<PathBuf>,
) -> Result<u8, String> {
    let single = graph6.is_some();
    let graphs: Vec<(usize, Graph)> = match (&graph6, &input) {
        (Some(line), None) => vec![(1, parse_graph6(line).map_err(|e| e.to_string())?)],
        (None, Some(path)) => read_graphs(path)?,
        _ => unreachable!("clap enforces exactly one source"),
    };
    let mut out = std::io::stdout().lock();
    for (line_no, g) in graphs {
        let c = cop_number_with_budget(&g, DEFAULT_STATE_BUDGET, max_k).map_err(|e| {
            if single {
                e.to_string()
            } else {
                format!("line {line_no}: {e}")
            }
        })?;
        let shown = match c {
            Some(c) => c.to_string(),
            None => format!(">{}", max_k.expect("capped searches carry max_k")),
        };
        if single {
            writeln!(out, "{shown}").map_err(|e| e.to_string())?;
            if let Some(path) = &dump_table {
                match c {
                    Some(c) => {
                        let table = solve(&g, c).map_err(|e| e.to_string())?;
                        std::fs::write(path, table.dump()).map_err(|e| e.to_string())?;
                    }
                    None => eprintln!("warning: no winning table below --max-k; nothing dumped"),
                }
            }
        } else {
            writeln!(out, "{}\t{shown}", coprobber_core::graph6::emit_graph6(&g))
                .map_err(|e| e.to_string())?;
        }
    }
    Ok(0)
}

fn cmd_check(pattern: &str, graph6: &str) -> Result<u8, String> {
    let kind = parse_pattern_name(pattern).map_err(|e| e.to_string())?;
    let p = make_pattern(kind).map_err(|e| e.to_string())?;
    let g = parse_graph6(graph6).map_err(|e| e.to_string())?;
    match contains_induced(&g, &p) {
        Some(w) => {
            let map = w.0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
            println!("contains {}: witness {}", p.name(), map);
        }
        None => println!("free of {}", p.name()),
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    spec_code: &str,
    k: Option<usize>,
    l: Option<usize>,
    forest: Option<&str>,
    input: &PathBuf,
    with_strategy: bool,
    format: Format,
    cache_path: Option<PathBuf>,
    jobs: Option<usize>,
) -> Result<u8, String> {
    let forest_parts: Option<Vec<usize>> = match forest {
        None => None,
        Some(s) => Some(
            s.split([',', '+'])
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| format!("malformed --forest {s:?}"))?,
        ),
    };
    let id = SpecId::from_cli(spec_code, k, l, forest_parts.as_deref()).map_err(|e| e.to_string())?;
    let spec = TheoremSpec::new(id).map_err(|e| e.to_string())?;
    let graphs = read_graphs(input)?;
    let mut cache = match &cache_path {
        Some(p) => CopNumberCache::open(p).map_err(|e| e.to_string())?,
        None => CopNumberCache::in_memory(),
    };
    if cache.skipped_lines() > 0 {
        eprintln!("warning: skipped {} corrupt cache lines", cache.skipped_lines());
    }

    let opts = VerifyOptions { with_strategy };
    let stream = graphs.into_iter().map(Ok);
    let report = match jobs {
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| e.to_string())?;
            pool.install(|| verify_theorem(&spec, stream, &mut cache, &opts))
        }
        None => verify_theorem(&spec, stream, &mut cache, &opts),
    }
    .map_err(|e| e.to_string())?;

    let text = match format {
        Format::Csv => emit_csv(&report),
        Format::Json => emit_json(&report),
    };
    print!("{text}");
    Ok(if report.verified { 0 } else { 1 })
}

/// Shared by the play module: parse the cop policy flag.
pub(crate) fn parse_cop_policy(s: &str) -> Result<Option<Strategy>, String> {
    if s == "optimal" {
        Ok(None)
    } else {
        Strategy::parse_name(s).map(Some).map_err(|e| e.to_string())
    }
}
