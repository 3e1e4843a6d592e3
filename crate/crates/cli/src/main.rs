//! Command-line front end: duals, monodromies, braid actions, medial
//! digraphs and chain decompositions, surface invariants and peggability,
//! the tree bijections, the exact enumerations, and the verification
//! suites.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports failures,
//! 2 on usage or input errors.

use clap::{Parser, Subcommand, ValueEnum};
use facdual::braid::{act_loop, parse_word};
use facdual::egraph::{EdgeLabeledGraph, Factorization};
use facdual::io;
use facdual::medial::{pcd_from_leo, pcd_from_ptdc, MedialDigraph};
use facdual::perm::Permutation;
use facdual::surface::{
    ceg_of_identity_factorization, peg_invariants, peggable, realize_kn_type, selfdual_check,
    RotationSystem,
};
use facdual::trails::{bar_dual, Leo};
use facdual::trees::{
    degree_distribution, difference_distribution, edge_deletion_distribution,
    enumerate_minimal_factorizations, enumerate_selfdual_etrees, path_length_distribution, phi,
    standard_cycle, VTree,
};
use facdual::verify::{run_all, run_suite, RunReport, VerifyOptions, SUITES};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "facdual", about, version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatKind {
    /// Cyclic distances of the moved points of a factorization.
    Diff,
    /// Smaller component sizes over edge deletions of a vertex tree.
    Edel,
    /// Vertex degrees of a factorization's graph.
    Deg,
    /// Greedy increasing walk lengths of a vertex tree.
    Plen,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    Graph,
    Factorization,
    Medial,
    Rotation,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Dual of a factorization (or of a graph with --graph).
    Dual {
        #[arg(long, default_value = "-")]
        input: String,
        /// Use the opposite trail-end convention.
        #[arg(long)]
        bar: bool,
        /// Treat the input as a graph and dualize through its trails.
        #[arg(long)]
        graph: bool,
        /// Print both computation paths and whether they agree.
        #[arg(long)]
        both: bool,
    },
    /// Product of the factors, in cycle notation.
    Monodromy {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Apply a braid or loop-braid word (tokens like "s2 S1 p3").
    Act {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long)]
        word: String,
    },
    /// Medial digraph of a graph's label order.
    Medial {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Chain decomposition traced by the label order (or the trails).
    Pcd {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long)]
        from_trails: bool,
    },
    /// Euler characteristic, boundary components, and genus.
    PegInvariants {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Recover an edge labeling whose completion is the given embedding.
    Peggable {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Build a complete-graph labeling with the requested cycle type.
    RealizeKn {
        #[arg(long)]
        n: usize,
        /// Comma-separated parts, e.g. "2,2,2".
        #[arg(long = "cycle-type")]
        cycle_type: String,
    },
    /// Whether an embedding is self-dual (rotation JSON input, or a
    /// factorization of the identity with --factorization).
    SelfdualCheck {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long)]
        factorization: bool,
    },
    /// The structural bijection applied to a minimal factorization of the
    /// standard cycle.
    Phi {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// One of the four structural statistics.
    Stats {
        #[arg(long)]
        kind: StatKind,
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Count (and optionally list) minimal factorizations of a full cycle.
    EnumMinfacts {
        #[arg(long)]
        n: usize,
        /// Cycle notation; defaults to the standard cycle (n n-1 … 1).
        #[arg(long)]
        zeta: Option<String>,
        #[arg(long)]
        witnesses: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: CountFormat,
    },
    /// Count self-dual edge-labeled trees two independent ways.
    EnumSelfdual {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rooted: bool,
        #[arg(long)]
        witnesses: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: CountFormat,
    },
    /// Run the verification suites.
    Verify {
        /// Suite name, or "all".
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        cases: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 12)]
        max_m: usize,
        /// Harness self-test: corrupt one comparison and expect a failure.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Re-serialize an object as DOT or JSON.
    Export {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum)]
        kind: ExportKind,
        #[arg(long, value_enum, default_value = "dot")]
        format: ExportFormat,
    },
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn factorization_arg(path: &str) -> Result<Factorization, String> {
    io::factorization_from_json(&read_input(path)?).map_err(|e| e.to_string())
}

/// Graph inputs also accept factorization JSON, read as its graph.
fn graph_arg(path: &str) -> Result<EdgeLabeledGraph, String> {
    let text = read_input(path)?;
    io::graph_from_json(&text)
        .or_else(|graph_err| {
            io::factorization_from_json(&text)
                .map(|rho| EdgeLabeledGraph::from_factorization(&rho))
                .map_err(|_| graph_err)
        })
        .map_err(|e| e.to_string())
}

fn rotation_arg(path: &str) -> Result<RotationSystem, String> {
    io::rotation_from_json(&read_input(path)?).map_err(|e| e.to_string())
}

fn vtree_arg(path: &str) -> Result<VTree, String> {
    let g = graph_arg(path)?;
    VTree::new(g.vertex_count(), g.edges().to_vec()).map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Dual { input, bar, graph, both } => {
            if graph {
                let g = graph_arg(&input)?;
                let dual = facdual::trails::dual_graph(&g).map_err(|e| e.to_string())?;
                println!("{}", io::graph_to_json(&dual));
            } else {
                let rho = factorization_arg(&input)?;
                if bar {
                    println!("{}", io::factorization_to_json(&bar_dual(&rho)));
                } else if both {
                    let formula = facdual::trails::dual_factorization(&rho);
                    let via_graph =
                        facdual::trails::dual_via_graph(&rho).map_err(|e| e.to_string())?;
                    println!(
                        "{{\"formula\":{},\"via_graph\":{},\"agree\":{}}}",
                        io::factorization_to_json(&formula),
                        io::factorization_to_json(&via_graph),
                        formula == via_graph
                    );
                } else {
                    println!(
                        "{}",
                        io::factorization_to_json(&facdual::trails::dual_factorization(&rho))
                    );
                }
            }
        }
        Command::Monodromy { input } => {
            println!("{}", factorization_arg(&input)?.monodromy());
        }
        Command::Act { input, word } => {
            let rho = factorization_arg(&input)?;
            let w = parse_word(&word, rho.len()).map_err(|e| e.to_string())?;
            let moved = act_loop(&rho, &w).map_err(|e| e.to_string())?;
            println!("{}", io::factorization_to_json(&moved));
        }
        Command::Medial { input } => {
            let g = graph_arg(&input)?;
            println!("{}", io::medial_to_json(&MedialDigraph::of_graph(&g)));
        }
        Command::Pcd { input, from_trails } => {
            let g = graph_arg(&input)?;
            let leo = Leo::from_graph(&g);
            let m = MedialDigraph::of_leo(&leo);
            let pcd = if from_trails {
                pcd_from_ptdc(&leo, &m).map_err(|e| e.to_string())?
            } else {
                pcd_from_leo(&leo, &m).map_err(|e| e.to_string())?
            };
            println!("{}", serde_json::to_string(&pcd).expect("plain data"));
        }
        Command::PegInvariants { input } => {
            let g = graph_arg(&input)?;
            let inv = peg_invariants(&g).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string(&inv).expect("plain data"));
        }
        Command::Peggable { input } => {
            let rs = rotation_arg(&input)?;
            match peggable(&rs) {
                Some(labeling) => println!(
                    "{{\"peggable\":true,\"labeling\":{}}}",
                    io::graph_to_json(&labeling)
                ),
                None => println!("{{\"peggable\":false}}"),
            }
        }
        Command::RealizeKn { n, cycle_type } => {
            let parts = cycle_type
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|e| format!("bad part {s:?}: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            let g = realize_kn_type(n, &parts).map_err(|e| e.to_string())?;
            println!("{}", io::graph_to_json(&g));
        }
        Command::SelfdualCheck { input, factorization } => {
            let rs = if factorization {
                let rho = factorization_arg(&input)?;
                ceg_of_identity_factorization(&rho).map_err(|e| e.to_string())?
            } else {
                rotation_arg(&input)?
            };
            println!("{}", selfdual_check(&rs).map_err(|e| e.to_string())?);
        }
        Command::Phi { input } => {
            let rho = factorization_arg(&input)?;
            let image = phi(&rho).map_err(|e| e.to_string())?;
            let as_graph = EdgeLabeledGraph::new(
                image.vertex_count(),
                image.edges().to_vec(),
                facdual::egraph::LabelingMode::Ev,
            )
            .map_err(|e| e.to_string())?;
            println!("{}", io::graph_to_json(&as_graph));
        }
        Command::Stats { kind, input } => {
            let hist = match kind {
                StatKind::Diff => difference_distribution(&factorization_arg(&input)?),
                StatKind::Deg => degree_distribution(&factorization_arg(&input)?),
                StatKind::Edel => edge_deletion_distribution(&vtree_arg(&input)?),
                StatKind::Plen => path_length_distribution(&vtree_arg(&input)?),
            };
            println!("{}", serde_json::to_string(&hist.0).expect("plain data"));
        }
        Command::EnumMinfacts { n, zeta, witnesses, format } => {
            let zeta = match zeta {
                Some(text) => Permutation::parse(&text, n).map_err(|e| e.to_string())?,
                None => standard_cycle(n),
            };
            let all = enumerate_minimal_factorizations(&zeta).map_err(|e| e.to_string())?;
            match format {
                CountFormat::Json => {
                    println!("{{\"n\":{n},\"zeta\":\"{zeta}\",\"count\":{}}}", all.len())
                }
                CountFormat::Csv => println!("n,zeta,count\n{n},{zeta},{}", all.len()),
            }
            if witnesses {
                for rho in &all {
                    println!("{}", io::factorization_to_json(rho));
                }
            }
        }
        Command::EnumSelfdual { n, rooted, witnesses, format } => {
            let count = enumerate_selfdual_etrees(n, rooted).map_err(|e| e.to_string())?;
            match format {
                CountFormat::Json => println!(
                    "{{\"n\":{n},\"rooted\":{rooted},\"by_filter\":{},\"by_zigzag\":{},\"agree\":{}}}",
                    count.by_filter,
                    count.by_zigzag,
                    count.by_filter == count.by_zigzag
                ),
                CountFormat::Csv => println!(
                    "n,rooted,by_filter,by_zigzag\n{n},{rooted},{},{}",
                    count.by_filter, count.by_zigzag
                ),
            }
            if witnesses {
                for g in &count.witnesses {
                    println!("{}", io::graph_to_json(g));
                }
            }
        }
        Command::Verify { suite, seed, cases, max_n, max_m, inject_fault } => {
            let opts = VerifyOptions {
                seed,
                cases,
                max_n,
                max_m,
                inject_fault,
                ..Default::default()
            };
            let reports: Vec<RunReport> = if suite == "all" {
                run_all(&opts).map_err(|e| e.to_string())?
            } else if SUITES.contains(&suite.as_str()) {
                vec![run_suite(&suite, &opts).map_err(|e| e.to_string())?]
            } else {
                return Err(format!("unknown suite {suite:?}; known: {SUITES:?} or all"));
            };
            let mut ok = true;
            for report in &reports {
                println!("{report}");
                ok &= report.passed();
            }
            println!("seed {seed}, {cases} randomized cases per suite");
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Export { input, kind, format } => {
            let text = read_input(&input)?;
            let out = match (kind, format) {
                (ExportKind::Graph, ExportFormat::Dot) => {
                    let g = io::graph_from_json(&text).map_err(|e| e.to_string())?;
                    io::graph_to_dot(&g)
                }
                (ExportKind::Graph, ExportFormat::Json) => {
                    let g = io::graph_from_json(&text).map_err(|e| e.to_string())?;
                    io::graph_to_json(&g)
                }
                (ExportKind::Factorization, ExportFormat::Dot) => {
                    let rho =
                        io::factorization_from_json(&text).map_err(|e| e.to_string())?;
                    io::graph_to_dot(&EdgeLabeledGraph::from_factorization(&rho))
                }
                (ExportKind::Factorization, ExportFormat::Json) => io::factorization_to_json(
                    &io::factorization_from_json(&text).map_err(|e| e.to_string())?,
                ),
                (ExportKind::Medial, ExportFormat::Dot) => {
                    io::medial_to_dot(&io::medial_from_json(&text).map_err(|e| e.to_string())?)
                }
                (ExportKind::Medial, ExportFormat::Json) => {
                    io::medial_to_json(&io::medial_from_json(&text).map_err(|e| e.to_string())?)
                }
                (ExportKind::Rotation, ExportFormat::Dot) => {
                    io::rotation_to_dot(&io::rotation_from_json(&text).map_err(|e| e.to_string())?)
                }
                (ExportKind::Rotation, ExportFormat::Json) => {
                    io::rotation_to_json(&io::rotation_from_json(&text).map_err(|e| e.to_string())?)
                }
            };
            println!("{out}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
