//! `qbmg`: command-line front end for the qbmg library.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::Outcome;

#[derive(Debug, Parser)]
#[command(name = "qbmg", version, about = "Two-colored quasi-best-match graph toolkit")]
struct Cli {
    /// Print reports as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the axioms N1, N2, N3 and report 2-qBMG / 2-BMG status.
    Recognize { file: PathBuf },
    /// Induced path and cycle freeness of the underlying graph.
    Analyze {
        file: PathBuf,
        /// Comma-separated checks among p3..p8 and c4..c8.
        #[arg(long, value_delimiter = ',', default_value = "p4,p5,p6,c4,c6")]
        check: Vec<String>,
    },
    /// Find a dominating biclique of the underlying graph.
    Dominate { file: PathBuf },
    /// Split a connected 2-qBMG into connected type-(A) parts.
    Decompose { file: PathBuf },
    /// Orient symmetric pairs and report a topological order.
    Orient {
        file: PathBuf,
        /// Sweep every choice of direction for the symmetric pairs.
        #[arg(long)]
        all: bool,
    },
    /// Classify 2-qBMGs up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Build the digraph explained by a tree, or search for a tree.
    Explain(ExplainArgs),
    /// Re-derive the counting theorems and worked examples.
    Verify {
        /// Also run the exhaustive sweeps over all digraphs on <= 6 vertices.
        #[arg(long)]
        exhaustive: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct EnumerateArgs {
    /// Template underlying graph: `path:K` or `cycle:K`.
    #[arg(long)]
    underlying: Option<String>,
    /// Every bipartite digraph on N labelled vertices (N <= 6).
    #[arg(long)]
    all: Option<usize>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "source")]
struct ExplainSource {
    /// Newick-subset tree, leaves written `name=0` or `name=1`.
    #[arg(long)]
    tree: Option<PathBuf>,
    /// DGF digraph to explain by exhaustive tree search.
    #[arg(long)]
    search: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ExplainArgs {
    #[command(flatten)]
    source: ExplainSource,
    /// Truncation map: lines `<leaf> <color> <preorder-node-id>`.
    #[arg(long, requires = "tree", conflicts_with = "search")]
    trunc: Option<PathBuf>,
    /// Leaf budget for `--search`.
    #[arg(long, default_value_t = 6)]
    max_leaves: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("QBMG_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&t| t > 0)
    {
        qbmg::par::configure_threads(threads);
    }
    match commands::run(&cli) {
        Ok(Outcome { report, failed }) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&report.json).expect("reports serialize") + "\n"
            } else {
                report.text
            };
            // A closed pipe (`qbmg ... | head`) is not an error worth reporting.
            let mut out = std::io::stdout().lock();
            if let Err(e) = out.write_all(body.as_bytes()).and_then(|()| out.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
