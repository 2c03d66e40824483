//! Command line front end over the `rtk-core` library: constructions,
//! rainbow-subgraph search, exact small-order oracles, verification sweeps,
//! and regression tables.
//!
//! Exit codes: 0 success, 1 a check failed or a search ran out of budget,
//! 2 bad usage or unreadable input. With `RTK_CI=1` every randomized command
//! insists on an explicit `--seed`, so CI runs are reproducible by
//! construction.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod cmd_construct;
mod cmd_oracle;
mod cmd_search;
mod cmd_table;
mod cmd_verify;
mod render;

use render::Format;

#[derive(Parser)]
#[command(name = "rtk", version, about = "Rainbow Turán toolkit")]
struct Cli {
    /// Output format for the report printed to stdout.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named extremal construction and write it to a file.
    Construct(ConstructArgs),
    /// Hunt for a rainbow pattern inside a colored graph file.
    Search(SearchArgs),
    /// Exact Turán numbers at small order by exhaustive search.
    Oracle(OracleArgs),
    /// Property checks: randomized sweeps and exhaustive lemma runs.
    Verify(VerifyArgs),
    /// Value grids for diffing against committed fixtures.
    Table(TableArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Output file for the graph text; defaults to a name derived from the
    /// construction and its parameters. A JSON sidecar lands next to it.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    which: ConstructCmd,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Clique on k vertices joined to n-k independent vertices.
    SplitGraph {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// c universal vertices over an edge-maximal colorable core.
    HStarForest {
        /// Star forest, e.g. M2 or S1,2,3.
        #[arg(long)]
        forest: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        c: u32,
    },
    /// i universal vertices over a degree-bounded core, uncolored.
    HPrime {
        /// Star forest, e.g. M2 or S1,2,3.
        #[arg(long)]
        forest: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        i: u32,
    },
    /// Disjoint one-factorized K4 blocks; n divisible by 4.
    K4Union {
        #[arg(long)]
        n: u32,
    },
    /// Disjoint XOR-colored K4,4 blocks; n divisible by 8.
    K44Union {
        #[arg(long)]
        n: u32,
    },
    /// Complete graph on the k-cube with XOR coloring.
    BooleanCubeClique {
        #[arg(long)]
        k: u32,
    },
    /// Exhaustive hunt for a rainbow-path-free proper coloring of a clique.
    RainbowFreeClique {
        /// Clique order.
        #[arg(long)]
        c: u32,
        /// Path length to avoid.
        #[arg(long)]
        l: u32,
        /// Cap on color assignments before giving up.
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Pattern to hunt for: M<k>, S<a,b,...>, or P<l>.
    #[arg(long)]
    pattern: String,
    /// Colored graph file in the text format.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    /// Which Turán number to compute.
    #[arg(long, value_enum)]
    mode: OracleMode,
    /// Host order; exhaustive enumeration caps at 8.
    #[arg(long)]
    n: u32,
    /// Pattern: M<k>, S<a,b,...>, or P<l>.
    #[arg(long)]
    pattern: String,
    /// Cap on search steps before giving up.
    #[arg(long)]
    budget: Option<u64>,
    /// Also write the extremal witness graph to this file.
    #[arg(long)]
    emit_witness: Option<PathBuf>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum OracleMode {
    Rainbow,
    Classical,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    check: VerifyCmd,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Rainbow path of length 2/3 of the minimum degree, on random proper
    /// colorings.
    TwoThirds(SweepArgs),
    /// Color-degree variant, on arbitrary (often improper) colorings.
    Theta(SweepArgs),
    /// Exhaustive low-degree counting lemma over all graphs of small order.
    DegreeLemma {
        /// Largest order to enumerate (at most 8).
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        /// Comma-separated slack values.
        #[arg(long, value_delimiter = ',', default_values_t = [0.0, 0.5, 0.9])]
        eps: Vec<f64>,
    },
    /// Random hosts with more edges than an upper bound allows; any
    /// rainbow-free sample refutes the bound.
    Falsify {
        /// Pattern under test: P<l> or M<k>.
        #[arg(long)]
        pattern: String,
        /// Host order.
        #[arg(long)]
        n: u32,
        #[arg(long)]
        trials: u64,
        /// Host edge count; defaults to the wired-in bound plus one.
        #[arg(long)]
        edges: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = PaletteArg::Recycled)]
        palette: PaletteArg,
        /// Store counterexample candidates here in graph text format.
        #[arg(long)]
        archive_dir: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    trials: u64,
    #[arg(long)]
    seed: Option<u64>,
    /// Smallest host order.
    #[arg(long, default_value_t = 2)]
    n_min: u32,
    /// Largest host order.
    #[arg(long, default_value_t = 10)]
    n_max: u32,
    /// Edge density in [0, 1].
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long, value_enum, default_value_t = PaletteArg::Recycled)]
    palette: PaletteArg,
    /// Node cap for the tightness probe; 0 disables deciding equality.
    #[arg(long, default_value_t = 200_000)]
    budget: u64,
    /// Worker threads; trials are seeded independently, so the report does
    /// not depend on the split.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Store failing hosts here in graph text format.
    #[arg(long)]
    archive_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum PaletteArg {
    /// Every edge its own color.
    Fresh,
    /// Greedy reuse of a small palette.
    Recycled,
}

impl From<PaletteArg> for rtk_core::harness::PaletteStrategy {
    fn from(p: PaletteArg) -> Self {
        match p {
            PaletteArg::Fresh => rtk_core::harness::PaletteStrategy::Fresh,
            PaletteArg::Recycled => rtk_core::harness::PaletteStrategy::Recycled,
        }
    }
}

#[derive(Args)]
struct TableArgs {
    #[command(subcommand)]
    grid: TableCmd,
}

#[derive(Subcommand)]
enum TableCmd {
    /// Star-forest construction edge counts over (n, c).
    HEdges {
        /// Star forest, e.g. M2 or S1,2,3.
        #[arg(long)]
        forest: String,
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
    },
    /// Exact rainbow Turán numbers over a range of small orders.
    ExRainbow {
        /// Pattern: M<k>, S<a,b,...>, or P<l>.
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        /// Cap on search steps before giving up.
        #[arg(long)]
        budget: Option<u64>,
    },
}

/// Failures that decide the exit code. Anything the user got wrong is
/// `Usage`; a check that genuinely failed, or a search that exhausted its
/// budget, is `Failed`.
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl CliError {
    fn usage(e: impl std::fmt::Display) -> CliError {
        CliError::Usage(e.to_string())
    }
}

fn pattern_from(text: &str) -> Result<rtk_core::Pattern, CliError> {
    rtk_core::Pattern::parse(text).map_err(|e| CliError::Usage(e.to_string()))
}

fn forest_from(text: &str) -> Result<rtk_core::StarForest, CliError> {
    match pattern_from(text)? {
        rtk_core::Pattern::Stars(f) => Ok(f),
        rtk_core::Pattern::Path(_) => Err(CliError::Usage(format!(
            "'{text}' is a path; this flag takes a star forest (M<k> or S<a,b,...>)"
        ))),
    }
}

/// Under RTK_CI=1 a missing `--seed` is a usage error, not a default.
fn resolve_seed(seed: Option<u64>) -> Result<u64, CliError> {
    match seed {
        Some(s) => Ok(s),
        None if std::env::var("RTK_CI").is_ok_and(|v| v == "1") => Err(CliError::Usage(
            "RTK_CI=1 forbids implicit seeds; pass --seed".into(),
        )),
        None => Ok(0),
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Construct(args) => cmd_construct::run(args, cli.format),
        Command::Search(args) => cmd_search::run(args, cli.format),
        Command::Oracle(args) => cmd_oracle::run(args, cli.format),
        Command::Verify(args) => cmd_verify::run(args, cli.format),
        Command::Table(args) => cmd_table::run(args, cli.format),
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
