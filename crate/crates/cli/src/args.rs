use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tightbound_core::outcome::DEFAULT_EXACT_CAP;

/// Largest `--cap` accepted; exact solvers are exponential in it.
pub const MAX_CAP: usize = 40;

#[derive(Debug, Parser)]
#[command(
    name = "tightbound",
    version,
    about = "Decide problems parameterized above tight lower bounds by kernelization and exact search"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct SolveOpts {
    /// Largest vertex or variable count an exact solve may enumerate.
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
    pub cap: usize,
    /// Worker threads for exact enumeration (0: all cores).
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    /// Also write the result as JSON to this path.
    #[arg(long)]
    pub emit: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Auto,
    OddSet,
    Arity,
    Occurrence,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    SymmetricDigraph,
    RandomOriented,
    CancellingPairsLin2,
    RandomLin2,
    CompleteRcnf,
    DisjointCompleteRcnf,
    Remark2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Is there an acyclic subdigraph of weight at least W/2 + k?
    Loalb {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        file: PathBuf,
        #[command(flatten)]
        opts: SolveOpts,
    },
    /// Does a unit-weight digraph have a feedback arc set of at most |A|/2 - k arcs?
    Fas {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        file: PathBuf,
        #[command(flatten)]
        opts: SolveOpts,
    },
    /// Can equations of total weight at least W/2 + k be satisfied at once?
    Linalb {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_enum, default_value_t = CaseArg::Auto)]
        case: CaseArg,
        file: PathBuf,
        #[command(flatten)]
        opts: SolveOpts,
    },
    /// Can at least (1 - 2^-r)m + k_num/2^r clauses be satisfied?
    Rsat {
        #[arg(long = "k-num", value_parser = clap::value_parser!(u64).range(1..))]
        k_num: u64,
        file: PathBuf,
        #[command(flatten)]
        opts: SolveOpts,
    },
    /// Exact distribution moments of X and the moment inequalities.
    Moments {
        file: PathBuf,
        /// Largest vertex count (digraphs) or variable count to enumerate.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Generate an instance; written to stdout unless --out is given.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertices or variables.
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Clause width.
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, default_value_t = 4)]
        pairs: usize,
        #[arg(long, default_value_t = 1)]
        copies: usize,
        /// Arc count for random-oriented (default: half of all pairs).
        #[arg(long)]
        arcs: Option<usize>,
        /// Equation count for random-lin2.
        #[arg(long, default_value_t = 10)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
        #[arg(long, default_value_t = 4)]
        max_weight: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}
