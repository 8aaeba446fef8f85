//! Command-line front end for `ocm-core`.
//!
//! Every command produces a [`RunReport`] on stdout. Exit status: 0 success,
//! 1 verification failure, 2 input error, 3 resource cap.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod dot;
pub mod report;
mod verify;

pub use report::RunReport;

#[derive(Debug, Parser)]
#[command(name = "ocm", version, about = "Orientation control matching solver and reduction checker")]
pub struct Cli {
    /// Worker threads for parallel search (results do not depend on it).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Append wall-clock time to the report.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Brute,
    Exact,
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceKind {
    /// Directed digraph to AOCM (3-cycle cover).
    #[value(name = "3dcc")]
    Dcc3,
    /// AOCM instance to its node-weighted conflict graph.
    Wis,
    /// Cubic graph to the independent-set gadget instance.
    Is3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lemma1,
    Lemma2,
    Lemma3,
    Lreduction,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimal orientation of an unweighted graph.
    SolveOcm { path: PathBuf },
    /// Weighted orientation (AOCM) of a weighted or unweighted edge list.
    SolveAocm {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Counter ranges for the brute-force search.
        #[arg(long, default_value_t = 64)]
        partitions: usize,
        #[arg(long, default_value_t = ocm_core::aocm::DEFAULT_BRUTE_EDGE_CAP)]
        edge_cap: usize,
        /// Branch-and-bound node budget for the exact search.
        #[arg(long, default_value_t = ocm_core::mwis::DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Write a reduced instance.
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        input: PathBuf,
        output: PathBuf,
    },
    /// Check a reduction or bound against the exhaustive oracles.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_n: Option<usize>,
        /// Random cases per suite (or per graph).
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Render an instance and a solution of it as Graphviz DOT.
    ExportDot {
        input: PathBuf,
        output: PathBuf,
        /// Treat the input as a cubic graph and render its gadget instance.
        #[arg(long)]
        gadget: bool,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] ocm_core::Error),
    #[error("{0}")]
    Io(String),
    /// The report lists the violations.
    #[error("verification failed")]
    Verification(RunReport),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Core(ocm_core::Error::Resource { .. }) => 3,
            CliError::Core(_) | CliError::Io(_) => 2,
        }
    }
}

/// Runs one command. Thread count is the caller's business.
pub fn run(cli: &Cli) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::SolveOcm { path } => commands::solve_ocm(path),
        Command::SolveAocm {
            path,
            mode,
            partitions,
            edge_cap,
            node_budget,
        } => commands::solve_aocm(path, *mode, *partitions, *edge_cap, *node_budget),
        Command::Reduce { kind, input, output } => commands::reduce(*kind, input, output),
        Command::Verify {
            suite,
            seed,
            max_n,
            samples,
        } => verify::run(*suite, *seed, *max_n, *samples),
        Command::ExportDot { input, output, gadget } => dot::export(input, output, *gadget),
    }?;
    if cli.timing {
        report.field("elapsed_ms", start.elapsed().as_millis());
    }
    Ok(report)
}
