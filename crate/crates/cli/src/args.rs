use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Exit codes: 0 = success and all verifications passed, 1 = a verified
/// identity failed (diagnostics on stderr), 2 = usage or I/O error.
#[derive(Debug, Parser)]
#[command(
    name = "treelab",
    version,
    about = "Build, trace, and verify minimal AVL trees and bottom-up heap construction"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal (Fibonacci) AVL trees.
    #[command(subcommand)]
    Fibtree(FibtreeCommand),
    /// AVL insertion experiments.
    #[command(subcommand)]
    Avl(AvlCommand),
    /// Heap construction traces and verification sweeps.
    #[command(subcommand)]
    Heap(HeapCommand),
    /// Brute-force oracle runs.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Composite verification.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Subcommand)]
pub enum FibtreeCommand {
    /// Build the minimal tree of the given height and emit it.
    Build {
        /// Tree height (0 = single node).
        #[arg(long)]
        height: u32,
        /// Construction path.
        #[arg(long, value_enum)]
        method: BuildMethod,
        #[arg(long, value_enum, default_value_t = TreeFormat::Json)]
        format: TreeFormat,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the counting identities for every height up to the limit.
    Verify {
        #[arg(long)]
        max_height: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuildMethod {
    Recursive,
    Grow,
}

impl BuildMethod {
    pub fn label(self) -> &'static str {
        match self {
            BuildMethod::Recursive => "recursive",
            BuildMethod::Grow => "grow",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TreeFormat {
    Json,
    Dot,
}

impl TreeFormat {
    pub fn label(self) -> &'static str {
        match self {
            TreeFormat::Json => "json",
            TreeFormat::Dot => "dot",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum AvlCommand {
    /// Insert a key sequence and report height against the golden-ratio
    /// bound at power-of-two checkpoints.
    Experiment {
        /// Number of insertions to attempt.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        input: AvlInput,
        /// Seed for random input (ignored otherwise).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AvlInput {
    Random,
    Ascending,
}

impl AvlInput {
    pub fn label(self) -> &'static str {
        match self {
            AvlInput::Random => "random",
            AvlInput::Ascending => "ascending",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum HeapCommand {
    /// Run build-heap under the potential ledger and emit the merge trace.
    Trace {
        /// Input size; required unless the keys come from a file.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, value_enum)]
        input: HeapInput,
        /// Seed for random input (ignored otherwise).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Key file for --input file: one integer per line.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = TraceFormat::Csv)]
        format: TraceFormat,
    },
    /// Ledger + verification sweep over all sizes up to the limit.
    Verify {
        #[arg(long)]
        max_size: usize,
        /// Number of random seeds (0, 1, ..) besides ascending/descending.
        #[arg(long, default_value_t = 10)]
        seeds: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HeapInput {
    Ascending,
    Descending,
    Random,
    File,
}

impl HeapInput {
    pub fn label(self) -> &'static str {
        match self {
            HeapInput::Ascending => "ascending",
            HeapInput::Descending => "descending",
            HeapInput::Random => "random",
            HeapInput::File => "file",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TraceFormat {
    Csv,
    Json,
}

impl TraceFormat {
    pub fn label(self) -> &'static str {
        match self {
            TraceFormat::Csv => "csv",
            TraceFormat::Json => "json",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Exhaustive-search check of the minimal-tree node/leaf counts.
    Avl {
        /// Heights 0..=max-height (at most 5).
        #[arg(long)]
        max_height: u32,
    },
    /// All-permutations check of the build-heap cost bound.
    Heap {
        /// Sizes 1..=max-size (at most 9).
        #[arg(long)]
        max_size: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Every verification sweep at desk scale.
    All {
        #[arg(long, default_value_t = 20)]
        max_height: u32,
        #[arg(long, default_value_t = 1024)]
        max_size: usize,
    },
}
