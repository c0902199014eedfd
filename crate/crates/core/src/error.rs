use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared across the crate. Arithmetic never wraps silently and
/// precondition violations are reported, not panicked on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact integer arithmetic would leave the u64 range.
    #[error("F({index}) does not fit in 64 bits; refusing to wrap")]
    FibOverflow { index: u32 },

    #[error("duplicate key rejected")]
    DuplicateKey,

    #[error("tree height must be >= -1, got {height}")]
    InvalidHeight { height: i64 },

    #[error("operation requires a nonempty tree")]
    EmptyTree,

    #[error("tree failed AVL validation: {detail}")]
    InvalidTree { detail: String },

    /// A minimal tree of height `height` has exactly `expected` nodes.
    #[error("not a minimal tree: height {height} requires {expected} nodes, found {actual}")]
    NotMinimal {
        height: i32,
        expected: u64,
        actual: u64,
    },

    /// Minimal trees of height >= 2 never have a node with two leaf children.
    #[error("node {key} has two leaf children in a tree of height {height}; input is not minimal")]
    TwoLeafChildren { key: u64, height: i32 },

    #[error("node {key} carries no generation tag")]
    UntaggedNode { key: u64 },

    #[error("heap index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    /// An oracle was asked for something beyond its enumeration reach.
    #[error("{what} = {value} exceeds the supported maximum {max} ({reason})")]
    OutOfReach {
        what: &'static str,
        value: u64,
        max: u64,
        reason: &'static str,
    },
}
