//! Benchmark-only crate; see `benches/construction.rs`.
//!
//! Wall-clock numbers are for curiosity and regression hunting. The
//! verified cost claims all live in counted units (sift-down iterations),
//! not time; see `treelab-core` and the acceptance suite.

/// Input sizes shared by the benchmarks.
pub const SIZES: [usize; 3] = [256, 1024, 4096];
