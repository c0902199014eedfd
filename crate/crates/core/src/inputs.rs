//! Deterministic input generators for experiments and sweeps.
//!
//! Random inputs come from ChaCha8 seeded with a caller-supplied 64-bit
//! seed, so a given `(kind, seed, n)` always produces the same keys on
//! every platform. The OS generator is never consulted.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// How to produce an input array of a given size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Ascending,
    Descending,
    Random { seed: u64 },
}

impl InputKind {
    pub fn label(&self) -> &'static str {
        match self {
            InputKind::Ascending => "ascending",
            InputKind::Descending => "descending",
            InputKind::Random { .. } => "random",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            InputKind::Random { seed } => Some(*seed),
            _ => None,
        }
    }

    pub fn generate(&self, n: usize) -> Vec<i64> {
        match self {
            InputKind::Ascending => (1..=n as i64).collect(),
            InputKind::Descending => (1..=n as i64).rev().collect(),
            InputKind::Random { seed } => random_keys(n, *seed),
        }
    }
}

/// `n` uniform 64-bit keys, reinterpreted as `i64`.
pub fn random_keys(n: usize, seed: u64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.next_u64() as i64).collect()
}

/// `n` uniform `u64` keys (for tree experiments, where keys stay unsigned).
pub fn random_u64_keys(n: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.next_u64()).collect()
}
