//! Instrumented construction and verification of two classic tree structures.
//!
//! The crate has two halves:
//!
//! * **Trees**: a standard AVL tree ([`avl`]), plus construction of the
//!   *minimal* AVL tree of each height — the Fibonacci tree — both by its
//!   recursive definition and by incremental leaf addition ([`minimal`]).
//!   The leaf-addition path records, per growth step, exactly which nodes
//!   were added, which makes the Fibonacci structure of node and leaf
//!   counts directly observable.
//! * **Heaps**: a 1-indexed binary max-heap with Floyd's bottom-up
//!   build-heap ([`heap`]), instrumented per sift-down, and a potential
//!   ledger ([`ledger`]) that views build-heap as a sequence of heap
//!   merges and checks the amortized cost of every merge.
//!
//! Brute-force oracles ([`oracle`]) re-derive the key quantities by
//! exhaustive enumeration so the main-path results can be checked against
//! code that shares nothing with them.
//!
//! # Fibonacci convention
//!
//! Everything in this crate uses `F(0) = F(1) = 1` (so `F(2) = 2`,
//! `F(3) = 3`, `F(4) = 5`, ...). With that convention the minimal AVL tree
//! of height `h` has `F(h+2) - 1` nodes and `F(h)` leaves. See [`fib`].

pub mod avl;
pub mod dot;
pub mod error;
pub mod fib;
pub mod heap;
pub mod inputs;
pub mod ledger;
pub mod minimal;
pub mod oracle;

pub use avl::{AvlNode, AvlTree, Generation};
pub use error::{Error, Result};
pub use heap::{HeapBuffer, SiftStats};
pub use inputs::InputKind;
pub use ledger::{HeapLevel, MergeCase, MergeEvent, PotentialTrace};
pub use minimal::{FringeClassification, GrowthTrace};
