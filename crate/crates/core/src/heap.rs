//! Binary max-heap over a 1-indexed array with Floyd's bottom-up
//! build-heap, instrumented per sift-down.
//!
//! Index `i`'s children are `2i` and `2i + 1`; the implicit tree is
//! complete. Addressing is 1-indexed internally so the parent/child
//! arithmetic stays in that form; constructors accept ordinary 0-indexed
//! slices.
//!
//! The cost unit is one sift-down loop *iteration*: one "compare the
//! current element against its larger child, swap if needed" pass. A pass
//! that finds the element already in place still counts (the check was
//! paid for); an element that lands on a childless position stops without
//! a further iteration. Raw key comparisons are tracked separately and
//! are at most two per iteration.

use crate::error::{Error, Result};

/// Instrumentation for one sift-down call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SiftStats {
    /// 1-based index the sift-down started from.
    pub start_index: usize,
    /// Loop passes; at most the height of the subtree at `start_index`.
    pub iterations: u64,
    /// Raw key comparisons; at most `2 * iterations`.
    pub comparisons: u64,
}

/// First parent/child pair violating the heap property (1-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeapViolation {
    pub parent: usize,
    pub child: usize,
}

/// A complete binary tree of keys in array form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeapBuffer<K> {
    keys: Vec<K>,
}

impl<K: Ord> HeapBuffer<K> {
    pub fn from_keys(keys: Vec<K>) -> Self {
        HeapBuffer { keys }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Key at 1-based index `i`.
    pub fn key(&self, i: usize) -> Option<&K> {
        if i == 0 {
            return None;
        }
        self.keys.get(i - 1)
    }

    /// The underlying 0-indexed storage.
    pub fn as_slice(&self) -> &[K] {
        &self.keys
    }

    pub fn into_keys(self) -> Vec<K> {
        self.keys
    }

    /// Repairs the subtree rooted at 1-based index `i`, assuming the
    /// subtrees below it already satisfy the heap property.
    pub fn sift_down(&mut self, i: usize) -> Result<SiftStats> {
        let n = self.keys.len();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        let mut stats = SiftStats {
            start_index: i,
            iterations: 0,
            comparisons: 0,
        };
        let mut cur = i;
        loop {
            let left = 2 * cur;
            if left > n {
                break;
            }
            stats.iterations += 1;
            let mut larger = left;
            if left < n {
                stats.comparisons += 1;
                if self.keys[left] > self.keys[left - 1] {
                    larger = left + 1;
                }
            }
            stats.comparisons += 1;
            if self.keys[cur - 1] >= self.keys[larger - 1] {
                break;
            }
            self.keys.swap(cur - 1, larger - 1);
            cur = larger;
        }
        Ok(stats)
    }

    /// Floyd's bottom-up construction: sift-down at every internal index
    /// from `n/2` down to 1. Returns one stats record per sift-down.
    pub fn build_heap(&mut self) -> Vec<SiftStats> {
        let n = self.keys.len();
        let mut all = Vec::with_capacity(n / 2);
        for i in (1..=n / 2).rev() {
            let stats = self
                .sift_down(i)
                .expect("internal indices are always in range");
            all.push(stats);
        }
        all
    }

    /// True iff `keys[j/2] >= keys[j]` for every `2 <= j <= n`.
    pub fn validate_heap(&self) -> bool {
        self.first_violation().is_none()
    }

    pub fn first_violation(&self) -> Option<HeapViolation> {
        for j in 2..=self.keys.len() {
            if self.keys[j / 2 - 1] < self.keys[j - 1] {
                return Some(HeapViolation {
                    parent: j / 2,
                    child: j,
                });
            }
        }
        None
    }
}

/// The aggregate-method bound on total sift-down work:
/// `sum over h = 0..floor(log2 n) of h * ceil(n / 2^(h+1))`.
///
/// Always at most `2n`.
pub fn aggregate_bound(n: u64) -> u64 {
    assert!(n >= 1, "aggregate bound needs n >= 1");
    let max_h = n.ilog2();
    let mut total = 0u64;
    for h in 0..=max_h {
        let divisor = 1u64 << (h + 1);
        let count = n.div_ceil(divisor);
        total += u64::from(h) * count;
    }
    total
}

/// Height of the subtree rooted at 1-based index `i` in a complete tree
/// of `n` nodes: `floor(log2(n / i))`, computed by doubling down the
/// leftmost descendant path.
pub fn subtree_height(n: usize, i: usize) -> u32 {
    assert!(i >= 1 && i <= n, "index {i} out of range 1..={n}");
    let mut h = 0u32;
    let mut leftmost = i;
    while leftmost <= n / 2 {
        leftmost *= 2;
        h += 1;
    }
    h
}

/// `counts[h]` = number of indices whose subtree has height `h`, for a
/// complete tree of `n` nodes. The exact count is
/// `floor(n / 2^h) - floor(n / 2^(h+1))`; the classic aggregate-method
/// estimate `ceil(n / 2^(h+1))` is an upper bound on it, tight only when
/// `n mod 2^(h+1)` is zero or at least `2^h`.
pub fn subtree_height_counts(n: usize) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut counts = vec![0u64; n.ilog2() as usize + 1];
    for i in 1..=n {
        counts[subtree_height(n, i) as usize] += 1;
    }
    counts
}
