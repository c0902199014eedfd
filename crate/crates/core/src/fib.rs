//! Fibonacci arithmetic under the convention `F(0) = F(1) = 1`.
//!
//! The convention matters: the minimal AVL tree of height 0 is a single
//! node which is its own leaf, so the leaf-count sequence starts at 1, 1.
//! Every identity in this crate is stated with this indexing:
//!
//! * leaves of the minimal tree of height `h`: `F(h)`
//! * nodes of the minimal tree of height `h`: `F(h+2) - 1`
//! * prefix sum: `F(0) + ... + F(h) = F(h+2) - 1`
//!
//! All integer results are exact `u64` values; anything that would leave
//! the 64-bit range is reported as [`Error::FibOverflow`] rather than
//! wrapped. `F(92)` is the largest value that fits.

use crate::error::{Error, Result};

/// Golden ratio, `(1 + sqrt 5) / 2`.
pub const PHI: f64 = 1.618033988749894848204586834365638118;

/// Relative slack applied to every comparison against a phi-based bound.
pub const PHI_REL_TOL: f64 = 1e-9;

/// `F(i)` with `F(0) = F(1) = 1`.
pub fn fib(i: u32) -> Result<u64> {
    if i < 2 {
        return Ok(1);
    }
    let (mut prev, mut cur) = (1u64, 1u64);
    for step in 2..=i {
        let next = prev
            .checked_add(cur)
            .ok_or(Error::FibOverflow { index: step })?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `F(0) + F(1) + ... + F(h)`, which equals `F(h+2) - 1`.
pub fn fib_prefix_sum(h: u32) -> Result<u64> {
    let h2 = h.checked_add(2).ok_or(Error::FibOverflow { index: h })?;
    Ok(fib(h2)? - 1)
}

/// Node count of the minimal AVL tree of height `h`: `F(h+2) - 1`.
///
/// Satisfies `min_nodes(h) = min_nodes(h-1) + min_nodes(h-2) + 1` for
/// `h >= 2`.
pub fn min_nodes(h: u32) -> Result<u64> {
    fib_prefix_sum(h)
}

/// Leaf count of the minimal AVL tree of height `h`: `F(h)`.
pub fn min_leaves(h: u32) -> Result<u64> {
    fib(h)
}

/// `log_phi(n + 1)`, the height bound for an AVL tree with `n >= 1` nodes.
///
/// Monotone nondecreasing in `n`. Comparisons against this value should
/// allow [`PHI_REL_TOL`] relative slack.
pub fn golden_height_bound(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    Ok((n as f64 + 1.0).ln() / PHI.ln())
}

/// A prefix of the Fibonacci sequence, `values[i] = F(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibSequence {
    values: Vec<u64>,
}

impl FibSequence {
    /// Builds `F(0)..=F(max_index)`.
    pub fn up_to(max_index: u32) -> Result<Self> {
        let mut values = Vec::with_capacity(max_index as usize + 1);
        for i in 0..=max_index {
            values.push(fib(i)?);
        }
        Ok(FibSequence { values })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, i: u32) -> Option<u64> {
        self.values.get(i as usize).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases_and_unrolled_recurrence() {
        assert_eq!(fib(0).unwrap(), 1);
        assert_eq!(fib(1).unwrap(), 1);
        // 1, 1, 2, 3, 5, 8
        assert_eq!(fib(5).unwrap(), 8);
        assert_eq!(fib(10).unwrap(), 89);
    }

    #[test]
    fn prefix_sums() {
        assert_eq!(fib_prefix_sum(0).unwrap(), 1);
        // 1 + 1 + 2 + 3 = 7 = F(5) - 1
        assert_eq!(fib_prefix_sum(3).unwrap(), 7);
        // 1 + 1 + 2 + 3 + 5 = 12 = F(6) - 1
        assert_eq!(fib_prefix_sum(4).unwrap(), 12);
    }

    #[test]
    fn prefix_sum_identity_exact_to_80() {
        let mut sum = 0u64;
        for h in 0..=80u32 {
            sum += fib(h).unwrap();
            assert_eq!(fib_prefix_sum(h).unwrap(), sum);
            assert_eq!(sum, fib(h + 2).unwrap() - 1);
        }
    }

    #[test]
    fn min_nodes_values_and_recurrence() {
        assert_eq!(min_nodes(0).unwrap(), 1);
        assert_eq!(min_nodes(3).unwrap(), 7);
        // 7 + 4 + 1
        assert_eq!(min_nodes(4).unwrap(), 12);
        for h in 2..=80u32 {
            assert_eq!(
                min_nodes(h).unwrap(),
                min_nodes(h - 1).unwrap() + min_nodes(h - 2).unwrap() + 1
            );
        }
    }

    #[test]
    fn min_leaves_values() {
        assert_eq!(min_leaves(0).unwrap(), 1);
        assert_eq!(min_leaves(2).unwrap(), 2);
        // 3 + 2
        assert_eq!(min_leaves(4).unwrap(), 5);
    }

    #[test]
    fn fib_dominates_phi_powers() {
        for i in 0..=80u32 {
            let f = fib(i).unwrap() as f64;
            let bound = PHI.powi(i as i32 - 2);
            assert!(
                f >= bound * (1.0 - PHI_REL_TOL),
                "F({i}) = {f} < phi^({i}-2) = {bound}"
            );
        }
    }

    #[test]
    fn overflow_is_reported_not_wrapped() {
        // F(92) is the last value that fits in u64.
        assert_eq!(fib(92).unwrap(), 12_200_160_415_121_876_738);
        assert_eq!(fib(93), Err(Error::FibOverflow { index: 93 }));
        assert_eq!(fib(200), Err(Error::FibOverflow { index: 93 }));
        assert_eq!(min_nodes(91), Err(Error::FibOverflow { index: 93 }));
    }

    #[test]
    fn golden_bound_values() {
        // ln 2 / ln phi and ln 8 / ln phi, computed independently.
        let b1 = golden_height_bound(1).unwrap();
        assert!((b1 - 1.440_420_090_412_556_4).abs() < 1e-12);
        let b7 = golden_height_bound(7).unwrap();
        assert!((b7 - 4.321_260_271_237_668).abs() < 1e-12);
        assert_eq!(golden_height_bound(0), Err(Error::EmptyTree));
        // monotone
        let mut prev = 0.0;
        for n in 1..200u64 {
            let b = golden_height_bound(n).unwrap();
            assert!(b >= prev);
            prev = b;
        }
    }

    #[test]
    fn sequence_prefix_matches_pointwise() {
        let seq = FibSequence::up_to(40).unwrap();
        assert_eq!(seq.values().len(), 41);
        for i in 0..=40u32 {
            assert_eq!(seq.get(i).unwrap(), fib(i).unwrap());
        }
        assert_eq!(seq.get(41), None);
    }
}
