//! Brute-force oracles, independent of the main-path code.
//!
//! Nothing here calls into [`crate::avl`], [`crate::minimal`],
//! [`crate::fib`], [`crate::heap`], or [`crate::ledger`]; heights, costs,
//! and counts are all re-derived from scratch so that agreement between
//! an oracle and the main path actually means something.
//!
//! * [`enumerate_shapes`] lists every binary tree shape up to a size
//!   bound (Catalan-many per size) and annotates height and AVL validity.
//! * [`min_nodes_oracle`] / [`min_leaves_oracle`] find the smallest AVL
//!   tree of a given height by exhaustive search.
//! * [`heap_worst_cost_oracle`] maximizes total build-heap cost over all
//!   key permutations.

use crate::error::{Error, Result};

/// Largest size [`enumerate_shapes`] accepts. Catalan(16) is already
/// ~3.5e7 shapes; beyond that the table stops fitting in memory.
pub const MAX_ENUM_NODES: usize = 16;

/// Largest height the AVL search oracles accept.
pub const MAX_ORACLE_HEIGHT: u32 = 5;

/// Largest heap size [`heap_worst_cost_oracle`] accepts (9! permutations).
pub const MAX_ORACLE_HEAP: usize = 9;

/// One binary tree shape in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    /// Preorder bitstring: `1` = node, `0` = empty slot. Two shapes are
    /// equal iff their encodings are equal.
    pub encoding: String,
    /// Height under the empty = -1, leaf = 0 convention.
    pub height: i32,
    /// True when every node's child heights differ by at most 1.
    pub is_avl: bool,
    pub leaf_count: u64,
}

/// All shapes for every size `0..=max_size`.
#[derive(Debug, Clone)]
pub struct ShapeTable {
    by_size: Vec<Vec<Shape>>,
}

impl ShapeTable {
    pub fn max_size(&self) -> usize {
        self.by_size.len() - 1
    }

    pub fn shapes(&self, n: usize) -> &[Shape] {
        &self.by_size[n]
    }
}

/// Enumerates every binary tree shape with up to `max_size` nodes by
/// recursive left/right size splits.
pub fn enumerate_shapes(max_size: usize) -> Result<ShapeTable> {
    if max_size > MAX_ENUM_NODES {
        return Err(Error::OutOfReach {
            what: "shape enumeration size",
            value: max_size as u64,
            max: MAX_ENUM_NODES as u64,
            reason: "Catalan growth makes larger tables impractical",
        });
    }
    let mut by_size: Vec<Vec<Shape>> = Vec::with_capacity(max_size + 1);
    by_size.push(vec![Shape {
        encoding: "0".to_string(),
        height: -1,
        is_avl: true,
        leaf_count: 0,
    }]);
    for n in 1..=max_size {
        let mut shapes = Vec::new();
        for left_size in 0..n {
            let right_size = n - 1 - left_size;
            for li in 0..by_size[left_size].len() {
                for ri in 0..by_size[right_size].len() {
                    let (left, right) = (&by_size[left_size][li], &by_size[right_size][ri]);
                    let mut encoding = String::with_capacity(2 * n + 1);
                    encoding.push('1');
                    encoding.push_str(&left.encoding);
                    encoding.push_str(&right.encoding);
                    shapes.push(Shape {
                        encoding,
                        height: 1 + left.height.max(right.height),
                        is_avl: left.is_avl
                            && right.is_avl
                            && (left.height - right.height).abs() <= 1,
                        leaf_count: if n == 1 {
                            1
                        } else {
                            left.leaf_count + right.leaf_count
                        },
                    });
                }
            }
        }
        by_size.push(shapes);
    }
    Ok(ShapeTable { by_size })
}

/// Catalan numbers by the convolution recurrence (the expected shape
/// count per size).
pub fn catalan(n: usize) -> u64 {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

/// Smallest node count of any AVL-valid shape with height exactly `h`.
///
/// For `h <= 4` the answer is found by exhaustive shape enumeration. For
/// `h = 5` the answer needs trees of up to 20 nodes, far past enumeration
/// reach, so the search switches to a branch-and-bound over achievable
/// subtree heights per size (which considers every size split but never
/// materializes shapes).
pub fn min_nodes_oracle(h: u32) -> Result<u64> {
    if h > MAX_ORACLE_HEIGHT {
        return Err(Error::OutOfReach {
            what: "oracle height",
            value: u64::from(h),
            max: u64::from(MAX_ORACLE_HEIGHT),
            reason: "exhaustive search explodes past height 5",
        });
    }
    if h <= 4 {
        let table = enumerate_shapes(12)?;
        for n in 1..=table.max_size() {
            if table
                .shapes(n)
                .iter()
                .any(|s| s.is_avl && s.height == h as i32)
            {
                return Ok(n as u64);
            }
        }
        unreachable!("height {h} is reachable within 12 nodes");
    }
    let heights = achievable_heights(24);
    for (n, set) in heights.iter().enumerate().skip(1) {
        if set.contains(&(h as i32)) {
            return Ok(n as u64);
        }
    }
    unreachable!("height {h} is reachable within 24 nodes");
}

/// Minimum leaf count among the minimum-node AVL shapes of height `h`.
pub fn min_leaves_oracle(h: u32) -> Result<u64> {
    let min_n = min_nodes_oracle(h)? as usize;
    if h <= 4 {
        let table = enumerate_shapes(min_n)?;
        return Ok(table
            .shapes(min_n)
            .iter()
            .filter(|s| s.is_avl && s.height == h as i32)
            .map(|s| s.leaf_count)
            .min()
            .expect("a shape of the minimal size exists"));
    }
    min_leaves_by_heights(min_n, h as i32)
}

/// `result[n]` = set of heights realizable by an AVL-valid shape of `n`
/// nodes, built by dynamic programming over size splits.
fn achievable_heights(max_size: usize) -> Vec<Vec<i32>> {
    let mut sets: Vec<Vec<i32>> = vec![vec![-1]];
    for n in 1..=max_size {
        let mut set: Vec<i32> = Vec::new();
        for left_size in 0..n {
            let right_size = n - 1 - left_size;
            // Split the borrow: sets[left_size] and sets[right_size] are
            // both strictly below n.
            for &lh in &sets[left_size] {
                for &rh in &sets[right_size] {
                    if (lh - rh).abs() <= 1 {
                        let h = 1 + lh.max(rh);
                        if !set.contains(&h) {
                            set.push(h);
                        }
                    }
                }
            }
        }
        set.sort_unstable();
        sets.push(set);
    }
    sets
}

/// Minimum leaves over AVL shapes with exactly `n` nodes and height `h`,
/// by dynamic programming on (size, height).
fn min_leaves_by_heights(n: usize, h: i32) -> Result<u64> {
    // best[size][height + 1] = min leaves, or None if unrealizable.
    let h_max = h + 1;
    let mut best: Vec<Vec<Option<u64>>> = vec![vec![None; (h_max + 2) as usize]; n + 1];
    best[0][0] = Some(0); // empty tree, height -1, zero leaves
    for size in 1..=n {
        for left_size in 0..size {
            let right_size = size - 1 - left_size;
            for lh in -1..=h_max {
                let Some(left_leaves) = best[left_size][(lh + 1) as usize] else {
                    continue;
                };
                for rh in -1..=h_max {
                    if (lh - rh).abs() > 1 {
                        continue;
                    }
                    let Some(right_leaves) = best[right_size][(rh + 1) as usize] else {
                        continue;
                    };
                    let height = 1 + lh.max(rh);
                    if height > h_max {
                        continue;
                    }
                    let leaves = if size == 1 {
                        1
                    } else {
                        left_leaves + right_leaves
                    };
                    let slot = &mut best[size][(height + 1) as usize];
                    if slot.is_none_or(|cur| leaves < cur) {
                        *slot = Some(leaves);
                    }
                }
            }
        }
    }
    best[n][(h + 1) as usize].ok_or(Error::OutOfReach {
        what: "height",
        value: h as u64,
        max: MAX_ORACLE_HEIGHT as u64,
        reason: "no AVL shape with that size and height",
    })
}

/// Total build-heap iterations for `keys`, re-derived with a standalone
/// 0-indexed sift-down (same cost unit as the instrumented heap, shared
/// code: none).
pub fn heap_build_cost(keys: &[i64]) -> u64 {
    let mut a = keys.to_vec();
    let n = a.len();
    let mut total = 0u64;
    for root in (0..n / 2).rev() {
        let mut cur = root;
        loop {
            let left = 2 * cur + 1;
            if left >= n {
                break;
            }
            total += 1;
            let mut big = left;
            if left + 1 < n && a[left + 1] > a[left] {
                big = left + 1;
            }
            if a[cur] >= a[big] {
                break;
            }
            a.swap(cur, big);
            cur = big;
        }
    }
    total
}

/// Build cost of the ascending input `1..=n`.
pub fn ascending_build_cost(n: usize) -> u64 {
    let keys: Vec<i64> = (1..=n as i64).collect();
    heap_build_cost(&keys)
}

/// Height of the subtree at 1-based index `i`, by direct recursion (the
/// cross-check for the closed-form level formula).
pub fn subtree_height_recursive(n: usize, i: usize) -> u32 {
    assert!(i >= 1 && i <= n);
    let left = 2 * i;
    if left > n {
        return 0;
    }
    let mut h = 1 + subtree_height_recursive(n, left);
    if left < n {
        h = h.max(1 + subtree_height_recursive(n, left + 1));
    }
    h
}

/// Sum of subtree heights over the internal indices: the structural
/// ceiling on total build-heap iterations.
pub fn descent_depth_sum(n: usize) -> u64 {
    (1..=n / 2)
        .map(|i| u64::from(subtree_height_recursive(n, i)))
        .sum()
}

/// Maximum total build-heap cost over all `n!` key permutations.
pub fn heap_worst_cost_oracle(n: usize) -> Result<u64> {
    if n > MAX_ORACLE_HEAP {
        return Err(Error::OutOfReach {
            what: "oracle heap size",
            value: n as u64,
            max: MAX_ORACLE_HEAP as u64,
            reason: "n! permutations explode past 9",
        });
    }
    let mut keys: Vec<i64> = (1..=n as i64).collect();
    let mut worst = 0u64;
    permute(&mut keys, 0, &mut |perm| {
        worst = worst.max(heap_build_cost(perm));
    });
    Ok(worst)
}

/// Heap's permutation algorithm, recursive form.
fn permute(keys: &mut Vec<i64>, k: usize, visit: &mut impl FnMut(&[i64])) {
    if k + 1 >= keys.len() {
        visit(keys);
        return;
    }
    for i in k..keys.len() {
        keys.swap(k, i);
        permute(keys, k + 1, visit);
        keys.swap(k, i);
    }
}
