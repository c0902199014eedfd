//! Minimal AVL trees (Fibonacci trees) built two ways.
//!
//! `T(h)` denotes the AVL tree of height `h` with the fewest nodes. It can
//! be defined recursively — a root whose subtrees are `T(h-1)` and
//! `T(h-2)` — or built incrementally from a single node by adding leaves:
//! every step that takes `T(h-1)` to `T(h)` only attaches new leaves, and
//! the places where leaves can be attached are exactly the *fringe* of the
//! tree:
//!
//! * a **T1 subtree**: an internal node with exactly one child, that child
//!   a leaf;
//! * a **T0 leaf**: a leaf that is not the child of a T1 root.
//!
//! Growing one step gives the T0 leaf a child (it becomes a T1 root), and
//! gives a T1 root a grandchild under its leaf plus a new leaf in its
//! empty slot. No existing node moves, so the old tree's nodes become
//! exactly the internal nodes of the new tree, and the new leaves are in
//! bijection with the old fringe. Counting nodes per growth generation
//! therefore reproduces the Fibonacci sequence: generation `g` contributes
//! `F(g)` nodes, and `T(h)` has `F(0) + ... + F(h) = F(h+2) - 1` nodes
//! total.
//!
//! Both construction paths produce the same canonical shape: the recursive
//! builder puts the taller subtree on the left, and [`grow`] attaches all
//! single new leaves on the left. Keys are assigned by an in-order
//! relabeling after each step so the result is always a valid search tree.

use serde::Serialize;

use crate::avl::{AvlNode, AvlTree, Generation};
use crate::error::{Error, Result};
use crate::fib;

/// Fringe of a minimal tree: T1 subtree roots and uncovered T0 leaves,
/// identified by key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FringeClassification {
    /// Keys of internal nodes with exactly one child, that child a leaf.
    pub t1_root_keys: Vec<u64>,
    /// Keys of leaves not contained in any T1 subtree.
    pub t0_leaf_keys: Vec<u64>,
}

/// One growth step: how many leaves were added and the resulting totals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenerationRecord {
    pub step: u32,
    pub leaves_added: u64,
    pub nodes_total: u64,
    pub leaves_total: u64,
}

/// Per-generation record of an incremental construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthTrace {
    pub generations: Vec<GenerationRecord>,
}

/// Builds `T(h)` by the recursive definition: a root with left subtree
/// `T(h-1)` and right subtree `T(h-2)`. `h = -1` gives the empty tree.
///
/// Keys are in-order positions `0..n`, so the result is a valid search
/// tree. Nodes carry no generation tag.
pub fn build_recursive(h: i32) -> Result<AvlTree<u64>> {
    if h < -1 {
        return Err(Error::InvalidHeight { height: h as i64 });
    }

    fn rec(h: i32, next_key: &mut u64) -> Option<Box<AvlNode<u64>>> {
        if h == -1 {
            return None;
        }
        if h == 0 {
            let key = *next_key;
            *next_key += 1;
            return Some(Box::new(AvlNode::leaf(key, None)));
        }
        let left = rec(h - 1, next_key);
        let key = *next_key;
        *next_key += 1;
        let right = rec(h - 2, next_key);
        let mut node = AvlNode::leaf(key, None);
        node.left = left;
        node.right = right;
        node.update_height();
        debug_assert_eq!(node.cached_height, h);
        Some(Box::new(node))
    }

    let mut next_key = 0u64;
    let root = rec(h, &mut next_key);
    Ok(AvlTree {
        root,
        size: next_key as usize,
    })
}

/// Partitions the fringe of a minimal tree into T1 roots and T0 leaves.
///
/// For a minimal tree of height `h >= 2` the counts are `F(h-1)` T1 roots
/// and `F(h-2)` T0 leaves. A node with two leaf children cannot occur in a
/// minimal tree of height >= 2; finding one is reported as an error.
pub fn classify_fringe(tree: &AvlTree<u64>) -> Result<FringeClassification> {
    let height = tree.height();
    let mut t1_root_keys = Vec::new();
    let mut t0_leaf_keys = Vec::new();

    fn walk(
        node: &AvlNode<u64>,
        tree_height: i32,
        t1: &mut Vec<u64>,
        t0: &mut Vec<u64>,
    ) -> Result<()> {
        if node.is_leaf() {
            t0.push(*node.key());
            return Ok(());
        }
        let left_is_leaf = node.left().is_some_and(AvlNode::is_leaf);
        let right_is_leaf = node.right().is_some_and(AvlNode::is_leaf);
        match (node.left(), node.right()) {
            (Some(_), Some(_)) if left_is_leaf && right_is_leaf => {
                if tree_height >= 2 {
                    return Err(Error::TwoLeafChildren {
                        key: *node.key(),
                        height: tree_height,
                    });
                }
                // Height-1 perfect tree (not minimal, tolerated): both
                // leaves are uncovered.
                t0.push(*node.left().expect("left child").key());
                t0.push(*node.right().expect("right child").key());
                Ok(())
            }
            (Some(child), None) | (None, Some(child)) if child.is_leaf() => {
                // T1 subtree: the root absorbs its leaf child.
                t1.push(*node.key());
                Ok(())
            }
            _ => {
                if let Some(left) = node.left() {
                    walk(left, tree_height, t1, t0)?;
                }
                if let Some(right) = node.right() {
                    walk(right, tree_height, t1, t0)?;
                }
                Ok(())
            }
        }
    }

    if let Some(root) = tree.root() {
        walk(root, height, &mut t1_root_keys, &mut t0_leaf_keys)?;
    }
    Ok(FringeClassification {
        t1_root_keys,
        t0_leaf_keys,
    })
}

/// Grows a minimal tree of height `h-1` into one of height `h` by adding
/// leaves only. The empty tree grows into a single node.
///
/// Fringe rules (see the module docs): each T0 leaf gets a new left child;
/// each T1 root gets a new leaf under its leaf child (on the left) and a
/// new leaf filling its empty slot. New nodes are tagged with
/// `next_generation`; existing nodes, tags, and positions are untouched.
/// Keys are reassigned in order afterwards.
pub fn grow(tree: AvlTree<u64>, next_generation: Generation) -> Result<AvlTree<u64>> {
    if tree.is_empty() {
        let root = AvlNode::leaf(0u64, Some(next_generation));
        return Ok(AvlTree {
            root: Some(Box::new(root)),
            size: 1,
        });
    }

    tree.validate().map_err(|v| Error::InvalidTree {
        detail: v.to_string(),
    })?;
    let height = tree.height();
    let expected = fib::min_nodes(height as u32)?;
    let actual = tree.count_nodes() as u64;
    if actual != expected {
        return Err(Error::NotMinimal {
            height,
            expected,
            actual,
        });
    }

    fn new_leaf(generation: Generation) -> Option<Box<AvlNode<u64>>> {
        Some(Box::new(AvlNode::leaf(0, Some(generation))))
    }

    fn grow_node(node: &mut AvlNode<u64>, generation: Generation) {
        let left_is_leaf = node.left.as_deref().is_some_and(AvlNode::is_leaf);
        let right_is_leaf = node.right.as_deref().is_some_and(AvlNode::is_leaf);
        if node.is_leaf() {
            // T0 leaf: becomes a T1 root.
            node.left = new_leaf(generation);
        } else if left_is_leaf && node.right.is_none() {
            // T1 root: extend the leaf child, fill the empty slot.
            let leaf_child = node.left.as_deref_mut().expect("left child present");
            leaf_child.left = new_leaf(generation);
            leaf_child.update_height();
            node.right = new_leaf(generation);
        } else if right_is_leaf && node.left.is_none() {
            // Mirrored T1 root.
            let leaf_child = node.right.as_deref_mut().expect("right child present");
            leaf_child.left = new_leaf(generation);
            leaf_child.update_height();
            node.left = new_leaf(generation);
        } else {
            if let Some(left) = node.left.as_deref_mut() {
                grow_node(left, generation);
            }
            if let Some(right) = node.right.as_deref_mut() {
                grow_node(right, generation);
            }
        }
        node.update_height();
    }

    let mut tree = tree;
    grow_node(
        tree.root_mut().expect("nonempty tree has a root"),
        next_generation,
    );
    relabel_in_order(&mut tree);
    debug_assert!(tree.is_valid());
    debug_assert_eq!(tree.height(), height + 1);
    Ok(tree)
}

/// Reassigns keys as in-order positions `0..n` and refreshes the size.
fn relabel_in_order(tree: &mut AvlTree<u64>) {
    fn walk(node: &mut AvlNode<u64>, next_key: &mut u64) {
        if let Some(left) = node.left.as_deref_mut() {
            walk(left, next_key);
        }
        node.key = *next_key;
        *next_key += 1;
        if let Some(right) = node.right.as_deref_mut() {
            walk(right, next_key);
        }
    }
    let mut next_key = 0u64;
    if let Some(root) = tree.root_mut() {
        walk(root, &mut next_key);
    }
    tree.size = next_key as usize;
}

/// Builds `T(h)` from the empty tree by `h + 1` grow steps (the initial
/// node is generation 0) and records the per-generation counts.
///
/// The trace has `h + 1` records; step `g` adds `F(g)` leaves and the
/// final tree has `F(h+2) - 1` nodes.
pub fn grow_from_empty(h: u32) -> Result<(AvlTree<u64>, GrowthTrace)> {
    let mut tree = AvlTree::new();
    let mut generations = Vec::with_capacity(h as usize + 1);
    for step in 0..=h {
        tree = grow(tree, step)?;
        let nodes_total = tree.count_nodes() as u64;
        let leaves_total = tree.count_leaves() as u64;
        let leaves_added = count_generation(&tree, step);
        generations.push(GenerationRecord {
            step,
            leaves_added,
            nodes_total,
            leaves_total,
        });
    }
    Ok((tree, GrowthTrace { generations }))
}

fn count_generation(tree: &AvlTree<u64>, generation: Generation) -> u64 {
    fn walk(node: Option<&AvlNode<u64>>, generation: Generation) -> u64 {
        node.map_or(0, |n| {
            u64::from(n.generation() == Some(generation))
                + walk(n.left(), generation)
                + walk(n.right(), generation)
        })
    }
    walk(tree.root(), generation)
}

/// Bucket `g` counts the nodes added as leaves at generation `g`.
///
/// Every node must carry a generation tag, so this is meaningful only for
/// trees produced by [`grow_from_empty`] (or chains of [`grow`] from the
/// empty tree). For `grow_from_empty(h)` the histogram is
/// `[F(0), ..., F(h)]`.
pub fn generation_histogram(tree: &AvlTree<u64>) -> Result<Vec<u64>> {
    fn walk(node: Option<&AvlNode<u64>>, buckets: &mut Vec<u64>) -> Result<()> {
        let Some(n) = node else {
            return Ok(());
        };
        let generation = n
            .generation()
            .ok_or(Error::UntaggedNode { key: *n.key() })? as usize;
        if buckets.len() <= generation {
            buckets.resize(generation + 1, 0);
        }
        buckets[generation] += 1;
        walk(n.left(), buckets)?;
        walk(n.right(), buckets)
    }
    let mut buckets = Vec::new();
    walk(tree.root(), &mut buckets)?;
    Ok(buckets)
}

/// True when the two trees have identical shape (keys and tags ignored).
pub fn same_shape<K, L>(a: &AvlTree<K>, b: &AvlTree<L>) -> bool {
    fn walk<K, L>(a: Option<&AvlNode<K>>, b: Option<&AvlNode<L>>) -> bool {
        match (a, b) {
            (None, None) => true,
            (Some(a), Some(b)) => walk(a.left(), b.left()) && walk(a.right(), b.right()),
            _ => false,
        }
    }
    walk(a.root(), b.root())
}
