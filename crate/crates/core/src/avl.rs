//! A standard AVL tree with cached heights and an optional per-node
//! generation tag.
//!
//! Height convention: the empty tree has height `-1` and a single node has
//! height `0`. Duplicate keys are rejected. Deletion is deliberately
//! absent; nothing here needs it.
//!
//! The generation tag records the growth step at which a node was attached
//! as a leaf by [`crate::minimal::grow`]; insert-built trees leave it
//! unset.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::fib;

/// Growth step at which a node entered the tree as a leaf.
pub type Generation = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvlNode<K> {
    pub(crate) key: K,
    pub(crate) left: Option<Box<AvlNode<K>>>,
    pub(crate) right: Option<Box<AvlNode<K>>>,
    pub(crate) cached_height: i32,
    pub(crate) generation: Option<Generation>,
}

impl<K> AvlNode<K> {
    pub(crate) fn leaf(key: K, generation: Option<Generation>) -> Self {
        AvlNode {
            key,
            left: None,
            right: None,
            cached_height: 0,
            generation,
        }
    }

    pub fn key(&self) -> &K {
        &self.key
    }

    pub fn left(&self) -> Option<&AvlNode<K>> {
        self.left.as_deref()
    }

    pub fn right(&self) -> Option<&AvlNode<K>> {
        self.right.as_deref()
    }

    /// Cached height of the subtree rooted here (leaf = 0).
    pub fn height(&self) -> i32 {
        self.cached_height
    }

    pub fn generation(&self) -> Option<Generation> {
        self.generation
    }

    pub fn is_leaf(&self) -> bool {
        self.left.is_none() && self.right.is_none()
    }

    pub(crate) fn child_height(child: &Option<Box<AvlNode<K>>>) -> i32 {
        child.as_ref().map_or(-1, |n| n.cached_height)
    }

    pub(crate) fn update_height(&mut self) {
        self.cached_height =
            1 + Self::child_height(&self.left).max(Self::child_height(&self.right));
    }

    /// Left height minus right height.
    pub(crate) fn balance(&self) -> i32 {
        Self::child_height(&self.left) - Self::child_height(&self.right)
    }
}

/// First defect found by [`AvlTree::validate`], located by preorder index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvlViolation {
    /// Preorder position (root = 0) of the offending node.
    pub preorder_index: usize,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    HeightMismatch { cached: i32, actual: i32 },
    Imbalance { balance: i32 },
    OrderViolation,
    SizeMismatch { recorded: usize, actual: usize },
}

impl fmt::Display for AvlViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ViolationKind::HeightMismatch { cached, actual } => write!(
                f,
                "node #{}: cached height {cached} but actual {actual}",
                self.preorder_index
            ),
            ViolationKind::Imbalance { balance } => {
                write!(f, "node #{}: balance factor {balance}", self.preorder_index)
            }
            ViolationKind::OrderViolation => {
                write!(f, "node #{}: key order violated", self.preorder_index)
            }
            ViolationKind::SizeMismatch { recorded, actual } => write!(
                f,
                "tree records size {recorded} but {actual} nodes are reachable"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvlTree<K> {
    pub(crate) root: Option<Box<AvlNode<K>>>,
    pub(crate) size: usize,
}

impl<K> Default for AvlTree<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K> AvlTree<K> {
    pub fn new() -> Self {
        AvlTree {
            root: None,
            size: 0,
        }
    }

    pub fn root(&self) -> Option<&AvlNode<K>> {
        self.root.as_deref()
    }

    /// Number of keys, as tracked by insertions/construction.
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    /// Height of the tree: `-1` when empty, else the root's cached height.
    pub fn height(&self) -> i32 {
        self.root.as_ref().map_or(-1, |n| n.cached_height)
    }

    /// Exact node count by traversal (independent of the size field).
    pub fn count_nodes(&self) -> usize {
        fn walk<K>(node: Option<&AvlNode<K>>) -> usize {
            node.map_or(0, |n| 1 + walk(n.left()) + walk(n.right()))
        }
        walk(self.root())
    }

    /// Number of nodes with no children.
    pub fn count_leaves(&self) -> usize {
        fn walk<K>(node: Option<&AvlNode<K>>) -> usize {
            match node {
                None => 0,
                Some(n) if n.is_leaf() => 1,
                Some(n) => walk(n.left()) + walk(n.right()),
            }
        }
        walk(self.root())
    }

    /// Number of nodes with at least one child.
    pub fn count_internal(&self) -> usize {
        self.count_nodes() - self.count_leaves()
    }

    /// Keys in symmetric (sorted) order.
    pub fn keys_in_order(&self) -> Vec<&K> {
        fn walk<'a, K>(node: Option<&'a AvlNode<K>>, out: &mut Vec<&'a K>) {
            if let Some(n) = node {
                walk(n.left(), out);
                out.push(&n.key);
                walk(n.right(), out);
            }
        }
        let mut out = Vec::with_capacity(self.size);
        walk(self.root(), &mut out);
        out
    }
}

impl<K: Ord> AvlTree<K> {
    /// Inserts `key`, rebalancing as needed. Duplicates are rejected and
    /// leave the tree untouched.
    pub fn insert(&mut self, key: K) -> Result<()> {
        match self.root {
            None => self.root = Some(Box::new(AvlNode::leaf(key, None))),
            Some(ref mut root) => insert_rec(root, key)?,
        }
        self.size += 1;
        Ok(())
    }

    /// Checks balance factors, cached heights, key order, and the size
    /// field. Returns the first violation in preorder.
    pub fn validate(&self) -> std::result::Result<(), AvlViolation> {
        let mut next_index = 0usize;
        check_node(self.root(), None, None, &mut next_index)?;
        let reachable = self.count_nodes();
        if reachable != self.size {
            return Err(AvlViolation {
                preorder_index: 0,
                kind: ViolationKind::SizeMismatch {
                    recorded: self.size,
                    actual: reachable,
                },
            });
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// `height <= log_phi(n + 1)` with [`fib::PHI_REL_TOL`] relative slack.
    ///
    /// Requires a nonempty, valid tree. For any tree that passes
    /// [`AvlTree::validate`] the answer is always `true`; a `false` here
    /// means the height bound itself has been refuted.
    pub fn height_bound_check(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyTree);
        }
        self.validate().map_err(|v| Error::InvalidTree {
            detail: v.to_string(),
        })?;
        let n = self.count_nodes() as u64;
        let bound = fib::golden_height_bound(n)?;
        Ok((self.height() as f64) <= bound * (1.0 + fib::PHI_REL_TOL))
    }

    pub(crate) fn root_mut(&mut self) -> Option<&mut AvlNode<K>> {
        self.root.as_deref_mut()
    }
}

/// Recomputes heights while checking every node; `lo`/`hi` carry the open
/// key interval the subtree must stay inside.
fn check_node<'a, K: Ord>(
    node: Option<&'a AvlNode<K>>,
    lo: Option<&'a K>,
    hi: Option<&'a K>,
    next_index: &mut usize,
) -> std::result::Result<i32, AvlViolation> {
    let Some(n) = node else {
        return Ok(-1);
    };
    let index = *next_index;
    *next_index += 1;

    if lo.is_some_and(|lo| n.key <= *lo) || hi.is_some_and(|hi| n.key >= *hi) {
        return Err(AvlViolation {
            preorder_index: index,
            kind: ViolationKind::OrderViolation,
        });
    }
    let lh = check_node(n.left(), lo, Some(&n.key), next_index)?;
    let rh = check_node(n.right(), Some(&n.key), hi, next_index)?;
    let actual = 1 + lh.max(rh);
    if actual != n.cached_height {
        return Err(AvlViolation {
            preorder_index: index,
            kind: ViolationKind::HeightMismatch {
                cached: n.cached_height,
                actual,
            },
        });
    }
    let balance = lh - rh;
    if balance.abs() > 1 {
        return Err(AvlViolation {
            preorder_index: index,
            kind: ViolationKind::Imbalance { balance },
        });
    }
    Ok(actual)
}

fn insert_rec<K: Ord>(node: &mut Box<AvlNode<K>>, key: K) -> Result<()> {
    match key.cmp(&node.key) {
        Ordering::Equal => return Err(Error::DuplicateKey),
        Ordering::Less => match node.left {
            Some(ref mut left) => insert_rec(left, key)?,
            None => node.left = Some(Box::new(AvlNode::leaf(key, None))),
        },
        Ordering::Greater => match node.right {
            Some(ref mut right) => insert_rec(right, key)?,
            None => node.right = Some(Box::new(AvlNode::leaf(key, None))),
        },
    }
    node.update_height();
    rebalance(node);
    Ok(())
}

/// Restores the AVL invariant at `node` after one child grew by one.
fn rebalance<K>(node: &mut Box<AvlNode<K>>) {
    let balance = node.balance();
    if balance > 1 {
        if node.left.as_ref().is_some_and(|l| l.balance() < 0) {
            rotate_left(node.left.as_mut().expect("left child present"));
        }
        rotate_right(node);
    } else if balance < -1 {
        if node.right.as_ref().is_some_and(|r| r.balance() > 0) {
            rotate_right(node.right.as_mut().expect("right child present"));
        }
        rotate_left(node);
    }
}

fn rotate_left<K>(node: &mut Box<AvlNode<K>>) {
    let mut pivot = node.right.take().expect("rotate_left needs a right child");
    node.right = pivot.left.take();
    node.update_height();
    std::mem::swap(node, &mut pivot);
    node.left = Some(pivot);
    node.update_height();
}

fn rotate_right<K>(node: &mut Box<AvlNode<K>>) {
    let mut pivot = node.left.take().expect("rotate_right needs a left child");
    node.left = pivot.right.take();
    node.update_height();
    std::mem::swap(node, &mut pivot);
    node.right = Some(pivot);
    node.update_height();
}
