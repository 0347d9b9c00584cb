//! Set-level enumeration of decompositions.
//!
//! These routines materialize subforests explicitly and follow the recursive
//! definitions literally. They are meant for small trees, as independent
//! checks of the closed-form counts stored in [`TreeIndex`].

use std::collections::{BTreeSet, HashSet};

use crate::index::{PathKind, TreeIndex};

/// A subforest of an indexed tree, as a sorted set of node ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subforest(Vec<usize>);

impl Subforest {
    /// The subtree rooted at `v`.
    pub fn subtree(ix: &TreeIndex, v: usize) -> Self {
        Subforest((ix.lml(v)..=v).collect())
    }

    pub fn from_nodes(nodes: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = nodes.into_iter().collect();
        Subforest(set.into_iter().collect())
    }

    pub fn nodes(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Root nodes: members whose parent is not a member.
    pub fn roots(&self, ix: &TreeIndex) -> Vec<usize> {
        self.0
            .iter()
            .copied()
            .filter(|&x| {
                ix.parent(x)
                    .is_none_or(|p| self.0.binary_search(&p).is_err())
            })
            .collect()
    }

    pub fn is_tree(&self, ix: &TreeIndex) -> bool {
        self.roots(ix).len() == 1
    }

    /// Leftmost root: the member that comes first in preorder.
    pub fn leftmost_root(&self, ix: &TreeIndex) -> Option<usize> {
        self.0.iter().copied().min_by_key(|&x| ix.pre(x))
    }

    /// Rightmost root: the member that comes last in postorder.
    pub fn rightmost_root(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn without(&self, x: usize) -> Self {
        Subforest(self.0.iter().copied().filter(|&y| y != x).collect())
    }

    pub fn is_subset_of(&self, other: &Subforest) -> bool {
        self.0.iter().all(|x| other.0.binary_search(x).is_ok())
    }
}

/// Every subforest reachable from `F_v` by repeatedly removing the leftmost or
/// the rightmost root node.
pub fn enumerate_full_decomposition(ix: &TreeIndex, v: usize) -> HashSet<Subforest> {
    let mut seen = HashSet::new();
    let mut frontier = vec![Subforest::subtree(ix, v)];
    while let Some(f) = frontier.pop() {
        if f.is_empty() || seen.contains(&f) {
            continue;
        }
        let left = f.without(f.leftmost_root(ix).expect("nonempty"));
        let right = f.without(f.rightmost_root().expect("nonempty"));
        seen.insert(f);
        frontier.push(left);
        frontier.push(right);
    }
    seen
}

/// Relevant subforests of `F_v` for a root-leaf `path` (listed from `v`
/// down), in removal order: remove the rightmost root while the leftmost root
/// lies on the path, otherwise the leftmost root.
pub fn enumerate_relevant_subforests(ix: &TreeIndex, v: usize, path: &[usize]) -> Vec<Subforest> {
    let mut out = Vec::new();
    let mut f = Subforest::subtree(ix, v);
    while !f.is_empty() {
        let lr = f.leftmost_root(ix).expect("nonempty");
        let next = if path.contains(&lr) {
            f.without(f.rightmost_root().expect("nonempty"))
        } else {
            f.without(lr)
        };
        out.push(std::mem::replace(&mut f, next));
    }
    out
}

/// Relevant subtrees of the recursive decomposition of `F_v` that uses paths
/// of a single kind everywhere: `F_v` itself plus, recursively, those of every
/// relevant subtree.
pub fn recursive_relevant_subtrees(ix: &TreeIndex, v: usize, kind: PathKind) -> Vec<usize> {
    let mut out = Vec::new();
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        out.push(x);
        let path = ix.root_leaf_path(x, kind);
        stack.extend(ix.relevant_subtrees(&path));
    }
    out.sort_unstable();
    out
}

/// All relevant subforests of the recursive decomposition of `F_v` with paths
/// of a single kind, as a set.
pub fn enumerate_recursive_subforests(
    ix: &TreeIndex,
    v: usize,
    kind: PathKind,
) -> HashSet<Subforest> {
    recursive_relevant_subtrees(ix, v, kind)
        .into_iter()
        .flat_map(|x| enumerate_relevant_subforests(ix, x, &ix.root_leaf_path(x, kind)))
        .collect()
}

/// Every root-leaf path of `F_v`, each listed from `v` down.
pub fn all_root_leaf_paths(ix: &TreeIndex, v: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![v]];
    while let Some(path) = stack.pop() {
        let last = *path.last().expect("nonempty");
        if ix.is_leaf(last) {
            out.push(path);
            continue;
        }
        for &c in ix.children(last) {
            let mut p = path.clone();
            p.push(c);
            stack.push(p);
        }
    }
    out
}
