//! Postorder index of a tree with the decomposition counts used by the
//! strategy computations.

use crate::tree::{Label, Tree};

/// Root-leaf path selection rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathKind {
    /// Always descend into the leftmost child.
    Left,
    /// Always descend into the rightmost child.
    Right,
    /// Descend into the child with the largest subtree (leftmost on ties).
    Heavy,
}

impl PathKind {
    pub const ALL: [PathKind; 3] = [PathKind::Left, PathKind::Right, PathKind::Heavy];

    pub fn name(self) -> &'static str {
        match self {
            PathKind::Left => "left",
            PathKind::Right => "right",
            PathKind::Heavy => "heavy",
        }
    }
}

/// Immutable postorder-array form of a tree.
///
/// Node ids are 0-based postorder positions, so the descendants of `v` occupy
/// the interval `lml(v)..=v` and every non-root node has a larger parent id.
#[derive(Debug, Clone)]
pub struct TreeIndex {
    labels: Vec<Label>,
    parent: Vec<Option<usize>>,
    child_start: Vec<usize>,
    child_list: Vec<usize>,
    size: Vec<usize>,
    leaves: Vec<usize>,
    heavy_child: Vec<Option<usize>>,
    desc_size_sum: Vec<u64>,
    full_count: Vec<u64>,
    left_count: Vec<u64>,
    right_count: Vec<u64>,
    pre: Vec<usize>,
    node_at_pre: Vec<usize>,
    depth: Vec<usize>,
}

impl TreeIndex {
    /// Indexes `t` in time linear in its size.
    pub fn build(t: &Tree) -> Self {
        // Preorder walk assigning parents; postorder ids follow from it.
        let mut pre_nodes: Vec<&Tree> = Vec::new();
        let mut pre_parent: Vec<Option<usize>> = Vec::new();
        let mut pre_depth: Vec<usize> = Vec::new();
        let mut stack = vec![(t, None, 0usize)];
        while let Some((node, parent, depth)) = stack.pop() {
            let me = pre_nodes.len();
            pre_nodes.push(node);
            pre_parent.push(parent);
            pre_depth.push(depth);
            stack.extend(node.children.iter().rev().map(|c| (c, Some(me), depth + 1)));
        }
        let n = pre_nodes.len();

        // Subtree sizes in reverse preorder (children before parents).
        let mut pre_size = vec![1usize; n];
        for p in (1..n).rev() {
            let parent = pre_parent[p].expect("non-root");
            pre_size[parent] += pre_size[p];
        }
        // postorder(v) = preorder(v) + size(v) - 1 - depth(v)
        let pre_to_post: Vec<usize> = (0..n).map(|p| p + pre_size[p] - 1 - pre_depth[p]).collect();

        let mut labels = vec![Label::new(""); n];
        let mut parent = vec![None; n];
        let mut size = vec![0; n];
        let mut pre = vec![0; n];
        let mut node_at_pre = vec![0; n];
        let mut depth = vec![0; n];
        for p in 0..n {
            let v = pre_to_post[p];
            labels[v] = pre_nodes[p].label.clone();
            parent[v] = pre_parent[p].map(|q| pre_to_post[q]);
            size[v] = pre_size[p];
            pre[v] = p;
            node_at_pre[p] = v;
            depth[v] = pre_depth[p];
        }

        // Children lists in CSR form; visiting in preorder keeps sibling order.
        let mut degree = vec![0usize; n];
        for &p in parent.iter().flatten() {
            degree[p] += 1;
        }
        let mut child_start = vec![0usize; n + 1];
        for v in 0..n {
            child_start[v + 1] = child_start[v] + degree[v];
        }
        let mut fill = child_start.clone();
        let mut child_list = vec![0usize; n.saturating_sub(1)];
        for &v in &node_at_pre {
            if let Some(p) = parent[v] {
                child_list[fill[p]] = v;
                fill[p] += 1;
            }
        }

        let mut ix = TreeIndex {
            labels,
            parent,
            child_start,
            child_list,
            size,
            leaves: vec![0; n],
            heavy_child: vec![None; n],
            desc_size_sum: vec![0; n],
            full_count: vec![0; n],
            left_count: vec![0; n],
            right_count: vec![0; n],
            pre,
            node_at_pre,
            depth,
        };
        ix.compute_counts();
        ix
    }

    fn compute_counts(&mut self) {
        let n = self.len();
        // Descendant intervals are contiguous, so Σ_{x∈F_v}|F_x| is a
        // difference of prefix sums.
        let mut prefix = vec![0u64; n + 1];
        for v in 0..n {
            prefix[v + 1] = prefix[v] + self.size[v] as u64;
        }
        for v in 0..n {
            let size = self.size[v] as u64;
            self.desc_size_sum[v] = prefix[v + 1] - prefix[self.lml(v)];
            self.full_count[v] = size * (size + 3) / 2 - self.desc_size_sum[v];

            let children = &self.child_list[self.child_start[v]..self.child_start[v + 1]];
            if children.is_empty() {
                self.leaves[v] = 1;
                self.left_count[v] = 1;
                self.right_count[v] = 1;
                continue;
            }
            self.leaves[v] = children.iter().map(|&c| self.leaves[c]).sum();
            let mut heavy = children[0];
            for &c in &children[1..] {
                if self.size[c] > self.size[heavy] {
                    heavy = c;
                }
            }
            self.heavy_child[v] = Some(heavy);

            // The subtree of the on-path child is not a relevant subtree: only
            // its own relevant subtrees count, hence `count - size` for it.
            let sum_left: u64 = children.iter().map(|&c| self.left_count[c]).sum();
            let sum_right: u64 = children.iter().map(|&c| self.right_count[c]).sum();
            let first = children[0];
            let last = children[children.len() - 1];
            self.left_count[v] = size + sum_left - self.size[first] as u64;
            self.right_count[v] = size + sum_right - self.size[last] as u64;
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn root(&self) -> usize {
        self.len() - 1
    }

    pub fn label(&self, v: usize) -> &Label {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.child_list[self.child_start[v]..self.child_start[v + 1]]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.child_start[v] == self.child_start[v + 1]
    }

    /// `|F_v|`.
    pub fn size(&self, v: usize) -> usize {
        self.size[v]
    }

    /// Leftmost leaf descendant of `v`, which is also the smallest id in `F_v`.
    pub fn lml(&self, v: usize) -> usize {
        v + 1 - self.size[v]
    }

    /// Number of leaves in `F_v`.
    pub fn leaves(&self, v: usize) -> usize {
        self.leaves[v]
    }

    pub fn heavy_child(&self, v: usize) -> Option<usize> {
        self.heavy_child[v]
    }

    /// `Σ_{x ∈ F_v} |F_x|`.
    pub fn desc_size_sum(&self, v: usize) -> u64 {
        self.desc_size_sum[v]
    }

    /// Size of the full decomposition of `F_v`.
    pub fn full_count(&self, v: usize) -> u64 {
        self.full_count[v]
    }

    /// Number of relevant subforests of `F_v` under the left path partitioning.
    pub fn left_count(&self, v: usize) -> u64 {
        self.left_count[v]
    }

    /// Number of relevant subforests of `F_v` under the right path partitioning.
    pub fn right_count(&self, v: usize) -> u64 {
        self.right_count[v]
    }

    /// Preorder position of `v`.
    pub fn pre(&self, v: usize) -> usize {
        self.pre[v]
    }

    /// Node with the given preorder position.
    pub fn node_at_pre(&self, p: usize) -> usize {
        self.node_at_pre[p]
    }

    /// Number of edges between `v` and the root.
    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// The child a path of `kind` descends into from `v`, if `v` is not a leaf.
    pub fn path_child(&self, v: usize, kind: PathKind) -> Option<usize> {
        let children = self.children(v);
        match kind {
            PathKind::Left => children.first().copied(),
            PathKind::Right => children.last().copied(),
            PathKind::Heavy => self.heavy_child[v],
        }
    }

    /// Whether `v` continues its parent's path of the given kind.
    pub fn on_parent_path(&self, v: usize, kind: PathKind) -> bool {
        match self.parent[v] {
            Some(p) => self.path_child(p, kind) == Some(v),
            None => false,
        }
    }

    /// Ordered node list from `v` down to a leaf following `kind`.
    pub fn root_leaf_path(&self, v: usize, kind: PathKind) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(next) = self.path_child(cur, kind) {
            path.push(next);
            cur = next;
        }
        path
    }

    /// Roots of the relevant subtrees `F_v - γ`, in postorder.
    ///
    /// `path` must be a root-leaf path of `F_v` listed from `v` downwards.
    pub fn relevant_subtrees(&self, path: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &x) in path.iter().enumerate() {
            let on_path = path.get(i + 1).copied();
            out.extend(
                self.children(x)
                    .iter()
                    .copied()
                    .filter(|&c| Some(c) != on_path),
            );
        }
        out.sort_unstable();
        out
    }

    /// Calls `f` for every relevant subtree root of `F_v` with respect to the
    /// path of `kind`, without allocating.
    pub fn for_each_relevant_subtree(&self, v: usize, kind: PathKind, mut f: impl FnMut(usize)) {
        let mut cur = Some(v);
        while let Some(x) = cur {
            let next = self.path_child(x, kind);
            for &c in self.children(x) {
                if Some(c) != next {
                    f(c);
                }
            }
            cur = next;
        }
    }
}
