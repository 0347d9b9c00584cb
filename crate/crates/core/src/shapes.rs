//! Synthetic tree families for benchmarks and property tests.
//!
//! Random choices come from a SplitMix64 stream seeded with `ShapeSpec::seed`.
//! A draw below `bound` is `(next_u64() as u128 * bound as u128) >> 64`, so
//! the same seed yields the same tree in any implementation that follows
//! these rules.

use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::tree::{Label, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    /// Spine descends through first children; every spine node has a leaf
    /// as its second child.
    LeftBranch,
    /// Mirror image of `LeftBranch`.
    RightBranch,
    /// Like `LeftBranch`, but the spine switches side at every level,
    /// starting on the left below the root.
    ZigZag,
    /// Complete binary tree, filled level by level from the left.
    FullBinary,
    /// Complete binary skeleton whose leaves are replaced by left and right
    /// branches in alternation.
    Mixed,
    /// Random attachment within depth and fanout limits.
    Random,
}

impl ShapeKind {
    pub const ALL: [ShapeKind; 6] = [
        ShapeKind::LeftBranch,
        ShapeKind::RightBranch,
        ShapeKind::ZigZag,
        ShapeKind::FullBinary,
        ShapeKind::Mixed,
        ShapeKind::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ShapeKind::LeftBranch => "left-branch",
            ShapeKind::RightBranch => "right-branch",
            ShapeKind::ZigZag => "zigzag",
            ShapeKind::FullBinary => "full-binary",
            ShapeKind::Mixed => "mixed",
            ShapeKind::Random => "random",
        }
    }

    /// Whether only odd sizes are valid.
    pub fn needs_odd_size(self) -> bool {
        matches!(
            self,
            ShapeKind::LeftBranch | ShapeKind::RightBranch | ShapeKind::ZigZag
        )
    }
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ShapeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase();
        let alias = match key.as_str() {
            "lb" => "left-branch",
            "rb" => "right-branch",
            "zz" => "zigzag",
            "fb" => "full-binary",
            other => other,
        };
        ShapeKind::ALL
            .into_iter()
            .find(|k| k.name() == alias)
            .ok_or_else(|| Error::InvalidShape(format!("unknown shape {s:?}")))
    }
}

/// Node labels of generated trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum LabelMode {
    /// Every node is labeled `x`.
    #[default]
    Uniform,
    /// Labels drawn uniformly from the first `k` of `a`, `b`, ..., `z`
    /// (then `l26`, `l27`, ...), in preorder, after the structure.
    Alphabet(usize),
}

/// Size of a generated tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeSize {
    /// Exact node count.
    Nodes(usize),
    /// Spine length for branch shapes (`2d + 1` nodes), height for
    /// `FullBinary` (`2^(d+1) - 1` nodes).
    Depth(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShapeSpec {
    pub kind: ShapeKind,
    pub size: ShapeSize,
    pub seed: u64,
    pub max_depth: usize,
    pub max_fanout: usize,
    pub labels: LabelMode,
}

impl ShapeSpec {
    pub fn new(kind: ShapeKind, nodes: usize) -> Self {
        ShapeSpec {
            kind,
            size: ShapeSize::Nodes(nodes),
            seed: 0,
            max_depth: 15,
            max_fanout: 6,
            labels: LabelMode::Uniform,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_labels(mut self, labels: LabelMode) -> Self {
        self.labels = labels;
        self
    }
}

struct Rng(SplitMix64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    fn below(&mut self, bound: usize) -> usize {
        ((self.0.next_u64() as u128 * bound as u128) >> 64) as usize
    }
}

/// Generates the tree described by `spec`.
pub fn gen_shape(spec: &ShapeSpec) -> Result<Tree> {
    let invalid = |msg: String| Err(Error::InvalidShape(msg));
    let kind = spec.kind;
    let n = match (spec.size, kind) {
        (ShapeSize::Nodes(0), _) => return invalid(format!("{kind} size must be at least 1")),
        (ShapeSize::Nodes(n), _) => n,
        (ShapeSize::Depth(d), k) if k.needs_odd_size() => 2 * d + 1,
        (ShapeSize::Depth(d), ShapeKind::FullBinary) if d < 63 => (1usize << (d + 1)) - 1,
        (ShapeSize::Depth(d), _) => return invalid(format!("{kind} does not take depth {d}")),
    };
    if kind.needs_odd_size() && n % 2 == 0 {
        return invalid(format!("{kind} size must be odd, got {n}"));
    }

    let mut rng = Rng::new(spec.seed);
    let mut tree = match kind {
        ShapeKind::LeftBranch => branch(n, |_| true),
        ShapeKind::RightBranch => branch(n, |_| false),
        ShapeKind::ZigZag => {
            let levels = (n - 1) / 2;
            // Wrap `j` (from the bottom) is level `levels - 1 - j` from the top.
            branch(n, |j| (levels - 1 - j) % 2 == 0)
        }
        ShapeKind::FullBinary => heap_binary(n, |_| Tree::leaf("x")),
        ShapeKind::Mixed => mixed(n),
        ShapeKind::Random => {
            if spec.max_fanout == 0 && n > 1 {
                return invalid("random trees with more than one node need max_fanout >= 1".into());
            }
            random(n, spec.max_depth, spec.max_fanout, &mut rng)?
        }
    };
    if let LabelMode::Alphabet(k) = spec.labels {
        if k == 0 {
            return invalid("label alphabet must not be empty".into());
        }
        relabel(&mut tree, k, &mut rng);
    }
    Ok(tree)
}

/// A spine of `(n - 1) / 2` internal nodes; wrap `j`, counted from the
/// bottom, puts the spine on the left when `left(j)`. An even `n` ends in a
/// single-child node at the bottom.
fn branch(n: usize, left: impl Fn(usize) -> bool) -> Tree {
    let mut t = if n.is_multiple_of(2) {
        Tree::node("x", vec![Tree::leaf("x")])
    } else {
        Tree::leaf("x")
    };
    for j in 0..(n - 1) / 2 {
        let children = if left(j) {
            vec![t, Tree::leaf("x")]
        } else {
            vec![Tree::leaf("x"), t]
        };
        t = Tree::node("x", children);
    }
    t
}

/// Binary tree in heap layout with `n` nodes; heap slot `i` is a leaf when it
/// has no children, and leaves are produced by `leaf(i)`.
fn heap_binary(n: usize, mut leaf: impl FnMut(usize) -> Tree) -> Tree {
    let mut slots: Vec<Option<Tree>> = (0..n).map(|_| None).collect();
    for i in (0..n).rev() {
        let kids: Vec<Tree> = [2 * i + 1, 2 * i + 2]
            .into_iter()
            .filter(|&c| c < n)
            .map(|c| slots[c].take().expect("children built first"))
            .collect();
        slots[i] = Some(if kids.is_empty() {
            leaf(i)
        } else {
            Tree::node("x", kids)
        });
    }
    slots[0].take().expect("n >= 1")
}

fn mixed(n: usize) -> Tree {
    // Skeleton leaves: largest power of two not above max(1, sqrt(n) / 2).
    let target = (((n as f64).sqrt() / 2.0) as usize).max(1);
    let leaves = 1usize << (usize::BITS - 1 - target.leading_zeros());
    let internal = leaves - 1;
    let budget = n - internal;
    let (share, extra) = (budget / leaves, budget % leaves);
    heap_binary(2 * leaves - 1, |slot| {
        let i = slot - internal;
        let size = share + usize::from(i < extra);
        branch(size, |_| i.is_multiple_of(2))
    })
}

fn random(n: usize, max_depth: usize, max_fanout: usize, rng: &mut Rng) -> Result<Tree> {
    let mut children: Vec<Vec<usize>> = vec![Vec::new()];
    let mut depth = vec![0usize];
    // Nodes that may still take a child.
    let mut open: Vec<usize> = Vec::new();
    if max_depth > 0 && max_fanout > 0 {
        open.push(0);
    }
    for id in 1..n {
        if open.is_empty() {
            return Err(Error::InvalidShape(format!(
                "no tree with {n} nodes fits depth {max_depth} and fanout {max_fanout}"
            )));
        }
        let slot = rng.below(open.len());
        let p = open[slot];
        let pos = rng.below(children[p].len() + 1);
        children[p].insert(pos, id);
        if children[p].len() == max_fanout {
            open.swap_remove(slot);
        }
        children.push(Vec::new());
        depth.push(depth[p] + 1);
        if depth[id] < max_depth {
            open.push(id);
        }
    }
    // Children always have larger ids than their parent.
    let mut built: Vec<Option<Tree>> = (0..n).map(|_| None).collect();
    for id in (0..n).rev() {
        let kids = children[id]
            .iter()
            .map(|&c| built[c].take().expect("children built first"))
            .collect();
        built[id] = Some(Tree::node("x", kids));
    }
    Ok(built[0].take().expect("n >= 1"))
}

fn alphabet_label(i: usize) -> Label {
    if i < 26 {
        Label::new(char::from(b'a' + i as u8).to_string())
    } else {
        Label::new(format!("l{i}"))
    }
}

fn relabel(t: &mut Tree, k: usize, rng: &mut Rng) {
    let mut stack = vec![t];
    while let Some(node) = stack.pop() {
        node.label = alphabet_label(rng.below(k));
        stack.extend(node.children.iter_mut().rev());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::{PathKind, TreeIndex};
    use crate::tree::serialize_bracket;

    fn gen(kind: ShapeKind, n: usize) -> Tree {
        gen_shape(&ShapeSpec::new(kind, n)).unwrap()
    }

    #[test]
    fn left_branch_smallest() {
        assert_eq!(
            serialize_bracket(&gen(ShapeKind::LeftBranch, 3)),
            "{x{x}{x}}"
        );
        assert_eq!(
            serialize_bracket(&gen(ShapeKind::RightBranch, 5)),
            "{x{x}{x{x}{x}}}"
        );
    }

    #[test]
    fn zigzag_alternates() {
        assert_eq!(
            serialize_bracket(&gen(ShapeKind::ZigZag, 7)),
            "{x{x{x}{x{x}{x}}}{x}}"
        );
    }

    #[test]
    fn left_branch_relevant_subtrees() {
        let t = TreeIndex::build(&gen(ShapeKind::LeftBranch, 21));
        for v in 0..t.len() {
            if t.is_leaf(v) {
                continue;
            }
            let rel = |k| t.relevant_subtrees(&t.root_leaf_path(v, k)).len();
            assert_eq!(rel(PathKind::Left), (t.size(v) - 1) / 2);
            assert_eq!(rel(PathKind::Heavy), (t.size(v) - 1) / 2);
            assert_eq!(rel(PathKind::Right), 1);
        }
        assert_eq!(t.leaves(t.root()), 11);
    }

    #[test]
    fn sizes_are_exact() {
        for kind in ShapeKind::ALL {
            for n in [1, 3, 21, 101, 501] {
                assert_eq!(gen(kind, n).size(), n, "{kind} {n}");
            }
        }
        for n in [2, 10, 64, 1000] {
            assert_eq!(gen(ShapeKind::FullBinary, n).size(), n);
            assert_eq!(gen(ShapeKind::Mixed, n).size(), n);
        }
        let spec = ShapeSpec {
            size: ShapeSize::Depth(3),
            ..ShapeSpec::new(ShapeKind::FullBinary, 1)
        };
        assert_eq!(gen_shape(&spec).unwrap().size(), 15);
    }

    #[test]
    fn bad_parameters() {
        for spec in [
            ShapeSpec::new(ShapeKind::LeftBranch, 4),
            ShapeSpec::new(ShapeKind::Random, 0),
            ShapeSpec {
                size: ShapeSize::Depth(2),
                ..ShapeSpec::new(ShapeKind::Mixed, 1)
            },
            ShapeSpec::new(ShapeKind::Random, 5).with_labels(LabelMode::Alphabet(0)),
        ] {
            assert!(
                matches!(gen_shape(&spec), Err(Error::InvalidShape(_))),
                "{spec:?}"
            );
        }
    }

    #[test]
    fn random_respects_limits_and_seed() {
        let spec = ShapeSpec::new(ShapeKind::Random, 500).with_seed(7);
        let a = gen_shape(&spec).unwrap();
        assert_eq!(a, gen_shape(&spec).unwrap());
        assert_ne!(a, gen_shape(&spec.with_seed(8)).unwrap());
        let small = ShapeSpec {
            max_depth: 3,
            max_fanout: 2,
            ..ShapeSpec::new(ShapeKind::Random, 15)
        };
        let t = gen_shape(&small).unwrap();
        let ix = TreeIndex::build(&t);
        assert!(t.depth() <= 3);
        assert!((0..ix.len()).all(|v| ix.children(v).len() <= 2));
        assert!(gen_shape(&ShapeSpec {
            size: ShapeSize::Nodes(16),
            ..small
        })
        .is_err());
    }

    #[test]
    fn alphabet_labels() {
        let spec = ShapeSpec::new(ShapeKind::FullBinary, 31)
            .with_seed(3)
            .with_labels(LabelMode::Alphabet(3));
        let t = TreeIndex::build(&gen_shape(&spec).unwrap());
        assert!(t
            .labels()
            .iter()
            .all(|l| ["a", "b", "c"].contains(&l.as_str())));
        assert!(t.labels().iter().any(|l| l.as_str() != "a"));
    }

    #[test]
    fn names_round_trip() {
        for k in ShapeKind::ALL {
            assert_eq!(k.name().parse::<ShapeKind>().unwrap(), k);
        }
        assert_eq!("LB".parse::<ShapeKind>().unwrap(), ShapeKind::LeftBranch);
    }
}
