//! Inputs shared by the benchmarks.

use rted_core::{gen_shape, LabelMode, ShapeKind, ShapeSpec, Tree, TreeIndex};

/// A generated tree of `n` nodes; random shapes get a four-letter alphabet so
/// distances are not trivially zero between different seeds.
pub fn tree(kind: ShapeKind, n: usize, seed: u64) -> Tree {
    let mut spec = ShapeSpec::new(kind, n).with_seed(seed);
    if kind == ShapeKind::Random {
        spec = spec.with_labels(LabelMode::Alphabet(4));
    }
    gen_shape(&spec).expect("benchmark shapes are valid")
}

pub fn index(kind: ShapeKind, n: usize, seed: u64) -> TreeIndex {
    TreeIndex::build(&tree(kind, n, seed))
}
