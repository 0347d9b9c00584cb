#![allow(dead_code)]

use rted_core::{gen_shape, LabelMode, ShapeKind, ShapeSpec, Tree, TreeIndex};

/// Random tree with `n` nodes and labels from a three-letter alphabet.
pub fn random_tree(n: usize, seed: u64) -> Tree {
    let spec = ShapeSpec::new(ShapeKind::Random, n)
        .with_seed(seed)
        .with_labels(LabelMode::Alphabet(3));
    gen_shape(&spec).unwrap()
}

pub fn random_index(n: usize, seed: u64) -> TreeIndex {
    TreeIndex::build(&random_tree(n, seed))
}

pub fn shape_index(kind: ShapeKind, n: usize) -> TreeIndex {
    TreeIndex::build(&gen_shape(&ShapeSpec::new(kind, n)).unwrap())
}

/// Valid sizes of `kind` up to `max`.
pub fn sizes(kind: ShapeKind, max: usize) -> impl Iterator<Item = usize> {
    (1..=max).filter(move |n| !kind.needs_odd_size() || n % 2 == 1)
}
