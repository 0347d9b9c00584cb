mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rted_core::oracle::{
    all_root_leaf_paths, enumerate_full_decomposition, enumerate_recursive_subforests,
    enumerate_relevant_subforests, recursive_relevant_subtrees, Subforest,
};
use rted_core::{parse_bracket, PathKind, TreeIndex};

use common::random_index;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn full_count_matches_enumeration(n in 1usize..=12, seed in any::<u64>()) {
        let ix = random_index(n, seed);
        for v in 0..ix.len() {
            prop_assert_eq!(enumerate_full_decomposition(&ix, v).len() as u64, ix.full_count(v));
        }
    }

    #[test]
    fn relevant_subforests_per_path(n in 1usize..=12, seed in any::<u64>()) {
        let ix = random_index(n, seed);
        for v in 0..ix.len() {
            let full = enumerate_full_decomposition(&ix, v);
            for path in all_root_leaf_paths(&ix, v) {
                let seq = enumerate_relevant_subforests(&ix, v, &path);
                prop_assert_eq!(seq.len(), ix.size(v));
                let distinct: HashSet<&Subforest> = seq.iter().collect();
                prop_assert_eq!(distinct.len(), seq.len());
                prop_assert!(seq.iter().all(|f| full.contains(f)));
            }
        }
    }

    #[test]
    fn left_right_counts_match_recursive_decomposition(n in 1usize..=12, seed in any::<u64>()) {
        let ix = random_index(n, seed);
        for v in 0..ix.len() {
            for (kind, count) in [
                (PathKind::Left, ix.left_count(v)),
                (PathKind::Right, ix.right_count(v)),
            ] {
                let subtree_sizes: usize = recursive_relevant_subtrees(&ix, v, kind)
                    .into_iter()
                    .map(|x| ix.size(x))
                    .sum();
                prop_assert_eq!(subtree_sizes as u64, count);
                prop_assert_eq!(enumerate_recursive_subforests(&ix, v, kind).len() as u64, count);
            }
            // Left and right decompositions are contained in the full one.
            let full = enumerate_full_decomposition(&ix, v);
            for kind in [PathKind::Left, PathKind::Right] {
                prop_assert!(enumerate_recursive_subforests(&ix, v, kind).is_subset(&full));
            }
        }
    }

    #[test]
    fn index_invariants(n in 1usize..=200, seed in any::<u64>()) {
        let ix = random_index(n, seed);
        prop_assert_eq!(ix.len(), n);
        prop_assert_eq!(ix.root(), n - 1);
        prop_assert_eq!(ix.size(ix.root()), n);
        let mut pre_seen = vec![false; n];
        for v in 0..n {
            let kids = ix.children(v);
            prop_assert_eq!(ix.size(v), 1 + kids.iter().map(|&c| ix.size(c)).sum::<usize>());
            prop_assert_eq!(ix.is_leaf(v), kids.is_empty());
            for &c in kids {
                prop_assert_eq!(ix.parent(c), Some(v));
                prop_assert!(c < v && c >= ix.lml(v));
                prop_assert_eq!(ix.depth(c), ix.depth(v) + 1);
            }
            // Children tile the descendant interval in order.
            let mut next = ix.lml(v);
            for &c in kids {
                prop_assert_eq!(ix.lml(c), next);
                next = c + 1;
            }
            prop_assert_eq!(next, v);
            prop_assert_eq!(ix.node_at_pre(ix.pre(v)), v);
            pre_seen[ix.pre(v)] = true;
            if let Some(h) = ix.heavy_child(v) {
                prop_assert!(kids.iter().all(|&c| ix.size(c) <= ix.size(h)));
                let first_max = kids.iter().copied().find(|&c| ix.size(c) == ix.size(h));
                prop_assert_eq!(first_max, Some(h));
            }
            let paths = all_root_leaf_paths(&ix, v);
            for kind in PathKind::ALL {
                let p = ix.root_leaf_path(v, kind);
                prop_assert!(paths.contains(&p));
                prop_assert!(p.windows(2).all(|e| ix.parent(e[1]) == Some(e[0])));
            }
            let d: u64 = (ix.lml(v)..=v).map(|x| ix.size(x) as u64).sum();
            prop_assert_eq!(ix.desc_size_sum(v), d);
        }
        prop_assert!(pre_seen.into_iter().all(|s| s));
    }
}

#[test]
fn worked_example_counts() {
    let f = TreeIndex::build(&parse_bracket("{c{a}{b}}").unwrap());
    assert_eq!(
        (f.full_count(2), f.left_count(2), f.right_count(2)),
        (4, 4, 4)
    );
    let g = TreeIndex::build(&parse_bracket("{b{a}}").unwrap());
    assert_eq!(
        (g.full_count(1), g.left_count(1), g.right_count(1)),
        (2, 2, 2)
    );
    let chain = TreeIndex::build(&parse_bracket("{a{b{c{d}}}}").unwrap());
    assert_eq!(chain.full_count(3), 4);
}

#[test]
fn relevant_subtrees_examples() {
    let t = TreeIndex::build(&parse_bracket("{a{b}{c}}").unwrap());
    assert_eq!(t.root_leaf_path(2, PathKind::Left), vec![2, 0]);
    assert_eq!(t.root_leaf_path(2, PathKind::Right), vec![2, 1]);
    assert_eq!(t.root_leaf_path(2, PathKind::Heavy), vec![2, 0]);
    assert_eq!(t.relevant_subtrees(&[2, 0]), vec![1]);
    let chain = TreeIndex::build(&parse_bracket("{a{b}}").unwrap());
    assert!(chain.relevant_subtrees(&[1, 0]).is_empty());
}
