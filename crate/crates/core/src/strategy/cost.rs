use super::{single_path_cost, Side, StrategyCost, StrategyMatrix};
use crate::index::TreeIndex;

/// Number of relevant subproblems the executor computes when it runs strategy
/// `s` on `(F, G)`.
///
/// Follows the executor's recursion: at each reached pair the single-path
/// cost of the chosen path is added, then every relevant subtree of the
/// decomposed side is paired with the other subtree. Each pair is reached at
/// most once, so no memoization is needed.
///
/// # Panics
///
/// If `s` does not have the dimensions `|F| × |G|`.
pub fn strategy_cost(f: &TreeIndex, g: &TreeIndex, s: &StrategyMatrix) -> StrategyCost {
    assert!(s.fits(f, g), "strategy matrix does not match the trees");
    let mut total = 0u64;
    let mut stack = vec![(f.root(), g.root())];
    while let Some((v, w)) = stack.pop() {
        let choice = s.get(v, w);
        total += single_path_cost(f, g, v, w, choice);
        match choice.side {
            Side::LeftTree => f.for_each_relevant_subtree(v, choice.kind, |x| stack.push((x, w))),
            Side::RightTree => g.for_each_relevant_subtree(w, choice.kind, |y| stack.push((v, y))),
        }
    }
    StrategyCost { count: total }
}
