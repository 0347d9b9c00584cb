use super::{single_path_cost, PathChoice, Side, StrategyCost, StrategyMatrix};
use crate::index::TreeIndex;

struct Baseline<'a> {
    f: &'a TreeIndex,
    g: &'a TreeIndex,
    memo: Vec<Option<u64>>,
    matrix: StrategyMatrix,
    sums: u64,
}

impl Baseline<'_> {
    fn cost(&mut self, v: usize, w: usize) -> u64 {
        let cell = v * self.g.len() + w;
        if let Some(c) = self.memo[cell] {
            return c;
        }
        let mut best: Option<(u64, PathChoice)> = None;
        for choice in PathChoice::CANDIDATES {
            let mut total = single_path_cost(self.f, self.g, v, w, choice);
            let mut subpairs = Vec::new();
            match choice.side {
                Side::LeftTree => self
                    .f
                    .for_each_relevant_subtree(v, choice.kind, |x| subpairs.push((x, w))),
                Side::RightTree => self
                    .g
                    .for_each_relevant_subtree(w, choice.kind, |y| subpairs.push((v, y))),
            }
            self.sums += subpairs.len() as u64;
            for (x, y) in subpairs {
                total += self.cost(x, y);
            }
            if best.is_none_or(|(c, _)| total < c) {
                best = Some((total, choice));
            }
        }
        let (c, choice) = best.expect("six candidates");
        self.matrix.set(v, w, choice);
        self.memo[cell] = Some(c);
        c
    }
}

/// Optimal LRH strategy by memoized top-down evaluation of the cost formula.
///
/// Cubic in the worst case; meant as a cross-check of [`super::opt_strategy`].
/// Cells of pairs that are never reached keep the first candidate.
pub fn baseline_strategy(f: &TreeIndex, g: &TreeIndex) -> (StrategyMatrix, StrategyCost) {
    let (matrix, cost, _) = baseline_strategy_with_sums(f, g);
    (matrix, cost)
}

/// Like [`baseline_strategy`], also returning the number of relevant-subtree
/// cost summations performed.
pub fn baseline_strategy_with_sums(
    f: &TreeIndex,
    g: &TreeIndex,
) -> (StrategyMatrix, StrategyCost, u64) {
    let mut b = Baseline {
        f,
        g,
        memo: vec![None; f.len() * g.len()],
        matrix: StrategyMatrix::filled(f.len(), g.len(), PathChoice::CANDIDATES[0]),
        sums: 0,
    };
    let count = b.cost(f.root(), g.root());
    (b.matrix, StrategyCost { count }, b.sums)
}
