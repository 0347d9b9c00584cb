//! Brute-force optimal strategy costs for tiny inputs.
//!
//! Both routines derive every count they need from explicit set enumeration,
//! so they share nothing with the closed-form counts of the index.

use std::collections::HashMap;

use super::{PathChoice, Side, StrategyCost};
use crate::error::{Error, Result};
use crate::index::{PathKind, TreeIndex};
use crate::oracle::{enumerate_full_decomposition, enumerate_recursive_subforests};

/// Largest `|F|·|G|` accepted by [`exhaustive_optimal_cost`].
pub const EXHAUSTIVE_LIMIT: usize = 64;
/// Largest `|F|·|G|` accepted by [`enumerated_optimal_cost`].
pub const ENUMERATION_LIMIT: usize = 20;
/// Largest number of distinct strategies [`enumerated_optimal_cost`] will list.
pub const ENUMERATION_STRATEGY_LIMIT: usize = 2_000_000;

/// Enumerated decomposition counts of one tree, per node.
struct Counts {
    full: Vec<u64>,
    left: Vec<u64>,
    right: Vec<u64>,
}

impl Counts {
    fn new(ix: &TreeIndex) -> Self {
        let per = |f: &dyn Fn(usize) -> usize| (0..ix.len()).map(|v| f(v) as u64).collect();
        Counts {
            full: per(&|v| enumerate_full_decomposition(ix, v).len()),
            left: per(&|v| enumerate_recursive_subforests(ix, v, PathKind::Left).len()),
            right: per(&|v| enumerate_recursive_subforests(ix, v, PathKind::Right).len()),
        }
    }

    fn get(&self, kind: PathKind, v: usize) -> u64 {
        match kind {
            PathKind::Heavy => self.full[v],
            PathKind::Left => self.left[v],
            PathKind::Right => self.right[v],
        }
    }
}

struct Search<'a> {
    f: &'a TreeIndex,
    g: &'a TreeIndex,
    fc: Counts,
    gc: Counts,
}

impl Search<'_> {
    fn term(&self, v: usize, w: usize, choice: PathChoice) -> u64 {
        match choice.side {
            Side::LeftTree => self.f.size(v) as u64 * self.gc.get(choice.kind, w),
            Side::RightTree => self.g.size(w) as u64 * self.fc.get(choice.kind, v),
        }
    }

    fn subpairs(&self, v: usize, w: usize, choice: PathChoice) -> Vec<(usize, usize)> {
        match choice.side {
            Side::LeftTree => {
                let path = self.f.root_leaf_path(v, choice.kind);
                self.f
                    .relevant_subtrees(&path)
                    .into_iter()
                    .map(|x| (x, w))
                    .collect()
            }
            Side::RightTree => {
                let path = self.g.root_leaf_path(w, choice.kind);
                self.g
                    .relevant_subtrees(&path)
                    .into_iter()
                    .map(|y| (v, y))
                    .collect()
            }
        }
    }

    fn min_cost(&self, v: usize, w: usize, memo: &mut HashMap<(usize, usize), u64>) -> u64 {
        if let Some(&c) = memo.get(&(v, w)) {
            return c;
        }
        let best = PathChoice::CANDIDATES
            .iter()
            .map(|&choice| {
                self.term(v, w, choice)
                    + self
                        .subpairs(v, w, choice)
                        .into_iter()
                        .map(|(x, y)| self.min_cost(x, y, memo))
                        .sum::<u64>()
            })
            .min()
            .expect("six candidates");
        memo.insert((v, w), best);
        best
    }

    /// Costs of every strategy restricted to the pairs reachable from `(v, w)`.
    fn all_costs(&self, v: usize, w: usize) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        for choice in PathChoice::CANDIDATES {
            let mut partial = vec![self.term(v, w, choice)];
            for (x, y) in self.subpairs(v, w, choice) {
                let sub = self.all_costs(x, y)?;
                let combined = partial.len() * sub.len();
                if combined > ENUMERATION_STRATEGY_LIMIT {
                    return Err(Error::OracleGuard {
                        what: "strategy count",
                        actual: combined,
                        limit: ENUMERATION_STRATEGY_LIMIT,
                    });
                }
                partial = partial
                    .iter()
                    .flat_map(|&p| sub.iter().map(move |&s| p + s))
                    .collect();
            }
            out.extend(partial);
            if out.len() > ENUMERATION_STRATEGY_LIMIT {
                return Err(Error::OracleGuard {
                    what: "strategy count",
                    actual: out.len(),
                    limit: ENUMERATION_STRATEGY_LIMIT,
                });
            }
        }
        Ok(out)
    }
}

fn guard(f: &TreeIndex, g: &TreeIndex, limit: usize) -> Result<()> {
    let product = f.len() * g.len();
    if product > limit {
        return Err(Error::OracleGuard {
            what: "|F|·|G|",
            actual: product,
            limit,
        });
    }
    Ok(())
}

/// Minimum cost over all LRH strategies, by plain recursion over the six
/// choices at every reachable pair. The per-pair minimum only depends on the
/// pair, so it is memoized.
pub fn exhaustive_optimal_cost(f: &TreeIndex, g: &TreeIndex) -> Result<StrategyCost> {
    guard(f, g, EXHAUSTIVE_LIMIT)?;
    let search = Search {
        f,
        g,
        fc: Counts::new(f),
        gc: Counts::new(g),
    };
    let count = search.min_cost(f.root(), g.root(), &mut HashMap::new());
    Ok(StrategyCost { count })
}

/// Minimum cost found by listing the cost of every distinct LRH strategy
/// (over reachable pairs) one by one. Only for very small inputs.
pub fn enumerated_optimal_cost(f: &TreeIndex, g: &TreeIndex) -> Result<StrategyCost> {
    guard(f, g, ENUMERATION_LIMIT)?;
    let search = Search {
        f,
        g,
        fc: Counts::new(f),
        gc: Counts::new(g),
    };
    let costs = search.all_costs(f.root(), g.root())?;
    let count = costs.into_iter().min().expect("at least one strategy");
    Ok(StrategyCost { count })
}
