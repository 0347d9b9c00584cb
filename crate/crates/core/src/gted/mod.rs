//! Distance computation driven by a path strategy.

mod brute;
mod costs;
mod heavy;
mod keyroot;
mod matrix;
mod stats;

pub use brute::{brute_force_distance, BRUTE_FORCE_LIMIT};
pub use costs::{CostModel, UnitCost, WeightedCost};
pub use matrix::DistanceMatrix;
pub use stats::ExecStats;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use costs::PairCosts;

use crate::index::{PathKind, TreeIndex};
use crate::strategy::{
    fixed_strategy, opt_strategy, FixedStrategy, PathChoice, Side, StrategyMatrix,
};
use crate::tree::Tree;

/// Strategy used by [`tree_edit_distance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Optimal LRH strategy.
    Rted,
    ZhangL,
    ZhangR,
    KleinH,
    DemaineH,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Rted,
        Algorithm::ZhangL,
        Algorithm::ZhangR,
        Algorithm::KleinH,
        Algorithm::DemaineH,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Rted => "rted",
            Algorithm::ZhangL => "zhang-l",
            Algorithm::ZhangR => "zhang-r",
            Algorithm::KleinH => "klein-h",
            Algorithm::DemaineH => "demaine-h",
        }
    }

    /// The strategy this algorithm runs on `(F, G)`.
    pub fn strategy(self, f: &TreeIndex, g: &TreeIndex) -> StrategyMatrix {
        let fixed = match self {
            Algorithm::Rted => return opt_strategy(f, g).0,
            Algorithm::ZhangL => FixedStrategy::ZhangL,
            Algorithm::ZhangR => FixedStrategy::ZhangR,
            Algorithm::KleinH => FixedStrategy::KleinH,
            Algorithm::DemaineH => FixedStrategy::DemaineH,
        };
        fixed_strategy(fixed, f, g)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown algorithm {s:?}"))
    }
}

/// One path-function invocation, in executor orientation.
#[allow(clippy::too_many_arguments)]
fn run_single_path(
    f: &TreeIndex,
    g: &TreeIndex,
    v: usize,
    w: usize,
    choice: PathChoice,
    d: &mut DistanceMatrix,
    costs: &PairCosts,
    stats: &mut ExecStats,
) {
    let swapped = choice.side == Side::RightTree;
    let (left, x, right, y) = if swapped { (g, w, f, v) } else { (f, v, g, w) };
    let c = costs.oriented(swapped);
    match choice.kind {
        PathKind::Left => {
            let n = keyroot::keyroot_path(left, x, right, y, false, swapped, d, c);
            stats.record_left(n);
        }
        PathKind::Right => {
            let n = keyroot::keyroot_path(left, x, right, y, true, swapped, d, c);
            stats.record_right(n);
        }
        PathKind::Heavy => {
            let path = left.root_leaf_path(x, PathKind::Heavy);
            let n = heavy::heavy_path(left, x, &path, right, y, swapped, d, c);
            stats.record_generic(n);
        }
    }
}

/// Computes the distances of all subtree pairs of `(F, G)` following
/// strategy `s`. `stats.subproblems` equals the strategy's cost.
///
/// # Panics
///
/// If `s` does not have the dimensions `|F| × |G|`.
pub fn gted(
    f: &TreeIndex,
    g: &TreeIndex,
    s: &StrategyMatrix,
    costs: &dyn CostModel,
) -> (DistanceMatrix, ExecStats) {
    assert!(s.fits(f, g), "strategy matrix does not match the trees");
    let start = Instant::now();
    let pc = PairCosts::new(f, g, costs);
    let mut d = DistanceMatrix::new(f.len(), g.len());
    let mut stats = ExecStats::default();

    enum Task {
        Visit(usize, usize),
        Run(usize, usize, PathChoice),
    }
    let mut stack = vec![Task::Visit(f.root(), g.root())];
    while let Some(task) = stack.pop() {
        match task {
            Task::Visit(v, w) => {
                let choice = s.get(v, w);
                stack.push(Task::Run(v, w, choice));
                match choice.side {
                    Side::LeftTree => f.for_each_relevant_subtree(v, choice.kind, |x| {
                        stack.push(Task::Visit(x, w))
                    }),
                    Side::RightTree => g.for_each_relevant_subtree(w, choice.kind, |y| {
                        stack.push(Task::Visit(v, y))
                    }),
                }
            }
            Task::Run(v, w, choice) => run_single_path(f, g, v, w, choice, &mut d, &pc, &mut stats),
        }
    }
    stats.distance_time = start.elapsed();
    (d, stats)
}

/// Left-path single-path function on `(F_v, G_w)`.
///
/// `d` must already hold the distances between every subtree of each relevant
/// subtree of `F_v` and every subtree of `G_w`. Fills `d` for every node on
/// the left path of `F_v` against every subtree of `G_w`.
pub fn delta_left(
    f: &TreeIndex,
    v: usize,
    g: &TreeIndex,
    w: usize,
    d: &mut DistanceMatrix,
    costs: &dyn CostModel,
    stats: &mut ExecStats,
) {
    let pc = PairCosts::new(f, g, costs);
    let n = keyroot::keyroot_path(f, v, g, w, false, false, d, pc.oriented(false));
    stats.record_left(n);
}

/// Right-path counterpart of [`delta_left`].
pub fn delta_right(
    f: &TreeIndex,
    v: usize,
    g: &TreeIndex,
    w: usize,
    d: &mut DistanceMatrix,
    costs: &dyn CostModel,
    stats: &mut ExecStats,
) {
    let pc = PairCosts::new(f, g, costs);
    let n = keyroot::keyroot_path(f, v, g, w, true, false, d, pc.oriented(false));
    stats.record_right(n);
}

/// Single-path function for any root-leaf `path` of `F_v`, listed from `v`
/// down. Same precondition as [`delta_left`] with respect to `path`.
///
/// # Panics
///
/// If `path` is not a root-leaf path of `F_v`.
#[allow(clippy::too_many_arguments)]
pub fn delta_generic(
    f: &TreeIndex,
    v: usize,
    path: &[usize],
    g: &TreeIndex,
    w: usize,
    d: &mut DistanceMatrix,
    costs: &dyn CostModel,
    stats: &mut ExecStats,
) {
    assert_eq!(
        path.first(),
        Some(&v),
        "path must start at the subtree root"
    );
    assert!(
        path.windows(2).all(|p| f.parent(p[1]) == Some(p[0])),
        "path must descend parent to child"
    );
    assert!(
        f.is_leaf(*path.last().expect("nonempty")),
        "path must end at a leaf"
    );
    let pc = PairCosts::new(f, g, costs);
    let n = heavy::heavy_path(f, v, path, g, w, false, d, pc.oriented(false));
    stats.record_generic(n);
}

/// Tree edit distance between `f` and `g` using `algo`'s strategy.
pub fn tree_edit_distance(
    f: &Tree,
    g: &Tree,
    algo: Algorithm,
    costs: &dyn CostModel,
) -> (f64, ExecStats) {
    let t0 = Instant::now();
    let fi = TreeIndex::build(f);
    let gi = TreeIndex::build(g);
    let index_time = t0.elapsed();
    let t1 = Instant::now();
    let s = algo.strategy(&fi, &gi);
    let strategy_time = t1.elapsed();
    let (d, mut stats) = gted(&fi, &gi, &s, costs);
    stats.index_time = index_time;
    stats.strategy_time = strategy_time;
    let dist = d
        .get(fi.root(), gi.root())
        .expect("root pair is always computed");
    (dist, stats)
}
