//! Path strategies: which root-leaf path decomposes each pair of subtrees.

mod baseline;
mod cost;
mod exhaustive;
mod opt;

pub use baseline::{baseline_strategy, baseline_strategy_with_sums};
pub use cost::strategy_cost;
pub use exhaustive::{enumerated_optimal_cost, exhaustive_optimal_cost};
pub use opt::opt_strategy;

use std::fmt;

use crate::index::{PathKind, TreeIndex};

/// Which of the two input trees a path lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// The first argument, `F`.
    LeftTree,
    /// The second argument, `G`.
    RightTree,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::LeftTree => "F",
            Side::RightTree => "G",
        }
    }
}

/// A root-leaf path of the subtree pair a strategy cell belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathChoice {
    pub side: Side,
    pub kind: PathKind,
}

impl PathChoice {
    pub const fn new(side: Side, kind: PathKind) -> Self {
        PathChoice { side, kind }
    }

    /// The six LRH candidates in tie-breaking order.
    pub const CANDIDATES: [PathChoice; 6] = [
        PathChoice::new(Side::LeftTree, PathKind::Heavy),
        PathChoice::new(Side::RightTree, PathKind::Heavy),
        PathChoice::new(Side::LeftTree, PathKind::Left),
        PathChoice::new(Side::RightTree, PathKind::Left),
        PathChoice::new(Side::LeftTree, PathKind::Right),
        PathChoice::new(Side::RightTree, PathKind::Right),
    ];
}

impl fmt::Display for PathChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind.name(), self.side.name())
    }
}

/// Number of relevant subproblems a strategy induces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrategyCost {
    pub count: u64,
}

impl From<u64> for StrategyCost {
    fn from(count: u64) -> Self {
        StrategyCost { count }
    }
}

impl fmt::Display for StrategyCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.count.fmt(f)
    }
}

/// A path choice for every pair of subtrees `(F_v, G_w)`, indexed by postorder
/// ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<PathChoice>,
}

impl StrategyMatrix {
    pub fn filled(rows: usize, cols: usize, choice: PathChoice) -> Self {
        StrategyMatrix {
            rows,
            cols,
            cells: vec![choice; rows * cols],
        }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> PathChoice,
    ) -> Self {
        let mut cells = Vec::with_capacity(rows * cols);
        for v in 0..rows {
            for w in 0..cols {
                cells.push(f(v, w));
            }
        }
        StrategyMatrix { rows, cols, cells }
    }

    /// `|F|`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// `|G|`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, v: usize, w: usize) -> PathChoice {
        self.cells[v * self.cols + w]
    }

    pub fn set(&mut self, v: usize, w: usize, choice: PathChoice) {
        self.cells[v * self.cols + w] = choice;
    }

    /// Cells in row-major order as `(v, w, choice)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, PathChoice)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .map(move |(i, &c)| (i / self.cols, i % self.cols, c))
    }

    /// The strategy for the swapped pair `(G, F)`.
    pub fn transposed(&self) -> StrategyMatrix {
        StrategyMatrix::from_fn(self.cols, self.rows, |w, v| {
            let c = self.get(v, w);
            let side = match c.side {
                Side::LeftTree => Side::RightTree,
                Side::RightTree => Side::LeftTree,
            };
            PathChoice::new(side, c.kind)
        })
    }

    /// Whether the matrix has the dimensions of `(F, G)`. Every LRH choice is
    /// legal for every pair, so the shape is the only constraint.
    pub fn fits(&self, f: &TreeIndex, g: &TreeIndex) -> bool {
        self.rows == f.len() && self.cols == g.len()
    }
}

/// Strategies of earlier algorithms, expressed as path strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedStrategy {
    /// Left paths in `F` everywhere.
    ZhangL,
    /// Right paths in `F` everywhere.
    ZhangR,
    /// Heavy paths in `F` everywhere.
    KleinH,
    /// Heavy path of the larger subtree of each pair, `F` on ties.
    DemaineH,
}

impl FixedStrategy {
    pub const ALL: [FixedStrategy; 4] = [
        FixedStrategy::ZhangL,
        FixedStrategy::ZhangR,
        FixedStrategy::KleinH,
        FixedStrategy::DemaineH,
    ];
}

pub fn fixed_strategy(kind: FixedStrategy, f: &TreeIndex, g: &TreeIndex) -> StrategyMatrix {
    let in_f = |k| PathChoice::new(Side::LeftTree, k);
    match kind {
        FixedStrategy::ZhangL => StrategyMatrix::filled(f.len(), g.len(), in_f(PathKind::Left)),
        FixedStrategy::ZhangR => StrategyMatrix::filled(f.len(), g.len(), in_f(PathKind::Right)),
        FixedStrategy::KleinH => StrategyMatrix::filled(f.len(), g.len(), in_f(PathKind::Heavy)),
        FixedStrategy::DemaineH => StrategyMatrix::from_fn(f.len(), g.len(), |v, w| {
            if f.size(v) >= g.size(w) {
                in_f(PathKind::Heavy)
            } else {
                PathChoice::new(Side::RightTree, PathKind::Heavy)
            }
        }),
    }
}

/// Single-path function cost of decomposing the pair `(v, w)` with `choice`:
/// `|F_v|` times the decomposition count of `G_w` that matches the path kind,
/// or the mirror image when the path lies in `G`.
pub(crate) fn single_path_cost(
    f: &TreeIndex,
    g: &TreeIndex,
    v: usize,
    w: usize,
    choice: PathChoice,
) -> u64 {
    let (a, b, x, y) = match choice.side {
        Side::LeftTree => (f, g, v, w),
        Side::RightTree => (g, f, w, v),
    };
    let other = match choice.kind {
        PathKind::Heavy => b.full_count(y),
        PathKind::Left => b.left_count(y),
        PathKind::Right => b.right_count(y),
    };
    a.size(x) as u64 * other
}
