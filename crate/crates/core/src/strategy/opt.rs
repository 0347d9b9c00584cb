//! Quadratic-time computation of the optimal LRH strategy.
//!
//! Subtree pairs are visited in double postorder. Instead of summing the costs
//! of relevant subtrees at every pair, running sums are kept per path kind and
//! pushed to the parent once a pair is finished: a child that continues its
//! parent's path contributes its own running sum, any other child contributes
//! its optimal cost.

use super::{PathChoice, StrategyCost, StrategyMatrix};
use crate::index::{PathKind, TreeIndex};

/// Running sums for one node of `F` against every node of `G`, one triple
/// `[left, right, heavy]` per `w`.
type CostRow = Vec<[u64; 3]>;

/// Rows are only live between the first finished child of a node and the node
/// itself, i.e. along the current root path of `F`, so they are recycled.
struct RowPool {
    width: usize,
    slot: Vec<Option<CostRow>>,
    spare: Vec<CostRow>,
}

impl RowPool {
    fn new(nodes: usize, width: usize) -> Self {
        RowPool {
            width,
            slot: (0..nodes).map(|_| None).collect(),
            spare: Vec::new(),
        }
    }

    fn take(&mut self, v: usize) -> Option<CostRow> {
        self.slot[v].take()
    }

    fn get_or_alloc(&mut self, v: usize) -> &mut CostRow {
        if self.slot[v].is_none() {
            let row = match self.spare.pop() {
                Some(mut row) => {
                    row.iter_mut().for_each(|c| *c = [0; 3]);
                    row
                }
                None => vec![[0; 3]; self.width],
            };
            self.slot[v] = Some(row);
        }
        self.slot[v].as_mut().expect("just filled")
    }

    fn recycle(&mut self, row: CostRow) {
        self.spare.push(row);
    }
}

// Slot order follows `PathKind::ALL`.
const LEFT: usize = 0;
const RIGHT: usize = 1;
const HEAVY: usize = 2;

/// Sweeps all subtree pairs, letting `pick` choose among the six candidate
/// costs (ordered as [`PathChoice::CANDIDATES`]) at each pair. Returns the
/// cost of the root pair.
pub(crate) fn sweep(
    f: &TreeIndex,
    g: &TreeIndex,
    mut pick: impl FnMut(usize, usize, &[u64; 6]) -> usize,
) -> u64 {
    let (nf, ng) = (f.len(), g.len());
    let mut rows = RowPool::new(nf, ng);
    // Running sums for relevant subtrees of G_w against the current F_v.
    let mut g_sums = vec![[0u64; 3]; ng];
    let zero_row: CostRow = Vec::new();
    let mut root_cost = 0;

    let on_path =
        |ix: &TreeIndex, x: usize| -> [bool; 3] { PathKind::ALL.map(|k| ix.on_parent_path(x, k)) };
    let g_flags: Vec<[bool; 3]> = (0..ng).map(|w| on_path(g, w)).collect();

    for v in 0..nf {
        let own = rows.take(v);
        let own_row = own.as_ref().unwrap_or(&zero_row);
        let v_flags = on_path(f, v);
        let size_v = f.size(v) as u64;
        let (full_v, left_v, right_v) = (f.full_count(v), f.left_count(v), f.right_count(v));
        let mut parent_row = f.parent(v).map(|p| std::mem::take(rows.get_or_alloc(p)));

        for w in 0..ng {
            let fv = own_row.get(w).copied().unwrap_or([0; 3]);
            let gw = std::mem::take(&mut g_sums[w]);
            let size_w = g.size(w) as u64;
            let candidates = [
                size_v * g.full_count(w) + fv[HEAVY],
                size_w * full_v + gw[HEAVY],
                size_v * g.left_count(w) + fv[LEFT],
                size_w * left_v + gw[LEFT],
                size_v * g.right_count(w) + fv[RIGHT],
                size_w * right_v + gw[RIGHT],
            ];
            let cost = candidates[pick(v, w, &candidates)];

            if let Some(prow) = parent_row.as_mut() {
                let cell = &mut prow[w];
                for k in [LEFT, RIGHT, HEAVY] {
                    cell[k] += if v_flags[k] { fv[k] } else { cost };
                }
            }
            if let Some(q) = g.parent(w) {
                let flags = g_flags[w];
                let cell = &mut g_sums[q];
                for k in [LEFT, RIGHT, HEAVY] {
                    cell[k] += if flags[k] { gw[k] } else { cost };
                }
            }
            root_cost = cost;
        }

        if let (Some(p), Some(prow)) = (f.parent(v), parent_row) {
            *rows.get_or_alloc(p) = prow;
        }
        if let Some(row) = own {
            rows.recycle(row);
        }
    }
    root_cost
}

/// Computes the optimal LRH strategy for `(F, G)` and its cost in
/// `O(|F|·|G|)` time. Among equal candidates the first in
/// [`PathChoice::CANDIDATES`] order wins.
pub fn opt_strategy(f: &TreeIndex, g: &TreeIndex) -> (StrategyMatrix, StrategyCost) {
    let mut matrix = StrategyMatrix::filled(f.len(), g.len(), PathChoice::CANDIDATES[0]);
    let cost = sweep(f, g, |v, w, candidates| {
        let mut best = 0;
        for (i, &c) in candidates.iter().enumerate().skip(1) {
            if c < candidates[best] {
                best = i;
            }
        }
        matrix.set(v, w, PathChoice::CANDIDATES[best]);
        best
    });
    (matrix, StrategyCost { count: cost })
}
