//! Direct evaluation of the forest recursion with rightmost-root removal,
//! memoized over pairs of postorder intervals. Independent of the index and
//! the strategy code; only for small inputs.

use std::collections::HashMap;

use super::costs::CostModel;
use crate::error::{Error, Result};
use crate::tree::{Label, Tree};

/// Largest `|F|·|G|` accepted by [`brute_force_distance`].
pub const BRUTE_FORCE_LIMIT: usize = 1024;

struct Flat<'a> {
    labels: Vec<&'a Label>,
    lml: Vec<usize>,
}

fn flatten(t: &Tree) -> Flat<'_> {
    let mut labels = Vec::new();
    let mut lml = Vec::new();
    // (node, child cursor, first postorder id of its subtree)
    let mut stack = vec![(t, 0usize, 0usize)];
    while let Some((node, i, start)) = stack.pop() {
        if i < node.children.len() {
            stack.push((node, i + 1, start));
            let next = labels.len();
            stack.push((&node.children[i], 0, next));
        } else {
            labels.push(&node.label);
            lml.push(start);
        }
    }
    Flat { labels, lml }
}

struct Memo<'a> {
    f: Flat<'a>,
    g: Flat<'a>,
    costs: &'a dyn CostModel,
    memo: HashMap<(usize, usize, usize, usize), f64>,
}

impl Memo<'_> {
    /// δ of the forests made of postorder ids `i..j` of F and `k..l` of G.
    /// Both are unions of whole subtrees whenever this is called.
    fn dist(&mut self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        if i == j {
            return (k..l).map(|y| self.costs.ins(self.g.labels[y])).sum();
        }
        if k == l {
            return (i..j).map(|x| self.costs.del(self.f.labels[x])).sum();
        }
        if let Some(&v) = self.memo.get(&(i, j, k, l)) {
            return v;
        }
        let (x, y) = (j - 1, l - 1);
        let (lx, ly) = (self.f.lml[x], self.g.lml[y]);
        let del = self.dist(i, x, k, l) + self.costs.del(self.f.labels[x]);
        let ins = self.dist(i, j, k, y) + self.costs.ins(self.g.labels[y]);
        let matched = self.dist(lx, x, ly, y)
            + self.costs.ren(self.f.labels[x], self.g.labels[y])
            + self.dist(i, lx, k, ly);
        let best = del.min(ins).min(matched);
        self.memo.insert((i, j, k, l), best);
        best
    }
}

/// Tree edit distance by exhaustive memoized recursion.
///
/// Fails with [`Error::OracleGuard`] when `|F|·|G|` exceeds
/// [`BRUTE_FORCE_LIMIT`].
pub fn brute_force_distance(f: &Tree, g: &Tree, costs: &dyn CostModel) -> Result<f64> {
    let (nf, ng) = (f.size(), g.size());
    if nf * ng > BRUTE_FORCE_LIMIT {
        return Err(Error::OracleGuard {
            what: "brute-force distance",
            actual: nf * ng,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut m = Memo {
        f: flatten(f),
        g: flatten(g),
        costs,
        memo: HashMap::new(),
    };
    Ok(m.dist(0, nf, 0, ng))
}
