//! Single-path functions for left and right paths of the left operand.
//!
//! With a left path every relevant subforest of `F_v` is a postorder prefix,
//! so the classic keyroot dynamic program applies: one keyroot in `F_v` and
//! every left keyroot of `G_w`. Right paths run the same program over the
//! mirrored order, where node `x` sits at position `n - 1 - pre(x)`.

use super::costs::Oriented;
use super::matrix::DistanceMatrix;
use crate::index::{PathKind, TreeIndex};

/// Nodes of one subtree in the traversal order of a view, with local
/// leftmost-leaf positions.
struct Layout {
    nodes: Vec<usize>,
    lml: Vec<usize>,
}

impl Layout {
    fn new(ix: &TreeIndex, root: usize, mirrored: bool) -> Self {
        let m = ix.size(root);
        let nodes: Vec<usize> = if mirrored {
            let last = ix.pre(root) + m - 1;
            (0..m).map(|j| ix.node_at_pre(last - j)).collect()
        } else {
            (ix.lml(root)..=root).collect()
        };
        let lml = nodes
            .iter()
            .enumerate()
            .map(|(j, &x)| j + 1 - ix.size(x))
            .collect();
        Layout { nodes, lml }
    }
}

/// Runs the single-path function for the left (or, when `mirrored`, right)
/// path of `left[v]` against `right[w]`. Returns the number of subproblems.
#[allow(clippy::too_many_arguments)]
pub(crate) fn keyroot_path(
    left: &TreeIndex,
    v: usize,
    right: &TreeIndex,
    w: usize,
    mirrored: bool,
    swapped: bool,
    d: &mut DistanceMatrix,
    c: Oriented<'_>,
) -> u64 {
    let kind = if mirrored {
        PathKind::Right
    } else {
        PathKind::Left
    };
    let fl = Layout::new(left, v, mirrored);
    let gl = Layout::new(right, w, mirrored);
    let (mf, mg) = (fl.nodes.len(), gl.nodes.len());
    let keyroots: Vec<usize> = (0..mg)
        .filter(|&j| j == mg - 1 || !right.on_parent_path(gl.nodes[j], kind))
        .collect();

    let width = mg + 1;
    let mut fd = vec![0.0f64; (mf + 1) * width];
    let mut count = 0u64;
    for &kr in &keyroots {
        let l0 = gl.lml[kr];
        let len = kr - l0 + 1;
        fd[0] = 0.0;
        for jj in 1..=len {
            fd[jj] = fd[jj - 1] + c.right_remove[gl.nodes[l0 + jj - 1]];
        }
        for i in 1..=mf {
            let x = fl.nodes[i - 1];
            let fx = fl.lml[i - 1];
            let dx = c.left_remove[x];
            let (row, prev) = (i * width, (i - 1) * width);
            fd[row] = fd[prev] + dx;
            for jj in 1..=len {
                let y = gl.nodes[l0 + jj - 1];
                let gy = gl.lml[l0 + jj - 1];
                let a = fd[prev + jj] + dx;
                let b = fd[row + jj - 1] + c.right_remove[y];
                let best = if fx == 0 && gy == l0 {
                    let val = a.min(b).min(fd[prev + jj - 1] + c.ren(x, y));
                    d.put(swapped, x, y, val);
                    val
                } else {
                    a.min(b).min(fd[fx * width + gy - l0] + d.at(swapped, x, y))
                };
                fd[row + jj] = best;
            }
        }
        count += (mf * len) as u64;
    }
    count
}
