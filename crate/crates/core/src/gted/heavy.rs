//! Single-path function for an arbitrary root-leaf path of the left operand.
//!
//! Relevant subforests of `F_v` are built bottom-up along the path: for a
//! path node `x` with on-path child `c`, the nodes right of `c` are added in
//! postorder, then the nodes left of `c` in reverse preorder, then `x`. Each
//! is paired with every subforest of `G_w` obtainable by removing leftmost
//! and rightmost roots.
//!
//! Such a subforest is `R(a, b)`: the nodes of `G_w` whose local preorder is
//! at least `a` and whose local postorder is below `b`. It is stored under the
//! canonical pair where the node at preorder `a` is its leftmost root and the
//! node at postorder `b - 1` its rightmost. Tables hold one row per `a`; only
//! canonical cells are written or read, except for the insertion table `E`,
//! which is defined everywhere.

use super::costs::Oriented;
use super::matrix::DistanceMatrix;
use crate::index::TreeIndex;

/// The subforests of `G_w` under the canonical `(a, b)` encoding.
struct Forests {
    m: usize,
    width: usize,
    /// Global id of the node at local postorder 0.
    lo: usize,
    r_of_q: Vec<usize>,
    q_of_r: Vec<usize>,
    size_q: Vec<usize>,
    /// For each row `a`, the canonical `b` in increasing order.
    row_start: Vec<usize>,
    row_b: Vec<usize>,
    /// For each column `b - 1`, the canonical `a` in decreasing order.
    col_start: Vec<usize>,
    col_a: Vec<usize>,
    /// Largest canonical `b' <= b` in row `a`.
    canon_row: Vec<u32>,
    /// Smallest canonical `a' >= a` in column `b - 1`.
    canon_col: Vec<u32>,
}

impl Forests {
    fn new(g: &TreeIndex, w: usize) -> Self {
        let m = g.size(w);
        let width = m + 1;
        let lo = g.lml(w);
        let p0 = g.pre(w);
        let mut r_of_q = vec![0; m];
        let mut q_of_r = vec![0; m];
        let mut size_q = vec![0; m];
        for q in 0..m {
            let r = g.pre(lo + q) - p0;
            r_of_q[q] = r;
            q_of_r[r] = q;
            size_q[q] = g.size(lo + q);
        }

        let mut row_start = Vec::with_capacity(m + 1);
        let mut row_b = Vec::new();
        let mut canon_row = vec![0u32; m * width];
        for a in 0..m {
            row_start.push(row_b.len());
            let mut best = 0;
            let cells = &mut canon_row[a * width..(a + 1) * width];
            for (b, cell) in cells.iter_mut().enumerate().skip(q_of_r[a] + 1) {
                if r_of_q[b - 1] >= a {
                    row_b.push(b);
                    best = b;
                }
                *cell = best as u32;
            }
        }
        row_start.push(row_b.len());

        let mut col_start = Vec::with_capacity(m + 1);
        let mut col_a = Vec::new();
        let mut canon_col = vec![m as u32; m * width];
        for zq in 0..m {
            col_start.push(col_a.len());
            let rz = r_of_q[zq];
            let mut best = m;
            for a in (0..=rz).rev() {
                if q_of_r[a] <= zq {
                    col_a.push(a);
                    best = a;
                }
                canon_col[zq * width + a] = best as u32;
            }
        }
        col_start.push(col_a.len());

        Forests {
            m,
            width,
            lo,
            r_of_q,
            q_of_r,
            size_q,
            row_start,
            row_b,
            col_start,
            col_a,
            canon_row,
            canon_col,
        }
    }

    fn row(&self, a: usize) -> &[usize] {
        &self.row_b[self.row_start[a]..self.row_start[a + 1]]
    }

    fn col(&self, zq: usize) -> &[usize] {
        &self.col_a[self.col_start[zq]..self.col_start[zq + 1]]
    }

    /// Number of distinct subforests.
    fn count(&self) -> u64 {
        self.row_b.len() as u64
    }
}

/// Runs the single-path function for `path` (listed from `v` down to a leaf)
/// of `left[v]` against `right[w]`. Returns the number of subproblems.
#[allow(clippy::too_many_arguments)]
pub(crate) fn heavy_path(
    left: &TreeIndex,
    v: usize,
    path: &[usize],
    right: &TreeIndex,
    w: usize,
    swapped: bool,
    d: &mut DistanceMatrix,
    c: Oriented<'_>,
) -> u64 {
    debug_assert_eq!(path.first(), Some(&v));
    let g = Forests::new(right, w);
    let (m, width, lo) = (g.m, g.width, g.lo);

    // δ(∅, R(a, b)) for every a and b.
    let mut e = vec![0.0f64; m * width];
    for a in 0..m {
        for b in 1..=m {
            let add = if g.r_of_q[b - 1] >= a {
                c.right_remove[lo + b - 1]
            } else {
                0.0
            };
            e[a * width + b] = e[a * width + b - 1] + add;
        }
    }

    let most_added = path
        .windows(2)
        .map(|p| left.size(p[0]) - left.size(p[1]) - 1)
        .max()
        .unwrap_or(0);
    let mut t = e.clone();
    let mut t2 = vec![0.0f64; m * width];
    let mut s_cur = vec![0.0f64; most_added * width];
    let mut s_prev = vec![0.0f64; most_added * width];
    let mut dsum = Vec::with_capacity(most_added + 1);
    let mut removed = 0.0f64;

    for (i, &x) in path.iter().enumerate().rev() {
        if let Some(&ch) = path.get(i + 1) {
            let right_nodes: Vec<usize> = (ch + 1..x).collect();
            let pc = left.pre(ch);
            let left_nodes: Vec<usize> = (1..pc - left.pre(x))
                .map(|k| left.node_at_pre(pc - k))
                .collect();

            // Forests Φ_k = F_ch plus the first k right nodes.
            dsum.clear();
            dsum.push(removed);
            for &y in &right_nodes {
                dsum.push(dsum.last().copied().unwrap_or(0.0) + c.left_remove[y]);
            }
            let kmax = right_nodes.len();
            if kmax > 0 {
                for a in (0..m).rev() {
                    let uq = g.q_of_r[a];
                    let u_leaf = g.size_q[uq] == 1;
                    let zs = g.row(a);
                    for k in 1..=kmax {
                        let y = right_nodes[k - 1];
                        let dy = c.left_remove[y];
                        let kk = k - left.size(y);
                        let cur = (k - 1) * width;
                        for (j, &b) in zs.iter().enumerate() {
                            let zq = b - 1;
                            let z = lo + zq;
                            let t1 = if k == 1 {
                                t[a * width + b]
                            } else {
                                s_cur[(k - 2) * width + b]
                            } + dy;
                            let minus = if j > 0 {
                                s_cur[cur + zs[j - 1]]
                            } else if u_leaf {
                                dsum[k]
                            } else {
                                s_prev[cur + uq]
                            };
                            let rest = if j == 0 {
                                dsum[kk]
                            } else {
                                let rb = g.canon_row[a * width + zq + 1 - g.size_q[zq]] as usize;
                                if kk == 0 {
                                    t[a * width + rb]
                                } else {
                                    s_cur[(kk - 1) * width + rb]
                                }
                            };
                            let val = t1
                                .min(minus + c.right_remove[z])
                                .min(d.at(swapped, y, z) + rest);
                            s_cur[cur + b] = val;
                        }
                    }
                    let last = (kmax - 1) * width;
                    for &b in zs {
                        t[a * width + b] = s_cur[last + b];
                    }
                    std::mem::swap(&mut s_cur, &mut s_prev);
                }
            }

            // Forests Ψ_k = Φ_kmax plus the first k left nodes.
            let base = dsum[kmax];
            dsum.clear();
            dsum.push(base);
            for &y in &left_nodes {
                dsum.push(dsum.last().copied().unwrap_or(0.0) + c.left_remove[y]);
            }
            let kmax = left_nodes.len();
            if kmax > 0 {
                for b in 1..=m {
                    let zq = b - 1;
                    let z_leaf = g.size_q[zq] == 1;
                    let us = g.col(zq);
                    for k in 1..=kmax {
                        let y = left_nodes[k - 1];
                        let dy = c.left_remove[y];
                        let kk = k - left.size(y);
                        let cur = (k - 1) * width;
                        for (j, &a) in us.iter().enumerate() {
                            let uq = g.q_of_r[a];
                            let u = lo + uq;
                            let t1 = if k == 1 {
                                t[a * width + b]
                            } else {
                                s_cur[(k - 2) * width + a]
                            } + dy;
                            let minus = if j > 0 {
                                s_cur[cur + us[j - 1]]
                            } else if z_leaf {
                                dsum[k]
                            } else {
                                s_prev[cur + a + 1]
                            };
                            let rest = if j == 0 {
                                dsum[kk]
                            } else {
                                let ra = g.canon_col[zq * width + a + g.size_q[uq]] as usize;
                                if kk == 0 {
                                    t[ra * width + b]
                                } else {
                                    s_cur[(kk - 1) * width + ra]
                                }
                            };
                            let val = t1
                                .min(minus + c.right_remove[u])
                                .min(d.at(swapped, y, u) + rest);
                            s_cur[cur + a] = val;
                        }
                    }
                    let last = (kmax - 1) * width;
                    for &a in us {
                        t[a * width + b] = s_cur[last + a];
                    }
                    std::mem::swap(&mut s_cur, &mut s_prev);
                }
            }
            removed = dsum[kmax];
        }

        // The tree F_x, from its children forest in `t`.
        let dx = c.left_remove[x];
        let below = removed;
        removed += dx;
        for a in (0..m).rev() {
            let uq = g.q_of_r[a];
            let u = lo + uq;
            let zs = g.row(a);
            for (j, &b) in zs.iter().enumerate() {
                let t1 = t[a * width + b] + dx;
                let val = if j == 0 {
                    let (t2v, t3v) = if g.size_q[uq] == 1 {
                        (removed, below)
                    } else {
                        let i = (a + 1) * width + uq;
                        (t2[i], t[i])
                    };
                    let val = t1.min(t2v + c.right_remove[u]).min(t3v + c.ren(x, u));
                    d.put(swapped, x, u, val);
                    val
                } else {
                    let zq = b - 1;
                    let whole = t2[g.r_of_q[zq] * width + zq + 1];
                    t1.min(t2[a * width + zs[j - 1]] + c.right_remove[lo + zq])
                        .min(whole + e[a * width + zq + 1 - g.size_q[zq]])
                };
                t2[a * width + b] = val;
            }
        }
        std::mem::swap(&mut t, &mut t2);
    }
    left.size(v) as u64 * g.count()
}
