//! Threshold self-join over a set of trees.

use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use rted_core::{gted, Algorithm, CostModel, Tree, TreeIndex};

use crate::{read_tree, CliError, Result};

/// A matched pair of trees, by file name.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JoinPair {
    pub file_a: String,
    pub file_b: String,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct JoinResult {
    pub tau: f64,
    /// Pairs with distance strictly below `tau`, in input order.
    pub pairs: Vec<JoinPair>,
    /// Total subproblems each algorithm computed over all pairs.
    pub subproblems: Vec<(Algorithm, u64)>,
}

/// Reads every regular file of `dir` as a bracket tree, sorted by name.
pub fn load_dir(dir: &Path) -> Result<Vec<(String, Tree)>> {
    let entries = fs::read_dir(dir).map_err(|e| CliError::io(dir, e))?;
    let mut paths = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| CliError::io(dir, e))?;
        let path = entry.path();
        if path.is_file() {
            paths.push(path);
        }
    }
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default();
            read_tree(&p).map(|t| (name, t))
        })
        .collect()
}

/// Evaluates every unordered pair of distinct trees with each algorithm and
/// keeps the pairs at distance below `tau`. Pairs are distributed over
/// `threads` workers (0 = rayon's default); each pair runs single-threaded.
pub fn join(
    trees: &[(String, Tree)],
    tau: f64,
    algos: &[Algorithm],
    costs: &dyn CostModel,
    threads: usize,
) -> Result<JoinResult> {
    if algos.is_empty() {
        return Err(CliError::Usage("join needs at least one algorithm".into()));
    }
    let indexes: Vec<TreeIndex> = trees.iter().map(|(_, t)| TreeIndex::build(t)).collect();
    let pairs: Vec<(usize, usize)> = (0..trees.len())
        .flat_map(|i| (i + 1..trees.len()).map(move |j| (i, j)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Other(format!("thread pool: {e}")))?;
    // Per pair: the distance and one subproblem count per algorithm.
    let results: Vec<(f64, Vec<u64>)> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(i, j)| {
                let (f, g) = (&indexes[i], &indexes[j]);
                let mut distance = f64::NAN;
                let counts = algos
                    .iter()
                    .map(|&a| {
                        let (d, stats) = gted(f, g, &a.strategy(f, g), costs);
                        distance = d.get(f.root(), g.root()).expect("root pair computed");
                        stats.subproblems
                    })
                    .collect();
                (distance, counts)
            })
            .collect()
    });

    let mut subproblems: Vec<(Algorithm, u64)> = algos.iter().map(|&a| (a, 0)).collect();
    let mut matched = Vec::new();
    for (&(i, j), (distance, counts)) in pairs.iter().zip(results) {
        for (slot, c) in subproblems.iter_mut().zip(counts) {
            slot.1 += c;
        }
        if distance < tau {
            matched.push(JoinPair {
                file_a: trees[i].0.clone(),
                file_b: trees[j].0.clone(),
                distance,
            });
        }
    }
    Ok(JoinResult {
        tau,
        pairs: matched,
        subproblems,
    })
}
