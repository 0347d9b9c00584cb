//! Commands behind the `rted` binary.

mod error;
pub mod join;

pub use error::CliError;
pub use join::{join, load_dir, JoinPair, JoinResult};

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use rted_core::{
    brute_force_distance, gen_shape, gted, opt_strategy, strategy_cost, Algorithm, CostModel,
    PathKind, ShapeKind, ShapeSpec, Side, Tree, TreeIndex, UnitCost, WeightedCost,
};

pub type Result<T> = std::result::Result<T, CliError>;

/// Distance procedures selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgoChoice {
    Strategy(Algorithm),
    /// The exhaustive recursion; small inputs only.
    Brute,
}

impl AlgoChoice {
    pub fn name(self) -> &'static str {
        match self {
            AlgoChoice::Strategy(a) => a.name(),
            AlgoChoice::Brute => "brute",
        }
    }
}

impl fmt::Display for AlgoChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgoChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.eq_ignore_ascii_case("brute") {
            return Ok(AlgoChoice::Brute);
        }
        s.parse::<Algorithm>().map(AlgoChoice::Strategy).map_err(|_| {
            format!("unknown algorithm {s:?} (expected rted, zhang-l, zhang-r, klein-h, demaine-h or brute)")
        })
    }
}

/// Edit costs given as `unit` or `DEL,INS,REN`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CostSpec {
    Unit,
    Weighted(WeightedCost),
}

impl CostSpec {
    pub fn model(&self) -> &dyn CostModel {
        match self {
            CostSpec::Unit => &UnitCost,
            CostSpec::Weighted(w) => w,
        }
    }
}

impl FromStr for CostSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.eq_ignore_ascii_case("unit") {
            return Ok(CostSpec::Unit);
        }
        let parts: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| format!("bad cost list {s:?}: {e}"))?;
        match parts[..] {
            [del, ins, ren] if parts.iter().all(|c| c.is_finite() && *c >= 0.0) => {
                Ok(CostSpec::Weighted(WeightedCost { del, ins, ren }))
            }
            _ => Err(format!(
                "costs must be `unit` or three nonnegative numbers DEL,INS,REN, got {s:?}"
            )),
        }
    }
}

/// Outcome of one distance computation, one CSV row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub algo: String,
    pub distance: f64,
    /// Not reported for the brute-force recursion.
    pub subproblems: Option<u64>,
    pub strategy_time_ms: f64,
    pub distance_time_ms: f64,
    pub total_time_ms: f64,
}

fn ms(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn read_tree(path: &Path) -> Result<Tree> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    rted_core::parse_bracket(&text).map_err(|source| CliError::Input {
        path: path.to_owned(),
        source,
    })
}

pub fn compute(f: &Tree, g: &Tree, algo: AlgoChoice, costs: &dyn CostModel) -> Result<RunReport> {
    match algo {
        AlgoChoice::Strategy(a) => {
            let start = Instant::now();
            let (distance, stats) = rted_core::tree_edit_distance(f, g, a, costs);
            let total = start.elapsed();
            Ok(RunReport {
                algo: a.name().to_owned(),
                distance,
                subproblems: Some(stats.subproblems),
                strategy_time_ms: ms(stats.strategy_time),
                distance_time_ms: ms(stats.distance_time),
                total_time_ms: ms(total.max(stats.total_time())),
            })
        }
        AlgoChoice::Brute => {
            let start = Instant::now();
            let distance = brute_force_distance(f, g, costs)?;
            let total = ms(start.elapsed());
            Ok(RunReport {
                algo: "brute".to_owned(),
                distance,
                subproblems: None,
                strategy_time_ms: 0.0,
                distance_time_ms: total,
                total_time_ms: total,
            })
        }
    }
}

/// One cell of a strategy dump; node ids are 1-based postorder positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrategyRow {
    pub v: usize,
    pub w: usize,
    pub side: &'static str,
    pub kind: &'static str,
}

pub fn strategy_rows(f: &TreeIndex, g: &TreeIndex, algo: Algorithm) -> (Vec<StrategyRow>, u64) {
    let s = algo.strategy(f, g);
    let cost = strategy_cost(f, g, &s).count;
    let rows = s
        .iter()
        .map(|(v, w, c)| StrategyRow {
            v: v + 1,
            w: w + 1,
            side: match c.side {
                Side::LeftTree => "F",
                Side::RightTree => "G",
            },
            kind: match c.kind {
                PathKind::Left => "left",
                PathKind::Right => "right",
                PathKind::Heavy => "heavy",
            },
        })
        .collect();
    (rows, cost)
}

/// A row of the subproblem-count table. The executed columns are only
/// filled when the strategy was also run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountRow {
    pub shape: String,
    pub size: usize,
    pub algo: String,
    pub subproblems: u64,
    pub executed: Option<u64>,
    pub strategy_time_ms: Option<f64>,
    pub distance_time_ms: Option<f64>,
}

/// Subproblem counts for identical pairs of generated trees. Without
/// `execute` only strategies are computed, never distance matrices.
pub fn count_rows(
    shapes: &[ShapeKind],
    sizes: &[usize],
    algos: &[Algorithm],
    seed: u64,
    execute: bool,
) -> Result<Vec<CountRow>> {
    let mut rows = Vec::new();
    for &shape in shapes {
        for &size in sizes {
            let tree = gen_shape(&ShapeSpec::new(shape, size).with_seed(seed))?;
            let ix = TreeIndex::build(&tree);
            for &algo in algos {
                let start = Instant::now();
                let (s, subproblems) = match algo {
                    Algorithm::Rted => {
                        let (s, c) = opt_strategy(&ix, &ix);
                        (s, c.count)
                    }
                    _ => {
                        let s = algo.strategy(&ix, &ix);
                        let c = strategy_cost(&ix, &ix, &s).count;
                        (s, c)
                    }
                };
                let strategy_time = start.elapsed();
                let mut row = CountRow {
                    shape: shape.name().to_owned(),
                    size,
                    algo: algo.name().to_owned(),
                    subproblems,
                    executed: None,
                    strategy_time_ms: None,
                    distance_time_ms: None,
                };
                if execute {
                    let (_, stats) = gted(&ix, &ix, &s, &UnitCost);
                    row.executed = Some(stats.subproblems);
                    row.strategy_time_ms = Some(ms(strategy_time));
                    row.distance_time_ms = Some(ms(stats.distance_time));
                }
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// Writes `rows` as CSV with a header line.
pub fn write_csv<T: Serialize>(out: impl std::io::Write, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Appends `row` to the CSV file at `path`, writing a header first if the
/// file is new or empty.
pub fn append_csv<T: Serialize>(path: &Path, row: &T) -> Result<()> {
    let fresh = fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
    let file = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| CliError::io(path, e))?;
    let mut w = csv::WriterBuilder::new()
        .has_headers(fresh)
        .from_writer(file);
    w.serialize(row)?;
    w.flush().map_err(|e| CliError::io(path, e))?;
    Ok(())
}
