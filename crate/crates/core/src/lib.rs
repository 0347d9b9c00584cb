//! Exact tree edit distance for ordered labeled trees.
//!
//! Distances are computed by a general path-strategy executor ([`gted`]) that
//! runs any left/right/heavy (LRH) strategy in quadratic space. The optimal
//! LRH strategy is computed in quadratic time by [`opt_strategy`]; running the
//! executor with it gives the robust algorithm (`Algorithm::Rted`). The fixed
//! strategies of Zhang–Shasha, Klein and Demaine et al. are available for
//! comparison, together with a cost model that predicts exactly how many
//! relevant subproblems each strategy computes.
//!
//! Node ids throughout the API are 0-based postorder positions.

pub mod error;
pub mod gted;
pub mod index;
pub mod oracle;
pub mod shapes;
pub mod strategy;
pub mod tree;

pub use error::{Error, Result};
pub use gted::{
    brute_force_distance, delta_generic, delta_left, delta_right, gted, tree_edit_distance,
    Algorithm, CostModel, DistanceMatrix, ExecStats, UnitCost, WeightedCost,
};
pub use index::{PathKind, TreeIndex};
pub use shapes::{gen_shape, LabelMode, ShapeKind, ShapeSize, ShapeSpec};
pub use strategy::{
    baseline_strategy, exhaustive_optimal_cost, fixed_strategy, opt_strategy, strategy_cost,
    FixedStrategy, PathChoice, Side, StrategyCost, StrategyMatrix,
};
pub use tree::{ingest_xml, parse_bracket, serialize_bracket, Label, Tree};
