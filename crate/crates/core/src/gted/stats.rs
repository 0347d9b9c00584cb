use std::time::Duration;

/// Instrumentation of one distance computation.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExecStats {
    /// Forest-pair distances evaluated by the min-recurrence.
    pub subproblems: u64,
    pub left_calls: u64,
    pub right_calls: u64,
    pub generic_calls: u64,
    pub left_subproblems: u64,
    pub right_subproblems: u64,
    pub generic_subproblems: u64,
    /// Building the tree indexes.
    pub index_time: Duration,
    /// Computing the strategy.
    pub strategy_time: Duration,
    /// Running the executor.
    pub distance_time: Duration,
}

impl ExecStats {
    pub fn total_time(&self) -> Duration {
        self.index_time + self.strategy_time + self.distance_time
    }

    pub(crate) fn record_left(&mut self, count: u64) {
        self.left_calls += 1;
        self.left_subproblems += count;
        self.subproblems += count;
    }

    pub(crate) fn record_right(&mut self, count: u64) {
        self.right_calls += 1;
        self.right_subproblems += count;
        self.subproblems += count;
    }

    pub(crate) fn record_generic(&mut self, count: u64) {
        self.generic_calls += 1;
        self.generic_subproblems += count;
        self.subproblems += count;
    }
}
