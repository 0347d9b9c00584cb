/// Distances between pairs of subtrees `(F_v, G_w)`, with a fill mask.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    rows: usize,
    cols: usize,
    d: Vec<f64>,
    filled: Vec<bool>,
}

impl DistanceMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        DistanceMatrix {
            rows,
            cols,
            d: vec![0.0; rows * cols],
            filled: vec![false; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `δ(F_v, G_w)`, if computed.
    pub fn get(&self, v: usize, w: usize) -> Option<f64> {
        let i = v * self.cols + w;
        self.filled[i].then(|| self.d[i])
    }

    pub fn is_filled(&self, v: usize, w: usize) -> bool {
        self.filled[v * self.cols + w]
    }

    pub fn filled_count(&self) -> usize {
        self.filled.iter().filter(|&&f| f).count()
    }

    pub fn is_complete(&self) -> bool {
        self.filled.iter().all(|&f| f)
    }

    pub fn set(&mut self, v: usize, w: usize, value: f64) {
        let i = v * self.cols + w;
        self.d[i] = value;
        self.filled[i] = true;
    }

    /// Reads a cell addressed in executor order; `swapped` means the executor's
    /// left operand is `G`.
    #[inline]
    pub(crate) fn at(&self, swapped: bool, x: usize, y: usize) -> f64 {
        let i = if swapped {
            y * self.cols + x
        } else {
            x * self.cols + y
        };
        debug_assert!(
            self.filled[i],
            "single-path precondition violated: missing distance for pair ({x}, {y}), swapped={swapped}"
        );
        self.d[i]
    }

    #[inline]
    pub(crate) fn put(&mut self, swapped: bool, x: usize, y: usize, value: f64) {
        let i = if swapped {
            y * self.cols + x
        } else {
            x * self.cols + y
        };
        self.d[i] = value;
        self.filled[i] = true;
    }
}
