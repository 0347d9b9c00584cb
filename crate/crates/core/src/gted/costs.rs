use std::collections::HashMap;

use crate::index::TreeIndex;
use crate::tree::Label;

/// Node edit costs. Implementations must return nonnegative values and
/// `ren(a, a) == 0`.
pub trait CostModel: Sync {
    fn del(&self, label: &Label) -> f64;
    fn ins(&self, label: &Label) -> f64;
    fn ren(&self, from: &Label, to: &Label) -> f64;
}

/// Every operation costs 1; renaming to the same label is free.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct UnitCost;

impl CostModel for UnitCost {
    fn del(&self, _: &Label) -> f64 {
        1.0
    }

    fn ins(&self, _: &Label) -> f64 {
        1.0
    }

    fn ren(&self, from: &Label, to: &Label) -> f64 {
        if from == to {
            0.0
        } else {
            1.0
        }
    }
}

/// Label-independent constant costs; `ren` applies only to differing labels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedCost {
    pub del: f64,
    pub ins: f64,
    pub ren: f64,
}

impl CostModel for WeightedCost {
    fn del(&self, _: &Label) -> f64 {
        self.del
    }

    fn ins(&self, _: &Label) -> f64 {
        self.ins
    }

    fn ren(&self, from: &Label, to: &Label) -> f64 {
        if from == to {
            0.0
        } else {
            self.ren
        }
    }
}

/// Costs of one `(F, G)` pair, evaluated once per node and per pair of
/// distinct labels so the inner loops never touch strings.
#[derive(Debug, Clone)]
pub(crate) struct PairCosts {
    del: Vec<f64>,
    ins: Vec<f64>,
    class_f: Vec<u32>,
    class_g: Vec<u32>,
    classes_g: usize,
    ren: Vec<f64>,
}

fn label_classes(ix: &TreeIndex) -> (Vec<u32>, Vec<Label>) {
    let mut ids: HashMap<&Label, u32> = HashMap::new();
    let mut distinct = Vec::new();
    let classes = ix
        .labels()
        .iter()
        .map(|l| {
            *ids.entry(l).or_insert_with(|| {
                distinct.push(l.clone());
                (distinct.len() - 1) as u32
            })
        })
        .collect();
    (classes, distinct)
}

impl PairCosts {
    pub(crate) fn new(f: &TreeIndex, g: &TreeIndex, model: &dyn CostModel) -> Self {
        let (class_f, labels_f) = label_classes(f);
        let (class_g, labels_g) = label_classes(g);
        let mut ren = Vec::with_capacity(labels_f.len() * labels_g.len());
        for a in &labels_f {
            ren.extend(labels_g.iter().map(|b| model.ren(a, b)));
        }
        PairCosts {
            del: f.labels().iter().map(|l| model.del(l)).collect(),
            ins: g.labels().iter().map(|l| model.ins(l)).collect(),
            class_f,
            class_g,
            classes_g: labels_g.len(),
            ren,
        }
    }

    /// View of the costs with the operands in executor order. When `swapped`
    /// the executor's left operand is `G`: removing one of its nodes is an
    /// insertion, and renames run from the right operand's label to the left's.
    pub(crate) fn oriented(&self, swapped: bool) -> Oriented<'_> {
        let (left_remove, right_remove) = if swapped {
            (&self.ins[..], &self.del[..])
        } else {
            (&self.del[..], &self.ins[..])
        };
        Oriented {
            costs: self,
            swapped,
            left_remove,
            right_remove,
        }
    }
}

#[derive(Clone, Copy)]
pub(crate) struct Oriented<'a> {
    costs: &'a PairCosts,
    swapped: bool,
    /// Cost of removing a node of the executor's left operand.
    pub(crate) left_remove: &'a [f64],
    /// Cost of removing a node of the executor's right operand.
    pub(crate) right_remove: &'a [f64],
}

impl Oriented<'_> {
    #[inline]
    pub(crate) fn ren(&self, x: usize, y: usize) -> f64 {
        let (fv, gw) = if self.swapped { (y, x) } else { (x, y) };
        let c = self.costs;
        c.ren[c.class_f[fv] as usize * c.classes_g + c.class_g[gw] as usize]
    }
}
