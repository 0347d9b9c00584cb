use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use rted_bench::{index, tree};
use rted_core::{
    fixed_strategy, opt_strategy, strategy_cost, tree_edit_distance, Algorithm, FixedStrategy,
    ShapeKind, UnitCost,
};

fn optimal_strategy(c: &mut Criterion) {
    let mut group = c.benchmark_group("opt_strategy");
    for n in [250, 500, 1000, 2000] {
        let t = index(ShapeKind::Random, n, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &t, |b, t| {
            b.iter(|| opt_strategy(t, t))
        });
    }
    group.finish();
}

fn strategy_evaluation(c: &mut Criterion) {
    let mut group = c.benchmark_group("strategy_cost");
    let t = index(ShapeKind::Mixed, 1001, 0);
    for k in FixedStrategy::ALL {
        let s = fixed_strategy(k, &t, &t);
        group.bench_function(format!("{k:?}"), |b| b.iter(|| strategy_cost(&t, &t, &s)));
    }
    group.finish();
}

fn distance(c: &mut Criterion) {
    let mut group = c.benchmark_group("distance");
    group.sample_size(10);
    for kind in [ShapeKind::Random, ShapeKind::Mixed, ShapeKind::ZigZag] {
        let f = tree(kind, 301, 1);
        let g = tree(kind, 301, 2);
        for algo in Algorithm::ALL {
            group.bench_function(BenchmarkId::new(kind.name(), algo.name()), |b| {
                b.iter(|| tree_edit_distance(&f, &g, algo, &UnitCost))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, optimal_strategy, strategy_evaluation, distance);
criterion_main!(benches);
