//! Acceptance checks. Runs every criterion, prints one line per criterion and
//! exits with failure if any of them fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rted_core::oracle::{
    all_root_leaf_paths, enumerate_full_decomposition, enumerate_recursive_subforests,
    enumerate_relevant_subforests, recursive_relevant_subtrees,
};
use rted_core::{
    baseline_strategy, brute_force_distance, exhaustive_optimal_cost, fixed_strategy, gen_shape,
    gted, opt_strategy, parse_bracket, strategy_cost, tree_edit_distance, Algorithm, FixedStrategy,
    LabelMode, PathChoice, PathKind, ShapeKind, ShapeSpec, Side, Tree, TreeIndex, UnitCost,
};

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($msg)+));
        }
    };
}

/// Deterministic size in `1..=max` for the `i`-th generated tree.
fn size_for(i: u64, max: usize) -> usize {
    let h = i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    1 + (h >> 33) as usize % max
}

fn random_tree(n: usize, seed: u64) -> Tree {
    let spec = ShapeSpec::new(ShapeKind::Random, n)
        .with_seed(seed)
        .with_labels(LabelMode::Alphabet(3));
    gen_shape(&spec).expect("valid random spec")
}

fn shape(kind: ShapeKind, n: usize) -> Tree {
    gen_shape(&ShapeSpec::new(kind, n).with_seed(1)).expect("valid shape spec")
}

fn ix(t: &Tree) -> TreeIndex {
    TreeIndex::build(t)
}

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    if elapsed <= limit {
        Ok(String::new())
    } else {
        Err(format!("took {elapsed:.2?}, limit {limit:?}"))
    }
}

fn worked_example() -> Outcome {
    let f = ix(&parse_bracket("{c{a}{b}}").unwrap());
    let g = ix(&parse_bracket("{b{a}}").unwrap());
    let start = Instant::now();
    let (s, cost) = opt_strategy(&f, &g);
    let elapsed = start.elapsed();
    ensure!(cost.count == 8, "cost {} != 8", cost.count);
    let root = s.get(2, 1);
    ensure!(
        root == PathChoice::new(Side::LeftTree, PathKind::Heavy),
        "root pair (3,2) uses {root}"
    );
    // Cost of each candidate at the root pair, with optimal choices below.
    for c in PathChoice::CANDIDATES {
        let mut alt = s.clone();
        alt.set(2, 1, c);
        let cost = strategy_cost(&f, &g, &alt).count;
        ensure!(cost == 8, "candidate {c} costs {cost}");
    }
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!(
        "cost 8, root heavy(F), six candidates at 8 ({elapsed:.1?})"
    ))
}

fn optimality_triple() -> Outcome {
    let start = Instant::now();
    let mut trees = Vec::new();
    for kind in ShapeKind::ALL {
        for n in 1..=8 {
            if kind.needs_odd_size() && n % 2 == 0 {
                continue;
            }
            trees.push(ix(&shape(kind, n)));
        }
    }
    let mut pairs: Vec<(TreeIndex, TreeIndex)> = Vec::new();
    for f in &trees {
        for g in &trees {
            pairs.push((f.clone(), g.clone()));
        }
    }
    for i in 0..200u64 {
        let f = ix(&random_tree(size_for(2 * i, 8), 10_000 + i));
        let g = ix(&random_tree(size_for(2 * i + 1, 8), 20_000 + i));
        pairs.push((f, g));
    }
    for (f, g) in &pairs {
        let opt = opt_strategy(f, g).1;
        let base = baseline_strategy(f, g).1;
        let exh = exhaustive_optimal_cost(f, g).map_err(|e| e.to_string())?;
        ensure!(
            opt == base && base == exh,
            "|F|={} |G|={}: opt {opt}, baseline {base}, exhaustive {exh}",
            f.len(),
            g.len()
        );
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!(
        "{} pairs agree ({:.2?})",
        pairs.len(),
        start.elapsed()
    ))
}

fn distance_correctness() -> Outcome {
    let start = Instant::now();
    for i in 0..1000u64 {
        let f = random_tree(size_for(2 * i, 10), 30_000 + i);
        let g = random_tree(size_for(2 * i + 1, 10), 40_000 + i);
        let expected = brute_force_distance(&f, &g, &UnitCost).map_err(|e| e.to_string())?;
        for algo in Algorithm::ALL {
            let (d, _) = tree_edit_distance(&f, &g, algo, &UnitCost);
            ensure!(
                d == expected,
                "pair {i}: {algo} gives {d}, expected {expected}"
            );
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!(
        "1000 pairs x 5 algorithms ({:.2?})",
        start.elapsed()
    ))
}

fn counter_prediction() -> Outcome {
    let start = Instant::now();
    for i in 0..500u64 {
        let f = ix(&random_tree(size_for(2 * i, 40), 50_000 + i));
        let g = ix(&random_tree(size_for(2 * i + 1, 40), 60_000 + i));
        for algo in Algorithm::ALL {
            let s = algo.strategy(&f, &g);
            let (_, stats) = gted(&f, &g, &s, &UnitCost);
            let predicted = strategy_cost(&f, &g, &s).count;
            ensure!(
                stats.subproblems == predicted,
                "pair {i}, {algo}: executed {} predicted {predicted}",
                stats.subproblems
            );
        }
    }
    within(start.elapsed(), Duration::from_secs(120))?;
    Ok(format!(
        "500 pairs x 5 strategies ({:.2?})",
        start.elapsed()
    ))
}

fn dominance() -> Outcome {
    let start = Instant::now();
    let mut strict = Vec::new();
    for kind in ShapeKind::ALL {
        let mut wins = 0;
        for n in [21, 101, 501, 1001, 2001] {
            let t = ix(&shape(kind, n));
            let opt = opt_strategy(&t, &t).1.count;
            let best = FixedStrategy::ALL
                .iter()
                .map(|&k| strategy_cost(&t, &t, &fixed_strategy(k, &t, &t)).count)
                .min()
                .expect("four strategies");
            ensure!(opt <= best, "{kind} n={n}: rted {opt} > best fixed {best}");
            if opt < best {
                wins += 1;
            }
        }
        if matches!(kind, ShapeKind::Mixed | ShapeKind::Random) {
            ensure!(wins > 0, "{kind}: rted never strictly better");
        }
        strict.push(format!("{kind}:{wins}"));
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!(
        "strict wins {} ({:.2?})",
        strict.join(" "),
        start.elapsed()
    ))
}

fn degeneration() -> Outcome {
    let start = Instant::now();
    let mut ratios = Vec::new();
    for n in [101, 501, 1001, 1701] {
        let t = ix(&shape(ShapeKind::LeftBranch, n));
        let zr = strategy_cost(&t, &t, &fixed_strategy(FixedStrategy::ZhangR, &t, &t)).count;
        let opt = opt_strategy(&t, &t).1.count;
        ratios.push(zr as f64 / opt as f64);
    }
    ensure!(
        ratios.windows(2).all(|w| w[0] < w[1]),
        "ratios not increasing: {ratios:?}"
    );
    let last = ratios[3];
    ensure!(last >= 500.0, "ratio at 1701 is {last:.1}");
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!(
        "ratio at 1701 = {last:.0}, increasing ({:.2?})",
        start.elapsed()
    ))
}

fn join_property() -> Outcome {
    let start = Instant::now();
    let trees: Vec<(String, Tree)> = ShapeKind::ALL
        .iter()
        .map(|&k| (k.name().to_owned(), shape(k, 201)))
        .collect();
    let result = rted_cli::join(&trees, f64::INFINITY, &Algorithm::ALL, &UnitCost, 0)
        .map_err(|e| e.to_string())?;
    ensure!(
        result.pairs.len() == 15,
        "{} pairs matched",
        result.pairs.len()
    );
    let rted = result.subproblems[0].1;
    for &(algo, n) in &result.subproblems[1..] {
        ensure!(rted < n, "rted {rted} not below {algo} {n}");
    }
    within(start.elapsed(), Duration::from_secs(300))?;
    let listed: Vec<String> = result
        .subproblems
        .iter()
        .map(|(a, n)| format!("{a}={n}"))
        .collect();
    Ok(format!("{} ({:.2?})", listed.join(" "), start.elapsed()))
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

fn strategy_overhead() -> Outcome {
    let start = Instant::now();
    let fraction = |n: usize| {
        median(
            (0..5)
                .map(|seed| {
                    let t = random_tree(n, 70_000 + seed);
                    let (_, stats) = tree_edit_distance(&t, &t, Algorithm::Rted, &UnitCost);
                    stats.strategy_time.as_secs_f64() / stats.total_time().as_secs_f64()
                })
                .collect(),
        )
    };
    let (small, large) = (fraction(200), fraction(2000));
    ensure!(
        large < small,
        "strategy share {large:.4} at n=2000 not below {small:.4} at n=200"
    );
    within(start.elapsed(), Duration::from_secs(600))?;
    Ok(format!(
        "strategy share {small:.4} at 200, {large:.4} at 2000 ({:.2?})",
        start.elapsed()
    ))
}

fn quadratic_scaling() -> Outcome {
    let start = Instant::now();
    let time = |n: usize| {
        let t = ix(&random_tree(n, 80_000));
        median(
            (0..3)
                .map(|_| {
                    let s = Instant::now();
                    std::hint::black_box(opt_strategy(&t, &t));
                    s.elapsed().as_secs_f64()
                })
                .collect(),
        )
    };
    let (a, b) = (time(500), time(4000));
    let slope = (b / a).ln() / 8f64.ln();
    ensure!(slope <= 2.4, "log-log slope {slope:.2}");
    within(start.elapsed(), Duration::from_secs(600))?;
    Ok(format!(
        "slope {slope:.2} ({:.1?} at 500, {:.1?} at 4000)",
        Duration::from_secs_f64(a),
        Duration::from_secs_f64(b)
    ))
}

fn decomposition_counts() -> Outcome {
    let start = Instant::now();
    let mut paths = 0;
    for i in 0..300u64 {
        let t = ix(&random_tree(size_for(i, 12), 90_000 + i));
        for v in 0..t.len() {
            let full = enumerate_full_decomposition(&t, v);
            ensure!(
                full.len() as u64 == t.full_count(v),
                "tree {i} node {v}: full count"
            );
            for path in all_root_leaf_paths(&t, v) {
                let seq = enumerate_relevant_subforests(&t, v, &path);
                ensure!(seq.len() == t.size(v), "tree {i} node {v}: path {path:?}");
                paths += 1;
            }
            for (kind, count) in [
                (PathKind::Left, t.left_count(v)),
                (PathKind::Right, t.right_count(v)),
            ] {
                let sizes: usize = recursive_relevant_subtrees(&t, v, kind)
                    .into_iter()
                    .map(|x| t.size(x))
                    .sum();
                let listed = enumerate_recursive_subforests(&t, v, kind).len();
                ensure!(
                    sizes as u64 == count && listed as u64 == count,
                    "tree {i} node {v}: {kind:?} count {count}, subtree sizes {sizes}, listed {listed}"
                );
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!(
        "300 trees, {paths} paths ({:.2?})",
        start.elapsed()
    ))
}

fn metric_sanity() -> Outcome {
    let start = Instant::now();
    let d = |a: &Tree, b: &Tree| tree_edit_distance(a, b, Algorithm::Rted, &UnitCost).0;
    for i in 0..500u64 {
        let a = random_tree(size_for(3 * i, 8), 100_000 + i);
        let b = random_tree(size_for(3 * i + 1, 8), 200_000 + i);
        let c = random_tree(size_for(3 * i + 2, 8), 300_000 + i);
        ensure!(d(&a, &a) == 0.0, "triple {i}: d(a,a) != 0");
        ensure!(d(&a, &b) == d(&b, &a), "triple {i}: asymmetric");
        ensure!(d(&a, &c) <= d(&a, &b) + d(&b, &c), "triple {i}: triangle");
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("500 triples ({:.2?})", start.elapsed()))
}

fn main() -> ExitCode {
    let criteria: [Check; 11] = [
        ("worked example strategy", worked_example),
        (
            "optimal, baseline and exhaustive costs agree",
            optimality_triple,
        ),
        ("distances match brute force", distance_correctness),
        ("executed subproblems match prediction", counter_prediction),
        ("rted never worse than fixed strategies", dominance),
        ("zhang-r degeneration on left branches", degeneration),
        ("join aggregate subproblems", join_property),
        ("strategy overhead shrinks with size", strategy_overhead),
        (
            "strategy computation scales quadratically",
            quadratic_scaling,
        ),
        (
            "decomposition counts match enumeration",
            decomposition_counts,
        ),
        ("metric properties", metric_sanity),
    ];
    // Only the summary lines should appear when a check panics.
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
