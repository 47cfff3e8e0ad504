//! One pass/fail line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{assignment_problems, place_with_lengths, random_trees, rng};
use convex_tree::classify::TreeClass;
use convex_tree::gen::{
    all_free_trees, caterpillar, random_tree, triple_rake, turns_with_doubles, two_paths_two_spiders,
};
use convex_tree::lengths::ray_to_circle;
use convex_tree::optimize::{rake_resolution, triple_rake_resolution};
use convex_tree::verify::{brute_force_min_forks, check_convex_faces, check_planar_points, measure_resolution};
use convex_tree::{
    assign_slopes, choose_root, classify_tree, count_forks, embed_min_forks, layout, optimal_resolution, place_radial,
    Embedding, LayoutOptions, LengthStrategy, Tree, Turn, TurnAngle, Verification,
};
use num_rational::Ratio;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(took)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for k in 0..=5 {
        let want = TurnAngle::from_frac((Ratio::new(1, 2) + Ratio::new(1, 6 + 2 * k as i64)) / 2);
        let t = caterpillar(&turns_with_doubles(k, 2));
        let a = assign_slopes(&t, Embedding::Fixed).map_err(|e| e.to_string())?;
        let got = measure_resolution(&a.tree, &a.slopes);
        ensure(rake_resolution(k) == want && got == want, || format!("k={k}: {got} != {want}"))?;
    }
    ensure(rake_resolution(3).pi_string() == "7π/12", || "k=3 is not 7π/12".into())?;
    let free = assign_slopes(&caterpillar(&turns_with_doubles(3, 2)), Embedding::Free).map_err(|e| e.to_string())?;
    ensure(free.resolution == TurnAngle::new(1, 3), || format!("free rake gives {}", free.resolution))?;
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!("rakes k=0..5 exact, k=3 = 7π/12, free = 2π/3 ({took:.2?})"))
}

fn criterion_2() -> Outcome {
    let formula =
        |s: i64, d: i64| TurnAngle::from_frac((Ratio::new(1, 2) + Ratio::new(1, 2 * (9 - 2 * s + 2 * d))) / 2);
    let mut checked = 0;
    for s in 0..=3usize {
        for d in 0..=3usize {
            if s == 3 && d > 0 {
                continue;
            }
            let branches: Vec<Vec<Turn>> = (0..3)
                .map(|j| match j.cmp(&s) {
                    std::cmp::Ordering::Less => Vec::new(),
                    std::cmp::Ordering::Equal => turns_with_doubles(d, 1),
                    std::cmp::Ordering::Greater => vec![Turn::Right],
                })
                .collect();
            let t = triple_rake([&branches[0], &branches[1], &branches[2]]);
            match classify_tree(&t) {
                TreeClass::TripleRake(st) if (st.short_paths, st.double_turns) == (s, d) => {}
                other => return Err(format!("s={s} d={d} classified as {other:?}")),
            }
            let (fixed, free) = (formula(s as i64, d as i64), formula(s as i64, 0));
            ensure(triple_rake_resolution(s, d) == fixed, || format!("s={s} d={d}: formula"))?;
            for (mode, want) in [(Embedding::Fixed, fixed), (Embedding::Free, free)] {
                let a = assign_slopes(&t, mode).map_err(|e| e.to_string())?;
                let got = measure_resolution(&a.tree, &a.slopes);
                ensure(got == want && optimal_resolution(&t, mode) == want, || {
                    format!("s={s} d={d} {mode:?}: {got} != {want}")
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (s,d) pairs exact in both modes; s=3 with d>0 has no realisation"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let t = two_paths_two_spiders();
    let root = choose_root(&t).map_err(|e| e.to_string())?;
    let forks = count_forks(&t, root);
    ensure(forks.total_forks == 5 && forks.total_excess == 4, || {
        format!("f={} E={}", forks.total_forks, forks.total_excess)
    })?;
    for (mode, want) in [(Embedding::Fixed, "2π/5"), (Embedding::Free, "π/2")] {
        let a = assign_slopes(&t, mode).map_err(|e| e.to_string())?;
        let got = measure_resolution(&a.tree, &a.slopes).pi_string();
        ensure(got == want, || format!("{mode:?}: {got} != {want}"))?;
    }
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!("f=5 gives 2π/5, E(T)=4 gives π/2 ({took:.2?})"))
}

fn check_forks(t: &Tree, root: usize) -> Result<(), String> {
    let excess = count_forks(t, root).total_excess;
    let brute = brute_force_min_forks(t, root).map_err(|e| e.to_string())?;
    let embedded = count_forks(&embed_min_forks(t, root), root).total_forks;
    ensure(brute == excess && embedded == excess, || {
        format!("{t:?} at {root}: brute {brute}, E {excess}, embedded {embedded}")
    })
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for n in 1..=9 {
        for t in all_free_trees(n) {
            for root in 0..n {
                check_forks(&t, root)?;
                cases += 1;
            }
            if classify_tree(&t) == TreeClass::General {
                let root = choose_root(&t).map_err(|e| e.to_string())?;
                let f = count_forks(&t, root).total_forks;
                ensure(f >= 4, || format!("general tree {t:?} has f={f}"))?;
            }
        }
    }
    let mut rng = rng(104);
    for _ in 0..1000 {
        let t = random_tree(rng.gen_range(2..=9), &mut rng);
        let root = rng.gen_range(0..t.len());
        check_forks(&t, root)?;
        cases += 1;
    }
    Ok(format!("{cases} rooted trees agree ({:.2?})", start.elapsed()))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    for (i, t) in random_trees(1000, 50, 105).iter().enumerate() {
        for mode in [Embedding::Fixed, Embedding::Free] {
            let a = assign_slopes(t, mode).map_err(|e| format!("tree {i}: {e}"))?;
            if let Some(problem) = assignment_problems(t, mode, &a) {
                return Err(format!("tree {i} {mode:?}: {problem}"));
            }
        }
    }
    Ok(format!("2000 assignments valid and optimal ({:.2?})", start.elapsed()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(106);
    for (i, t) in random_trees(1000, 50, 107).iter().enumerate() {
        let mode = if i % 2 == 0 { Embedding::Fixed } else { Embedding::Free };
        let a = assign_slopes(t, mode).map_err(|e| e.to_string())?;
        let lengths: Vec<f64> = (0..t.len()).map(|_| 10f64.powf(rng.gen_range(-2.0..=2.0))).collect();
        let pos = place_with_lengths(&a.tree, &a.slopes, &lengths);
        if let Some(v) = check_planar_points(&a.tree, &pos).first() {
            return Err(format!("tree {i}: {v}"));
        }
    }
    Ok(format!("1000 random-length drawings planar ({:.2?})", start.elapsed()))
}

fn criterion_7() -> Outcome {
    let mut rng = rng(107);
    let mut worst = 0f64;
    for t in random_trees(100, 80, 108) {
        let a = assign_slopes(&t, Embedding::Free).map_err(|e| e.to_string())?;
        let root = rng.gen_range(0..t.len());
        let d = place_radial(&a.slopes, &a.tree, root, None).map_err(|e| e.to_string())?;
        let rooted = a.tree.rooted(root);
        for v in 0..t.len() {
            let r = d.positions[v].0.hypot(d.positions[v].1);
            worst = worst.max((r - rooted.depth(v) as f64).abs());
        }
    }
    ensure(worst < 1e-9, || format!("radius error {worst:e}"))?;
    let examples = [
        ((0.0, 0.0), TurnAngle::ZERO, 1.0, (1.0, 0.0)),
        ((1.0, 0.0), TurnAngle::new(1, 4), 2.0, (1.0, 3f64.sqrt())),
        ((1.0, 0.0), TurnAngle::HALF, 2.0, (-2.0, 0.0)),
    ];
    for (p, dir, r, want) in examples {
        let got = ray_to_circle(p, dir, r).map_err(|e| e.to_string())?;
        ensure((got.0 - want.0).abs() < 1e-12 && (got.1 - want.1).abs() < 1e-12, || {
            format!("ray from {p:?} at {dir}: {got:?} != {want:?}")
        })?;
    }
    Ok(format!("max radius error {worst:.1e}; 3 ray examples exact"))
}

fn timed_layout(n: usize, seed: u64) -> Result<Duration, String> {
    let t = random_tree(n, &mut rng(seed));
    let opts = LayoutOptions::new(Embedding::Free).lengths(LengthStrategy::Uniform).verify(Verification::Linear);
    let start = Instant::now();
    let d = layout(&t, &opts).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(d.positions.len() == n, || "wrong number of positions".into())?;
    Ok(took)
}

fn criterion_8() -> Outcome {
    let small = timed_layout(100_000, 109)?;
    ensure(small < Duration::from_secs(1), || format!("10^5 vertices took {small:.2?}"))?;
    let large = timed_layout(1_000_000, 110)?;
    ensure(large < Duration::from_secs(10), || format!("10^6 vertices took {large:.2?}"))?;
    Ok(format!("10^5 vertices in {small:.2?}, 10^6 in {large:.2?}"))
}

fn criterion_9() -> Outcome {
    let mut rng = rng(111);
    let (mut accepted, mut trees) = (0usize, 0usize);
    let mut worst = f64::NEG_INFINITY;
    while accepted < 10_000 {
        let t = random_tree(rng.gen_range(3..=8), &mut rng);
        trees += 1;
        let mode = if trees % 2 == 0 { Embedding::Fixed } else { Embedding::Free };
        let a = assign_slopes(&t, mode).map_err(|e| e.to_string())?;
        let best = optimal_resolution(&t, mode).to_radians();
        let mut cur = a.slopes.clone();
        let movable: Vec<usize> = (0..t.len()).filter(|&v| cur.parent(v).is_some()).collect();
        for _ in 0..200 {
            let v = movable[rng.gen_range(0..movable.len())];
            let step = TurnAngle::new(rng.gen_range(-6..=6), 144);
            let mut next = cur.clone();
            next.set_slope(v, cur.slope(v).unwrap() + step);
            if check_convex_faces(&a.tree, &next).is_empty() {
                accepted += 1;
                let gain = measure_resolution(&a.tree, &next).to_radians() - best;
                worst = worst.max(gain);
                ensure(gain <= 1e-9, || format!("perturbation beat the optimum by {gain:e} rad on {t:?}"))?;
                cur = next;
            }
        }
    }
    Ok(format!("{accepted} convex perturbations over {trees} trees, best gain {worst:.2e} rad"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("rake formulas", criterion_1),
        ("triple-rake formulas", criterion_2),
        ("embedding sensitivity", criterion_3),
        ("fork oracle equivalence", criterion_4),
        ("construction validity", criterion_5),
        ("length independence", criterion_6),
        ("radial placement", criterion_7),
        ("linear-time scaling", criterion_8),
        ("non-improvability", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
