#![allow(dead_code)]

use convex_tree::gen::random_tree;
use convex_tree::slopes::SlopeAssignment;
use convex_tree::verify::{check_convex_faces, check_fork_spans, leaf_slopes, measure_resolution};
use convex_tree::{optimal_resolution, Embedding, Frac, SlopeMap, Tree, TurnAngle};
use num_rational::Ratio;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random trees with sizes cycling through `2..=max_n`, each with a random
/// rotation system.
pub fn random_trees(count: usize, max_n: usize, seed: u64) -> Vec<Tree> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            random_tree(n, &mut rng)
        })
        .collect()
}

/// Definition-level arch test: some rotation of the circle maps every
/// direction into the closed half turn `[0, 1/2]` with the sequence
/// nondecreasing. The window can always start at one of the directions.
pub fn arch_by_windows(dirs: &[TurnAngle]) -> bool {
    let half = Ratio::new(1, 2);
    dirs.iter().any(|&start| {
        let shifted: Vec<Frac> = dirs.iter().map(|&d| start.ccw_gap(d)).collect();
        shifted.iter().all(|&x| x <= half) && shifted.windows(2).all(|w| w[0] <= w[1])
    })
}

/// Every property a produced slope assignment must have; returns the
/// first failure as text.
pub fn assignment_problems(input: &Tree, mode: Embedding, a: &SlopeAssignment) -> Option<String> {
    let faces = check_convex_faces(&a.tree, &a.slopes);
    if let Some(v) = faces.first() {
        return Some(format!("faces: {v}"));
    }
    let expected = optimal_resolution(input, mode);
    let got = measure_resolution(&a.tree, &a.slopes);
    if got != expected || a.resolution != expected {
        return Some(format!("resolution {got} (claimed {}) != optimum {expected}", a.resolution));
    }
    let leaves = leaf_slopes(&a.tree, &a.slopes);
    if leaves.len() >= 2 {
        let mut total = Ratio::from_integer(0);
        for i in 0..leaves.len() {
            total += leaves[i].1.ccw_gap(leaves[(i + 1) % leaves.len()].1);
        }
        if total != Ratio::from_integer(1) {
            return Some(format!("leaf slopes wind {total} turns"));
        }
    }
    if let Some(root) = a.root {
        if let Some(v) = check_fork_spans(&a.tree, &a.slopes, root, a.resolution).first() {
            return Some(format!("fork span: {v}"));
        }
    }
    None
}

/// Positions from arbitrary per-edge lengths, independent of the library's
/// placement code.
pub fn place_with_lengths(t: &Tree, slopes: &SlopeMap, lengths: &[f64]) -> Vec<(f64, f64)> {
    let mut pos = vec![None; t.len()];
    pos[slopes.root()] = Some((0.0, 0.0));
    let mut stack = vec![slopes.root()];
    while let Some(v) = stack.pop() {
        let p: (f64, f64) = pos[v].unwrap();
        for &w in t.neighbors(v) {
            if pos[w].is_none() {
                let a = slopes.dir(v, w).to_radians();
                let l = lengths[w];
                pos[w] = Some((p.0 + l * a.cos(), p.1 + l * a.sin()));
                stack.push(w);
            }
        }
    }
    pos.into_iter().map(Option::unwrap).collect()
}
