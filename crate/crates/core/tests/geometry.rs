//! Coordinates: any positive lengths keep the drawing planar, directions
//! are reproduced, and radial placement hits its circles.

mod common;

use common::{place_with_lengths, random_trees, rng};
use convex_tree::lengths::ray_to_circle;
use convex_tree::verify::{check_planar, check_planar_points, check_planar_seq};
use convex_tree::{
    assign_slopes, layout, morph, place, place_radial, Drawing, Embedding, LayoutOptions, LengthStrategy, Tree,
    TurnAngle,
};
use rand::Rng;

#[test]
fn random_lengths_never_cross() {
    let mut rng = rng(21);
    for (i, t) in random_trees(1000, 40, 22).iter().enumerate() {
        let mode = if i % 2 == 0 { Embedding::Fixed } else { Embedding::Free };
        let a = assign_slopes(t, mode).unwrap();
        // Log-uniform lengths in [0.01, 100].
        let lengths: Vec<f64> = (0..t.len()).map(|_| 10f64.powf(rng.gen_range(-2.0..=2.0))).collect();
        let pos = place_with_lengths(&a.tree, &a.slopes, &lengths);
        let crossings = check_planar_points(&a.tree, &pos);
        assert!(crossings.is_empty(), "tree {i}: {}", crossings[0]);
    }
}

#[test]
fn every_strategy_is_planar_and_keeps_directions() {
    for t in random_trees(200, 40, 23) {
        let t = {
            let w: Vec<_> = t.edges().map(|(u, v)| ((u, v), 1.0 + ((u * 7 + v * 3) % 5) as f64)).collect();
            t.with_weights(w).unwrap()
        };
        let a = assign_slopes(&t, Embedding::Free).unwrap();
        for strategy in LengthStrategy::ALL {
            let d = place(&a.slopes, &a.tree, strategy, a.slopes.root()).unwrap();
            assert!(check_planar(&a.tree, &d).is_empty(), "{strategy}");
            assert_eq!(check_planar(&a.tree, &d), check_planar_seq(&a.tree, &d));
            for (p, v, s) in a.slopes.edges() {
                let (dx, dy) = (d.positions[v].0 - d.positions[p].0, d.positions[v].1 - d.positions[p].1);
                assert!(dx.hypot(dy) > 0.0);
                let got = dy.atan2(dx).rem_euclid(std::f64::consts::TAU);
                let want = s.to_radians();
                let diff = (got - want).abs();
                assert!(diff.min(std::f64::consts::TAU - diff) < 1e-9, "{strategy}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn radial_vertices_sit_on_their_circles() {
    let mut rng = rng(24);
    for t in random_trees(100, 60, 25) {
        let a = assign_slopes(&t, Embedding::Fixed).unwrap();
        let root = rng.gen_range(0..t.len());
        let d = place_radial(&a.slopes, &a.tree, root, None).unwrap();
        let rooted = a.tree.rooted(root);
        for v in 0..t.len() {
            let r = d.positions[v].0.hypot(d.positions[v].1);
            assert!((r - rooted.depth(v) as f64).abs() < 1e-9, "vertex {v}: {r}");
        }
        assert!(check_planar(&a.tree, &d).is_empty());
    }
}

#[test]
fn ray_circle_examples() {
    let close = |a: (f64, f64), b: (f64, f64)| (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12;
    assert!(close(ray_to_circle((0.0, 0.0), TurnAngle::ZERO, 1.0).unwrap(), (1.0, 0.0)));
    assert!(close(ray_to_circle((1.0, 0.0), TurnAngle::new(1, 4), 2.0).unwrap(), (1.0, 3f64.sqrt())));
    assert!(close(ray_to_circle((1.0, 0.0), TurnAngle::HALF, 2.0).unwrap(), (-2.0, 0.0)));
}

#[test]
fn custom_radii() {
    let t = convex_tree::parse_newick("((a,b)x,(c,d)y,e)r;").unwrap();
    let opts =
        LayoutOptions::new(Embedding::Free).lengths(LengthStrategy::Radial).placement_root(0).radii(vec![1.0, 1.5]);
    let d = layout(&t, &opts).unwrap();
    for v in 0..t.len() {
        let r = d.positions[v].0.hypot(d.positions[v].1);
        let want = [0.0, 1.0, 1.5][t.rooted(0).depth(v)];
        assert!((r - want).abs() < 1e-9);
    }
}

fn interpolation_frames(a: &Drawing, b: &Drawing) -> Vec<Drawing> {
    (0..=10).map(|i| morph(a, b, i as f64 / 10.0).unwrap()).collect()
}

#[test]
fn morphs_stay_planar() {
    for t in random_trees(100, 40, 26) {
        let s = assign_slopes(&t, Embedding::Free).unwrap();
        let root = s.slopes.root();
        let a = place(&s.slopes, &s.tree, LengthStrategy::Uniform, root).unwrap();
        let b = place(&s.slopes, &s.tree, LengthStrategy::SqrtSubtree, root).unwrap();
        for frame in interpolation_frames(&a, &b) {
            assert!(check_planar(&s.tree, &frame).is_empty());
        }
        let other = place(&s.slopes.rotated(TurnAngle::new(1, 7)), &s.tree, LengthStrategy::Uniform, root).unwrap();
        assert!(morph(&a, &other, 0.5).is_err());
    }
}

#[test]
fn pipeline_reports() {
    let d = layout(&Tree::star(4), &LayoutOptions::new(Embedding::Free)).unwrap();
    assert_eq!(d.report.class, "general");
    assert_eq!(d.report.excess, Some(4));
    assert_eq!(d.report.resolution, TurnAngle::new(1, 4));
    assert_eq!(convex_tree::report_line(&d.report), "class=general E(T)=4 resolution=π/2 (90°) verified=ok");
}
