//! Rakes and triple rakes, drawn by choosing the angle at every corner.
//!
//! Write `rho = 1/4 + eps` for the target resolution and `c = 1/4 - eps`.
//! A corner with angle `a` turns a face boundary by `1/2 - a`; at a
//! degree-three vertex the three turnings add up to `1/2`, and each must lie
//! in `[2 eps, c]` so that every angle lies in `[rho, 1/2 - 2 eps]`. A face is
//! convex exactly when its turnings add up to at most `1/2`.
//!
//! Along a spine the turn vertices fall into maximal runs of equal turns
//! (legs on the same side). Inside a run the leg-side corners all turn by
//! `c`; the corners at run boundaries absorb a running imbalance `delta`
//! that drops by `2 eps` for every double turn, which makes every face tight.

use num_rational::Ratio;

use crate::classify::{classify_tree, turn_at, Branch, RakeStats, TreeClass, TripleRakeStats, Turn};
use crate::error::LayoutError;
use crate::optimize::{epsilon_of, rake_resolution, triple_rake_resolution, Embedding};
use crate::slopes::corners::{realize_corners, CornerAngles};
use crate::slopes::SlopeMap;
use crate::tree::{Tree, VertexId};
use crate::turn::{Frac, TurnAngle};

#[derive(Debug, Clone, Copy)]
struct Params {
    eps: Frac,
    c: Frac,
}

impl Params {
    fn new(eps: Frac) -> Self {
        Params { eps, c: Ratio::new(1, 4) - eps }
    }

    fn two_eps(&self) -> Frac {
        self.eps * 2
    }
}

/// A degree-three vertex in the interior of a spine.
#[derive(Debug, Clone, Copy)]
struct TurnVertex {
    at: VertexId,
    back: VertexId,
    fwd: VertexId,
    leg: VertexId,
    turn: Turn,
}

fn third_neighbor(tree: &Tree, x: VertexId, a: VertexId, b: VertexId) -> VertexId {
    *tree.neighbors(x).iter().find(|&&w| w != a && w != b).expect("degree-three vertex")
}

fn turn_vertices(tree: &Tree, path: &[VertexId]) -> Vec<TurnVertex> {
    path.windows(3)
        .filter(|w| tree.degree(w[1]) == 3)
        .map(|w| TurnVertex {
            at: w[1],
            back: w[0],
            fwd: w[2],
            leg: third_neighbor(tree, w[1], w[0], w[2]),
            turn: turn_at(tree, w[0], w[1], w[2]),
        })
        .collect()
}

/// Lengths of maximal runs of equal turns.
fn run_lengths(turns: &[TurnVertex]) -> Vec<usize> {
    let mut runs: Vec<usize> = Vec::new();
    for (i, t) in turns.iter().enumerate() {
        if i > 0 && turns[i - 1].turn == t.turn {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
        }
    }
    runs
}

/// Legs of a left turn lie to the right of the direction of travel.
fn legs_on_left(turn: Turn) -> bool {
    turn == Turn::Right
}

/// Sets the corner of degree-three vertex `x` bounded by neighbors `a`
/// and `b` so that it turns a face by `t`.
fn set_turning(tree: &Tree, angles: &mut CornerAngles, x: VertexId, a: VertexId, b: VertexId, t: Frac) {
    let nb = tree.neighbors(x);
    let d = nb.len();
    let i = (0..d)
        .find(|&i| {
            let (p, q) = (nb[i], nb[(i + 1) % d]);
            (p == a && q == b) || (p == b && q == a)
        })
        .expect("neighbors bound a corner");
    angles.set(x, i, Ratio::new(1, 2) - t);
}

/// Boundary imbalances `delta_0 ..= delta_m` for runs of the given lengths,
/// anchored by `delta_m = 2 eps - c` at the far end.
fn deltas(runs: &[usize], p: Params) -> Vec<Frac> {
    let m = runs.len();
    let mut delta = vec![Ratio::from_integer(0); m + 1];
    delta[m] = p.two_eps() - p.c;
    for i in (1..=m).rev() {
        delta[i - 1] = delta[i] + p.two_eps() * (runs[i - 1] as i64 - 1);
    }
    delta
}

/// Leg-side corner after a boundary with imbalance `delta`.
fn after_boundary(delta: Frac, p: Params) -> Frac {
    if delta >= Ratio::from_integer(0) {
        p.c
    } else {
        p.c + delta
    }
}

/// Leg-side corner before a boundary with imbalance `delta`.
fn before_boundary(delta: Frac, p: Params) -> Frac {
    if delta >= Ratio::from_integer(0) {
        p.c - delta
    } else {
        p.c
    }
}

/// Assigns every turn vertex of a spine segment and its far end vertex.
/// `p_start` is the back-side leg corner of the first turn vertex.
fn assign_runs(
    tree: &Tree,
    angles: &mut CornerAngles,
    path: &[VertexId],
    turns: &[TurnVertex],
    p_start: Frac,
    p: Params,
) {
    let runs = run_lengths(turns);
    let delta = deltas(&runs, p);
    let half = Ratio::new(1, 2);
    let mut idx = 0;
    for (i, &r) in runs.iter().enumerate() {
        for j in 0..r {
            let t = turns[idx + j];
            let back_leg = match (i, j) {
                (0, 0) => p_start,
                (_, 0) => after_boundary(delta[i], p),
                _ => p.c,
            };
            let leg_fwd = if j + 1 == r { before_boundary(delta[i + 1], p) } else { p.c };
            set_turning(tree, angles, t.at, t.back, t.leg, back_leg);
            set_turning(tree, angles, t.at, t.leg, t.fwd, leg_fwd);
            set_turning(tree, angles, t.at, t.fwd, t.back, half - back_leg - leg_fwd);
        }
        idx += r;
    }
    let last = turns.last().expect("at least one turn");
    let end = *path.last().unwrap();
    let back = path[path.len() - 2];
    set_end_corners(tree, angles, end, back, legs_on_left(last.turn), p);
}

/// Corners of a spine end reached from `back`: the corner between the legs
/// turns by `c`, the side holding the last run's legs by `c`, the other by
/// `2 eps`.
fn set_end_corners(tree: &Tree, angles: &mut CornerAngles, end: VertexId, back: VertexId, legs_left: bool, p: Params) {
    let right = tree.next_ccw(end, back);
    let left = tree.prev_ccw(end, back);
    let (t_left, t_right) = if legs_left { (p.c, p.two_eps()) } else { (p.two_eps(), p.c) };
    set_turning(tree, angles, end, right, left, p.c);
    set_turning(tree, angles, end, back, right, t_right);
    set_turning(tree, angles, end, left, back, t_left);
}

/// Re-embeds so that turns alternate along each path, removing every
/// double turn. Paths are given from their fixed end outward.
pub fn reembed_alternating(tree: &Tree, paths: &[Vec<VertexId>]) -> Tree {
    let mut rotation = tree.rotation().to_vec();
    for path in paths {
        let mut next = Turn::Left;
        for w in path.windows(3).filter(|w| tree.degree(w[1]) == 3) {
            let leg = third_neighbor(tree, w[1], w[0], w[2]);
            rotation[w[1]] = match next {
                Turn::Left => vec![w[0], leg, w[2]],
                Turn::Right => vec![w[0], w[2], leg],
            };
            next = if next == Turn::Left { Turn::Right } else { Turn::Left };
        }
    }
    tree.with_rotation(rotation).expect("same neighbor sets")
}

fn rake_stats_of(tree: &Tree) -> Result<RakeStats, LayoutError> {
    match classify_tree(tree) {
        TreeClass::Rake(stats) => Ok(stats),
        other => Err(LayoutError::WrongClass { expected: "rake", found: other.name() }),
    }
}

fn triple_stats_of(tree: &Tree) -> Result<TripleRakeStats, LayoutError> {
    match classify_tree(tree) {
        TreeClass::TripleRake(stats) => Ok(stats),
        other => Err(LayoutError::WrongClass { expected: "triple rake", found: other.name() }),
    }
}

/// Optimal rake drawing. Free mode first re-embeds with alternating turns.
/// Returns the embedding drawn, its slopes, and the resolution reached.
pub fn assign_slopes_rake(tree: &Tree, mode: Embedding) -> Result<(Tree, SlopeMap, TurnAngle), LayoutError> {
    let mut stats = rake_stats_of(tree)?;
    let drawn = match mode {
        Embedding::Fixed => tree.clone(),
        Embedding::Free => {
            let t = reembed_alternating(tree, std::slice::from_ref(&stats.spine));
            stats = rake_stats_of(&t)?;
            t
        }
    };
    let resolution = rake_resolution(stats.double_turns);
    let p = Params::new(epsilon_of(resolution));
    let mut angles = CornerAngles::uniform(&drawn);
    let spine = &stats.spine;
    let turns = turn_vertices(&drawn, spine);
    // Without turns the resolution is 1/3 and uniform corners are already optimal.
    if let Some(first) = turns.first() {
        let start = spine[0];
        let fwd = spine[1];
        let left = drawn.next_ccw(start, fwd);
        let right = drawn.prev_ccw(start, fwd);
        let first_legs_left = legs_on_left(first.turn);
        let runs = run_lengths(&turns);
        let delta0 = deltas(&runs, p)[0];
        let opposite = before_boundary(delta0, p);
        let (t_left, t_right) = if first_legs_left { (p.c, opposite) } else { (opposite, p.c) };
        set_turning(&drawn, &mut angles, start, left, right, p.c);
        set_turning(&drawn, &mut angles, start, fwd, left, t_left);
        set_turning(&drawn, &mut angles, start, right, fwd, t_right);
        assign_runs(&drawn, &mut angles, spine, &turns, after_boundary(delta0, p), p);
    }
    let slopes = realize_corners(&drawn, spine[0], &angles);
    Ok((drawn, slopes, resolution))
}

/// Bounds on one branch's contribution to the hub faces on its left.
struct BranchPlan {
    turns: Vec<TurnVertex>,
    /// Left plus right contribution.
    total: Frac,
    left_lo: Frac,
    left_hi: Frac,
}

fn plan_branch(tree: &Tree, branch: &Branch, p: Params) -> BranchPlan {
    let turns = turn_vertices(tree, &branch.path);
    if turns.is_empty() {
        return BranchPlan { turns, total: p.c + p.two_eps(), left_lo: p.two_eps(), left_hi: p.c };
    }
    let runs = run_lengths(&turns);
    let delta = deltas(&runs, p);
    let double_turns = runs.iter().map(|r| r - 1).sum::<usize>() as i64;
    let total = p.c + p.eps * 4 + p.two_eps() * double_turns;
    let zero = Ratio::from_integer(0);
    let p_lo = if runs[0] == 1 { p.two_eps() + delta[1].max(zero) } else { p.two_eps() };
    let (left_lo, left_hi) = if legs_on_left(turns[0].turn) { (p_lo, p.c) } else { (total - p.c, total - p_lo) };
    BranchPlan { turns, total, left_lo, left_hi }
}

/// Solves difference constraints `x[v] - x[u] <= w` over four nodes, with
/// node 0 pinned at zero. Returns `None` if they are infeasible.
fn solve_differences(constraints: &[(usize, usize, Frac)]) -> Option<[Frac; 4]> {
    let mut dist = [Ratio::from_integer(0); 4];
    for round in 0..=4 {
        let mut changed = false;
        for &(u, v, w) in constraints {
            if dist[u] + w < dist[v] {
                dist[v] = dist[u] + w;
                changed = true;
            }
        }
        if !changed {
            let base = dist[0];
            return Some(dist.map(|d| d - base));
        }
        if round == 4 {
            return None;
        }
    }
    None
}

/// Optimal triple-rake drawing. Free mode first removes every double turn.
pub fn assign_slopes_triple_rake(tree: &Tree, mode: Embedding) -> Result<(Tree, SlopeMap, TurnAngle), LayoutError> {
    let mut stats = triple_stats_of(tree)?;
    let drawn = match mode {
        Embedding::Fixed => tree.clone(),
        Embedding::Free => {
            let paths: Vec<_> = stats.branches.iter().map(|b| b.path.clone()).collect();
            let t = reembed_alternating(tree, &paths);
            stats = triple_stats_of(&t)?;
            t
        }
    };
    let resolution = triple_rake_resolution(stats.short_paths, stats.double_turns);
    let p = Params::new(epsilon_of(resolution));
    let plans: Vec<BranchPlan> = stats.branches.iter().map(|b| plan_branch(&drawn, b, p)).collect();

    // Hub face j holds branch j's left side, the hub corner, and branch
    // j+1's right side; its turning must lie in [c + 2 eps, 2c].
    let face_lo = p.c + p.two_eps();
    let face_hi = p.c * 2;
    let mut constraints = Vec::new();
    for j in 0..3 {
        let x = j + 1;
        let y = (j + 1) % 3 + 1;
        let k_next = plans[(j + 1) % 3].total;
        constraints.push((0, x, plans[j].left_hi));
        constraints.push((x, 0, -plans[j].left_lo));
        // F_j = L_j + K_{j+1} - L_{j+1}
        constraints.push((y, x, face_hi - k_next));
        constraints.push((x, y, k_next - face_lo));
    }
    let left = solve_differences(&constraints)
        .ok_or_else(|| LayoutError::SlopeGap("triple-rake corner constraints are infeasible".into()))?;

    let mut angles = CornerAngles::uniform(&drawn);
    let hub = stats.hub;
    let hub_nb = drawn.neighbors(hub).to_vec();
    for j in 0..3 {
        let l_j = left[j + 1];
        let r_next = plans[(j + 1) % 3].total - left[(j + 1) % 3 + 1];
        set_turning(&drawn, &mut angles, hub, hub_nb[j], hub_nb[(j + 1) % 3], Ratio::new(1, 2) - l_j - r_next);
    }
    for (j, (branch, plan)) in stats.branches.iter().zip(&plans).enumerate() {
        let l_j = left[j + 1];
        let r_j = plan.total - l_j;
        let path = &branch.path;
        if plan.turns.is_empty() {
            let end = *path.last().unwrap();
            let back = path[path.len() - 2];
            let right = drawn.next_ccw(end, back);
            let left_leg = drawn.prev_ccw(end, back);
            set_turning(&drawn, &mut angles, end, right, left_leg, p.c);
            set_turning(&drawn, &mut angles, end, back, right, r_j);
            set_turning(&drawn, &mut angles, end, left_leg, back, l_j);
        } else {
            let p_start = if legs_on_left(plan.turns[0].turn) { l_j } else { r_j };
            assign_runs(&drawn, &mut angles, path, &plan.turns, p_start, p);
        }
    }
    let slopes = realize_corners(&drawn, hub, &angles);
    Ok((drawn, slopes, resolution))
}
