//! Independent checkers and brute-force oracles.
//!
//! Nothing here reuses the construction code: arches are read off a fresh
//! Euler tour, subtree shapes and forks are recomputed from their
//! definitions, and the minimum fork count is found by enumerating every
//! rotation system.

use std::fmt;

use num_rational::Ratio;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::error::LayoutError;
use crate::lengths::Drawing;
use crate::slopes::SlopeMap;
use crate::tree::{Tree, VertexId};
use crate::turn::{Frac, TurnAngle};

/// What a [`Violation`] falsifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// The path between two consecutive leaves is not a convex arch.
    NonConvexArch,
    /// Two edges without a common endpoint intersect.
    Crossing,
    /// The measured resolution differs from the expected one.
    ResolutionMismatch,
    /// A fork spans less than its rakes require.
    ForkMismatch,
    /// Edge directions around a vertex disagree with its rotation.
    RotationMismatch,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::NonConvexArch => "non-convex arch",
            ViolationKind::Crossing => "crossing",
            ViolationKind::ResolutionMismatch => "resolution mismatch",
            ViolationKind::ForkMismatch => "fork mismatch",
            ViolationKind::RotationMismatch => "rotation mismatch",
        })
    }
}

/// A falsified invariant. `location` holds a leaf pair, the four endpoints
/// of an edge pair, or a single vertex, depending on `kind`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub location: Vec<VertexId>,
    pub detail: String,
}

impl Violation {
    fn new(kind: ViolationKind, location: Vec<VertexId>, detail: String) -> Self {
        Violation { kind, location, detail }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}: {}", self.kind, self.location, self.detail)
    }
}

/// Whether the directions along a chain turn monotonically counterclockwise
/// through at most half a turn in total (a closed window).
pub fn is_convex_arch(dirs: &[TurnAngle]) -> Result<bool, LayoutError> {
    if dirs.is_empty() {
        return Err(LayoutError::EmptyArch);
    }
    Ok(arch_span(dirs) <= Ratio::new(1, 2))
}

/// Total counterclockwise turning along a chain of directions.
fn arch_span(dirs: &[TurnAngle]) -> Frac {
    dirs.windows(2).map(|w| w[0].ccw_gap(w[1])).sum()
}

/// Directed edges of the counterclockwise Euler tour, starting from the
/// first leaf. Empty for a single vertex.
fn euler_tour(tree: &Tree) -> Vec<(VertexId, VertexId)> {
    if tree.len() < 2 {
        return Vec::new();
    }
    let start = tree.leaves().next().expect("trees with an edge have leaves");
    let first = (start, tree.neighbors(start)[0]);
    let mut tour = Vec::with_capacity(2 * tree.edge_count());
    let mut e = first;
    loop {
        tour.push(e);
        let (u, v) = e;
        e = (v, tree.next_ccw(v, u));
        if e == first {
            return tour;
        }
    }
}

/// Tour segments between consecutive leaves, each ending at a leaf.
fn leaf_segments(tree: &Tree) -> Vec<Vec<(VertexId, VertexId)>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for e in euler_tour(tree) {
        cur.push(e);
        if tree.degree(e.1) == 1 {
            out.push(std::mem::take(&mut cur));
        }
    }
    out
}

/// Every face arch between cyclically consecutive leaves must be convex,
/// and the edge directions at each vertex must follow its rotation.
pub fn check_convex_faces(tree: &Tree, slopes: &SlopeMap) -> Vec<Violation> {
    let mut out = check_rotation(tree, slopes);
    for seg in leaf_segments(tree) {
        let dirs: Vec<TurnAngle> = seg.iter().rev().map(|&(u, v)| slopes.dir(v, u)).collect();
        let span = arch_span(&dirs);
        if span > Ratio::new(1, 2) {
            let (a, b) = (seg[0].0, seg[seg.len() - 1].1);
            out.push(Violation::new(
                ViolationKind::NonConvexArch,
                vec![a, b],
                format!("arch turns through {} of a turn", TurnAngle::from_frac(span - span.floor())),
            ));
        }
    }
    out
}

/// Directions at each vertex must be distinct and wind exactly once in
/// rotation order.
fn check_rotation(tree: &Tree, slopes: &SlopeMap) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in 0..tree.len() {
        let nb = tree.neighbors(v);
        if nb.len() < 2 {
            continue;
        }
        let dirs: Vec<TurnAngle> = nb.iter().map(|&w| slopes.dir(v, w)).collect();
        let gaps: Vec<Frac> = (0..dirs.len()).map(|i| dirs[i].ccw_gap(dirs[(i + 1) % dirs.len()])).collect();
        let total: Frac = gaps.iter().sum();
        if gaps.iter().any(|g| *g == Ratio::from_integer(0)) || total != Ratio::from_integer(1) {
            out.push(Violation::new(
                ViolationKind::RotationMismatch,
                vec![v],
                format!("directions wind {total} times around the vertex"),
            ));
        }
    }
    out
}

/// Direction of the edge into each leaf, in counterclockwise tour order.
pub fn leaf_slopes(tree: &Tree, slopes: &SlopeMap) -> Vec<(VertexId, TurnAngle)> {
    leaf_segments(tree)
        .iter()
        .map(|seg| {
            let (u, v) = seg[seg.len() - 1];
            (v, slopes.dir(u, v))
        })
        .collect()
}

/// Total counterclockwise turning of the leaf slopes around the tree;
/// exactly one turn for a drawing with convex faces.
pub fn leaf_slope_winding(tree: &Tree, slopes: &SlopeMap) -> Frac {
    let s = leaf_slopes(tree, slopes);
    (0..s.len()).map(|i| s[i].1.ccw_gap(s[(i + 1) % s.len()].1)).sum()
}

/// Smallest angle between edges that are consecutive around a vertex;
/// half a turn when no vertex has two edges.
pub fn measure_resolution(tree: &Tree, slopes: &SlopeMap) -> TurnAngle {
    let mut best: Frac = Ratio::new(1, 2);
    let mut dirs = Vec::new();
    for v in 0..tree.len() {
        if tree.degree(v) < 2 {
            continue;
        }
        dirs.clear();
        dirs.extend(tree.neighbors(v).iter().map(|&w| slopes.dir(v, w)));
        dirs.sort();
        for i in 0..dirs.len() {
            let gap = dirs[i].ccw_gap(dirs[(i + 1) % dirs.len()]);
            best = best.min(gap);
        }
    }
    TurnAngle::from_frac(best)
}

/// Reports a violation unless the measured resolution equals `expected`.
pub fn check_resolution(tree: &Tree, slopes: &SlopeMap, expected: TurnAngle) -> Vec<Violation> {
    let got = measure_resolution(tree, slopes);
    if got == expected {
        Vec::new()
    } else {
        vec![Violation::new(
            ViolationKind::ResolutionMismatch,
            Vec::new(),
            format!("measured {got} of a turn, expected {expected}"),
        )]
    }
}

// ---------------------------------------------------------------------------
// Planarity

const TOL: f64 = 1e-12;

type Point = (f64, f64);

fn sub(a: Point, b: Point) -> Point {
    (a.0 - b.0, a.1 - b.1)
}

fn cross(a: Point, b: Point) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

/// Sign of the turn `a -> b -> c`, zero within a tolerance scaled to the
/// lengths involved.
fn orient(a: Point, b: Point, c: Point) -> i8 {
    let (ab, ac) = (sub(b, a), sub(c, a));
    let scale = ab.0.hypot(ab.1) * ac.0.hypot(ac.1);
    let x = cross(ab, ac);
    if x.abs() <= TOL * scale.max(1.0) {
        0
    } else if x > 0.0 {
        1
    } else {
        -1
    }
}

/// `c`, known to be collinear with `a b`, lies within the segment.
fn within(a: Point, b: Point, c: Point) -> bool {
    c.0 >= a.0.min(b.0) - TOL && c.0 <= a.0.max(b.0) + TOL && c.1 >= a.1.min(b.1) - TOL && c.1 <= a.1.max(b.1) + TOL
}

/// Closed segments `p` and `q` share a point.
fn segments_meet(p: (Point, Point), q: (Point, Point)) -> bool {
    let o1 = orient(p.0, p.1, q.0);
    let o2 = orient(p.0, p.1, q.1);
    let o3 = orient(q.0, q.1, p.0);
    let o4 = orient(q.0, q.1, p.1);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && within(p.0, p.1, q.0))
        || (o2 == 0 && within(p.0, p.1, q.1))
        || (o3 == 0 && within(q.0, q.1, p.0))
        || (o4 == 0 && within(q.0, q.1, p.1))
}

struct Segments {
    edges: Vec<(VertexId, VertexId)>,
    /// Edge indices sorted by the left end of their bounding boxes.
    order: Vec<usize>,
    min_x: Vec<f64>,
    max_x: Vec<f64>,
}

impl Segments {
    fn new(tree: &Tree, pos: &[Point]) -> Self {
        let edges: Vec<_> = tree.edges().collect();
        let min_x: Vec<f64> = edges.iter().map(|&(u, v)| pos[u].0.min(pos[v].0)).collect();
        let max_x: Vec<f64> = edges.iter().map(|&(u, v)| pos[u].0.max(pos[v].0)).collect();
        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.sort_by(|&a, &b| min_x[a].total_cmp(&min_x[b]));
        Segments { edges, order, min_x, max_x }
    }

    /// Crossings between the `i`-th edge in sweep order and later edges
    /// whose x-ranges overlap it.
    fn crossings_from(&self, pos: &[Point], i: usize) -> Vec<Violation> {
        let a = self.order[i];
        let (u, v) = self.edges[a];
        let mut out = Vec::new();
        for &b in &self.order[i + 1..] {
            if self.min_x[b] > self.max_x[a] + TOL {
                break;
            }
            let (x, y) = self.edges[b];
            if x == u || x == v || y == u || y == v {
                continue;
            }
            if segments_meet((pos[u], pos[v]), (pos[x], pos[y])) {
                out.push(Violation::new(
                    ViolationKind::Crossing,
                    vec![u, v, x, y],
                    format!("edge {u}-{v} meets edge {x}-{y}"),
                ));
            }
        }
        out
    }
}

/// Pairwise intersection test over all edges without a shared endpoint,
/// on raw coordinates.
pub fn check_planar_points(tree: &Tree, pos: &[Point]) -> Vec<Violation> {
    let segs = Segments::new(tree, pos);
    #[cfg(feature = "parallel")]
    {
        (0..segs.order.len()).into_par_iter().flat_map_iter(|i| segs.crossings_from(pos, i)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..segs.order.len()).flat_map(|i| segs.crossings_from(pos, i)).collect()
    }
}

/// Single-threaded [`check_planar_points`].
pub fn check_planar_points_seq(tree: &Tree, pos: &[Point]) -> Vec<Violation> {
    let segs = Segments::new(tree, pos);
    (0..segs.order.len()).flat_map(|i| segs.crossings_from(pos, i)).collect()
}

/// Edge crossings in a drawing; touching at a shared vertex is allowed.
pub fn check_planar(tree: &Tree, drawing: &Drawing) -> Vec<Violation> {
    check_planar_points(tree, &drawing.positions)
}

/// Single-threaded [`check_planar`].
pub fn check_planar_seq(tree: &Tree, drawing: &Drawing) -> Vec<Violation> {
    check_planar_points_seq(tree, &drawing.positions)
}

// ---------------------------------------------------------------------------
// Shapes and forks, recomputed from their definitions

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Path,
    Rake,
    Other,
}

/// Children of every vertex in counterclockwise order after the parent,
/// for `rotation` rooted at `root`, plus a preorder.
fn rooted_children(rotation: &[Vec<VertexId>], root: VertexId) -> (Vec<Vec<VertexId>>, Vec<VertexId>) {
    let n = rotation.len();
    let mut kids = vec![Vec::new(); n];
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; n];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        let nb = &rotation[v];
        let (start, count) = if v == root {
            (0, nb.len())
        } else {
            (nb.iter().position(|&w| w == parent[v]).unwrap() + 1, nb.len() - 1)
        };
        for j in 0..count {
            let w = nb[(start + j) % nb.len()];
            parent[w] = v;
            kids[v].push(w);
            order.push(w);
        }
        i += 1;
    }
    (kids, order)
}

/// A subtree is a path when no vertex has two children, and a rake when no
/// vertex has three children and the branching vertices lie on one
/// downward chain.
fn shapes(kids: &[Vec<VertexId>], order: &[VertexId]) -> Vec<Shape> {
    let n = kids.len();
    // Branching vertices at or below v; whether some vertex has three
    // children; whether the branching vertices lie on one downward chain.
    let mut branching = vec![0usize; n];
    let mut wide = vec![false; n];
    let mut chain = vec![true; n];
    for &v in order.iter().rev() {
        let below: Vec<usize> = kids[v].iter().map(|&w| branching[w]).collect();
        branching[v] = below.iter().sum::<usize>() + usize::from(kids[v].len() >= 2);
        wide[v] = kids[v].len() >= 3 || kids[v].iter().any(|&w| wide[w]);
        let branching_children = below.iter().filter(|&&b| b > 0).count();
        chain[v] = kids[v].iter().all(|&w| chain[w]) && branching_children <= 1;
    }
    (0..n)
        .map(|v| {
            if branching[v] == 0 {
                Shape::Path
            } else if !wide[v] && chain[v] {
                Shape::Rake
            } else {
                Shape::Other
            }
        })
        .collect()
}

/// Forks among a child sequence: pairs of path children separated only by
/// rakes, reading the sequence cyclically at the root.
fn forks_among(seq: &[Shape], cyclic: bool) -> usize {
    let len = seq.len();
    let mut forks = 0;
    for i in 0..len {
        if seq[i] != Shape::Path {
            continue;
        }
        let reach = if cyclic { len } else { len - 1 - i };
        for step in 1..=reach {
            match seq[(i + step) % len] {
                Shape::Path => {
                    forks += 1;
                    break;
                }
                Shape::Other => break,
                Shape::Rake => {}
            }
        }
    }
    forks
}

fn forks_of_rotation(rotation: &[Vec<VertexId>], root: VertexId) -> usize {
    let (kids, order) = rooted_children(rotation, root);
    let shape = shapes(&kids, &order);
    (0..kids.len())
        .map(|v| {
            let seq: Vec<Shape> = kids[v].iter().map(|&w| shape[w]).collect();
            forks_among(&seq, v == root)
        })
        .sum()
}

/// Forks of `tree` rooted at `root` under its own rotation, by definition.
pub fn forks_by_definition(tree: &Tree, root: VertexId) -> usize {
    forks_of_rotation(tree.rotation(), root)
}

/// Default size guard for [`brute_force_min_forks`].
pub const BRUTE_FORCE_LIMIT: usize = 9;

/// `k`-th permutation (in lexicographic order) of `items`.
fn nth_permutation(items: &[VertexId], mut k: usize) -> Vec<VertexId> {
    let mut pool = items.to_vec();
    let mut out = Vec::with_capacity(pool.len());
    let mut fact: usize = (1..pool.len()).product();
    while !pool.is_empty() {
        let i = k / fact.max(1);
        k %= fact.max(1);
        out.push(pool.remove(i));
        if !pool.is_empty() {
            fact /= pool.len();
        }
    }
    out
}

struct RotationSpace<'a> {
    tree: &'a Tree,
    /// Number of distinct cyclic orders at each vertex.
    radix: Vec<usize>,
    total: usize,
}

impl<'a> RotationSpace<'a> {
    fn new(tree: &'a Tree) -> Self {
        let radix: Vec<usize> = (0..tree.len()).map(|v| (1..tree.degree(v).max(1)).product()).collect();
        let total = radix.iter().product();
        RotationSpace { tree, radix, total }
    }

    /// The `index`-th rotation system: each vertex keeps its first
    /// neighbor fixed and permutes the rest.
    fn rotation(&self, mut index: usize) -> Vec<Vec<VertexId>> {
        (0..self.tree.len())
            .map(|v| {
                let nb = self.tree.neighbors(v);
                let digit = index % self.radix[v];
                index /= self.radix[v];
                if nb.is_empty() {
                    return Vec::new();
                }
                let mut r = vec![nb[0]];
                r.extend(nth_permutation(&nb[1..], digit));
                r
            })
            .collect()
    }

    fn forks(&self, index: usize, root: VertexId) -> usize {
        forks_of_rotation(&self.rotation(index), root)
    }
}

fn guard(tree: &Tree, limit: usize) -> Result<RotationSpace<'_>, LayoutError> {
    if tree.len() > limit {
        return Err(LayoutError::TooLarge { n: tree.len(), limit });
    }
    Ok(RotationSpace::new(tree))
}

/// Minimum number of forks over every rotation system of `tree`, rooted at
/// `root`, by exhaustive enumeration. Refuses trees above
/// [`BRUTE_FORCE_LIMIT`] vertices.
pub fn brute_force_min_forks(tree: &Tree, root: VertexId) -> Result<usize, LayoutError> {
    brute_force_min_forks_with_limit(tree, root, BRUTE_FORCE_LIMIT)
}

/// [`brute_force_min_forks`] with an explicit size guard.
pub fn brute_force_min_forks_with_limit(tree: &Tree, root: VertexId, limit: usize) -> Result<usize, LayoutError> {
    let space = guard(tree, limit)?;
    #[cfg(feature = "parallel")]
    let best = (0..space.total).into_par_iter().map(|i| space.forks(i, root)).min();
    #[cfg(not(feature = "parallel"))]
    let best = (0..space.total).map(|i| space.forks(i, root)).min();
    Ok(best.unwrap_or(0))
}

/// Single-threaded [`brute_force_min_forks_with_limit`].
pub fn brute_force_min_forks_seq(tree: &Tree, root: VertexId, limit: usize) -> Result<usize, LayoutError> {
    let space = guard(tree, limit)?;
    Ok((0..space.total).map(|i| space.forks(i, root)).min().unwrap_or(0))
}

/// Every fork at every vertex, drawn with resolution `theta`, must span at
/// least `(r + 1) theta` from its first leaf to its last leaf, where `r`
/// counts its rakes.
pub fn check_fork_spans(tree: &Tree, slopes: &SlopeMap, root: VertexId, theta: TurnAngle) -> Vec<Violation> {
    let (kids, order) = rooted_children(tree.rotation(), root);
    let shape = shapes(&kids, &order);
    // Direction of the last edge of the path hanging below `w`.
    let leaf_dir = |v: VertexId, w: VertexId| -> TurnAngle {
        let (mut p, mut x) = (v, w);
        while let Some(&y) = kids[x].first() {
            (p, x) = (x, y);
        }
        slopes.dir(p, x)
    };
    let mut out = Vec::new();
    for (v, seq) in kids.iter().enumerate() {
        let len = seq.len();
        let cyclic = v == root;
        for i in 0..len {
            if shape[seq[i]] != Shape::Path {
                continue;
            }
            let reach = if cyclic { len } else { len - 1 - i };
            for step in 1..=reach {
                let w = seq[(i + step) % len];
                match shape[w] {
                    Shape::Path => {
                        let rakes = step as i64 - 1;
                        let span = if w == seq[i] {
                            Ratio::from_integer(1)
                        } else {
                            leaf_dir(v, seq[i]).ccw_gap(leaf_dir(v, w))
                        };
                        let need = theta.frac() * (rakes + 1);
                        if span < need {
                            out.push(Violation::new(
                                ViolationKind::ForkMismatch,
                                vec![v, seq[i], w],
                                format!(
                                    "fork with {rakes} rakes spans {} < {}",
                                    TurnAngle::from_frac(span),
                                    TurnAngle::from_frac(need)
                                ),
                            ));
                        }
                        break;
                    }
                    Shape::Other => break,
                    Shape::Rake => {}
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn arch(v: &[(i64, i64)]) -> Vec<TurnAngle> {
        v.iter().map(|&(p, q)| TurnAngle::new(p, q)).collect()
    }

    #[test]
    fn arch_examples() {
        assert!(is_convex_arch(&arch(&[(0, 1), (1, 8), (1, 4)])).unwrap());
        assert!(!is_convex_arch(&arch(&[(0, 1), (1, 4), (1, 8)])).unwrap());
        assert!(!is_convex_arch(&arch(&[(0, 1), (1, 3), (2, 3)])).unwrap());
        assert!(is_convex_arch(&arch(&[(0, 1), (1, 2)])).unwrap());
        assert!(is_convex_arch(&arch(&[(7, 8), (1, 8)])).unwrap());
        assert_eq!(is_convex_arch(&[]), Err(LayoutError::EmptyArch));
    }

    fn star_slopes(leaves: &[TurnAngle]) -> (Tree, SlopeMap) {
        let t = Tree::star(leaves.len());
        let s = SlopeMap::from_fn(&t, 0, |_, w| leaves[w - 1]);
        (t, s)
    }

    #[test]
    fn symmetric_star() {
        let (t, s) = star_slopes(&arch(&[(0, 1), (1, 3), (2, 3)]));
        assert!(check_convex_faces(&t, &s).is_empty());
        assert_eq!(measure_resolution(&t, &s), TurnAngle::new(1, 3));
        assert_eq!(leaf_slope_winding(&t, &s), Ratio::from_integer(1));
    }

    #[test]
    fn wide_star_face() {
        let (t, s) = star_slopes(&arch(&[(0, 1), (1, 3), (2, 5)]));
        let v = check_convex_faces(&t, &s);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::NonConvexArch);
        assert_eq!(v[0].location, vec![3, 1]);
    }

    #[test]
    fn reversed_rotation_is_caught() {
        let (t, s) = star_slopes(&arch(&[(0, 1), (2, 3), (1, 3)]));
        assert!(check_convex_faces(&t, &s).iter().any(|v| v.kind == ViolationKind::RotationMismatch));
    }

    #[test]
    fn single_edge_and_vertex() {
        let t = Tree::path(2);
        let s = SlopeMap::constant(&t, 0, TurnAngle::ZERO);
        assert!(check_convex_faces(&t, &s).is_empty());
        assert_eq!(measure_resolution(&t, &s), TurnAngle::HALF);
        let t = Tree::path(1);
        let s = SlopeMap::constant(&t, 0, TurnAngle::ZERO);
        assert!(check_convex_faces(&t, &s).is_empty());
    }

    #[test]
    fn straight_chain() {
        let t = Tree::path(5);
        let s = SlopeMap::constant(&t, 0, TurnAngle::new(1, 7));
        assert!(check_convex_faces(&t, &s).is_empty());
        assert_eq!(measure_resolution(&t, &s), TurnAngle::HALF);
    }

    #[test]
    fn crossing_x() {
        let t = Tree::path(4);
        let pos = [(0.0, 0.0), (1.0, 1.0), (0.0, 1.0), (1.0, 0.0)];
        let v = check_planar_points(&t, &pos);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::Crossing);
        assert_eq!(check_planar_points_seq(&t, &pos), v);
    }

    #[test]
    fn collinear_path_is_planar() {
        let t = Tree::path(4);
        let pos = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)];
        assert!(check_planar_points(&t, &pos).is_empty());
        let folded = [(0.0, 0.0), (2.0, 0.0), (1.0, 0.0), (3.0, 0.0)];
        assert!(!check_planar_points(&t, &folded).is_empty());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_min_forks(&Tree::star(4), 0).unwrap(), 4);
        let ds = gen::double_spider();
        let root = crate::tree::choose_root(&ds).unwrap();
        assert_eq!(brute_force_min_forks(&ds, root).unwrap(), 4);
        let t = gen::two_paths_two_spiders();
        let root = crate::tree::choose_root(&t).unwrap();
        assert_eq!(forks_by_definition(&t, root), 5);
        assert_eq!(brute_force_min_forks_with_limit(&t, root, 11).unwrap(), 4);
        assert_eq!(brute_force_min_forks_seq(&t, root, 11).unwrap(), 4);
    }

    #[test]
    fn brute_force_guard() {
        let t = Tree::path(12);
        assert!(matches!(brute_force_min_forks(&t, 0), Err(LayoutError::TooLarge { n: 12, limit: 9 })));
        // A lone path child of the root forks with itself around the root.
        assert_eq!(brute_force_min_forks_with_limit(&t, 0, 20).unwrap(), 1);
        assert_eq!(brute_force_min_forks_with_limit(&t, 5, 20).unwrap(), 2);
    }

    #[test]
    fn permutations_are_distinct() {
        let items = [4, 7, 9];
        let mut all: Vec<_> = (0..6).map(|k| nth_permutation(&items, k)).collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 6);
    }
}
