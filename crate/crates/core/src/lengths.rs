//! Edge lengths and vertex coordinates for a fixed slope assignment.
//!
//! Convex faces keep a drawing planar for every choice of positive
//! lengths, so each strategy here is free to pick lengths on its own; the
//! directions always come from the [`SlopeMap`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{LayoutError, TreeError};
use crate::layout::LayoutReport;
use crate::slopes::SlopeMap;
use crate::tree::{Tree, VertexId};
use crate::turn::TurnAngle;

/// How edge lengths are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LengthStrategy {
    /// Every edge has length 1.
    Uniform,
    /// An edge into a vertex at depth `d` has length `1/d`.
    InverseDepth,
    /// An edge into a vertex whose subtree has `s` vertices has length `sqrt(s)`.
    SqrtSubtree,
    /// Lengths are the edge weights of the tree.
    Weighted,
    /// Each vertex lies on the circle whose radius is its depth.
    Radial,
}

impl LengthStrategy {
    pub const ALL: [LengthStrategy; 5] = [
        LengthStrategy::Uniform,
        LengthStrategy::InverseDepth,
        LengthStrategy::SqrtSubtree,
        LengthStrategy::Weighted,
        LengthStrategy::Radial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LengthStrategy::Uniform => "uniform",
            LengthStrategy::InverseDepth => "inverse-depth",
            LengthStrategy::SqrtSubtree => "sqrt-subtree",
            LengthStrategy::Weighted => "weights",
            LengthStrategy::Radial => "radial",
        }
    }
}

impl fmt::Display for LengthStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LengthStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LengthStrategy::ALL
            .into_iter()
            .find(|l| l.name() == s || (s == "weighted" && *l == LengthStrategy::Weighted))
            .ok_or_else(|| format!("unknown length strategy {s:?}"))
    }
}

/// A tree drawn with straight edges.
#[derive(Debug, Clone, Serialize)]
pub struct Drawing {
    /// The embedding that was drawn.
    #[serde(skip)]
    pub tree: Tree,
    pub positions: Vec<(f64, f64)>,
    pub slopes: SlopeMap,
    pub report: LayoutReport,
    /// Radii of the guide circles for radial placements.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radii: Option<Vec<f64>>,
    /// Vertex at the origin.
    pub placement_root: VertexId,
}

fn unit(angle: TurnAngle) -> (f64, f64) {
    let a = angle.to_radians();
    (a.cos(), a.sin())
}

/// Coordinates obtained by walking from `root` (at the origin) and moving
/// `length(parent, child)` along each edge direction.
fn accumulate(
    tree: &Tree,
    slopes: &SlopeMap,
    root: VertexId,
    mut length: impl FnMut(VertexId, VertexId) -> Result<f64, LayoutError>,
) -> Result<Vec<(f64, f64)>, LayoutError> {
    let rooted = tree.rooted(root);
    let mut pos = vec![(0.0, 0.0); tree.len()];
    for &v in rooted.preorder() {
        if let Some(p) = rooted.parent(v) {
            let len = length(p, v)?;
            let (dx, dy) = unit(slopes.dir(p, v));
            pos[v] = (pos[p].0 + len * dx, pos[p].1 + len * dy);
        }
    }
    Ok(pos)
}

fn check_root(tree: &Tree, root: VertexId) -> Result<(), LayoutError> {
    if root >= tree.len() {
        return Err(TreeError::VertexOutOfRange(root).into());
    }
    Ok(())
}

/// Places every vertex, with `placement_root` at the origin, using lengths
/// from `strategy`. [`LengthStrategy::Radial`] uses the default radii.
pub fn place(
    slopes: &SlopeMap,
    tree: &Tree,
    strategy: LengthStrategy,
    placement_root: VertexId,
) -> Result<Drawing, LayoutError> {
    check_root(tree, placement_root)?;
    let positions = match strategy {
        LengthStrategy::Radial => return place_radial(slopes, tree, placement_root, None),
        LengthStrategy::Uniform => accumulate(tree, slopes, placement_root, |_, _| Ok(1.0))?,
        LengthStrategy::InverseDepth => {
            let rooted = tree.rooted(placement_root);
            accumulate(tree, slopes, placement_root, |_, v| Ok(1.0 / rooted.depth(v) as f64))?
        }
        LengthStrategy::SqrtSubtree => {
            let size = tree.rooted(placement_root).subtree_sizes();
            accumulate(tree, slopes, placement_root, |_, v| Ok((size[v] as f64).sqrt()))?
        }
        LengthStrategy::Weighted => accumulate(tree, slopes, placement_root, |p, v| {
            tree.weight(p, v).ok_or(LayoutError::Tree(TreeError::MissingWeight(p, v)))
        })?,
    };
    Ok(Drawing {
        tree: tree.clone(),
        positions,
        slopes: slopes.clone(),
        report: LayoutReport::measured(tree, slopes, strategy),
        radii: None,
        placement_root,
    })
}

/// Forward intersection of the ray from `p` along `dir` with the circle of
/// radius `r` about the origin; `p` must lie strictly inside.
pub fn ray_to_circle(p: (f64, f64), dir: TurnAngle, r: f64) -> Result<(f64, f64), LayoutError> {
    let dist = p.0.hypot(p.1);
    if dist >= r {
        return Err(LayoutError::OutsideCircle { dist, radius: r });
    }
    let u = unit(dir);
    let along = p.0 * u.0 + p.1 * u.1;
    let t = -along + (along * along + r * r - dist * dist).sqrt();
    Ok((p.0 + t * u.0, p.1 + t * u.1))
}

/// Places each vertex at depth `d` on the circle of radius `radii[d - 1]`
/// (default `d`), extending every edge along its slope until it meets its
/// circle.
pub fn place_radial(
    slopes: &SlopeMap,
    tree: &Tree,
    placement_root: VertexId,
    radii: Option<&[f64]>,
) -> Result<Drawing, LayoutError> {
    check_root(tree, placement_root)?;
    let rooted = tree.rooted(placement_root);
    let height = rooted.preorder().iter().map(|&v| rooted.depth(v)).max().unwrap_or(0);
    let radii: Vec<f64> = match radii {
        None => (1..=height).map(|d| d as f64).collect(),
        Some(r) => {
            let increasing = r.windows(2).all(|w| w[0] < w[1]);
            if r.len() < height || !increasing || r.first().is_some_and(|&x| x.is_nan() || x <= 0.0) {
                return Err(LayoutError::BadRadii);
            }
            r.to_vec()
        }
    };
    let mut pos = vec![(0.0, 0.0); tree.len()];
    for &v in rooted.preorder() {
        if let Some(p) = rooted.parent(v) {
            pos[v] = ray_to_circle(pos[p], slopes.dir(p, v), radii[rooted.depth(v) - 1])?;
        }
    }
    Ok(Drawing {
        tree: tree.clone(),
        positions: pos,
        slopes: slopes.clone(),
        report: LayoutReport::measured(tree, slopes, LengthStrategy::Radial),
        radii: Some(radii),
        placement_root,
    })
}

fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

/// Drawing whose edge lengths interpolate linearly between `from` (`t = 0`)
/// and `to` (`t = 1`). Both must draw the same tree with the same slopes.
pub fn morph(from: &Drawing, to: &Drawing, t: f64) -> Result<Drawing, LayoutError> {
    if from.tree != to.tree {
        return Err(LayoutError::MorphMismatch("tree"));
    }
    if from.slopes.edges().any(|(p, v, s)| to.slopes.dir(p, v) != s) {
        return Err(LayoutError::MorphMismatch("slopes"));
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(LayoutError::MorphMismatch("parameter range"));
    }
    let (a, b) = (&from.positions, &to.positions);
    let positions = accumulate(&from.tree, &from.slopes, from.placement_root, |p, v| {
        Ok((1.0 - t) * dist(a[p], a[v]) + t * dist(b[p], b[v]))
    })?;
    Ok(Drawing { positions, radii: None, ..from.clone() })
}
