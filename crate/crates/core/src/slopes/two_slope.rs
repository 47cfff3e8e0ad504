//! Rooted rakes drawn with only two slopes.
//!
//! At a vertex with two children the first child (counterclockwise after
//! the parent) takes the lower slope and the second the upper one, so the
//! spine proceeds along one slope after each right turn and along the
//! other after each left turn. Every face inside the rake is convex; only
//! the outer face at its root depends on the surrounding drawing.

use num_rational::Ratio;

use crate::classify::SubtreeClass;
use crate::error::LayoutError;
use crate::tree::{Tree, VertexId};
use crate::turn::TurnAngle;

/// Which leaf the root edge of a two-slope rake is parallel to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Align {
    FirstLeaf,
    LastLeaf,
}

/// Children of `v` counterclockwise after `from`.
fn children(tree: &Tree, v: VertexId, from: VertexId) -> impl Iterator<Item = VertexId> + '_ {
    let nb = tree.neighbors(v);
    let start = tree.index_of(v, from).expect("adjacent");
    (1..nb.len()).map(move |i| nb[(start + i) % nb.len()])
}

/// Class of the subtree formed by `parent`, `child` and the descendants of `child`.
fn subtree_class(tree: &Tree, parent: VertexId, child: VertexId) -> SubtreeClass {
    let mut order = vec![(child, parent)];
    let mut i = 0;
    while i < order.len() {
        let (v, from) = order[i];
        order.extend(children(tree, v, from).map(|w| (w, v)));
        i += 1;
    }
    let mut class = std::collections::HashMap::with_capacity(order.len());
    for &(v, from) in order.iter().rev() {
        let kids: Vec<SubtreeClass> = children(tree, v, from).map(|w| class[&w]).collect();
        use SubtreeClass::*;
        let c = match kids.as_slice() {
            [] => Path,
            [k] => *k,
            [Path, Path] | [Path, Rake] | [Rake, Path] => Rake,
            _ => Other,
        };
        class.insert(v, c);
    }
    class[&child]
}

/// Writes the two-slope directions for the rake below `parent -> child`,
/// with `lo` and `hi` the two slopes and `root_dir` the root edge slope.
pub(crate) fn two_slope_walk(
    tree: &Tree,
    parent: VertexId,
    child: VertexId,
    lo: TurnAngle,
    hi: TurnAngle,
    root_dir: TurnAngle,
    mut emit: impl FnMut(VertexId, TurnAngle),
) {
    emit(child, root_dir);
    let mut stack = vec![(child, parent, root_dir)];
    while let Some((v, from, d_in)) = stack.pop() {
        let kids: Vec<VertexId> = children(tree, v, from).collect();
        match kids.as_slice() {
            [] => {}
            [w] => {
                emit(*w, d_in);
                stack.push((*w, v, d_in));
            }
            [a, b] => {
                emit(*a, lo);
                emit(*b, hi);
                stack.push((*a, v, lo));
                stack.push((*b, v, hi));
            }
            _ => unreachable!("rake vertices have at most two children"),
        }
    }
}

/// Draws the rooted rake `parent -> child` with slopes `theta1` and
/// `theta2` at most a quarter turn apart. Returns `(vertex, slope of the
/// edge into it)` for every edge of the rake, its root edge included.
pub fn draw_rake_two_slopes(
    tree: &Tree,
    parent: VertexId,
    child: VertexId,
    theta1: TurnAngle,
    theta2: TurnAngle,
    align: Align,
) -> Result<Vec<(VertexId, TurnAngle)>, LayoutError> {
    let gap = theta1.ccw_gap(theta2);
    let quarter = Ratio::new(1, 4);
    let (lo, hi) = if gap == Ratio::from_integer(0) {
        return Err(LayoutError::DegenerateSlopes);
    } else if gap <= quarter {
        (theta1, theta2)
    } else if gap >= Ratio::new(3, 4) {
        (theta2, theta1)
    } else {
        return Err(LayoutError::SlopeGap(TurnAngle::from_frac(gap.min(Ratio::from_integer(1) - gap)).to_string()));
    };
    if tree.index_of(parent, child).is_none() {
        return Err(LayoutError::Tree(crate::error::TreeError::NotAdjacent(parent, child)));
    }
    match subtree_class(tree, parent, child) {
        SubtreeClass::Rake => {}
        other => {
            return Err(LayoutError::WrongClass {
                expected: "rake",
                found: if other == SubtreeClass::Path { "path" } else { "general" },
            })
        }
    }
    let root_dir = match align {
        Align::FirstLeaf => lo,
        Align::LastLeaf => hi,
    };
    let mut out = Vec::new();
    two_slope_walk(tree, parent, child, lo, hi, root_dir, |v, s| out.push((v, s)));
    Ok(out)
}
