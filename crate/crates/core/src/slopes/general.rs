//! Slope assignment for trees that are neither paths, rakes, nor triple
//! rakes.
//!
//! With `f` forks, `theta = 1/f` of a turn. Children are visited in
//! counterclockwise order while a running leaf slope `c` advances: a path
//! child costs nothing unless it closes a fork (then `theta`), a rake costs
//! `theta` and is drawn with the two slopes `c` and `c + theta`, and any
//! other subtree with `f'` forks receives the span `f' theta` with its root
//! edge bisecting it. Leaf slopes therefore increase monotonically around
//! the tree and total exactly one turn.

use num_rational::Ratio;

use crate::classify::SubtreeClass;
use crate::error::LayoutError;
use crate::optimize::count_forks;
use crate::slopes::two_slope::two_slope_walk;
use crate::slopes::{SlopeMap, NONE};
use crate::tree::{Tree, VertexId};
use crate::turn::{Frac, TurnAngle};

/// Directions realizing angular resolution `1/f` for the forks `f` of
/// `tree` rooted at `root`.
pub fn assign_slopes_general(tree: &Tree, root: VertexId) -> Result<(SlopeMap, TurnAngle), LayoutError> {
    let report = count_forks(tree, root);
    if report.total_forks == 0 {
        return Err(LayoutError::WrongClass { expected: "general", found: "fork-free" });
    }
    let theta: Frac = Ratio::new(1, report.total_forks as i64);
    let rooted = tree.rooted(root);
    let n = tree.len();
    let parent: Vec<VertexId> = (0..n).map(|v| rooted.parent(v).unwrap_or(NONE)).collect();
    let mut slope = vec![TurnAngle::ZERO; n];
    let mut base = vec![Ratio::from_integer(0); n];
    let classes = &report.classes;

    for &v in rooted.preorder() {
        if v != root && classes.of(v) != SubtreeClass::Other {
            continue;
        }
        let mut kids: Vec<VertexId> = rooted.children(v).collect();
        if v == root {
            // Cut the cyclic order before a non-rake tree, else before a path.
            let cut = kids
                .iter()
                .position(|&w| classes.of(w) == SubtreeClass::Other)
                .or_else(|| kids.iter().position(|&w| classes.of(w) == SubtreeClass::Path))
                .unwrap_or(0);
            kids.rotate_left(cut);
        }
        let mut c = base[v];
        let mut last_non_rake = None;
        for w in kids {
            match classes.of(w) {
                SubtreeClass::Path => {
                    if last_non_rake == Some(SubtreeClass::Path) {
                        c += theta;
                    }
                    let dir = TurnAngle::from_frac(c);
                    let (mut prev, mut x) = (v, w);
                    loop {
                        slope[x] = dir;
                        match tree.neighbors(x).iter().find(|&&y| y != prev) {
                            Some(&y) => (prev, x) = (x, y),
                            None => break,
                        }
                    }
                    last_non_rake = Some(SubtreeClass::Path);
                }
                SubtreeClass::Rake => {
                    let lo = TurnAngle::from_frac(c);
                    let hi = TurnAngle::from_frac(c + theta);
                    let root_dir = if last_non_rake == Some(SubtreeClass::Path) { hi } else { lo };
                    two_slope_walk(tree, v, w, lo, hi, root_dir, |x, s| slope[x] = s);
                    c += theta;
                }
                SubtreeClass::Other => {
                    let span = theta * report.subtree_forks[w] as i64;
                    slope[w] = TurnAngle::from_frac(c + span / 2);
                    base[w] = c;
                    c += span;
                    last_non_rake = Some(SubtreeClass::Other);
                }
            }
        }
    }
    Ok((SlopeMap::from_parts(root, parent, slope), TurnAngle::from_frac(theta)))
}
