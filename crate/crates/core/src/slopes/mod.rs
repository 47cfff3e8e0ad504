//! Edge directions for convex-face drawings.
//!
//! Every construction in this module produces a [`SlopeMap`]: one exact
//! direction per edge, oriented away from a chosen root. Lengths are chosen
//! later and independently (see [`crate::lengths`]).

mod corners;
mod general;
mod rake;
mod two_slope;

use std::collections::VecDeque;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::classify::{classify_tree, TreeClass};
use crate::error::LayoutError;
use crate::optimize::{embed_min_forks, Embedding};
use crate::tree::{choose_root, Tree, VertexId};
use crate::turn::TurnAngle;

pub use corners::{realize_corners, CornerAngles};
pub use general::assign_slopes_general;
pub use rake::{assign_slopes_rake, assign_slopes_triple_rake, reembed_alternating};
pub use two_slope::{draw_rake_two_slopes, Align};

const NONE: usize = usize::MAX;

/// Direction of every edge, stored on the child endpoint relative to a
/// root. The reverse direction of an edge is implied at half a turn.
#[derive(Debug, Clone, PartialEq)]
pub struct SlopeMap {
    root: VertexId,
    parent: Vec<VertexId>,
    slope: Vec<TurnAngle>,
}

impl SlopeMap {
    /// Builds a map rooted at `root` whose edge `parent -> v` points along
    /// `dir(parent, v)`.
    pub fn from_fn(tree: &Tree, root: VertexId, mut dir: impl FnMut(VertexId, VertexId) -> TurnAngle) -> Self {
        let n = tree.len();
        let mut parent = vec![NONE; n];
        let mut slope = vec![TurnAngle::ZERO; n];
        let mut queue = VecDeque::from([root]);
        let mut seen = vec![false; n];
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            for &w in tree.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    slope[w] = dir(v, w);
                    queue.push_back(w);
                }
            }
        }
        SlopeMap { root, parent, slope }
    }

    /// Every edge pointing in the same direction; only meaningful for paths.
    pub fn constant(tree: &Tree, root: VertexId, angle: TurnAngle) -> Self {
        SlopeMap::from_fn(tree, root, |_, _| angle)
    }

    pub(crate) fn from_parts(root: VertexId, parent: Vec<VertexId>, slope: Vec<TurnAngle>) -> Self {
        SlopeMap { root, parent, slope }
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        (self.parent[v] != NONE).then_some(self.parent[v])
    }

    /// Direction of the edge from `v`'s parent to `v`.
    pub fn slope(&self, v: VertexId) -> Option<TurnAngle> {
        self.parent(v).map(|_| self.slope[v])
    }

    /// Overwrites the direction of the edge from `v`'s parent to `v`.
    pub fn set_slope(&mut self, v: VertexId, angle: TurnAngle) {
        assert!(self.parent[v] != NONE, "the root has no parent edge");
        self.slope[v] = angle;
    }

    /// Direction from `u` toward its neighbor `v`.
    pub fn dir(&self, u: VertexId, v: VertexId) -> TurnAngle {
        if self.parent[v] == u {
            self.slope[v]
        } else if self.parent[u] == v {
            self.slope[u].reversed()
        } else {
            panic!("{u} and {v} are not adjacent in the slope map")
        }
    }

    /// `(parent, child, direction)` for every edge, ordered by child id.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, TurnAngle)> + '_ {
        (0..self.len()).filter(|&v| self.parent[v] != NONE).map(|v| (self.parent[v], v, self.slope[v]))
    }

    /// Every direction turned by `delta`.
    pub fn rotated(&self, delta: TurnAngle) -> Self {
        let mut out = self.clone();
        for s in &mut out.slope {
            *s = *s + delta;
        }
        out
    }
}

impl Serialize for SlopeMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Edge {
            from: VertexId,
            to: VertexId,
            turn: TurnAngle,
        }
        let mut seq = serializer.serialize_seq(Some(self.len().saturating_sub(1)))?;
        for (from, to, turn) in self.edges() {
            seq.serialize_element(&Edge { from, to, turn })?;
        }
        seq.end()
    }
}

/// Result of [`assign_slopes`]: the directions, the embedding they realize,
/// and the angular resolution they achieve.
#[derive(Debug, Clone)]
pub struct SlopeAssignment {
    pub slopes: SlopeMap,
    /// The rotation system actually drawn; differs from the input in free mode.
    pub tree: Tree,
    pub class: TreeClass,
    pub resolution: TurnAngle,
    /// Root of the fork analysis for general trees.
    pub root: Option<VertexId>,
}

/// Directions for a path: every edge along slope 0, rooted at the smallest
/// leaf so that consecutive edges continue straight.
fn path_slopes(tree: &Tree) -> SlopeMap {
    let start = tree.leaves().next().unwrap_or(0);
    SlopeMap::constant(tree, start, TurnAngle::ZERO)
}

/// Optimal directions for `tree`, dispatching on its class.
pub fn assign_slopes(tree: &Tree, mode: Embedding) -> Result<SlopeAssignment, LayoutError> {
    let class = classify_tree(tree);
    match class {
        TreeClass::Path => Ok(SlopeAssignment {
            slopes: path_slopes(tree),
            tree: tree.clone(),
            class,
            resolution: TurnAngle::HALF,
            root: None,
        }),
        TreeClass::Rake(_) => {
            let (drawn, slopes, resolution) = assign_slopes_rake(tree, mode)?;
            Ok(SlopeAssignment { slopes, class: classify_tree(&drawn), tree: drawn, resolution, root: None })
        }
        TreeClass::TripleRake(_) => {
            let (drawn, slopes, resolution) = assign_slopes_triple_rake(tree, mode)?;
            Ok(SlopeAssignment { slopes, class: classify_tree(&drawn), tree: drawn, resolution, root: None })
        }
        TreeClass::General => {
            let root = choose_root(tree)?;
            let drawn = match mode {
                Embedding::Fixed => tree.clone(),
                Embedding::Free => embed_min_forks(tree, root),
            };
            let (slopes, resolution) = assign_slopes_general(&drawn, root)?;
            Ok(SlopeAssignment { slopes, tree: drawn, class, resolution, root: Some(root) })
        }
    }
}
