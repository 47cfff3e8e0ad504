//! Drawings specified by the angle at every corner.
//!
//! A corner is a pair of rotation-consecutive edges at a vertex. In a tree
//! any choice of corner angles summing to a full turn at each vertex is
//! realized by exactly one slope map up to a global rotation, so rake
//! constructions only have to pick angles.

use num_rational::Ratio;

use crate::slopes::{SlopeMap, NONE};
use crate::tree::{Tree, VertexId};
use crate::turn::{Frac, TurnAngle};

/// `get(v, i)` is the counterclockwise angle at `v` from its `i`-th
/// neighbor to the next one, in turns.
#[derive(Debug, Clone, PartialEq)]
pub struct CornerAngles {
    angles: Vec<Vec<Frac>>,
}

impl CornerAngles {
    /// Equal angles at every vertex, which keeps degree-two vertices straight.
    pub fn uniform(tree: &Tree) -> Self {
        let angles = (0..tree.len())
            .map(|v| {
                let d = tree.degree(v).max(1);
                vec![Ratio::new(1, d as i64); d]
            })
            .collect();
        CornerAngles { angles }
    }

    pub fn get(&self, v: VertexId, i: usize) -> Frac {
        self.angles[v][i]
    }

    pub fn set(&mut self, v: VertexId, i: usize, angle: Frac) {
        self.angles[v][i] = angle;
    }

    /// Vertices whose corner angles do not add up to one turn.
    pub fn unbalanced(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.angles.iter().enumerate().filter(|(_, a)| a.iter().sum::<Frac>() != Ratio::from_integer(1)).map(|(v, _)| v)
    }
}

/// Slope map realizing `angles`, rooted at `start`, with the edge from
/// `start` to its first neighbor along direction 0.
pub fn realize_corners(tree: &Tree, start: VertexId, angles: &CornerAngles) -> SlopeMap {
    debug_assert!(angles.unbalanced().next().is_none());
    let n = tree.len();
    let mut parent = vec![NONE; n];
    let mut slope = vec![TurnAngle::ZERO; n];
    // Each stack entry: vertex, index of a neighbor with known direction, that direction.
    let mut stack = vec![(start, 0usize, TurnAngle::ZERO)];
    while let Some((v, k, dir_k)) = stack.pop() {
        let nb = tree.neighbors(v);
        let d = nb.len();
        let mut dir = dir_k;
        for j in 0..d {
            let i = (k + j) % d;
            let w = nb[i];
            if w != parent[v] {
                parent[w] = v;
                slope[w] = dir;
                let back = tree.index_of(w, v).expect("symmetric rotation");
                stack.push((w, back, dir.reversed()));
            }
            dir = dir + angles.get(v, i);
        }
    }
    SlopeMap::from_parts(start, parent, slope)
}
