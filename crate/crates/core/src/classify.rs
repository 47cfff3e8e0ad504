//! Path / rake / triple-rake classification of trees and rooted subtrees.

use serde::Serialize;

use crate::error::LayoutError;
use crate::tree::{degree_three_hull, Tree, VertexId};

/// Shape of the subtree hanging below a directed edge `parent -> child`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubtreeClass {
    Path,
    Rake,
    Other,
}

/// Subtree classes for a rooted tree, indexed by the child endpoint of each
/// edge. The root's own entry is meaningless and reads as `Other`.
#[derive(Debug, Clone)]
pub struct SubtreeClasses {
    root: VertexId,
    class: Vec<SubtreeClass>,
}

impl SubtreeClasses {
    pub fn root(&self) -> VertexId {
        self.root
    }

    /// Class of the subtree formed by `child`, its parent, and everything below `child`.
    pub fn of(&self, child: VertexId) -> SubtreeClass {
        self.class[child]
    }

    pub fn as_slice(&self) -> &[SubtreeClass] {
        &self.class
    }
}

/// Bottom-up classification in one postorder pass.
pub fn classify_subtrees(tree: &Tree, root: VertexId) -> SubtreeClasses {
    let rooted = tree.rooted(root);
    let mut class = vec![SubtreeClass::Other; tree.len()];
    for v in rooted.postorder() {
        if v == root {
            continue;
        }
        class[v] = match rooted.child_count(v) {
            0 => SubtreeClass::Path,
            1 => class[rooted.children(v).next().unwrap()],
            2 => {
                let mut kids = rooted.children(v).map(|w| class[w]);
                let (a, b) = (kids.next().unwrap(), kids.next().unwrap());
                use SubtreeClass::*;
                match (a, b) {
                    (Path, Path) | (Path, Rake) | (Rake, Path) => Rake,
                    _ => Other,
                }
            }
            _ => SubtreeClass::Other,
        };
    }
    SubtreeClasses { root, class }
}

/// Handedness of a spine vertex that carries a tooth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Turn {
    Left,
    Right,
}

/// Number of adjacent equal pairs; `LLL` counts two.
pub fn count_double_turns(turns: &[Turn]) -> usize {
    turns.windows(2).filter(|w| w[0] == w[1]).count()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RakeStats {
    /// Minimal path through all degree-three vertices, oriented from the
    /// endpoint with the smaller id. A single vertex when there is one
    /// degree-three vertex; empty never.
    pub spine: Vec<VertexId>,
    /// Turn at each interior spine vertex of degree three, in spine order.
    pub turns: Vec<Turn>,
    pub double_turns: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Branch {
    /// Vertices from the hub (inclusive) to the far degree-three vertex.
    pub path: Vec<VertexId>,
    pub turns: Vec<Turn>,
    pub double_turns: usize,
}

impl Branch {
    pub fn is_short(&self) -> bool {
        self.turns.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TripleRakeStats {
    pub hub: VertexId,
    /// Branches in counterclockwise order around the hub.
    pub branches: Vec<Branch>,
    pub short_paths: usize,
    pub double_turns: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum TreeClass {
    Path,
    Rake(RakeStats),
    TripleRake(TripleRakeStats),
    General,
}

impl TreeClass {
    pub fn name(&self) -> &'static str {
        match self {
            TreeClass::Path => "path",
            TreeClass::Rake(_) => "rake",
            TreeClass::TripleRake(_) => "triple-rake",
            TreeClass::General => "general",
        }
    }
}

pub fn classify_tree(tree: &Tree) -> TreeClass {
    let max_deg = tree.max_degree();
    if max_deg <= 2 {
        return TreeClass::Path;
    }
    if max_deg >= 4 {
        return TreeClass::General;
    }
    let (alive, hull_deg) = degree_three_hull(tree);
    let branching: Vec<VertexId> = (0..tree.len()).filter(|&v| hull_deg[v] == 3).collect();
    match branching.len() {
        0 => TreeClass::Rake(rake_stats(tree, &alive, &hull_deg)),
        1 => TreeClass::TripleRake(triple_stats(tree, branching[0], &alive)),
        _ => TreeClass::General,
    }
}

fn rake_stats(tree: &Tree, alive: &[bool], hull_deg: &[usize]) -> RakeStats {
    let start = (0..tree.len()).find(|&v| alive[v] && hull_deg[v] <= 1).expect("rake hull is a nonempty path");
    let spine = walk_hull(tree, start, None, alive);
    let turns = spine_turns(tree, &spine);
    RakeStats { double_turns: count_double_turns(&turns), spine, turns }
}

fn triple_stats(tree: &Tree, hub: VertexId, alive: &[bool]) -> TripleRakeStats {
    let branches: Vec<Branch> = tree
        .neighbors(hub)
        .iter()
        .map(|&first| {
            let mut path = vec![hub];
            path.extend(walk_hull(tree, first, Some(hub), alive));
            let turns = spine_turns(tree, &path);
            Branch { double_turns: count_double_turns(&turns), path, turns }
        })
        .collect();
    TripleRakeStats {
        hub,
        short_paths: branches.iter().filter(|b| b.is_short()).count(),
        double_turns: branches.iter().map(|b| b.double_turns).sum(),
        branches,
    }
}

/// Follows hull vertices from `start` (having come from `from`) until the
/// hull path ends.
fn walk_hull(tree: &Tree, start: VertexId, from: Option<VertexId>, alive: &[bool]) -> Vec<VertexId> {
    let mut path = vec![start];
    let mut prev = from;
    let mut cur = start;
    loop {
        let next = tree.neighbors(cur).iter().copied().find(|&w| alive[w] && Some(w) != prev);
        match next {
            Some(w) => {
                path.push(w);
                prev = Some(cur);
                cur = w;
            }
            None => break,
        }
    }
    path
}

/// Turns at interior degree-three vertices of an oriented path.
pub(crate) fn spine_turns(tree: &Tree, path: &[VertexId]) -> Vec<Turn> {
    path.windows(3).filter(|w| tree.degree(w[1]) == 3).map(|w| turn_at(tree, w[0], w[1], w[2])).collect()
}

/// Left when the counterclockwise order around `at` is incoming, tooth,
/// outgoing (clockwise: incoming, outgoing, tooth).
pub(crate) fn turn_at(tree: &Tree, incoming: VertexId, at: VertexId, outgoing: VertexId) -> Turn {
    if tree.next_ccw(at, incoming) == outgoing {
        Turn::Right
    } else {
        Turn::Left
    }
}

/// Rake spine turns and double-turn count.
pub fn rake_turns(tree: &Tree) -> Result<(Vec<Turn>, usize), LayoutError> {
    match classify_tree(tree) {
        TreeClass::Rake(stats) => Ok((stats.turns, stats.double_turns)),
        other => Err(LayoutError::WrongClass { expected: "rake", found: other.name() }),
    }
}

/// `(short paths, double turns)` of a triple rake.
pub fn triple_rake_stats(tree: &Tree) -> Result<(usize, usize), LayoutError> {
    match classify_tree(tree) {
        TreeClass::TripleRake(stats) => Ok((stats.short_paths, stats.double_turns)),
        other => Err(LayoutError::WrongClass { expected: "triple rake", found: other.name() }),
    }
}
