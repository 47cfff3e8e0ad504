//! Trees with a rotation system.
//!
//! Each vertex stores its neighbors in counterclockwise order. That order is
//! the plane embedding; reordering it changes the embedding but not the
//! abstract tree.

use std::collections::{BTreeMap, VecDeque};

use crate::classify::{classify_tree, TreeClass};
use crate::error::{LayoutError, TreeError};

pub type VertexId = usize;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq)]
pub struct Tree {
    neighbors: Vec<Vec<VertexId>>,
    root: Option<VertexId>,
    weights: Option<BTreeMap<(VertexId, VertexId), f64>>,
    labels: Option<Vec<String>>,
}

fn edge_key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Tree {
    /// Builds a tree from counterclockwise neighbor lists, validating that
    /// the lists describe a connected acyclic graph consistently.
    pub fn new(neighbors: Vec<Vec<VertexId>>) -> Result<Self, TreeError> {
        validate(&neighbors)?;
        Ok(Tree { neighbors, root: None, weights: None, labels: None })
    }

    /// Builds a tree on `n` vertices; each vertex's neighbor order follows
    /// the order in which its edges appear.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(TreeError::VertexOutOfRange(w));
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        Tree::new(neighbors)
    }

    /// A path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(n, &edges).expect("a path is a tree")
    }

    /// A star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Tree::from_edges(leaves + 1, &edges).expect("a star is a tree")
    }

    pub fn with_root(mut self, root: VertexId) -> Result<Self, TreeError> {
        if root >= self.len() {
            return Err(TreeError::VertexOutOfRange(root));
        }
        self.root = Some(root);
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, TreeError> {
        if labels.len() != self.len() {
            return Err(TreeError::LabelCount { expected: self.len(), found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_weights(
        mut self,
        weights: impl IntoIterator<Item = ((VertexId, VertexId), f64)>,
    ) -> Result<Self, TreeError> {
        let mut map = BTreeMap::new();
        for ((u, v), w) in weights {
            if u >= self.len() || v >= self.len() || !self.neighbors[u].contains(&v) {
                return Err(TreeError::WeightOnNonEdge(u, v));
            }
            if !w.is_finite() || w <= 0.0 {
                return Err(TreeError::NonPositiveWeight(u, v, w));
            }
            map.insert(edge_key(u, v), w);
        }
        self.weights = Some(map);
        Ok(self)
    }

    /// Same tree with a different rotation system. The new lists must hold
    /// the same neighbor sets.
    pub fn with_rotation(&self, neighbors: Vec<Vec<VertexId>>) -> Result<Self, TreeError> {
        if neighbors.len() != self.len() {
            return Err(TreeError::Rotation {
                vertex: neighbors.len().min(self.len()),
                detail: "vertex count changed".into(),
            });
        }
        for (v, (old, new)) in self.neighbors.iter().zip(&neighbors).enumerate() {
            let mut a = old.clone();
            let mut b = new.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Err(TreeError::Rotation { vertex: v, detail: "neighbor set differs from the tree".into() });
            }
        }
        Ok(Tree { neighbors, root: self.root, weights: self.weights.clone(), labels: self.labels.clone() })
    }

    pub fn len(&self) -> usize {
        self.neighbors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.neighbors.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.len() - 1
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[v]
    }

    pub fn rotation(&self) -> &[Vec<VertexId>] {
        &self.neighbors
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn root(&self) -> Option<VertexId> {
        self.root
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn weights(&self) -> Option<&BTreeMap<(VertexId, VertexId), f64>> {
        self.weights.as_ref()
    }

    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<f64> {
        self.weights.as_ref()?.get(&edge_key(u, v)).copied()
    }

    /// Position of `w` in the rotation at `v`.
    pub fn index_of(&self, v: VertexId, w: VertexId) -> Option<usize> {
        self.neighbors[v].iter().position(|&x| x == w)
    }

    /// Neighbor following `w` counterclockwise around `v`.
    pub fn next_ccw(&self, v: VertexId, w: VertexId) -> VertexId {
        let nb = &self.neighbors[v];
        let i = self.index_of(v, w).expect("not a neighbor");
        nb[(i + 1) % nb.len()]
    }

    /// Neighbor preceding `w` counterclockwise around `v`.
    pub fn prev_ccw(&self, v: VertexId, w: VertexId) -> VertexId {
        let nb = &self.neighbors[v];
        let i = self.index_of(v, w).expect("not a neighbor");
        nb[(i + nb.len() - 1) % nb.len()]
    }

    pub fn leaves(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.len()).filter(|&v| self.degree(v) <= 1)
    }

    /// Undirected edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.neighbors.iter().enumerate().flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn rooted(&self, root: VertexId) -> Rooted<'_> {
        Rooted::new(self, root)
    }
}

fn validate(neighbors: &[Vec<VertexId>]) -> Result<(), TreeError> {
    let n = neighbors.len();
    if n == 0 {
        return Err(TreeError::Empty);
    }
    let mut half_edges = 0usize;
    for (v, nb) in neighbors.iter().enumerate() {
        for &w in nb {
            if w >= n {
                return Err(TreeError::VertexOutOfRange(w));
            }
            if w == v {
                return Err(TreeError::SelfLoop(v));
            }
        }
        half_edges += nb.len();
    }
    // Duplicate and symmetric checks via sorted copies keep this O(m log d).
    let mut sorted: Vec<Vec<VertexId>> = neighbors.to_vec();
    for (v, nb) in sorted.iter_mut().enumerate() {
        nb.sort_unstable();
        if let Some(w) = nb.windows(2).find(|p| p[0] == p[1]) {
            return Err(TreeError::DuplicateEdge(v, w[0]));
        }
    }
    for (v, nb) in sorted.iter().enumerate() {
        for &w in nb {
            if sorted[w].binary_search(&v).is_err() {
                return Err(TreeError::Rotation {
                    vertex: w,
                    detail: format!("{v} lists {w} as a neighbor but not vice versa"),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut parent = vec![NONE; n];
    while let Some(v) = queue.pop_front() {
        for &w in &neighbors[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            } else if parent[v] != w {
                return Err(TreeError::Cycle(v, w));
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        // Another component may hold a cycle, which is the better diagnosis.
        return Err(first_cycle(neighbors).unwrap_or(TreeError::Disconnected(v)));
    }
    debug_assert_eq!(half_edges / 2, n - 1);
    Ok(())
}

fn first_cycle(neighbors: &[Vec<VertexId>]) -> Option<TreeError> {
    let n = neighbors.len();
    let mut seen = vec![false; n];
    let mut parent = vec![NONE; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    return Some(TreeError::Cycle(v, w));
                }
            }
        }
    }
    None
}

/// A tree viewed from a root. Children of a non-root vertex are its
/// neighbors read counterclockwise starting just after the parent; the
/// root's children are its full neighbor list (a cyclic sequence).
#[derive(Debug, Clone)]
pub struct Rooted<'a> {
    tree: &'a Tree,
    root: VertexId,
    parent: Vec<VertexId>,
    parent_pos: Vec<usize>,
    preorder: Vec<VertexId>,
    depth: Vec<usize>,
}

impl<'a> Rooted<'a> {
    pub fn new(tree: &'a Tree, root: VertexId) -> Self {
        let n = tree.len();
        let mut parent = vec![NONE; n];
        let mut parent_pos = vec![0; n];
        let mut depth = vec![0; n];
        let mut preorder = Vec::with_capacity(n);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            preorder.push(v);
            let nb = tree.neighbors(v);
            let start = if v == root { 0 } else { parent_pos[v] + 1 };
            let kids = if v == root { nb.len() } else { nb.len() - 1 };
            // Push in reverse so that the first child is visited first.
            for i in (0..kids).rev() {
                let w = nb[(start + i) % nb.len()];
                parent[w] = v;
                depth[w] = depth[v] + 1;
                parent_pos[w] = tree.neighbors(w).iter().position(|&x| x == v).unwrap();
                stack.push(w);
            }
        }
        Rooted { tree, root, parent, parent_pos, preorder, depth }
    }

    pub fn tree(&self) -> &'a Tree {
        self.tree
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        (v != self.root).then(|| self.parent[v])
    }

    pub fn depth(&self, v: VertexId) -> usize {
        self.depth[v]
    }

    pub fn preorder(&self) -> &[VertexId] {
        &self.preorder
    }

    /// Vertices with every child before its parent.
    pub fn postorder(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.preorder.iter().rev().copied()
    }

    pub fn child_count(&self, v: VertexId) -> usize {
        let d = self.tree.degree(v);
        if v == self.root {
            d
        } else {
            d - 1
        }
    }

    /// Children in counterclockwise order after the parent.
    pub fn children(&self, v: VertexId) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        let nb = self.tree.neighbors(v);
        let (start, count) = if v == self.root { (0, nb.len()) } else { (self.parent_pos[v] + 1, nb.len() - 1) };
        (0..count).map(move |i| nb[(start + i) % nb.len()])
    }

    /// Number of vertices in the subtree hanging from each vertex.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1; self.tree.len()];
        for v in self.postorder() {
            if let Some(p) = self.parent(v) {
                size[p] += size[v];
            }
        }
        size
    }
}

/// The minimal subtree spanning all degree-three vertices, obtained by
/// repeatedly deleting leaves that are not degree three in the full tree.
/// Returns membership flags and degrees within the hull.
pub fn degree_three_hull(tree: &Tree) -> (Vec<bool>, Vec<usize>) {
    let n = tree.len();
    let keep = |v: usize| tree.degree(v) == 3;
    let mut deg: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] <= 1 && !keep(v)).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in tree.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 && !keep(w) {
                    queue.push_back(w);
                }
            }
        }
    }
    let hull_deg =
        (0..n).map(|v| if alive[v] { tree.neighbors(v).iter().filter(|&&w| alive[w]).count() } else { 0 }).collect();
    (alive, hull_deg)
}

/// Root used by the general slope assignment: the smallest vertex of degree
/// at least four, or failing that the smallest vertex of degree three in the
/// degree-three hull.
pub fn choose_root(tree: &Tree) -> Result<VertexId, LayoutError> {
    let class = classify_tree(tree);
    if !matches!(class, TreeClass::General) {
        return Err(LayoutError::WrongClass { expected: "general", found: class.name() });
    }
    if let Some(v) = (0..tree.len()).find(|&v| tree.degree(v) >= 4) {
        return Ok(v);
    }
    let (_, hull_deg) = degree_three_hull(tree);
    Ok((0..tree.len()).find(|&v| hull_deg[v] == 3).expect("a general tree of max degree three has a branching hull"))
}
