//! Tree generators: named shapes, random Prüfer trees, and exhaustive
//! enumeration of unlabeled trees.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::classify::Turn;
use crate::tree::{Tree, VertexId};

/// A caterpillar rake whose interior spine vertices turn as listed. Spine
/// vertices are `0..=turns.len()+1`; vertex 0 is the spine start.
pub fn caterpillar(turns: &[Turn]) -> Tree {
    let m = turns.len();
    let spine_len = m + 2;
    let n = spine_len + m + 4;
    let mut nb = vec![Vec::new(); n];
    let mut next_leaf = spine_len;
    let mut leaf = || {
        let l = next_leaf;
        next_leaf += 1;
        l
    };
    // Start: spine neighbor then its two leaves.
    let (a, b) = (leaf(), leaf());
    nb[0] = vec![1, a, b];
    nb[a] = vec![0];
    nb[b] = vec![0];
    for (i, turn) in turns.iter().enumerate() {
        let v = i + 1;
        let t = leaf();
        nb[t] = vec![v];
        nb[v] = match turn {
            Turn::Left => vec![v - 1, t, v + 1],
            Turn::Right => vec![v - 1, v + 1, t],
        };
    }
    let end = spine_len - 1;
    let (a, b) = (leaf(), leaf());
    nb[end] = vec![end - 1, a, b];
    nb[a] = vec![end];
    nb[b] = vec![end];
    Tree::new(nb).expect("caterpillar is a tree")
}

/// Turn sequence with exactly `k` double turns: `k + 1` lefts then
/// alternating.
pub fn turns_with_doubles(k: usize, extra_alternating: usize) -> Vec<Turn> {
    let mut turns = vec![Turn::Left; k + 1];
    let mut next = Turn::Right;
    for _ in 0..extra_alternating {
        turns.push(next);
        next = if next == Turn::Left { Turn::Right } else { Turn::Left };
    }
    turns
}

/// A triple rake with hub 0 whose three branches (counterclockwise) carry
/// the given turn sequences. An empty sequence gives a short path.
pub fn triple_rake(branches: [&[Turn]; 3]) -> Tree {
    let mut nb: Vec<Vec<VertexId>> = vec![Vec::new()];
    let add = |nb: &mut Vec<Vec<VertexId>>| {
        nb.push(Vec::new());
        nb.len() - 1
    };
    for turns in branches {
        let mut prev = 0;
        let mut cur = add(&mut nb);
        nb[0].push(cur);
        for turn in turns {
            let next = add(&mut nb);
            let tooth = add(&mut nb);
            nb[tooth] = vec![cur];
            nb[cur] = match turn {
                Turn::Left => vec![prev, tooth, next],
                Turn::Right => vec![prev, next, tooth],
            };
            prev = cur;
            cur = next;
        }
        let (a, b) = (add(&mut nb), add(&mut nb));
        nb[a] = vec![cur];
        nb[b] = vec![cur];
        nb[cur] = vec![prev, a, b];
    }
    Tree::new(nb).expect("triple rake is a tree")
}

/// Two adjacent vertices `0` and `1`, each with three extra leaves.
pub fn double_spider() -> Tree {
    Tree::from_edges(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)]).unwrap()
}

/// Root 0 with two leaf children followed by two three-leaf spiders,
/// counterclockwise. Rooted at 0 this embedding has five forks while the
/// best embedding of the same tree has four.
pub fn two_paths_two_spiders() -> Tree {
    Tree::from_edges(11, &[(0, 1), (0, 2), (0, 3), (0, 7), (3, 4), (3, 5), (3, 6), (7, 8), (7, 9), (7, 10)]).unwrap()
}

/// Decodes a Prüfer sequence over `0..seq.len()+2` in linear time.
pub fn from_prufer(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Tree::from_edges(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Uniformly random labeled tree on `n` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    match n {
        0 => panic!("a tree needs at least one vertex"),
        1 => Tree::new(vec![vec![]]).unwrap(),
        2 => Tree::path(2),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            from_prufer(&seq)
        }
    }
}

/// Same tree with every rotation shuffled.
pub fn shuffle_rotation<R: Rng + ?Sized>(tree: &Tree, rng: &mut R) -> Tree {
    let mut nb = tree.rotation().to_vec();
    for list in &mut nb {
        list.shuffle(rng);
    }
    tree.with_rotation(nb).unwrap()
}

/// Canonical string of a free tree, equal for isomorphic trees.
pub fn canonical_form(tree: &Tree) -> String {
    centers(tree).into_iter().map(|c| rooted_form(tree, c, usize::MAX)).min().unwrap()
}

fn rooted_form(tree: &Tree, v: VertexId, parent: VertexId) -> String {
    let mut parts: Vec<String> =
        tree.neighbors(v).iter().filter(|&&w| w != parent).map(|&w| rooted_form(tree, w, v)).collect();
    parts.sort();
    format!("({})", parts.concat())
}

fn centers(tree: &Tree) -> Vec<VertexId> {
    let n = tree.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<VertexId> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in tree.neighbors(v) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

/// Every unlabeled free tree on exactly `n` vertices, one representative each.
pub fn all_free_trees(n: usize) -> Vec<Tree> {
    assert!(n >= 1);
    let mut level: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new()];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for edges in &level {
            for v in 0..size - 1 {
                let mut e = edges.clone();
                e.push((v, size - 1));
                let t = Tree::from_edges(size, &e).unwrap();
                if seen.insert(canonical_form(&t)) {
                    next.push(e);
                }
            }
        }
        level = next;
    }
    level.into_iter().map(|e| Tree::from_edges(n, &e).unwrap()).collect()
}
