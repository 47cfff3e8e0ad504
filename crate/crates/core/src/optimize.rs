//! Fork counting, excess, minimum-fork embeddings, and optimal resolution.

use num_rational::Ratio;
use serde::Serialize;

use crate::classify::{classify_subtrees, classify_tree, SubtreeClass, SubtreeClasses, TreeClass};
use crate::tree::{choose_root, Rooted, Tree, VertexId};
use crate::turn::{Frac, TurnAngle};

/// Whether the rotation system of the input is binding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Embedding {
    /// Respect the given rotation system.
    Fixed,
    /// Choose the rotation system that maximizes the resolution.
    Free,
}

#[derive(Debug, Clone)]
pub struct ForkReport {
    pub root: VertexId,
    pub classes: SubtreeClasses,
    /// Forks whose children hang from each vertex.
    pub forks_at: Vec<usize>,
    pub total_forks: usize,
    /// Forks inside the subtree below each non-root vertex (its parent edge
    /// included); zero for paths, one for rakes.
    pub subtree_forks: Vec<usize>,
    pub excess_at: Vec<usize>,
    pub total_excess: usize,
}

/// Counts forks in a child sequence. A fork runs from a path child to the
/// next path child with only rakes in between; `cyclic` reads the sequence
/// as a ring, where a lone path among rakes forks with itself.
pub fn forks_in_sequence(seq: &[SubtreeClass], cyclic: bool) -> usize {
    if cyclic {
        match seq.iter().position(|&c| c == SubtreeClass::Other) {
            Some(i) => {
                let rotated: Vec<_> = seq[i..].iter().chain(&seq[..i]).copied().collect();
                forks_in_sequence(&rotated, false)
            }
            None => seq.iter().filter(|&&c| c == SubtreeClass::Path).count(),
        }
    } else {
        let mut last_path = false;
        let mut forks = 0;
        for &c in seq {
            match c {
                SubtreeClass::Path => {
                    if last_path {
                        forks += 1;
                    }
                    last_path = true;
                }
                SubtreeClass::Other => last_path = false,
                SubtreeClass::Rake => {}
            }
        }
        forks
    }
}

fn child_classes(rooted: &Rooted<'_>, classes: &SubtreeClasses, v: VertexId) -> Vec<SubtreeClass> {
    rooted.children(v).map(|w| classes.of(w)).collect()
}

/// Fork and excess bookkeeping for `tree` rooted at `root` under its
/// current rotation system.
pub fn count_forks(tree: &Tree, root: VertexId) -> ForkReport {
    let classes = classify_subtrees(tree, root);
    let rooted = tree.rooted(root);
    let n = tree.len();
    let mut forks_at = vec![0; n];
    let mut excess_at = vec![0; n];
    let mut subtree_forks = vec![0; n];
    for v in rooted.postorder() {
        let seq = child_classes(&rooted, &classes, v);
        let is_root = v == root;
        forks_at[v] = forks_in_sequence(&seq, is_root);
        let paths = seq.iter().filter(|&&c| c == SubtreeClass::Path).count();
        let others = seq.iter().filter(|&&c| c == SubtreeClass::Other).count();
        excess_at[v] = if is_root { paths.saturating_sub(others) } else { paths.saturating_sub(others + 1) };
        if !is_root {
            subtree_forks[v] = forks_at[v] + rooted.children(v).map(|w| subtree_forks[w]).sum::<usize>();
        }
    }
    ForkReport {
        root,
        total_forks: forks_at.iter().sum(),
        total_excess: excess_at.iter().sum(),
        classes,
        forks_at,
        subtree_forks,
        excess_at,
    }
}

/// Total excess `E(T)` at `root`.
pub fn total_excess(tree: &Tree, root: VertexId) -> usize {
    count_forks(tree, root).total_excess
}

/// Child order that realizes the excess bound: paths and non-rake trees
/// alternate while both last, then leftover trees, then leftover paths,
/// then every rake.
fn min_fork_order(children: &[(VertexId, SubtreeClass)]) -> Vec<VertexId> {
    let pick =
        |c: SubtreeClass| -> Vec<VertexId> { children.iter().filter(|(_, k)| *k == c).map(|(w, _)| *w).collect() };
    let paths = pick(SubtreeClass::Path);
    let others = pick(SubtreeClass::Other);
    let rakes = pick(SubtreeClass::Rake);
    let mut order = Vec::with_capacity(children.len());
    let pairs = paths.len().min(others.len());
    for i in 0..pairs {
        order.push(paths[i]);
        order.push(others[i]);
    }
    order.extend(&others[pairs..]);
    order.extend(&paths[pairs..]);
    order.extend(rakes);
    order
}

/// Re-embeds `tree` so that, rooted at `root`, it has exactly `E(T)` forks.
pub fn embed_min_forks(tree: &Tree, root: VertexId) -> Tree {
    let classes = classify_subtrees(tree, root);
    let rooted = tree.rooted(root);
    let mut rotation = vec![Vec::new(); tree.len()];
    for &v in rooted.preorder() {
        let children: Vec<_> = rooted.children(v).map(|w| (w, classes.of(w))).collect();
        let mut list = Vec::with_capacity(tree.degree(v));
        if let Some(p) = rooted.parent(v) {
            list.push(p);
        }
        list.extend(min_fork_order(&children));
        rotation[v] = list;
    }
    tree.with_rotation(rotation).expect("same neighbor sets")
}

/// Embedded rake with `k` double turns: `pi (1/2 + 1/(6+2k))`.
pub fn rake_resolution(double_turns: usize) -> TurnAngle {
    let k = double_turns as i64;
    TurnAngle::from_frac(Ratio::new(1, 4) + Ratio::new(1, 12 + 4 * k))
}

/// Embedded triple rake: `pi (1/2 + 1/(2(9 - 2s + 2d)))`; the free case is `d = 0`.
pub fn triple_rake_resolution(short_paths: usize, double_turns: usize) -> TurnAngle {
    let denom = 9 - 2 * short_paths as i64 + 2 * double_turns as i64;
    TurnAngle::from_frac(Ratio::new(1, 4) + Ratio::new(1, 4 * denom))
}

/// Turning slack `epsilon` of a rake or triple rake in turns:
/// resolution = 1/4 + epsilon.
pub(crate) fn epsilon_of(resolution: TurnAngle) -> Frac {
    resolution.frac() - Ratio::new(1, 4)
}

/// Optimal angular resolution over convex-face drawings.
pub fn optimal_resolution(tree: &Tree, mode: Embedding) -> TurnAngle {
    match classify_tree(tree) {
        TreeClass::Path => TurnAngle::HALF,
        TreeClass::Rake(stats) => match mode {
            Embedding::Free => TurnAngle::new(1, 3),
            Embedding::Fixed => rake_resolution(stats.double_turns),
        },
        TreeClass::TripleRake(stats) => match mode {
            Embedding::Free => triple_rake_resolution(stats.short_paths, 0),
            Embedding::Fixed => triple_rake_resolution(stats.short_paths, stats.double_turns),
        },
        TreeClass::General => {
            let root = choose_root(tree).expect("general tree");
            let report = count_forks(tree, root);
            let forks = match mode {
                Embedding::Fixed => report.total_forks,
                Embedding::Free => report.total_excess,
            };
            TurnAngle::new(1, forks as i64)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use SubtreeClass::*;

    #[test]
    fn sequence_forks() {
        assert_eq!(forks_in_sequence(&[Path, Path, Path, Path], true), 4);
        assert_eq!(forks_in_sequence(&[Path, Path, Path, Path], false), 3);
        assert_eq!(forks_in_sequence(&[Path, Rake, Path], false), 1);
        assert_eq!(forks_in_sequence(&[Path, Rake, Rake], true), 1);
        assert_eq!(forks_in_sequence(&[Path, Rake, Rake], false), 0);
        assert_eq!(forks_in_sequence(&[Path, Other, Path, Other], true), 0);
        assert_eq!(forks_in_sequence(&[Path, Path, Other, Other], true), 1);
        assert_eq!(forks_in_sequence(&[Rake, Rake, Rake], true), 0);
    }

    #[test]
    fn star_forks_and_excess() {
        let r = count_forks(&Tree::star(4), 0);
        assert_eq!(r.forks_at[0], 4);
        assert_eq!(r.total_forks, 4);
        assert_eq!(r.total_excess, 4);
    }

    #[test]
    fn double_spider_forks() {
        let t = gen::double_spider();
        let r = count_forks(&t, 0);
        assert_eq!(r.forks_at[0], 2);
        assert_eq!(r.forks_at[1], 2);
        assert_eq!(r.total_forks, 4);
        assert_eq!(r.excess_at[0], 2);
        assert_eq!(r.excess_at[1], 2);
        assert_eq!(r.total_excess, 4);
        assert_eq!(r.subtree_forks[1], 2);
    }

    #[test]
    fn fork_spans_rake() {
        // Root 0 with children: leaf 1, caterpillar rake via 2, leaf 3, leaf 4.
        // Rake below 2: 2 -> 5 with teeth: 5 has leaf 6 and 7; 7 has leaves 8, 9.
        let t =
            Tree::from_edges(10, &[(0, 1), (0, 2), (0, 3), (0, 4), (2, 5), (5, 6), (5, 7), (7, 8), (7, 9)]).unwrap();
        let r = count_forks(&t, 0);
        assert_eq!(r.classes.of(2), Rake);
        // Cyclic [P, R, P, P]: P-R-P, P-P, P-P (wrap).
        assert_eq!(r.forks_at[0], 3);
        let seq = [Path, Rake, Path];
        assert_eq!(forks_in_sequence(&seq, false), 1);
        assert_eq!(r.subtree_forks[2], 1);
    }

    #[test]
    fn alternation_beats_grouping() {
        let t = gen::two_paths_two_spiders();
        let r = count_forks(&t, 0);
        assert_eq!(r.total_forks, 5);
        assert_eq!(r.total_excess, 4);
        let better = embed_min_forks(&t, 0);
        assert_eq!(count_forks(&better, 0).total_forks, 4);
        assert_eq!(count_forks(&better, 0).forks_at[0], 0);
    }

    #[test]
    fn resolutions() {
        assert_eq!(rake_resolution(3), TurnAngle::new(7, 24));
        assert_eq!(rake_resolution(0), TurnAngle::new(1, 3));
        assert_eq!(triple_rake_resolution(3, 0), TurnAngle::new(1, 3));
        assert_eq!(triple_rake_resolution(0, 0), TurnAngle::new(5, 18));
        assert_eq!(triple_rake_resolution(1, 1), TurnAngle::new(5, 18));
        let t = gen::two_paths_two_spiders();
        assert_eq!(optimal_resolution(&t, Embedding::Fixed), TurnAngle::new(1, 5));
        assert_eq!(optimal_resolution(&t, Embedding::Free), TurnAngle::new(1, 4));
        assert_eq!(optimal_resolution(&Tree::path(5), Embedding::Free), TurnAngle::HALF);
    }

    #[test]
    fn monotone_formulas() {
        for k in 0..20 {
            assert!(rake_resolution(k + 1) < rake_resolution(k));
        }
        for s in 0..3 {
            for d in 0..10 {
                assert!(triple_rake_resolution(s, d + 1) < triple_rake_resolution(s, d));
                assert!(triple_rake_resolution(s + 1, d) > triple_rake_resolution(s, d));
            }
        }
    }
}
