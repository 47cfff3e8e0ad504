//! The full pipeline: slopes, lengths, and self-verification.

use serde::Serialize;

use crate::classify::{classify_tree, TreeClass};
use crate::error::LayoutError;
use crate::lengths::{place, place_radial, Drawing, LengthStrategy};
use crate::optimize::{count_forks, optimal_resolution, Embedding};
use crate::slopes::{assign_slopes, SlopeMap};
use crate::tree::{Tree, VertexId};
use crate::turn::TurnAngle;
use crate::verify::{check_convex_faces, check_fork_spans, check_planar, check_resolution, measure_resolution};

/// How much of the output is re-checked before it is returned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verification {
    /// Convex faces, resolution, fork spans, and pairwise edge crossings.
    Full,
    /// Everything except the quadratic crossing test.
    Linear,
    /// Nothing.
    Skipped,
}

#[derive(Debug, Clone)]
pub struct LayoutOptions {
    pub mode: Embedding,
    pub lengths: LengthStrategy,
    /// Vertex placed at the origin; defaults to the fork-analysis root for
    /// general trees and to the tree's designated root otherwise.
    pub placement_root: Option<VertexId>,
    /// Custom circle radii for [`LengthStrategy::Radial`].
    pub radii: Option<Vec<f64>>,
    pub verify: Verification,
}

impl LayoutOptions {
    /// Uniform lengths with full verification.
    pub fn new(mode: Embedding) -> Self {
        LayoutOptions {
            mode,
            lengths: LengthStrategy::Uniform,
            placement_root: None,
            radii: None,
            verify: Verification::Full,
        }
    }

    pub fn lengths(mut self, lengths: LengthStrategy) -> Self {
        self.lengths = lengths;
        self
    }

    pub fn placement_root(mut self, root: VertexId) -> Self {
        self.placement_root = Some(root);
        self
    }

    pub fn radii(mut self, radii: Vec<f64>) -> Self {
        self.radii = Some(radii);
        self
    }

    pub fn verify(mut self, verify: Verification) -> Self {
        self.verify = verify;
        self
    }
}

/// Summary of a drawing: what was drawn and how well.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LayoutReport {
    pub class: &'static str,
    pub embedding: Embedding,
    /// Smallest angle between consecutive edges at any vertex.
    pub resolution: TurnAngle,
    /// Forks of the drawn embedding (general trees).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forks: Option<usize>,
    /// Total excess, the fewest forks of any embedding (general trees).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub excess: Option<usize>,
    /// Double turns of the drawn rake or triple rake.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub double_turns: Option<usize>,
    /// Branches of a triple rake without turns.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub short_paths: Option<usize>,
    pub strategy: LengthStrategy,
    pub verified: Verification,
}

impl LayoutReport {
    /// Report for a drawing placed directly from `slopes`, without the
    /// pipeline's bookkeeping.
    pub fn measured(tree: &Tree, slopes: &SlopeMap, strategy: LengthStrategy) -> Self {
        LayoutReport {
            class: classify_tree(tree).name(),
            embedding: Embedding::Fixed,
            resolution: measure_resolution(tree, slopes),
            forks: None,
            excess: None,
            double_turns: None,
            short_paths: None,
            strategy,
            verified: Verification::Skipped,
        }
    }
}

/// Draws `tree` with convex faces and optimal angular resolution, places
/// it with the chosen lengths, and re-checks the result.
pub fn layout(tree: &Tree, opts: &LayoutOptions) -> Result<Drawing, LayoutError> {
    let assignment = assign_slopes(tree, opts.mode)?;
    let drawn = &assignment.tree;
    let slopes = &assignment.slopes;
    let placement_root = opts.placement_root.or(assignment.root).or(tree.root()).unwrap_or(slopes.root());
    let mut drawing = match opts.lengths {
        LengthStrategy::Radial => place_radial(slopes, drawn, placement_root, opts.radii.as_deref())?,
        other => place(slopes, drawn, other, placement_root)?,
    };

    let mut report = LayoutReport {
        embedding: opts.mode,
        resolution: assignment.resolution,
        verified: opts.verify,
        ..drawing.report.clone()
    };
    report.class = assignment.class.name();
    match &assignment.class {
        TreeClass::Rake(stats) => report.double_turns = Some(stats.double_turns),
        TreeClass::TripleRake(stats) => {
            report.double_turns = Some(stats.double_turns);
            report.short_paths = Some(stats.short_paths);
        }
        TreeClass::General => {
            let forks = count_forks(drawn, assignment.root.expect("general trees have a root"));
            report.forks = Some(forks.total_forks);
            report.excess = Some(forks.total_excess);
        }
        TreeClass::Path => {}
    }
    drawing.report = report;

    if opts.verify != Verification::Skipped {
        let expected = optimal_resolution(tree, opts.mode);
        let mut violations = check_convex_faces(drawn, slopes);
        violations.extend(check_resolution(drawn, slopes, expected));
        if let Some(root) = assignment.root {
            violations.extend(check_fork_spans(drawn, slopes, root, assignment.resolution));
        }
        if opts.verify == Verification::Full {
            violations.extend(check_planar(drawn, &drawing));
        }
        if !violations.is_empty() {
            return Err(LayoutError::Verification(violations));
        }
    }
    Ok(drawing)
}
