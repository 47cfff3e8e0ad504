//! Tree drawings with convex faces and optimal angular resolution.
//!
//! A drawing is built in two independent stages: first every edge gets an
//! exact direction (a [`SlopeMap`]), chosen so that the path between any
//! two consecutive leaves is a convex arch and the smallest angle at any
//! vertex is as large as possible; then edge lengths are set by one of
//! several strategies. Convex faces make the drawing planar for every
//! choice of positive lengths.
//!
//! ```
//! use convex_tree::{layout, Embedding, LayoutOptions, TurnAngle};
//!
//! let tree = convex_tree::parse_newick("(A,B,C,D)R;").unwrap();
//! let drawing = layout(&tree, &LayoutOptions::new(Embedding::Free)).unwrap();
//! assert_eq!(drawing.report.resolution, TurnAngle::new(1, 4));
//! ```

pub mod classify;
pub mod error;
pub mod gen;
pub mod json;
pub mod layout;
pub mod lengths;
pub mod newick;
pub mod optimize;
pub mod render;
pub mod slopes;
pub mod tree;
pub mod turn;
pub mod verify;

pub use classify::{
    classify_subtrees, classify_tree, rake_turns, triple_rake_stats, SubtreeClass, SubtreeClasses, TreeClass, Turn,
};
pub use error::{LayoutError, ParseError, TreeError};
pub use json::{emit_json, parse_json};
pub use layout::{layout, LayoutOptions, LayoutReport, Verification};
pub use lengths::{morph, place, place_radial, Drawing, LengthStrategy};
pub use newick::{emit_newick, parse_newick};
pub use optimize::{count_forks, embed_min_forks, optimal_resolution, Embedding, ForkReport};
pub use render::{drawing_json, report_line, to_svg, RenderOptions};
pub use slopes::{assign_slopes, SlopeMap};
pub use tree::{choose_root, Tree, VertexId};
pub use turn::{Frac, TurnAngle};
pub use verify::{
    brute_force_min_forks, check_convex_faces, check_planar, is_convex_arch, measure_resolution, Violation,
    ViolationKind,
};
