use thiserror::Error;

use crate::verify::Violation;

/// Structural problems with an otherwise well-formed input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum TreeError {
    #[error("tree has no vertices")]
    Empty,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("cycle detected through edge {0}-{1}")]
    Cycle(usize, usize),
    #[error("graph is disconnected: vertex {0} is unreachable")]
    Disconnected(usize),
    #[error("rotation system is inconsistent at vertex {vertex}: {detail}")]
    Rotation { vertex: usize, detail: String },
    #[error("edge {0}-{1} has non-positive weight {2}")]
    NonPositiveWeight(usize, usize, f64),
    #[error("edge {0}-{1} has no weight")]
    MissingWeight(usize, usize),
    #[error("weight given for {0}-{1}, which is not an edge")]
    WeightOnNonEdge(usize, usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("label list has {found} entries for {expected} vertices")]
    LabelCount { expected: usize, found: usize },
}

/// Input text that could not be read as a tree description.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid JSON tree: {0}")]
    Json(String),
    #[error("non-positive edge weight {weight} at byte {pos}")]
    NonPositiveWeight { pos: usize, weight: f64 },
    #[error("invalid tree: {0}")]
    Tree(#[from] TreeError),
}

impl ParseError {
    /// True when the text parsed but described something that is not a tree.
    pub fn is_structural(&self) -> bool {
        matches!(self, ParseError::Tree(_))
    }
}

/// Errors raised by the layout pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LayoutError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("expected a {expected} tree, found {found}")]
    WrongClass { expected: &'static str, found: &'static str },
    #[error("slope gap {0} exceeds a quarter turn")]
    SlopeGap(String),
    #[error("slopes are identical; two distinct directions are required")]
    DegenerateSlopes,
    #[error("enumeration guard: {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("an arch needs at least one edge direction")]
    EmptyArch,
    #[error("drawings to morph between differ in {0}")]
    MorphMismatch(&'static str),
    #[error("radii must be positive and strictly increasing")]
    BadRadii,
    #[error("vertex at distance {dist} is not inside its target circle of radius {radius}")]
    OutsideCircle { dist: f64, radius: f64 },
    #[error("layout failed self-verification ({} violations, first: {})", .0.len(), .0.first().map(|v| v.to_string()).unwrap_or_default())]
    Verification(Vec<Violation>),
}
