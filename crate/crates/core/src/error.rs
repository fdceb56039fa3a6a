use thiserror::Error;

use crate::geometry::Transmitter;

/// Reasons a vertex ring is rejected at ingestion.
///
/// Indices refer to positions in the ring exactly as it was supplied.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("malformed polygon document: {0}")]
    Malformed(String),
    #[error("a polygon needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("coordinate {value} of vertex {index} exceeds the allowed magnitude")]
    OutOfRange { index: usize, value: i64 },
    #[error("edge leaving vertex {index} is not axis-parallel")]
    NonOrthogonal { index: usize },
    #[error("edge leaving vertex {index} has zero length")]
    DegenerateEdge { index: usize },
    #[error("vertex {index} repeats an earlier vertex")]
    DuplicateVertex { index: usize },
    #[error("boundary intersects itself at the edge leaving vertex {index}")]
    SelfIntersecting { index: usize },
    #[error("polygon is not x-monotone: a vertical line near vertex {index} meets it twice")]
    NotMonotone { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    #[error("invalid slab profile: {0}")]
    InvalidProfile(String),
    #[error("{0} is not a breakpoint of the profile")]
    NotABreakpoint(i64),
    #[error("regions belong to different grids")]
    GridMismatch,
    #[error("grid has no cut for the endpoints of {0}")]
    MissingCut(Transmitter),
    #[error("ordinate {0}/2 lies on a grid line")]
    OnGridLine(i64),
    #[error("segment {0} is not contained in the polygon")]
    OutsidePolygon(Transmitter),
    #[error("candidate set is empty")]
    EmptyCandidates,
    #[error("no {0} candidate satisfies the finder's condition")]
    NoCandidate(&'static str),
    #[error("no cover with at most {0} transmitters")]
    NoSolutionWithinBudget(usize),
    #[error("transmitter power must be 0, 1 or 2, got {0}")]
    InvalidPower(u32),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid solution document: {0}")]
    Solution(String),
}

pub type Result<T> = std::result::Result<T, Error>;
