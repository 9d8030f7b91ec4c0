use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} appears in more than one part")]
    OverlappingParts(usize),
    #[error("vertex {0} is not covered")]
    Uncovered(usize),
    #[error("vertices {0} and {1} share a part but are not adjacent")]
    NotAClique(usize, usize),
    #[error("graph is not chordal")]
    NotChordal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("invalid decimal coordinate {0:?}")]
    BadDecimal(String),
    #[error("coordinate {0:?} has more than 6 fractional digits")]
    TooPrecise(String),
    #[error("coordinate {0:?} is out of range")]
    OutOfRange(String),
    #[error("degenerate rectangle: x_lo {x_lo} is not below x_hi {x_hi}")]
    DegenerateRect { x_lo: i64, x_hi: i64 },
    #[error("point {0} lies on a grid boundary line")]
    OnGridBoundary(usize),
    #[error("rectangles {0} and {1} do not intersect")]
    NotPairwiseIntersecting(usize, usize),
    #[error("no rectangles given")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance of size {n} exceeds the oracle limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("cover has length {0}, expected at most 1")]
    LengthTooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
