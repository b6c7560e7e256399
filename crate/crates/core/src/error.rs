use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polygon needs at least three distinct vertices")]
    TooFewVertices,
    #[error("polygon is not strictly convex (turn at vertex {0})")]
    NotConvex(usize),
    #[error("edges {0} and {1} are parallel")]
    ParallelEdges(usize, usize),
    #[error("non-finite coordinate in input")]
    NonFinite,
    #[error("line direction has zero length")]
    DegenerateLine,
    #[error("lines are parallel")]
    ParallelLines,
    #[error("scaling factor must be nonzero")]
    ZeroFactor,
    #[error("edge {0} compared with itself")]
    SameEdge(usize),
    #[error("unit compared with itself")]
    SameUnit,
    #[error("point does not lie in the boundary portion")]
    NotInPortion,
    #[error("point is not on the polygon boundary")]
    NotOnBoundary,
    #[error("edge {0} is not chasing edge {1}")]
    NotChasing(usize, usize),
    #[error("edge pairs are not in clockwise order at position {0}")]
    NotSorted(usize),
    #[error("vertex {0} is outside the open portion of the Z-point search")]
    VertexOutOfRange(usize),
    #[error("points are not in a common closed quadrant of the two lines")]
    QuadrantMismatch,
    #[error("parallelogram is not inscribed in the polygon")]
    NotInscribed,
    #[error("no candidate survived validation")]
    NoCandidates,
    #[error("polygon generation failed after {0} attempts")]
    GenerationFailed(usize),
    #[error("{0}")]
    InvalidSpec(String),
}

impl Error {
    /// Stable variant name, printed by the command line tool on input errors.
    pub fn name(&self) -> &'static str {
        match self {
            Error::TooFewVertices => "TooFewVertices",
            Error::NotConvex(_) => "NotConvex",
            Error::ParallelEdges(..) => "ParallelEdges",
            Error::NonFinite => "NonFinite",
            Error::DegenerateLine => "DegenerateLine",
            Error::ParallelLines => "ParallelLines",
            Error::ZeroFactor => "ZeroFactor",
            Error::SameEdge(_) => "SameEdge",
            Error::SameUnit => "SameUnit",
            Error::NotInPortion => "NotInPortion",
            Error::NotOnBoundary => "NotOnBoundary",
            Error::NotChasing(..) => "NotChasing",
            Error::NotSorted(_) => "NotSorted",
            Error::VertexOutOfRange(_) => "VertexOutOfRange",
            Error::QuadrantMismatch => "QuadrantMismatch",
            Error::NotInscribed => "NotInscribed",
            Error::NoCandidates => "NoCandidates",
            Error::GenerationFailed(_) => "GenerationFailed",
            Error::InvalidSpec(_) => "InvalidSpec",
        }
    }
}
