use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed slope `{0}`")]
    MalformedSlope(String),
    #[error("0/0 is not a slope")]
    ZeroSlope,
    #[error("malformed matrix `{0}` (expected `a,b;c,d`)")]
    MalformedMatrix(String),
    #[error("determinant is {0}, expected 1")]
    Determinant(String),
    #[error("{0} and {1} are not Farey neighbours")]
    NotAdjacent(String, String),
    #[error("quadratic irrationals over √{0} and √{1} cannot be compared")]
    MixedDiscriminant(String, String),
    #[error("boundary points must be pairwise distinct")]
    Degenerate,
    #[error("invalid quadratic irrational: {0}")]
    InvalidQuadratic(&'static str),
    #[error("expected a {expected} mapping class, found {found}")]
    WrongClassification {
        expected: &'static str,
        found: &'static str,
    },
    #[error("mapping class acts trivially on slopes; every slope is invariant")]
    TrivialAction,
    #[error("{0} is not a solution slope")]
    NotASolution(String),
    #[error("slopes {0} and {1} lie on different sides of the axis")]
    DifferentSides(String, String),
    #[error("{0} is not a fibred knot")]
    NotFibred(String),
    #[error("unknown knot `{0}` (expected trefoil, figure8 or doubled:<label>)")]
    UnknownKnot(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
