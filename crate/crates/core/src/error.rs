use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate edge: both endpoints coincide")]
    DegenerateEdge,
    #[error("query point coincides with an edge endpoint")]
    EndpointQuery,
    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },
    #[error("self-loop at vertex {index}")]
    SelfLoop { index: usize },
    #[error("vertex index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("duplicate edge ({a}, {b})")]
    DuplicateEdge { a: usize, b: usize },
    #[error("negative edge weight on edge ({a}, {b})")]
    NegativeWeight { a: usize, b: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("bad formula: {0}")]
    BadFormula(String),
    #[error("dilation needs at least two vertices")]
    TooFewVertices,
    #[error("dilation of a vertex with itself is undefined")]
    SamePair,
    #[error("{n} points exceed the limit of {limit}")]
    TooManyPoints { n: usize, limit: usize },
    #[error("input of size {size} exceeds the brute-force limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("validation error at {field}: {message}")]
    Validation { field: String, message: String },
    #[error("formula shape error: {0}")]
    Shape(String),
}
