use thiserror::Error;

use crate::complex::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("matrix shapes do not compose: {0}")]
    ShapeMismatch(String),

    #[error("boundary maps do not compose to zero")]
    NotAChainComplex,

    #[error("vector is not a cycle of the target presentation")]
    NotACycle,

    #[error("chain map does not preserve {0}")]
    ChainMapViolation(&'static str),

    #[error("column {column} has a nonzero entry in row {row}, which does not precede it")]
    FiltrationOrder { column: usize, row: usize },

    #[error("simplex {0:?} repeats a vertex")]
    DuplicateVertex(Vec<VertexId>),

    #[error("vertex {0} is not part of the complex")]
    UnknownVertex(VertexId),

    #[error("vertex {0} has no value")]
    MissingValue(VertexId),

    #[error("vertex {0} has a non-finite value")]
    NonFiniteValue(VertexId),

    #[error("the complex is empty")]
    EmptyComplex,

    #[error("critical values {0} and {1} are too close to separate by a regular value")]
    DegenerateGrid(String, String),

    #[error("filtration stage {stage} is not a subcomplex of the next stage: missing simplex {simplex:?}")]
    NotSubcomplex { stage: usize, simplex: Vec<VertexId> },

    #[error("filtration times must be strictly increasing and match the stage count")]
    BadFiltrationTimes,

    #[error("interval [{0}, {1}] is reversed")]
    ReversedInterval(String, String),

    #[error("level {0} is not an endpoint of the interlevel set")]
    NotAnEndpoint(String),

    #[error("malformed cell {cell}: {reason}")]
    MalformedCell { cell: String, reason: String },

    #[error("formula {formula} gives {value} for degree {degree} at ({birth}, {death}): the numbers are not realizable by a tame map")]
    Unrealizable {
        formula: &'static str,
        degree: usize,
        birth: usize,
        death: usize,
        value: i64,
    },
}
