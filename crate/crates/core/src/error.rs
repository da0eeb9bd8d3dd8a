use thiserror::Error;

use crate::dynamics::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid vertex set: vertex {vertex} is out of range for a graph with {vertex_count} vertices")]
    InvalidSet { vertex: usize, vertex_count: usize },

    #[error(
        "invalid lions: lion {lion} sits on vertex {vertex}, graph has {vertex_count} vertices"
    )]
    InvalidLions {
        lion: usize,
        vertex: usize,
        vertex_count: usize,
    },

    #[error(
        "invalid move at step {step}: {}",
        crate::dynamics::describe(violations)
    )]
    InvalidMove {
        step: usize,
        violations: Vec<Violation>,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no walk of length {requested}: shortest path has length {shortest}")]
    InfeasibleTooShort { requested: usize, shortest: usize },

    #[error("no walk of length {requested}: walks between these vertices have the wrong parity or need length >= {shortest_with_parity:?}")]
    InfeasibleParity {
        requested: usize,
        shortest_with_parity: Option<usize>,
    },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
