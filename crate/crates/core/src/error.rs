//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("order {n} outside the supported range {min}..={max}")]
    UnsupportedOrder { n: usize, min: usize, max: usize },
    #[error("graph must be connected")]
    Disconnected,
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),
    #[error("invalid skew matrix: {0}")]
    InvalidMatrix(String),
    #[error("exhaustive search needs {needed} assignments, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("set family must be nonempty")]
    EmptySetFamily,
}

pub type Result<T> = std::result::Result<T, Error>;
