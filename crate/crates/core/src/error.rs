use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is not injective (rank {rank} < {cols} columns)")]
    NotInjective { rank: usize, cols: usize },
    #[error("matrix is not surjective (rank {rank} < {rows} rows)")]
    NotSurjective { rank: usize, rows: usize },
    #[error("chain condition fails: {0}")]
    NotChainMap(String),
    #[error("not a quasi-isomorphism: {0}")]
    NotQuasiIso(String),
    #[error("not a chain homotopy: {0}")]
    InvalidHomotopy(String),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("composition undefined: {0}")]
    Undefined(String),
    #[error("group is not abelian: {0}")]
    NotAbelian(String),
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("action law fails: {0}")]
    ActionLaw(String),
    #[error("lines {0} and {1} are orthogonal")]
    OrthogonalPair(usize, usize),
    #[error("horn has no filler: {0}")]
    NoFiller(String),
    #[error("incompatible boundary: {0}")]
    Incompatible(String),
    #[error("not a simplicial map: {0}")]
    NotSimplicial(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("witness verification failed: {0}")]
    WitnessFailed(String),
}
