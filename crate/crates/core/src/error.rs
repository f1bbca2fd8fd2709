use std::io;

use thiserror::Error;

/// Errors produced by the optimizers, the benchmark suite and the harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("evaluation budget exhausted: requested {requested}, remaining {remaining}")]
    BudgetExhausted { requested: u64, remaining: u64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid search space: {0}")]
    InvalidSearchSpace(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("objective value is not finite: {0}")]
    NonFiniteObjective(f64),

    #[error("neighbor partner must differ from the source (index {0})")]
    SameSourceIndex(usize),

    #[error("empty input")]
    EmptyInput,

    #[error("population size {0} is odd; the hybrid needs an even population")]
    OddPopulation(usize),

    #[error("unknown function id `{0}`")]
    UnknownFunctionId(String),

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error("incomplete cell {algorithm}/{function}: {found} of {expected} runs")]
    IncompleteCell {
        algorithm: String,
        function: String,
        found: usize,
        expected: usize,
    },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
