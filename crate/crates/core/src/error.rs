use thiserror::Error;

/// Errors produced by the exact engine, the tables and the simulator.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} index {value} is out of range 0..{bound}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cannot combine sites {left} and {right}")]
    SiteMismatch { left: String, right: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("input state is not normalized (norm = {norm})")]
    NotNormalized { norm: f64 },

    #[error("outcome {outcome} of channel {channel} has zero probability for this input")]
    UndefinedOutcome { channel: usize, outcome: usize },

    #[error("no transcribed {kind} entry for channel {channel}, outcome {outcome}")]
    MissingEntry {
        kind: &'static str,
        channel: usize,
        outcome: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid rational literal {0:?}")]
    RationalLiteral(String),

    #[error("invalid gate table: {0}")]
    GateTable(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_index(what: &'static str, value: usize, bound: usize) -> Result<usize> {
    if value < bound {
        Ok(value)
    } else {
        Err(Error::OutOfRange { what, value, bound })
    }
}
