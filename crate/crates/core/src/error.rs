use thiserror::Error;

/// Errors produced by the max-algebra routines.
///
/// Indices carried in variants are 0-based; the `Display` output converts
/// them to the 1-based convention used in documentation and CLI output.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    Dimension {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("invalid entry {value} ({context}): entries must be finite and nonnegative")]
    InvalidValue { value: f64, context: String },

    #[error("{0}")]
    Validation(String),

    #[error("not a (0,1)-matrix: entry ({}, {}) = {value}", .row + 1, .col + 1)]
    NotZeroOne { row: usize, col: usize, value: f64 },

    #[error("capacity exceeded for {what}: {requested} > {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("x is not max-majorized by y")]
    NotMajorized,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
