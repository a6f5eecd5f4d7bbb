use std::fmt;

use thiserror::Error;

/// Position of a token in parsed source text, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("evaluation at a pole: denominator vanishes at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("syntax error at {position}: {message}")]
    Syntax { position: Position, message: String },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid entry at {position}: {message}")]
    InvalidEntry { position: Position, message: String },

    /// Entry indices are 0-based; the message prints them 1-based.
    #[error("entry ({}, {}) = {entry} is not strictly proper; the system cannot be modeled by a state model without feed-through", row + 1, col + 1)]
    Improper { row: usize, col: usize, entry: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("singular transform: T is not invertible")]
    SingularTransform,

    #[error("malformed number {0:?}")]
    Number(String),
}

pub type Result<T> = std::result::Result<T, Error>;
