use std::fmt;
use std::fs;
use std::io::{self, Read};
use std::path::Path;

use realizer::tfparse::read_transfer_matrix;
use realizer::{realize_mimo, Error, StateSpace, TransferMatrix};

use crate::Source;

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Syntax { .. }
            | Error::Shape(_)
            | Error::InvalidEntry { .. }
            | Error::InvalidInput(_)
            | Error::Number(_) => 2,
            Error::Improper { .. }
            | Error::Dimension(_)
            | Error::SingularTransform
            | Error::DivisionByZero
            | Error::Pole { .. } => 3,
        };
        Self { code, message: err.to_string() }
    }
}

fn read_path(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| CliError::input(format!("reading stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| CliError::input(format!("reading {}: {e}", path.display())))
}

pub fn read_source(source: &Source) -> Result<String, CliError> {
    match (&source.expr, &source.file) {
        (Some(expr), None) => Ok(expr.clone()),
        (None, Some(path)) => read_path(path),
        _ => Err(CliError::input("exactly one of -e/--expr or -f/--file is required")),
    }
}

pub fn read_state_file(path: &Path) -> Result<StateSpace, CliError> {
    Ok(StateSpace::from_json(&read_path(path)?)?)
}

/// What an input document turned out to contain.
pub enum Model {
    Transfer(TransferMatrix),
    State(StateSpace),
}

pub fn parse_model(text: &str) -> Result<Model, CliError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(trimmed).map_err(|e| CliError::input(format!("malformed JSON: {e}")))?;
        if value.get("A").is_some() {
            return Ok(Model::State(StateSpace::from_json(trimmed)?));
        }
        if value.get("entries").is_some() {
            return Ok(Model::Transfer(read_transfer_matrix(trimmed)?));
        }
        return Err(CliError::input(
            "JSON input is neither a state model (\"A\", \"B\", \"C\") nor a transfer matrix (\"entries\")",
        ));
    }
    Ok(Model::Transfer(read_transfer_matrix(text)?))
}

pub fn read_transfer(source: &Source) -> Result<TransferMatrix, CliError> {
    match parse_model(&read_source(source)?)? {
        Model::Transfer(g) => Ok(g),
        Model::State(_) => Err(CliError::input("expected a transfer matrix, got a state model")),
    }
}

/// State model from the input; transfer matrices are realized first.
pub fn read_state(source: &Source) -> Result<StateSpace, CliError> {
    match parse_model(&read_source(source)?)? {
        Model::State(ss) => Ok(ss),
        Model::Transfer(g) => Ok(realize_mimo(&g)?),
    }
}
