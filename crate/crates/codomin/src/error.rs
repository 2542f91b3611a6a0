//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("axiom violations: {}", .0.join(", "))]
    AxiomViolations(Vec<String>),
    #[error("not a coideal: {0}")]
    NotACoideal(String),
    #[error("not reflexive: {0}")]
    NotReflexive(String),
    #[error("not surjective")]
    NotSurjective,
    #[error("not a bialgebra: {0}")]
    NotABialgebra(String),
    #[error("not cocommutative: {0}")]
    NotCocommutative(String),
    #[error("not a subspace of the ambient space")]
    NotASubspace,
    #[error("empty morphism family")]
    EmptyFamily,
    #[error("unsupported characteristic: {0}")]
    UnsupportedCharacteristic(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("descent failure: {0}")]
    DescentFailure(String),
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
    #[error("validation of `{name}` failed: {}", .violations.join(", "))]
    Validation {
        name: String,
        violations: Vec<String>,
    },
    #[error("unknown reference: {0}")]
    UnknownReference(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::UnsupportedCharacteristic(_) | Error::Unsupported(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
