use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("`{0}` is not a valid identifier")]
    BadIdentifier(String),

    #[error("too many variables ({0}); the limit is 16")]
    TooManyVariables(usize),

    #[error("division by zero at position {pos}")]
    DivisionByZero { pos: usize },

    #[error("singular matrix (determinant {det})")]
    Singular { det: String },

    #[error("shape mismatch: {0}")]
    Shape(String),
}
