use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrepError {
    #[error("duplicate poset element `{0}`")]
    DuplicateElement(String),

    #[error("unknown poset element `{0}`")]
    UnknownElement(String),

    #[error("order is not antisymmetric: `{0}` and `{1}` are mutually related")]
    NotAntisymmetric(String, String),

    #[error("code does not belong to the space: {0}")]
    CodeMismatch(String),

    #[error("point does not belong to the space: {0}")]
    PointMismatch(String),

    #[error("a code of an infinite-word space needs a non-empty tail set")]
    EmptyOmegaTail,

    #[error("finite words are not points of an infinite-word space")]
    FiniteWordInOmega,

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, SrepError>;
