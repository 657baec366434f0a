use std::fmt;

use thiserror::Error;

/// Diagnostic categories; each has a stable code printed as `E0xx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagCode {
    Lexical,
    Syntax,
    UnknownName,
    DuplicateName,
    BadOrder,
    TypeMismatch,
    EmptyOmegaTail,
    OracleUnavailable,
    Evaluation,
}

impl DiagCode {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagCode::Lexical => "E001",
            DiagCode::Syntax => "E002",
            DiagCode::UnknownName => "E003",
            DiagCode::DuplicateName => "E004",
            DiagCode::BadOrder => "E005",
            DiagCode::TypeMismatch => "E006",
            DiagCode::EmptyOmegaTail => "E007",
            DiagCode::OracleUnavailable => "E008",
            DiagCode::Evaluation => "E009",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct Diagnostic {
    pub code: DiagCode,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl Diagnostic {
    pub fn new(code: DiagCode, line: usize, col: usize, message: impl Into<String>) -> Self {
        Diagnostic {
            code,
            line,
            col,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "error[{}] {}:{}: {}",
            self.code.as_str(),
            self.line,
            self.col,
            self.message
        )
    }
}
