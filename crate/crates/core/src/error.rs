use std::fmt;

use thiserror::Error;

/// Position of a parse problem. Lines and columns are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

impl SourceSpan {
    pub fn new(line: usize, column: usize, length: usize) -> Self {
        Self { line, column, length }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// Which group axiom a rejected Cayley table violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupAxiom {
    Identity,
    LatinSquare,
    Associativity,
    Inverse,
}

impl fmt::Display for GroupAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupAxiom::Identity => "identity",
            GroupAxiom::LatinSquare => "latin-square",
            GroupAxiom::Associativity => "associativity",
            GroupAxiom::Inverse => "inverse",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a supported prime modulus (need a prime 2 <= p <= 97)")]
    InvalidPrime(u32),

    #[error("not a group ({axiom}): witness {witness:?}")]
    NotAGroup { axiom: GroupAxiom, witness: (usize, usize, usize) },

    #[error("malformed group input: {0}")]
    MalformedGroup(String),

    #[error("malformed representation: {0}")]
    MalformedRepresentation(String),

    #[error("not an action: act[{g}]·act[{h}] differs from the matrix of the product {g}·{h}")]
    NotAnAction { g: String, h: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("{what} index {index} out of range (size {size})")]
    IndexOutOfRange { what: &'static str, index: usize, size: usize },

    #[error("subgroup is not normal: {g}·{n}·{g}^-1 leaves it")]
    NotNormal { g: String, n: String },

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("enumeration cap exceeded: {what} needs {needed}, cap is {cap}")]
    EnumerationCapExceeded { what: &'static str, needed: u128, cap: u128 },

    #[error("search space cap exceeded: {needed} assignments, cap is {cap}")]
    SearchSpaceCapExceeded { needed: u128, cap: u128 },

    #[error("context mismatch between free representations")]
    ContextMismatch,

    #[error("invalid free context: {0}")]
    InvalidContext(String),

    #[error("parse error at {span}: expected {expected}")]
    Parse { span: SourceSpan, expected: String },

    #[error("unknown variable `{name}` at {span}")]
    UnknownVariable { name: String, span: SourceSpan },

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Error {
        match self {
            e @ (Error::Parse { .. } | Error::UnknownVariable { .. } | Error::AtLine { .. }) => e,
            e => Error::AtLine { line, source: Box::new(e) },
        }
    }

    /// Span of the offending input, when the error came from text.
    pub fn span(&self) -> Option<SourceSpan> {
        match self {
            Error::Parse { span, .. } | Error::UnknownVariable { span, .. } => Some(*span),
            Error::AtLine { line, source } => source.span().or(Some(SourceSpan::new(*line, 1, 0))),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
