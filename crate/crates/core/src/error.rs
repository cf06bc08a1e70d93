use thiserror::Error;

/// A syntax or resolution error in textual input, with 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }

    /// Shift a position computed relative to a fragment that starts at
    /// `(line, column)` of an enclosing document.
    pub fn offset(mut self, line: usize, column: usize) -> Self {
        if self.line == 1 {
            self.column += column - 1;
        }
        self.line += line - 1;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("variable index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("operation undefined on the zero operator")]
    ZeroOperator,
    #[error("Weyl algebra size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("ring has no cotangent structure")]
    MissingCotangent,
    #[error("radical strategy `{strategy}` not applicable: {reason}")]
    StrategyInapplicable { strategy: String, reason: String },
    #[error("user-supplied radical does not have the same radical as the ideal")]
    RadicalMismatch,
    #[error("sequence is not regular: {0}")]
    Regularity(String),
    #[error("form degree {0} is too small for contraction with a bivector")]
    DegreeTooSmall(usize),
    #[error("quotient is not finite-dimensional")]
    InfiniteDimension,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
