use thiserror::Error;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: at least one point is required")]
    EmptyInput,
    #[error("negative coordinate {value} at position {index}")]
    NegativeCoordinate { index: usize, value: String },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("direction has positive coordinate {value} at position {index}; the support value is +inf")]
    PositiveDirection { index: usize, value: String },
    #[error("weight must be strictly positive, found {value} at position {index}")]
    NonpositiveWeight { index: usize, value: String },
    #[error("scale factor must be strictly positive, found {0}")]
    NonpositiveScale(String),
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("negative exponent at position {position}")]
    NegativeExponent { position: usize },
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("the zero polynomial has no support")]
    ZeroPolynomial,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square")]
    NonSquareMatrix,
    #[error("assignment violates the summand system: {0}")]
    InfeasibleAssignment(String),
    #[error("unbounded complement: the diagram does not meet every coordinate axis")]
    Unbounded,
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
