use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification of errors, used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Unsupported,
    Invariant,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("series variables differ: `{left}` vs `{right}`")]
    VariableMismatch { left: String, right: String },
    #[error("logarithm needs constant term 1, found {0}")]
    LogConstantTerm(String),
    #[error("exponential needs constant term 0, found {0}")]
    ExpConstantTerm(String),
    #[error("Laurent polynomial is not symmetric under t -> 1/t")]
    Asymmetric,
    #[error("Alexander polynomial must satisfy Δ(1) = 1, found {0}")]
    NotNormalized(String),
    #[error("{operation} is not available for b1 = {b1}")]
    UnsupportedBetti { operation: &'static str, b1: u32 },
    #[error("b1 = 1 with torsion order {0} needs the explicit torsion factor option")]
    TorsionUnsupported(u64),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("matrix must have even size, found {0}")]
    OddSize(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("curvature tensor is not totally symmetric")]
    NotSymmetric,
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_) => ErrorKind::Parse,
            Error::UnsupportedBetti { .. } | Error::TorsionUnsupported(_) => ErrorKind::Unsupported,
            _ => ErrorKind::Invariant,
        }
    }
}
