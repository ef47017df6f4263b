use thiserror::Error;

/// Errors raised by the algebraic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    ZeroDivision,
    #[error("unsupported field extension: {0}")]
    UnsupportedExtension(String),
    #[error("square root of negative rational {0}")]
    NegativeRadicand(String),
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("body of the even matrix is singular")]
    SingularBody,
    #[error("matrix has entries of odd or mixed parity")]
    NotEven,
    #[error("matrix has Grassmann-valued entries")]
    NotBosonic,
    #[error("not in MacFarlane form: {0}")]
    NotMacFarlane(String),
    #[error("entry depends on x-: {0}")]
    NonHolomorphic(String),
    #[error("degenerate metric: the curvature density vanishes identically")]
    DegenerateMetric,
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
