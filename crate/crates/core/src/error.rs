use thiserror::Error;

/// Errors raised by the core library.
///
/// Residuals and distances are reported as `f64` regardless of the scalar type.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("invalid bilinear form: {0}")]
    InvalidForm(String),

    #[error("invalid splitting: {0}")]
    InvalidSplitting(String),

    #[error("element does not lie in the {side} subalgebra (off-component norm {norm:e})")]
    NotInSubalgebra { side: &'static str, norm: f64 },

    #[error("matrix is not traceless (|trace| = {0:e})")]
    NotTraceless(f64),

    #[error("matrix is not unimodular (|det - 1| = {0:e})")]
    NotUnimodular(f64),

    #[error("element does not lie in su(2) (off-component norm {0:e})")]
    NotSu2(f64),

    #[error("ill-conditioned matrix (condition number {0:e})")]
    IllConditioned(f64),

    #[error("series did not converge within {0} terms")]
    NonConvergence(usize),

    #[error("level mismatch: expected {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("point is off the fiber (distance {0:e})")]
    OffFiber(f64),

    #[error("supplied differential disagrees with finite differences (residual {0:e})")]
    DifferentialMismatch(f64),

    #[error("factorization failed at t = {0}")]
    FactorizationFailure(f64),

    #[error("numerical breakdown at t = {t}: {reason}")]
    NumericalBreakdown { t: f64, reason: String },

    #[error("singular matrix")]
    Singular,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
