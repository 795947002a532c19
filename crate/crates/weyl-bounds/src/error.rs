use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Spatial dimension below the supported minimum of 2.
    #[error("dimension must be >= 2, got {0}")]
    Dimension(i64),

    /// Root bracketing or Newton iteration failed to converge.
    #[error("zero search for J_{nu} (zero #{index}) failed to converge")]
    Convergence { nu: f64, index: u32 },

    /// A spectrum does not contain enough eigenvalues for the request.
    #[error("spectrum holds {len} eigenvalues, operation needs {needed}")]
    InsufficientSpectrum { len: usize, needed: usize },

    /// Query level above the completeness cutoff of a spectrum.
    #[error("lambda = {lam} exceeds the completeness cutoff {cutoff}")]
    BeyondCutoff { lam: f64, cutoff: f64 },

    /// Enumeration would exceed the configured eigenvalue budget.
    #[error("enumeration needs more than the budget of {budget} eigenvalues")]
    BudgetExceeded { budget: usize },

    /// Parameter combination not valid for the requested operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
