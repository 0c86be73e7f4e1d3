use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("ellipticity violated: min(mu) = {min} <= 0 (floor mu0 = {floor})")]
    Ellipticity { min: f64, floor: f64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("solver did not converge: {context} (residual {residual:.3e} after {iterations} iterations)")]
    SolverDiverged {
        context: String,
        residual: f64,
        iterations: usize,
    },

    #[error("eigensolver failure: {0}")]
    Eigen(String),

    #[error("inconsistent eigenpair: transverse zero-mode residual {0:.3e} above tolerance")]
    InconsistentEigenpair(f64),

    #[error("branch tracking degenerate: {0}")]
    DegenerateBranch(String),

    #[error("ill-conditioned fit: {0}")]
    IllConditionedFit(String),

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("homogenized symbol singular at mode {0:?} (Legendre-Hadamard violation)")]
    SingularSymbol(Vec<i64>),
}
