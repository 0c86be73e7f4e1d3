//! Fourier-spectral laboratory for periodic homogenization of the Stokes system.
//!
//! The crate solves the periodic Stokes cell problems and assembles the
//! fourth-order effective viscosity tensor, computes the bottom of the Bloch
//! spectrum of the shifted incompressible operator, connects the two through
//! the propagation relation, implements the tensor-equivalence algebra of the
//! effective operator, and validates the homogenized limit with a torus-scale
//! epsilon-convergence study.
//!
//! Everything lives on the unit torus, discretized by Fourier collocation on a
//! uniform grid with complex nodal/spectral storage. Incompressibility is
//! enforced exactly in Fourier space by working in per-mode frames orthogonal
//! to the (shifted) wavevector.

pub mod bloch;
pub mod cell;
pub mod epsilon;
pub mod error;
pub mod fourier;
pub mod linalg;
pub mod tensor4;
pub mod tol;
pub mod util;

pub use error::{Error, Result};
pub use fourier::field::{MatrixField, ScalarField, VectorField};
pub use fourier::grid::CellGrid;
pub use fourier::shift::ShiftParameter;
pub use fourier::viscosity::ViscosityModel;

/// Problem variant: full velocity gradient or symmetrized strain rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// Viscous stress `mu * grad(u)`.
    FullGradient,
    /// Viscous stress `mu * E(u)` with `E = (grad + grad^T)/2`.
    Symmetrized,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kind::FullGradient => write!(f, "full_gradient"),
            Kind::Symmetrized => write!(f, "symmetrized"),
        }
    }
}
