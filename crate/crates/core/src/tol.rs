//! Centralized tolerances.
//!
//! The ladder keeps one decade of slack between solver targets and the
//! invariant checks built on top of them, and a further gap to anything that
//! involves finite-difference-fitted Bloch data.

/// Relative residual target for Krylov solves (cell problems, torus Stokes).
pub const SOLVER_REL: f64 = 1e-11;

/// Iteration cap for Krylov solves; exceeding it is a hard error.
pub const SOLVER_MAX_ITER: usize = 10_000;

/// Transform round-trip and Hermiticity checks (pure FFT / assembly algebra).
pub const TRANSFORM_ROUNDTRIP: f64 = 1e-12;

/// Discrete integration-by-parts (adjointness) checks, relative.
pub const ADJOINTNESS_REL: f64 = 1e-10;

/// Entrywise tensor symmetry assertions (9A-type and Hooke-type).
pub const TENSOR_SYMMETRY: f64 = 1e-10;

/// Divergence-free residual of correctors and velocity fields, infinity norm.
pub const DIVERGENCE_FREE: f64 = 1e-10;

/// Trace identity of the full-gradient effective tensor.
pub const TRACE_IDENTITY: f64 = 1e-9;

/// Agreement between the energy-form and weak-form tensor assemblies.
pub const ASSEMBLY_CONSISTENCY: f64 = 1e-9;

/// Transverse zero-mode residual allowed when recovering the multiplier q0.
pub const PRESSURE_TRANSVERSE: f64 = 1e-9;

/// Imaginary part allowed in the gauge-fixed multiplier q0.
pub const Q0_IMAG: f64 = 1e-9;

/// Rayleigh-quotient consistency of returned eigenvalues.
pub const RAYLEIGH_CONSISTENCY: f64 = 1e-11;

/// Eigenvector overlap below which branch matching is declared un-trackable.
pub const BRANCH_OVERLAP_MIN: f64 = 0.5;

/// Spectral gap treated as an exact degeneracy by the eigensolver.
pub const DEGENERACY_GAP: f64 = 1e-12;

/// Pure tensor-algebra identities (decompositions, kernel membership).
pub const ALGEBRA: f64 = 1e-10;

/// Tight algebra checks where exact cancellation is expected.
pub const ALGEBRA_EXACT: f64 = 1e-12;

/// Anything involving finite-difference-fitted Bloch derivatives.
pub const FITTED_BLOCH: f64 = 1e-5;

/// First-order finite-difference eigenfunction derivative checks, relative.
pub const FD_EIGENFUNCTION: f64 = 1e-4;

/// Singular values below `RANK_REL * sigma_max` count as kernel directions.
pub const RANK_REL: f64 = 1e-8;

/// Orthonormality of limit eigenvectors against the shift direction.
pub const LIMIT_ORTHONORMALITY: f64 = 1e-8;
