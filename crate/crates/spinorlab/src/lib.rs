//! Exact-arithmetic toolkit for the first-order conformally invariant operators
//! of Euclidean Clifford analysis.
//!
//! Everything here is computed over the Gaussian rationals `ℚ(i)` — there is no
//! floating point anywhere in the crate, so every identity that the test suite
//! claims is an *identity*, not an approximation.
//!
//! The crate is organized in layers:
//!
//! * [`scalar`], [`poly`], [`matrix`] — exact coefficient arithmetic, sparse
//!   multivariate polynomials, and fraction-free linear algebra (rank, kernel,
//!   repeated solves).
//! * [`clifford`] — complex spinor representations of the Clifford algebra with
//!   the convention `e_i e_j + e_j e_i = -2 δ_ij`, together with the algebraic
//!   maps (`μ`, `ι`, the spin-1/2 and spin-3/2 projections) that split
//!   spinor-valued one-forms into irreducible pieces.
//! * [`fields`], [`ops`] — spinor fields and spinor-valued differential forms
//!   with polynomial coefficients, and the differential operators acting on
//!   them: Dirac `D`, gradient, twisted Dirac `D_T`, twistor `𝒯`, divergence
//!   `δ`, Rarita-Schwinger `ℛ`, the Clifford contraction `Y` on forms, the
//!   radial symbol map `ℒ`, and the embedding `Ξ` of monogenics into
//!   Rarita-Schwinger solutions.
//! * [`solutions`] — brute-force exact computation of homogeneous polynomial
//!   solution spaces (spherical monogenics, Rarita-Schwinger fields) and the
//!   three-way direct-sum decomposition of the latter.
//! * [`spectra`] — closed-form sphere spectra for the Dirac and higher-spin
//!   Dirac operators, plus the Weyl dimension formula used to cross-check
//!   multiplicities representation-theoretically.
//! * [`charclass`], [`index`] — a Pontryagin-class ring with a Chern-root
//!   engine behind it, Â-genus and Chern-character expansions, and topological
//!   index computations for the operators above on compact manifolds described
//!   by their Pontryagin numbers.
//! * [`verify`] — a deterministic, machine-checkable battery of internal
//!   consistency checks; this is what `spinorlab verify` runs.
//! * [`cli`] — implementation of the `spinorlab` command-line tool.

pub mod charclass;
pub mod cli;
pub mod clifford;
pub mod fields;
pub mod index;
pub mod matrix;
pub mod ops;
pub mod poly;
pub mod scalar;
pub mod solutions;
pub mod spectra;
pub mod verify;

pub use scalar::Scalar;

use thiserror::Error;

/// Crate-wide error type.
///
/// Operations that cannot fail return values directly; everything with a
/// precondition (dimension compatibility, parameter ranges, admissibility of
/// inputs to an operator) returns `Result<_, Error>`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two objects that must live over the same space do not.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An index (variable, vector component, gamma matrix, ...) is out of range.
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    /// A parameter lies outside the supported range.
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    /// An operator was applied to an input violating its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A linear system that was expected to be solvable is not.
    #[error("linear system has no solution: {0}")]
    Unsolvable(String),

    /// A manifold descriptor (or other input file) is malformed.
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
