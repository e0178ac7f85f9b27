//! Spectral solvers for a five-component morphogen system on a thin
//! rectangle with a membrane-concentrated source, together with its
//! one-dimensional limit and a set of numerical checks for the estimates
//! that control both limits.
//!
//! The bulk component lives on `Ω = (-1,1) × (0,1)` and is represented in the
//! Neumann cosine basis; the remaining four components live on the boundary
//! segment `(-1,1) × {0}`.

pub mod error;
pub mod evolution;
pub mod model;
pub mod quadrature;
pub mod singular;
pub mod spectral;
pub mod verification;

pub use error::{Error, Result};
pub use evolution::{
    evolve_2d, evolve_limit, evolve_regular, Diagnostics, Frame, Scheme, SolverConfig, Trajectory,
};
pub use model::{Mollifier, Params, UState, ZState};
pub use spectral::{
    CosineTransform, Grid1D, Grid2D, SobolevIndex, SpectralField1D, SpectralField2D,
};
