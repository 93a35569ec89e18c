//! Rotating shallow water on a doubly periodic f-plane in vorticity,
//! divergence and height, discretized so that energy and potential
//! enstrophy are conserved exactly by the semi-discrete dynamics, together
//! with the five-component fast–slow model written in the same
//! two-bracket form.

pub mod brackets;
pub mod cli;
pub mod config;
pub mod diagnostics;
pub mod elliptic;
pub mod error;
pub mod grid;
pub mod integrate;
pub mod io;
pub mod lorenz86;
pub mod ops;
pub mod presets;
pub mod sampling;
pub mod state;
pub mod verify;

pub use elliptic::{solve_poisson, PoissonSettings};
pub use grid::{Grid, ScalarField, VectorField};
pub use state::{derive_fields, DerivedFields, SweState};
