//! Parabolic (`eps > 0`) and hyperbolic (`eps = 0`) Keller-Segel systems
//!
//! ```text
//! u_t - eps Lap u = -div(u (1 - u) grad S),   S = (1 - Lap)^{-1} u
//! ```
//!
//! integrated in the integrating-factor form `v = e^{-t eps Lap} u_hat`
//! with classical RK4 on `v` (Lawson). The diffusion is exact, so `eps`
//! imposes no step restriction, and `eps = 0` is plain RK4.

mod config;
mod decomposition;
mod nonlinear;
mod solver;

pub use config::SolverConfig;
pub use decomposition::{decompose, decompose_trajectory, solve_u1, solve_u2, Decomposition};
pub use nonlinear::{chemotactic_forcing, ks_rhs};
pub use solver::{solve, Snapshot, Trajectory};

use thiserror::Error;

use crate::littlewood_paley::LpError;
use crate::spectral::SpectralError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KsError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    LittlewoodPaley(#[from] LpError),
    #[error("invalid solver configuration: {0}")]
    Config(String),
    #[error("blow-up at t = {time}: sup |u| = {sup} exceeds ceiling {ceiling}")]
    BlowUp { time: f64, sup: f64, ceiling: f64 },
    #[error("Simpson quadrature needs an even step count >= 8 (got {0})")]
    QuadratureSteps(usize),
    #[error("time must be >= 0 (got {0})")]
    NegativeTime(f64),
}
