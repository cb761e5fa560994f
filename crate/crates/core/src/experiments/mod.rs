//! Rate scenarios E1-E6 on the data family `u_0^n` with `eps = 2^{-2n}`.
//!
//! | id | measures | target |
//! |----|----------|--------|
//! | E1 | `||u_0^n||_{B^sigma}` vs `n` | slope `sigma - s` |
//! | E2 | `I1 = ||(e^{t eps Lap} - Id) u_0^n||_{B^s}` vs `t` | slope 1 |
//! | E3 | `||u2||_{B^s}` vs `n` and `t` | slopes `-(s - 1)` and 1 |
//! | E4 | `||u3||_{B^s}` vs `t`, `||u - u1||` vs `n` | slope `>= 2`, `-1`, `+1` |
//! | E5 | `D = ||u^eps - u_bar||_{B^s}` | `min_n D / t` bounded below |
//! | E6 | `sup_t ||u(t)|| / ||u_0||` at `s`, `s + 1` | frozen constants |
//!
//! Each run returns a [`RateReport`] whose checks carry their own target and
//! tolerance; [`write_report`] persists it as CSV plus JSON.

mod fit;
mod oracle;
mod report;
mod scenarios;
mod spec;
pub mod validate;

use thiserror::Error;

pub use fit::{fit_loglog, LogLogFit};
pub use oracle::heat_defect_besov;
pub use report::{write_report, Check, Comparison, Constant, FitRecord, RateReport, Row};
pub use scenarios::{run, run_all, run_e1, run_e2, run_e3, run_e4, run_e5, run_e6};
pub use spec::{ExperimentSpec, GridRule, RunConfig, Scenario};

use crate::keller_segel::KsError;
use crate::littlewood_paley::LpError;
use crate::spectral::SpectralError;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    LittlewoodPaley(#[from] LpError),
    #[error(transparent)]
    Solver(#[from] KsError),
    #[error("fit: {0}")]
    Fit(String),
    #[error("invalid experiment: {0}")]
    Spec(String),
    #[error("config {path}: {message}")]
    Config { path: String, message: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Serialize { path: String, message: String },
}
