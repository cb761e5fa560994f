//! Littlewood-Paley blocks and nonhomogeneous Besov norms on the grid.
//!
//! The low-frequency cutoff `chi` and the annulus cutoff
//! `phi = chi(./2) - chi` are realized with the `exp(-1/x)` smooth step. The
//! plateau radius [`PLATEAU_RADIUS`] makes `phi` identically one on
//! `[4/3, 2 * PLATEAU_RADIUS]`, which contains `[4/3, 3/2]`.

mod family;
mod params;
mod profile;

pub use family::DyadicFamily;
pub use params::BesovParams;
pub use profile::{data_frequency, initial_data, periodization_tail, DataProfile};

use thiserror::Error;

use crate::spectral::SpectralError;

/// `chi` equals one on `|xi| <= PLATEAU_RADIUS`.
pub const PLATEAU_RADIUS: f64 = 1.12;
/// `chi` vanishes on `|xi| >= CHI_OUTER_RADIUS`.
pub const CHI_OUTER_RADIUS: f64 = 4.0 / 3.0;
/// Frequency factor of the oscillation in the initial data, times `2^n`.
pub const DATA_FREQUENCY_FACTOR: f64 = 17.0 / 12.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LpError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("grid cannot host the j = 0 band: K_max = {k_max} < 8/3")]
    GridTooCoarse { k_max: f64 },
    #[error("block index {j} is outside -1..={j_max}")]
    BlockOutOfRange { j: i32, j_max: i32 },
    #[error("field has spectral mass outside the covered bands (relative {relative:.3e})")]
    UncoveredSpectrum { relative: f64 },
    #[error("data frequency {top} exceeds the dealias cutoff {cutoff} for n = {n}")]
    Aliasing { n: u32, top: f64, cutoff: f64 },
    #[error("invalid Besov parameters: {0}")]
    Params(String),
}

/// `g(x) / (g(x) + g(1 - x))` with `g(x) = exp(-1/x)` for `x > 0`, else 0.
pub fn smooth_step(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let a = (-1.0 / x).exp();
    let b = (-1.0 / (1.0 - x)).exp();
    a / (a + b)
}

/// Radial low-frequency cutoff, as a function of `|xi|`.
pub fn chi(radius: f64) -> f64 {
    smooth_step((CHI_OUTER_RADIUS - radius) / (CHI_OUTER_RADIUS - PLATEAU_RADIUS))
}

/// Radial annulus cutoff `chi(r/2) - chi(r)`.
pub fn phi(radius: f64) -> f64 {
    (chi(0.5 * radius) - chi(radius)).max(0.0)
}

/// Symbol of `Delta_j` at radius `|xi|`: zero for `j <= -2`, `chi` at
/// `j = -1`, `phi(2^{-j} .)` otherwise.
pub fn block_symbol(j: i32, radius: f64) -> f64 {
    match j {
        j if j <= -2 => 0.0,
        -1 => chi(radius),
        j => phi(radius / 2f64.powi(j)),
    }
}
