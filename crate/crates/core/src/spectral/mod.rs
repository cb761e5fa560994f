//! Periodic-grid fields with exact Fourier-multiplier operators.
//!
//! Fourier convention: `c_k = N^{-d} sum_x f(x) e^{-i k.x}` over the physical
//! grid positions, so `cos(k.x)` has coefficient `1/2` at `+k` and `-k`, and
//! `f(x) = sum_k c_k e^{i k.x}`. Parseval reads
//! `||f||_{L^2}^2 = (2L)^d sum_k |c_k|^2`.

pub(crate) mod fft;
mod field;
mod grid;

pub use field::Field;
pub use grid::GridSpec;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("dimension must be 1, 2 or 3 (got {0})")]
    Dimension(usize),
    #[error("points per axis must be a power of two >= 8 (got {0})")]
    PointsPerAxis(usize),
    #[error("half period must be positive and finite (got {0})")]
    HalfPeriod(f64),
    #[error("array length {got} does not match grid size {expected}")]
    Length { expected: usize, got: usize },
    #[error("fields live on different grids")]
    GridMismatch,
    #[error("expected {expected} vector components, got {got}")]
    Components { expected: usize, got: usize },
    #[error("L^p exponent must lie in [1, inf] (got {0})")]
    Exponent(f64),
    #[error("heat propagation time must be >= 0 (got {0})")]
    NegativeTime(f64),
    #[error("dealias fraction must lie in (0, 1] (got {0})")]
    DealiasFraction(f64),
}
