use num_complex::Complex64;

use super::{smooth_step, BesovParams, LpError, DATA_FREQUENCY_FACTOR};
use crate::spectral::{Field, GridSpec};

/// Band-limited bump used to build the initial data.
///
/// Its transform is even, real and nonnegative, equal to one for
/// `|xi| <= 4^{-d}` and zero for `|xi| >= 2^{-d}`. The physical profile on
/// the torus is `phi(x) = (2L)^{-1} sum_k phi_hat(k) e^{i k x}`, i.e. the
/// periodization of the whole-line profile.
#[derive(Debug, Clone)]
pub struct DataProfile {
    dim: usize,
    axis: GridSpec,
    spectrum: Vec<f64>,
    values: Vec<f64>,
}

impl DataProfile {
    pub fn new(grid: &GridSpec) -> Self {
        let dim = grid.dim();
        let axis = GridSpec::new(1, grid.points_per_axis(), grid.half_period())
            .expect("axis of a valid grid is valid");
        let spectrum: Vec<f64> = (0..axis.len())
            .map(|i| {
                if axis.is_nyquist(i) {
                    0.0
                } else {
                    bump_hat(dim, axis.axis_wavenumber(i))
                }
            })
            .collect();
        let scale = 1.0 / axis.volume();
        let coeffs = spectrum.iter().map(|&v| Complex64::new(v * scale, 0.0)).collect();
        let values = Field::from_spectrum(axis, coeffs)
            .expect("length matches")
            .physical()
            .into_owned();
        Self {
            dim,
            axis,
            spectrum,
            values,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inner_radius(&self) -> f64 {
        4f64.powi(-(self.dim as i32))
    }

    pub fn outer_radius(&self) -> f64 {
        2f64.powi(-(self.dim as i32))
    }

    /// `phi_hat` at an arbitrary frequency.
    pub fn transform(&self, xi: f64) -> f64 {
        bump_hat(self.dim, xi)
    }

    /// `phi_hat` on the axis lattice (FFT ordering).
    pub fn spectrum(&self) -> &[f64] {
        &self.spectrum
    }

    /// Physical profile on the axis grid.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `||phi||_{L^p}` over one period of the axis.
    pub fn lp_norm(&self, p: f64) -> f64 {
        crate::spectral::Field::from_values(self.axis, self.values.clone())
            .expect("length matches")
            .lp_norm(p)
            .expect("profile norms use p >= 1")
    }
}

fn bump_hat(dim: usize, xi: f64) -> f64 {
    let inner = 4f64.powi(-(dim as i32));
    let outer = 2f64.powi(-(dim as i32));
    smooth_step((outer - xi.abs()) / (outer - inner))
}

/// `(17/12) 2^n`.
pub fn data_frequency(n: u32) -> f64 {
    DATA_FREQUENCY_FACTOR * 2f64.powi(n as i32)
}

/// `u_0^n(x) = 2^{-ns} phi(x_1) cos((17/12) 2^n x_1) phi(x_2) ... phi(x_d)`,
/// built directly from its spectrum so that the annulus support is exact on
/// the lattice.
///
/// Requires `(17/12) 2^n + 1/2 <= K_max / 2` so the data survive the
/// half-rule dealiasing.
pub fn initial_data(
    n: u32,
    bp: &BesovParams,
    grid: &GridSpec,
    profile: &DataProfile,
) -> Result<Field, LpError> {
    let k0 = data_frequency(n);
    let top = k0 + 0.5;
    let cutoff = 0.5 * grid.k_max();
    if top > cutoff {
        return Err(LpError::Aliasing { n, top, cutoff });
    }
    if profile.dim() != grid.dim() {
        return Err(crate::spectral::SpectralError::GridMismatch.into());
    }
    let amplitude = 2f64.powf(-(n as f64) * bp.s);
    let axis_scale = 1.0 / (2.0 * grid.half_period());
    let spectrum = (0..grid.len())
        .map(|flat| {
            if grid.is_nyquist(flat) {
                return Complex64::default();
            }
            let k = grid.wavevector(flat);
            let mut c = 0.5 * (profile.transform(k[0] - k0) + profile.transform(k[0] + k0)) * axis_scale;
            for &ki in &k[1..grid.dim()] {
                c *= profile.transform(ki) * axis_scale;
            }
            Complex64::new(amplitude * c, 0.0)
        })
        .collect();
    Ok(Field::from_spectrum(*grid, spectrum)?.to_fourier())
}

/// Largest `|u|` over the outer sixteenth of the domain in `x_1`
/// (`|x_1| >= 15L/16`), relative to `sup |u|`.
pub fn periodization_tail(field: &Field) -> f64 {
    let grid = field.grid();
    let edge = grid.half_period() * 15.0 / 16.0;
    let values = field.physical();
    let sup = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    if sup == 0.0 {
        return 0.0;
    }
    let tail = values
        .iter()
        .enumerate()
        .filter(|(flat, _)| grid.position(*flat)[0].abs() >= edge)
        .fold(0.0_f64, |m, (_, v)| m.max(v.abs()));
    tail / sup
}
