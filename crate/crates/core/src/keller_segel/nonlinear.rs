use num_complex::Complex64;

use super::{KsError, SolverConfig};
use crate::spectral::{fft, Field, GridSpec, SpectralError};

/// Precomputed lattice data for `-div(u (1 - u) grad (1 - Lap)^{-1} u)`.
///
/// Products are formed on the physical side, derivatives on the Fourier
/// side, and the result is truncated to the retained (dealiased, non-Nyquist)
/// modes.
#[derive(Debug, Clone)]
pub(crate) struct Chemotaxis {
    grid: GridSpec,
    wavevectors: Vec<[f64; 3]>,
    wavenumber_sq: Vec<f64>,
    helmholtz: Vec<f64>,
    nyquist: Vec<bool>,
    retained: Vec<bool>,
}

impl Chemotaxis {
    pub(crate) fn new(grid: GridSpec, dealias_fraction: f64) -> Result<Self, KsError> {
        if !(dealias_fraction > 0.0 && dealias_fraction <= 1.0) {
            return Err(SpectralError::DealiasFraction(dealias_fraction).into());
        }
        let wavevectors: Vec<[f64; 3]> = (0..grid.len()).map(|f| grid.wavevector(f)).collect();
        let wavenumber_sq: Vec<f64> = wavevectors.iter().map(|k| k.iter().map(|x| x * x).sum()).collect();
        let helmholtz = wavenumber_sq.iter().map(|k2| 1.0 / (1.0 + k2)).collect();
        let nyquist: Vec<bool> = (0..grid.len()).map(|f| grid.is_nyquist(f)).collect();
        let cutoff = dealias_fraction * grid.k_max() * (1.0 + 1e-14);
        let retained = wavevectors
            .iter()
            .zip(&nyquist)
            .map(|(k, &ny)| !ny && k[..grid.dim()].iter().all(|x| x.abs() <= cutoff))
            .collect();
        Ok(Self {
            grid,
            wavevectors,
            wavenumber_sq,
            helmholtz,
            nyquist,
            retained,
        })
    }

    pub(crate) fn grid(&self) -> &GridSpec {
        &self.grid
    }

    /// Forcing spectrum together with `sup |u|` on the grid.
    pub(crate) fn forcing(&self, u_hat: &[Complex64]) -> (Vec<Complex64>, f64) {
        let grid = &self.grid;
        let u = fft::inverse(grid, u_hat);
        let sup = u.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let logistic: Vec<f64> = u.iter().map(|v| v * (1.0 - v)).collect();

        let mut out = vec![Complex64::default(); u_hat.len()];
        let mut grad_hat = vec![Complex64::default(); u_hat.len()];
        for axis in 0..grid.dim() {
            for (flat, slot) in grad_hat.iter_mut().enumerate() {
                *slot = if self.nyquist[flat] {
                    Complex64::default()
                } else {
                    u_hat[flat] * Complex64::new(0.0, self.wavevectors[flat][axis] * self.helmholtz[flat])
                };
            }
            let grad_s = fft::inverse(grid, &grad_hat);
            let flux: Vec<f64> = logistic.iter().zip(&grad_s).map(|(a, b)| a * b).collect();
            let flux_hat = fft::forward(grid, &flux);
            for (flat, slot) in out.iter_mut().enumerate() {
                if self.retained[flat] {
                    *slot -= flux_hat[flat] * Complex64::new(0.0, self.wavevectors[flat][axis]);
                }
            }
        }
        (out, sup)
    }

    /// `exp(-theta |k|^2)` per slot, zero on Nyquist rows.
    pub(crate) fn heat_factors(&self, theta: f64) -> Vec<f64> {
        self.wavenumber_sq
            .iter()
            .zip(&self.nyquist)
            .map(|(k2, &ny)| if ny { 0.0 } else { (-theta * k2).exp() })
            .collect()
    }
}

/// `-div(u (1 - u) grad S)` with `S = (1 - Lap)^{-1} u`, dealiased.
pub fn chemotactic_forcing(u: &Field, dealias_fraction: f64) -> Result<Field, KsError> {
    let op = Chemotaxis::new(*u.grid(), dealias_fraction)?;
    let (spec, _) = op.forcing(&u.fourier());
    Ok(Field::from_spectrum(*u.grid(), spec)?)
}

/// Full right-hand side `eps Lap u - div(u (1 - u) grad S)`.
pub fn ks_rhs(u: &Field, cfg: &SolverConfig) -> Result<Field, KsError> {
    let forcing = chemotactic_forcing(u, cfg.dealias_fraction)?;
    if cfg.epsilon == 0.0 {
        return Ok(forcing);
    }
    let diffusion = u.laplacian().scale(cfg.epsilon);
    Ok(&diffusion + &forcing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn zero_and_constant_states_are_steady() {
        let g = GridSpec::new(1, 64, PI).unwrap();
        let cfg = SolverConfig::new(&g, 0.1, 1.0);
        assert!(ks_rhs(&Field::zeros(g), &cfg).unwrap().sup_norm() == 0.0);
        let c = Field::from_fn(g, |_| 0.3);
        assert!(ks_rhs(&c, &cfg).unwrap().sup_norm() < 1e-15);
    }

    #[test]
    fn single_mode_matches_hand_computation() {
        // u = a cos x: S = a cos x / 2, u S' = -a^2 cos x sin x / 2 and
        // u^2 S' = -a^3 cos^2 x sin x / 2.
        let a = 0.1;
        let g = GridSpec::new(1, 64, PI).unwrap();
        let u = Field::from_fn(g, |x| a * x[0].cos());
        let got = chemotactic_forcing(&u, 0.5).unwrap();
        let expect = Field::from_fn(g, |x| {
            let (s, c) = x[0].sin_cos();
            let flux_prime = -0.5 * a * a * (c * c - s * s) + 0.5 * a.powi(3) * (c.powi(3) - 2.0 * c * s * s);
            -flux_prime
        });
        assert!((&got - &expect).sup_norm() < 1e-15);
    }

    #[test]
    fn forcing_has_zero_mean() {
        let g = GridSpec::new(2, 32, PI).unwrap();
        let u = Field::from_fn(g, |x| 0.2 * (x[0] + 2.0 * x[1]).cos() + 0.1 * (3.0 * x[1]).sin());
        let f = chemotactic_forcing(&u, 0.5).unwrap();
        assert!(f.fourier()[0].norm() < 1e-18);
    }
}
