use serde::Serialize;

use super::KsError;
use crate::littlewood_paley::BesovParams;
use crate::spectral::GridSpec;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolverConfig {
    /// Diffusivity, in `[0, 1)`.
    pub epsilon: f64,
    pub dt: f64,
    pub horizon: f64,
    /// Modes with an axis frequency above `dealias_fraction * K_max` are
    /// dropped from the nonlinearity. One half keeps cubic products exact.
    pub dealias_fraction: f64,
    /// Sorted times in `[0, horizon]` at which snapshots are kept.
    pub save_times: Vec<f64>,
    /// Abort once `sup |u|` exceeds this.
    pub blowup_ceiling: f64,
    /// Simpson steps for the Duhamel integral of `u2`.
    pub quad_steps: usize,
    /// Besov norms recorded for each snapshot.
    pub besov_diagnostics: Vec<BesovParams>,
}

impl SolverConfig {
    pub const DEFAULT_DEALIAS_FRACTION: f64 = 0.5;
    pub const DEFAULT_BLOWUP_CEILING: f64 = 10.0;
    pub const DEFAULT_QUAD_STEPS: usize = 64;

    /// Defaults: `dt = 0.5 / K_max`, half-rule dealiasing, a single snapshot
    /// at the horizon.
    pub fn new(grid: &GridSpec, epsilon: f64, horizon: f64) -> Self {
        Self {
            epsilon,
            dt: 0.5 / grid.k_max(),
            horizon,
            dealias_fraction: Self::DEFAULT_DEALIAS_FRACTION,
            save_times: vec![horizon],
            blowup_ceiling: Self::DEFAULT_BLOWUP_CEILING,
            quad_steps: Self::DEFAULT_QUAD_STEPS,
            besov_diagnostics: Vec::new(),
        }
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_dt(mut self, dt: f64) -> Self {
        self.dt = dt;
        self
    }

    /// Also moves the horizon to the last save time if it lies beyond.
    pub fn with_save_times(mut self, times: Vec<f64>) -> Self {
        if let Some(&last) = times.last() {
            self.horizon = self.horizon.max(last);
        }
        self.save_times = times;
        self
    }

    pub fn with_dealias_fraction(mut self, fraction: f64) -> Self {
        self.dealias_fraction = fraction;
        self
    }

    pub fn with_blowup_ceiling(mut self, ceiling: f64) -> Self {
        self.blowup_ceiling = ceiling;
        self
    }

    pub fn with_quad_steps(mut self, steps: usize) -> Self {
        self.quad_steps = steps;
        self
    }

    pub fn with_besov_diagnostics(mut self, params: Vec<BesovParams>) -> Self {
        self.besov_diagnostics = params;
        self
    }

    pub fn validate(&self) -> Result<(), KsError> {
        let bad = |msg: String| Err(KsError::Config(msg));
        if !(0.0..1.0).contains(&self.epsilon) {
            return bad(format!("epsilon = {} outside [0, 1)", self.epsilon));
        }
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return bad(format!("dt = {} must be positive", self.dt));
        }
        if !(self.horizon > 0.0 && self.horizon.is_finite()) {
            return bad(format!("horizon = {} must be positive", self.horizon));
        }
        if !(self.dealias_fraction > 0.0 && self.dealias_fraction <= 1.0) {
            return bad(format!("dealias fraction {} outside (0, 1]", self.dealias_fraction));
        }
        if self.save_times.windows(2).any(|w| w[1] <= w[0]) {
            return bad("save times must be strictly increasing".into());
        }
        if self
            .save_times
            .iter()
            .any(|&t| !(0.0..=self.horizon).contains(&t))
        {
            return bad(format!("save times must lie in [0, {}]", self.horizon));
        }
        if !(self.blowup_ceiling > 0.0) {
            return bad("blow-up ceiling must be positive".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_validation() {
        let g = GridSpec::new(1, 4096, 16.0 * std::f64::consts::PI).unwrap();
        let cfg = SolverConfig::new(&g, 0.01, 0.2);
        assert!((cfg.dt - 0.5 / 128.0).abs() < 1e-15);
        assert!(cfg.validate().is_ok());
        assert!(cfg.clone().with_epsilon(1.0).validate().is_err());
        assert!(cfg.clone().with_epsilon(-0.1).validate().is_err());
        assert!(cfg.clone().with_dt(0.0).validate().is_err());
        assert!(cfg.clone().with_dealias_fraction(0.0).validate().is_err());
        assert!(cfg.clone().with_save_times(vec![0.1, 0.05]).validate().is_err());
        let moved = cfg.clone().with_save_times(vec![0.1, 0.3]);
        assert_eq!(moved.horizon, 0.3);
        assert!(moved.validate().is_ok());
    }
}
