use serde::{Deserialize, Serialize};

use crate::ext_real;

/// Regularity `s`, integrability `p` and summability `r` of `B^s_{p,r}`.
/// `p` and `r` may be `f64::INFINITY`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesovParams {
    pub s: f64,
    #[serde(with = "ext_real")]
    pub p: f64,
    #[serde(with = "ext_real")]
    pub r: f64,
}

impl BesovParams {
    pub fn new(s: f64, p: f64, r: f64) -> Self {
        Self { s, p, r }
    }

    pub fn with_s(self, s: f64) -> Self {
        Self { s, ..self }
    }

    /// Either `s > d/p + 1` with `p` in `[1, inf]`, `r` in `(1, inf)`, or the
    /// critical case `s = d/p + 1` with `p` in `[1, inf)` and `r = 1`.
    pub fn admissible(&self, dim: usize) -> bool {
        let threshold = dim as f64 / self.p + 1.0;
        let p_ok = self.p >= 1.0;
        let supercritical =
            self.s > threshold + 1e-12 && p_ok && self.r > 1.0 && self.r.is_finite();
        let critical = (self.s - threshold).abs() <= 1e-12
            && p_ok
            && self.p.is_finite()
            && self.r == 1.0;
        supercritical || critical
    }

    pub(crate) fn validate_exponents(&self) -> Result<(), super::LpError> {
        if !self.s.is_finite() {
            return Err(super::LpError::Params(format!("s = {} is not finite", self.s)));
        }
        if self.p.is_nan() || self.p < 1.0 || self.r.is_nan() || self.r < 1.0 {
            return Err(super::LpError::Params(format!(
                "p = {}, r = {} must lie in [1, inf]",
                self.p, self.r
            )));
        }
        Ok(())
    }

    /// Compact label, e.g. `B(2,2,2)` or `B(1.5,2,inf)`.
    pub fn label(&self) -> String {
        format!("B({},{},{})", self.s, ext_real::format(self.p), ext_real::format(self.r))
    }
}
