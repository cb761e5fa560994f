use std::borrow::Cow;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use super::{fft, GridSpec, SpectralError};

/// Real scalar field on a periodic grid.
///
/// Either side (physical values or Fourier coefficients) may be the current
/// one; conversions produce a new field with both sides valid. Every
/// operator is pure.
#[derive(Debug, Clone)]
pub struct Field {
    grid: GridSpec,
    values: Option<Vec<f64>>,
    spectrum: Option<Vec<Complex64>>,
}

impl Field {
    pub fn zeros(grid: GridSpec) -> Self {
        Self {
            grid,
            values: Some(vec![0.0; grid.len()]),
            spectrum: Some(vec![Complex64::default(); grid.len()]),
        }
    }

    pub fn from_values(grid: GridSpec, values: Vec<f64>) -> Result<Self, SpectralError> {
        check_len(&grid, values.len())?;
        Ok(Self {
            grid,
            values: Some(values),
            spectrum: None,
        })
    }

    pub fn from_spectrum(grid: GridSpec, spectrum: Vec<Complex64>) -> Result<Self, SpectralError> {
        check_len(&grid, spectrum.len())?;
        Ok(Self {
            grid,
            values: None,
            spectrum: Some(spectrum),
        })
    }

    /// Samples `f` at the physical grid positions (`x[..d]` is meaningful).
    pub fn from_fn(grid: GridSpec, f: impl Fn(&[f64]) -> f64) -> Self {
        let values = (0..grid.len())
            .map(|flat| f(&grid.position(flat)[..grid.dim()]))
            .collect();
        Self {
            grid,
            values: Some(values),
            spectrum: None,
        }
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn values(&self) -> Option<&[f64]> {
        self.values.as_deref()
    }

    pub fn spectrum(&self) -> Option<&[Complex64]> {
        self.spectrum.as_deref()
    }

    pub fn has_values(&self) -> bool {
        self.values.is_some()
    }

    pub fn has_spectrum(&self) -> bool {
        self.spectrum.is_some()
    }

    /// Physical values, synthesizing them if only the spectrum is current.
    pub fn physical(&self) -> Cow<'_, [f64]> {
        match (&self.values, &self.spectrum) {
            (Some(v), _) => Cow::Borrowed(v),
            (None, Some(s)) => Cow::Owned(fft::inverse(&self.grid, s)),
            (None, None) => unreachable!("field without a valid side"),
        }
    }

    /// Fourier coefficients, analyzing the values if needed.
    pub fn fourier(&self) -> Cow<'_, [Complex64]> {
        match (&self.spectrum, &self.values) {
            (Some(s), _) => Cow::Borrowed(s),
            (None, Some(v)) => Cow::Owned(fft::forward(&self.grid, v)),
            (None, None) => unreachable!("field without a valid side"),
        }
    }

    pub fn into_spectrum(self) -> Vec<Complex64> {
        match self.spectrum {
            Some(s) => s,
            None => fft::forward(&self.grid, self.values.as_deref().expect("valid side")),
        }
    }

    pub fn to_fourier(&self) -> Field {
        Field {
            grid: self.grid,
            values: Some(self.physical().into_owned()),
            spectrum: Some(self.fourier().into_owned()),
        }
    }

    pub fn to_physical(&self) -> Field {
        self.to_fourier()
    }

    /// Largest imaginary part discarded when synthesizing physical values.
    /// Zero (to rounding) for Hermitian spectra.
    pub fn synthesis_residue(&self) -> f64 {
        fft::inverse_with_residue(&self.grid, &self.fourier()).1
    }

    /// Pointwise multiplication of the spectrum by a real symbol given per
    /// flat index. Nyquist slots are zeroed.
    pub fn apply_symbol(&self, symbol: impl Fn(usize) -> f64) -> Field {
        self.map_spectrum(|flat, c| c * symbol(flat))
    }

    /// Pointwise multiplication by a precomputed real symbol array.
    pub fn multiply_symbol(&self, symbol: &[f64]) -> Field {
        assert_eq!(symbol.len(), self.grid.len(), "symbol length");
        self.apply_symbol(|flat| symbol[flat])
    }

    fn map_spectrum(&self, f: impl Fn(usize, Complex64) -> Complex64) -> Field {
        let grid = self.grid;
        let spectrum = self
            .fourier()
            .iter()
            .enumerate()
            .map(|(flat, &c)| {
                if grid.is_nyquist(flat) {
                    Complex64::default()
                } else {
                    f(flat, c)
                }
            })
            .collect();
        Field {
            grid,
            values: None,
            spectrum: Some(spectrum),
        }
    }

    /// Component `i` has spectrum `i k_i f(k)`.
    pub fn gradient(&self) -> Vec<Field> {
        (0..self.grid.dim())
            .map(|axis| {
                let grid = self.grid;
                self.map_spectrum(|flat, c| c * Complex64::new(0.0, grid.wavevector(flat)[axis]))
            })
            .collect()
    }

    pub fn divergence(components: &[Field]) -> Result<Field, SpectralError> {
        let first = components.first().ok_or(SpectralError::Components {
            expected: 1,
            got: 0,
        })?;
        let grid = first.grid;
        if components.len() != grid.dim() {
            return Err(SpectralError::Components {
                expected: grid.dim(),
                got: components.len(),
            });
        }
        if components.iter().any(|c| c.grid != grid) {
            return Err(SpectralError::GridMismatch);
        }
        let mut acc = vec![Complex64::default(); grid.len()];
        for (axis, comp) in components.iter().enumerate() {
            for (flat, (slot, &c)) in acc.iter_mut().zip(comp.fourier().iter()).enumerate() {
                if !grid.is_nyquist(flat) {
                    *slot += c * Complex64::new(0.0, grid.wavevector(flat)[axis]);
                }
            }
        }
        Field::from_spectrum(grid, acc)
    }

    /// Multiplier `-|k|^2`.
    pub fn laplacian(&self) -> Field {
        let grid = self.grid;
        self.apply_symbol(|flat| -grid.wavenumber_sq(flat))
    }

    /// `(1 - Delta)^{-1}`: multiplier `1 / (1 + |k|^2)`.
    pub fn helmholtz_inverse(&self) -> Field {
        let grid = self.grid;
        self.apply_symbol(|flat| 1.0 / (1.0 + grid.wavenumber_sq(flat)))
    }

    /// Heat semigroup `e^{theta Delta}`: multiplier `exp(-theta |k|^2)`.
    pub fn heat_propagate(&self, theta: f64) -> Result<Field, SpectralError> {
        if !(theta >= 0.0) {
            return Err(SpectralError::NegativeTime(theta));
        }
        let grid = self.grid;
        Ok(self.apply_symbol(|flat| (-theta * grid.wavenumber_sq(flat)).exp()))
    }

    /// Zeroes every mode with some axis frequency `|k_i| > fraction * K_max`.
    pub fn dealias(&self, fraction: f64) -> Result<Field, SpectralError> {
        if !(fraction > 0.0 && fraction <= 1.0) {
            return Err(SpectralError::DealiasFraction(fraction));
        }
        let mask = dealias_mask(&self.grid, fraction);
        let spectrum = self
            .fourier()
            .iter()
            .zip(&mask)
            .map(|(&c, &keep)| if keep { c } else { Complex64::default() })
            .collect();
        Field::from_spectrum(self.grid, spectrum)
    }

    /// Rectangle-rule `L^p` norm on the torus; `p = inf` is the grid maximum.
    pub fn lp_norm(&self, p: f64) -> Result<f64, SpectralError> {
        lp_norm_of_values(&self.grid, &self.physical(), p)
    }

    pub fn sup_norm(&self) -> f64 {
        self.physical().iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// `L^2` norm from the coefficients via Parseval.
    pub fn parseval_l2(&self) -> f64 {
        let energy: f64 = self.fourier().iter().map(|c| c.norm_sqr()).sum();
        (self.grid.volume() * energy).sqrt()
    }

    /// `int u dx`, read off the zero mode.
    pub fn integral(&self) -> f64 {
        self.grid.volume() * self.fourier()[0].re
    }

    pub fn try_add(&self, other: &Field) -> Result<Field, SpectralError> {
        self.combine(other, 1.0)
    }

    pub fn try_sub(&self, other: &Field) -> Result<Field, SpectralError> {
        self.combine(other, -1.0)
    }

    pub fn scale(&self, factor: f64) -> Field {
        Field {
            grid: self.grid,
            values: self.values.as_ref().map(|v| v.iter().map(|x| x * factor).collect()),
            spectrum: self
                .spectrum
                .as_ref()
                .map(|s| s.iter().map(|c| c * factor).collect()),
        }
    }

    fn combine(&self, other: &Field, sign: f64) -> Result<Field, SpectralError> {
        if self.grid != other.grid {
            return Err(SpectralError::GridMismatch);
        }
        if self.has_spectrum() || other.has_spectrum() {
            let a = self.fourier();
            let b = other.fourier();
            let spectrum = a.iter().zip(b.iter()).map(|(x, y)| x + y * sign).collect();
            Field::from_spectrum(self.grid, spectrum)
        } else {
            let a = self.physical();
            let b = other.physical();
            let values = a.iter().zip(b.iter()).map(|(x, y)| x + y * sign).collect();
            Field::from_values(self.grid, values)
        }
    }
}

impl Add for &Field {
    type Output = Field;

    /// Panics if the grids differ; use [`Field::try_add`] otherwise.
    fn add(self, rhs: &Field) -> Field {
        self.try_add(rhs).expect("adding fields on different grids")
    }
}

impl Sub for &Field {
    type Output = Field;

    fn sub(self, rhs: &Field) -> Field {
        self.try_sub(rhs).expect("subtracting fields on different grids")
    }
}

impl Mul<f64> for &Field {
    type Output = Field;

    fn mul(self, rhs: f64) -> Field {
        self.scale(rhs)
    }
}

fn check_len(grid: &GridSpec, got: usize) -> Result<(), SpectralError> {
    if got != grid.len() {
        return Err(SpectralError::Length {
            expected: grid.len(),
            got,
        });
    }
    Ok(())
}

pub(crate) fn dealias_mask(grid: &GridSpec, fraction: f64) -> Vec<bool> {
    let cutoff = fraction * grid.k_max();
    (0..grid.len())
        .map(|flat| {
            grid.wavevector(flat)[..grid.dim()]
                .iter()
                .all(|k| k.abs() <= cutoff * (1.0 + 1e-14))
        })
        .collect()
}

pub(crate) fn lp_norm_of_values(grid: &GridSpec, values: &[f64], p: f64) -> Result<f64, SpectralError> {
    if p.is_nan() || p < 1.0 {
        return Err(SpectralError::Exponent(p));
    }
    if p.is_infinite() {
        return Ok(values.iter().fold(0.0_f64, |m, v| m.max(v.abs())));
    }
    let sum: f64 = if p == 2.0 {
        values.iter().map(|v| v * v).sum()
    } else if p == 1.0 {
        values.iter().map(|v| v.abs()).sum()
    } else {
        values.iter().map(|v| v.abs().powf(p)).sum()
    };
    Ok((sum * grid.cell_volume()).powf(1.0 / p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn line(n: usize, l: f64) -> GridSpec {
        GridSpec::new(1, n, l).unwrap()
    }

    #[test]
    fn cosine_has_two_half_coefficients() {
        let g = line(16, PI);
        let f = Field::from_fn(g, |x| (2.0 * x[0]).cos()).to_fourier();
        let spec = f.spectrum().unwrap();
        for (flat, c) in spec.iter().enumerate() {
            let m = g.axis_mode(flat);
            if m.abs() == 2 {
                assert!((c.re - 0.5).abs() < 1e-15 && c.im.abs() < 1e-15, "{m}: {c}");
            } else {
                assert!(c.norm() < 1e-15, "{m}: {c}");
            }
        }
    }

    #[test]
    fn zero_field_has_zero_spectrum() {
        let g = GridSpec::new(2, 8, 1.0).unwrap();
        let f = Field::from_values(g, vec![0.0; g.len()]).unwrap().to_fourier();
        assert!(f.spectrum().unwrap().iter().all(|c| c.norm() == 0.0));
    }

    #[test]
    fn derivative_of_single_mode() {
        let g = line(32, PI);
        let f = Field::from_fn(g, |x| (3.0 * x[0]).sin());
        let df = &f.gradient()[0];
        let expect = Field::from_fn(g, |x| 3.0 * (3.0 * x[0]).cos());
        let err = (df - &expect).sup_norm();
        assert!(err < 1e-13, "{err}");

        let c = Field::from_fn(g, |_| 2.5);
        assert!(c.gradient()[0].sup_norm() < 1e-15);
    }

    #[test]
    fn helmholtz_examples() {
        let g = line(32, PI);
        let f = Field::from_fn(g, |x| x[0].cos());
        let s = f.helmholtz_inverse();
        let expect = Field::from_fn(g, |x| 0.5 * x[0].cos());
        assert!((&s - &expect).sup_norm() < 1e-15);

        let c = Field::from_fn(g, |_| 3.0).helmholtz_inverse();
        assert!(c.physical().iter().all(|v| (v - 3.0).abs() < 1e-14));

        let g2 = GridSpec::new(2, 16, PI).unwrap();
        let f2 = Field::from_fn(g2, |x| (2.0 * x[0]).cos() * (2.0 * x[1]).cos());
        let s2 = f2.helmholtz_inverse();
        assert!((&s2 - &(&f2 * (1.0 / 9.0))).sup_norm() < 1e-15);
    }

    #[test]
    fn heat_examples_and_errors() {
        let g = line(32, PI);
        let f = Field::from_fn(g, |x| (2.0 * x[0]).cos());
        let h = f.heat_propagate(0.25).unwrap();
        let expect = &f * (-1.0_f64).exp();
        assert!((&h - &expect).sup_norm() < 1e-15);
        assert!((&f.heat_propagate(0.0).unwrap() - &f).sup_norm() < 1e-15);
        assert_eq!(f.heat_propagate(-0.1).unwrap_err(), SpectralError::NegativeTime(-0.1));
    }

    #[test]
    fn lp_norm_examples() {
        let g = line(4096, PI);
        let one = Field::from_fn(g, |_| 1.0);
        assert!((one.lp_norm(2.0).unwrap() - (2.0 * PI).sqrt()).abs() < 1e-12);
        let s = Field::from_fn(g, |x| (4.0 * x[0]).sin());
        assert!((s.lp_norm(2.0).unwrap() - PI.sqrt()).abs() < 1e-12);
        assert!((s.lp_norm(f64::INFINITY).unwrap() - 1.0).abs() < 1e-3);
        assert_eq!(s.lp_norm(0.5).unwrap_err(), SpectralError::Exponent(0.5));
        assert!(s.lp_norm(f64::NAN).is_err());
    }

    #[test]
    fn dealias_examples() {
        let g = line(32, PI);
        let f = Field::from_fn(g, |x| x[0].cos() + (13.0 * x[0]).sin());
        let same = f.dealias(1.0).unwrap();
        assert!((&same - &f).sup_norm() < 1e-14);

        let high = Field::from_fn(g, |x| (13.0 * x[0]).sin()).dealias(0.5).unwrap();
        assert!(high.sup_norm() < 1e-14);

        let once = f.dealias(0.5).unwrap();
        let twice = once.dealias(0.5).unwrap();
        assert_eq!(once.spectrum().unwrap(), twice.spectrum().unwrap());
        assert!(f.dealias(0.0).is_err());
        assert!(f.dealias(1.5).is_err());
    }

    #[test]
    fn divergence_rejects_bad_component_lists() {
        let g = GridSpec::new(2, 8, 1.0).unwrap();
        let f = Field::zeros(g);
        assert!(matches!(
            Field::divergence(std::slice::from_ref(&f)),
            Err(SpectralError::Components { expected: 2, got: 1 })
        ));
        let other = Field::zeros(GridSpec::new(2, 16, 1.0).unwrap());
        assert_eq!(Field::divergence(&[f, other]).unwrap_err(), SpectralError::GridMismatch);
        assert!(Field::from_values(g, vec![0.0; 3]).is_err());
    }

    #[test]
    fn nyquist_row_is_dropped_by_multipliers() {
        let g = line(16, PI);
        // (-1)^i is the pure Nyquist mode
        let f = Field::from_fn(g, |x| (8.0 * x[0]).cos());
        assert!(f.to_fourier().spectrum().unwrap()[8].norm() > 0.9);
        assert!(f.laplacian().sup_norm() < 1e-15);
        assert!(f.helmholtz_inverse().sup_norm() < 1e-15);
    }
}
