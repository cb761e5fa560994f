use num_complex::Complex64;

use super::{block_symbol, BesovParams, LpError, PLATEAU_RADIUS};
use crate::spectral::{Field, GridSpec};

/// Relative spectral mass tolerated outside the covered bands.
const COVERAGE_TOLERANCE: f64 = 1e-12;

/// Block symbols `chi`, `phi(2^{-j} .)` sampled on a grid's frequency
/// lattice, for `j = -1..=j_max`.
///
/// `chi + sum_{j <= j_max} phi(2^{-j} .)` telescopes to
/// `chi(2^{-(j_max+1)} .)`, which is exactly one up to the covered radius
/// `PLATEAU_RADIUS * 2^{j_max+1}`. Nyquist slots carry zero in every symbol.
#[derive(Debug, Clone)]
pub struct DyadicFamily {
    grid: GridSpec,
    symbols: Vec<Vec<f64>>,
    coverage: Vec<f64>,
    j_max: i32,
}

impl DyadicFamily {
    /// Family covering the whole lattice.
    pub fn new(grid: GridSpec) -> Result<Self, LpError> {
        Self::with_cutoff(grid, grid.max_radius())
    }

    /// Smallest family whose covered radius reaches `radius`.
    pub fn with_cutoff(grid: GridSpec, radius: f64) -> Result<Self, LpError> {
        if grid.k_max() < 8.0 / 3.0 {
            return Err(LpError::GridTooCoarse { k_max: grid.k_max() });
        }
        let mut j_max = 0;
        while PLATEAU_RADIUS * 2f64.powi(j_max + 1) < radius {
            j_max += 1;
        }
        let radii: Vec<f64> = (0..grid.len()).map(|f| grid.wavenumber_norm(f)).collect();
        let nyquist: Vec<bool> = (0..grid.len()).map(|f| grid.is_nyquist(f)).collect();
        let symbols: Vec<Vec<f64>> = (-1..=j_max)
            .map(|j| {
                radii
                    .iter()
                    .zip(&nyquist)
                    .map(|(&r, &ny)| if ny { 0.0 } else { block_symbol(j, r) })
                    .collect()
            })
            .collect();
        let mut coverage = vec![0.0; grid.len()];
        for sym in &symbols {
            for (c, s) in coverage.iter_mut().zip(sym) {
                *c += s;
            }
        }
        Ok(Self {
            grid,
            symbols,
            coverage,
            j_max,
        })
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn j_max(&self) -> i32 {
        self.j_max
    }

    /// Radius up to which the symbols sum to one.
    pub fn covered_radius(&self) -> f64 {
        PLATEAU_RADIUS * 2f64.powi(self.j_max + 1)
    }

    /// Symbol of `Delta_j` on the lattice; `None` for `j <= -2` (the zero
    /// block) and for `j > j_max`.
    pub fn symbol(&self, j: i32) -> Option<&[f64]> {
        if j < -1 || j > self.j_max {
            return None;
        }
        Some(&self.symbols[(j + 1) as usize])
    }

    /// `sum_j symbol_j` per lattice slot.
    pub fn coverage(&self) -> &[f64] {
        &self.coverage
    }

    /// Largest `|chi + sum_j phi_j - 1|` over non-Nyquist lattice points with
    /// `|xi|` inside the covered radius.
    pub fn partition_defect(&self) -> f64 {
        (0..self.grid.len())
            .filter(|&f| !self.grid.is_nyquist(f) && self.grid.wavenumber_norm(f) <= self.covered_radius())
            .map(|f| (self.coverage[f] - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// `Delta_j f`.
    pub fn block(&self, f: &Field, j: i32) -> Result<Field, LpError> {
        self.check_grid(f)?;
        if j <= -2 {
            return Ok(Field::zeros(self.grid));
        }
        let sym = self.symbol(j).ok_or(LpError::BlockOutOfRange { j, j_max: self.j_max })?;
        Ok(f.multiply_symbol(sym))
    }

    /// Relative `L^2` mass of `f - sum_j Delta_j f`.
    pub fn uncovered_fraction(&self, f: &Field) -> f64 {
        let spec = f.fourier();
        let (mut total, mut missed) = (0.0, 0.0);
        for (c, cov) in spec.iter().zip(&self.coverage) {
            let e = c.norm_sqr();
            total += e;
            missed += e * (1.0 - cov) * (1.0 - cov);
        }
        if total == 0.0 {
            0.0
        } else {
            (missed / total).sqrt()
        }
    }

    /// `||Delta_j f||_{L^p}` for `j = -1..=j_max` (index `j + 1`).
    pub fn block_norms(&self, f: &Field, p: f64) -> Result<Vec<f64>, LpError> {
        self.check_grid(f)?;
        let relative = self.uncovered_fraction(f);
        if relative > COVERAGE_TOLERANCE {
            return Err(LpError::UncoveredSpectrum { relative });
        }
        let spec = f.fourier();
        let mut masked = vec![Complex64::default(); spec.len()];
        self.symbols
            .iter()
            .map(|sym| {
                let mut any = false;
                for ((m, &c), &s) in masked.iter_mut().zip(spec.iter()).zip(sym) {
                    *m = c * s;
                    any |= s != 0.0 && c != Complex64::default();
                }
                if !any {
                    return Ok(0.0);
                }
                let block = Field::from_spectrum(self.grid, masked.clone())?;
                Ok(block.lp_norm(p)?)
            })
            .collect()
    }

    /// Nonhomogeneous Besov norm
    /// `(sum_{j >= -1} 2^{s j r} ||Delta_j f||_{L^p}^r)^{1/r}` (sup if `r = inf`).
    pub fn besov_norm(&self, f: &Field, bp: &BesovParams) -> Result<f64, LpError> {
        bp.validate_exponents()?;
        let norms = self.block_norms(f, bp.p)?;
        Ok(weighted_sum(&norms, bp.s, bp.r))
    }
}

impl DyadicFamily {
    fn check_grid(&self, f: &Field) -> Result<(), LpError> {
        if *f.grid() != self.grid {
            return Err(crate::spectral::SpectralError::GridMismatch.into());
        }
        Ok(())
    }
}

/// Combines block norms (index `j + 1`) into the Besov norm with weight `2^{s j}`.
pub(crate) fn weighted_sum(block_norms: &[f64], s: f64, r: f64) -> f64 {
    let weighted = block_norms
        .iter()
        .enumerate()
        .map(|(i, n)| 2f64.powf(s * (i as f64 - 1.0)) * n);
    if r.is_infinite() {
        weighted.fold(0.0, f64::max)
    } else {
        weighted.map(|w| w.powf(r)).sum::<f64>().powf(1.0 / r)
    }
}
