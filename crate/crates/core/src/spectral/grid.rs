use std::f64::consts::PI;

use serde::Serialize;

use super::SpectralError;

/// Periodic grid on the torus `[-L, L)^d` with `N` points per axis.
///
/// Spectral arrays use the usual FFT ordering: axis index `i` carries the
/// integer mode `i` for `i < N/2` and `i - N` otherwise, i.e. the physical
/// wavenumber `(pi/L) * mode`. The row `mode = -N/2` (Nyquist) has no
/// partner under negation and is excluded from every multiplier.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    dim: usize,
    points_per_axis: usize,
    half_period: f64,
}

impl GridSpec {
    pub fn new(dim: usize, points_per_axis: usize, half_period: f64) -> Result<Self, SpectralError> {
        if !(1..=3).contains(&dim) {
            return Err(SpectralError::Dimension(dim));
        }
        if points_per_axis < 8 || !points_per_axis.is_power_of_two() {
            return Err(SpectralError::PointsPerAxis(points_per_axis));
        }
        if !(half_period.is_finite() && half_period > 0.0) {
            return Err(SpectralError::HalfPeriod(half_period));
        }
        Ok(Self {
            dim,
            points_per_axis,
            half_period,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points_per_axis(&self) -> usize {
        self.points_per_axis
    }

    pub fn half_period(&self) -> f64 {
        self.half_period
    }

    /// Total number of grid points, `N^d`.
    pub fn len(&self) -> usize {
        self.points_per_axis.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_period / self.points_per_axis as f64
    }

    /// Lattice spacing in frequency, `pi / L`.
    pub fn wavenumber_step(&self) -> f64 {
        PI / self.half_period
    }

    /// Largest resolvable axis frequency `pi N / (2L)`.
    pub fn k_max(&self) -> f64 {
        PI * self.points_per_axis as f64 / (2.0 * self.half_period)
    }

    /// Largest Euclidean norm over the lattice, Nyquist rows included.
    pub fn max_radius(&self) -> f64 {
        self.k_max() * (self.dim as f64).sqrt()
    }

    /// Torus volume `(2L)^d`.
    pub fn volume(&self) -> f64 {
        (2.0 * self.half_period).powi(self.dim as i32)
    }

    pub fn cell_volume(&self) -> f64 {
        self.spacing().powi(self.dim as i32)
    }

    /// Signed integer mode carried by axis index `i`.
    pub fn axis_mode(&self, i: usize) -> i64 {
        let n = self.points_per_axis;
        if i < n / 2 {
            i as i64
        } else {
            i as i64 - n as i64
        }
    }

    pub fn axis_wavenumber(&self, i: usize) -> f64 {
        self.axis_mode(i) as f64 * self.wavenumber_step()
    }

    /// Axis indices of a flat row-major index; unused trailing slots are 0.
    pub fn multi_index(&self, flat: usize) -> [usize; 3] {
        let n = self.points_per_axis;
        let mut idx = [0; 3];
        let mut rem = flat;
        for axis in (0..self.dim).rev() {
            idx[axis] = rem % n;
            rem /= n;
        }
        idx
    }

    pub fn wavevector(&self, flat: usize) -> [f64; 3] {
        let idx = self.multi_index(flat);
        let mut k = [0.0; 3];
        for axis in 0..self.dim {
            k[axis] = self.axis_wavenumber(idx[axis]);
        }
        k
    }

    pub fn wavenumber_sq(&self, flat: usize) -> f64 {
        self.wavevector(flat).iter().map(|k| k * k).sum()
    }

    pub fn wavenumber_norm(&self, flat: usize) -> f64 {
        self.wavenumber_sq(flat).sqrt()
    }

    /// Whether the spectral slot lies on a Nyquist row of any axis.
    pub fn is_nyquist(&self, flat: usize) -> bool {
        let idx = self.multi_index(flat);
        idx[..self.dim].contains(&(self.points_per_axis / 2))
    }

    /// Physical coordinates `x_i = -L + i h` of a flat index.
    pub fn position(&self, flat: usize) -> [f64; 3] {
        let idx = self.multi_index(flat);
        let h = self.spacing();
        let mut x = [0.0; 3];
        for axis in 0..self.dim {
            x[axis] = -self.half_period + idx[axis] as f64 * h;
        }
        x
    }

    /// Flat index of the mode with signed axis modes `modes` (first `dim`
    /// entries used). Modes are taken modulo `N`.
    pub fn flat_index_of_modes(&self, modes: &[i64]) -> usize {
        let n = self.points_per_axis as i64;
        modes[..self.dim]
            .iter()
            .fold(0usize, |acc, &m| acc * n as usize + m.rem_euclid(n) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional_formulas() {
        let g = GridSpec::new(1, 8, PI).unwrap();
        assert!((g.k_max() - 4.0).abs() < 1e-15);
        assert!((g.spacing() - PI / 4.0).abs() < 1e-15);

        let g = GridSpec::new(1, 4096, 16.0 * PI).unwrap();
        assert!((g.k_max() - 128.0).abs() < 1e-12);
    }

    #[test]
    fn two_dimensional_lattice_and_nyquist() {
        let g = GridSpec::new(2, 16, PI).unwrap();
        let modes: Vec<i64> = (0..16).map(|i| g.axis_mode(i)).collect();
        assert_eq!(*modes.iter().min().unwrap(), -8);
        assert_eq!(*modes.iter().max().unwrap(), 7);
        let nyquist = (0..g.len()).filter(|&f| g.is_nyquist(f)).count();
        // one row and one column of 16, sharing a corner
        assert_eq!(nyquist, 31);
        assert!(g.is_nyquist(g.flat_index_of_modes(&[-8, 3])));
        assert!(!g.is_nyquist(g.flat_index_of_modes(&[7, -7])));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(GridSpec::new(4, 16, 1.0), Err(SpectralError::Dimension(4))));
        assert!(matches!(GridSpec::new(0, 16, 1.0), Err(SpectralError::Dimension(0))));
        assert!(matches!(GridSpec::new(1, 12, 1.0), Err(SpectralError::PointsPerAxis(12))));
        assert!(matches!(GridSpec::new(1, 4, 1.0), Err(SpectralError::PointsPerAxis(4))));
        assert!(GridSpec::new(1, 16, 0.0).is_err());
        assert!(GridSpec::new(1, 16, -2.0).is_err());
        assert!(GridSpec::new(1, 16, f64::NAN).is_err());
    }

    #[test]
    fn positions_start_at_minus_half_period() {
        let g = GridSpec::new(2, 8, 2.0).unwrap();
        assert_eq!(g.position(0), [-2.0, -2.0, 0.0]);
        let x = g.position(g.len() - 1);
        assert!((x[0] - 1.5).abs() < 1e-15 && (x[1] - 1.5).abs() < 1e-15);
    }
}
