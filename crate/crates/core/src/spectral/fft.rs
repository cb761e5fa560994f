//! Multi-dimensional complex FFTs over row-major `N^d` arrays.
//!
//! Plans are cached process-wide; rustfft plans are `Send + Sync` so the
//! cache is shared across threads.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};

use super::GridSpec;

type PlanCache = Mutex<(FftPlanner<f64>, HashMap<(usize, bool), Arc<dyn Fft<f64>>>)>;

fn plan(len: usize, forward: bool) -> Arc<dyn Fft<f64>> {
    static CACHE: OnceLock<PlanCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new((FftPlanner::new(), HashMap::new())));
    let mut guard = cache.lock().expect("fft plan cache poisoned");
    let (planner, plans) = &mut *guard;
    plans
        .entry((len, forward))
        .or_insert_with(|| {
            let dir = if forward {
                FftDirection::Forward
            } else {
                FftDirection::Inverse
            };
            planner.plan_fft(len, dir)
        })
        .clone()
}

/// In-place unnormalized transform along every axis.
fn transform_axes(grid: &GridSpec, data: &mut [Complex64], forward: bool) {
    let n = grid.points_per_axis();
    let fft = plan(n, forward);
    let mut scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];

    // Last axis is contiguous.
    for line in data.chunks_exact_mut(n) {
        fft.process_with_scratch(line, &mut scratch);
    }
    if grid.dim() == 1 {
        return;
    }

    let total = data.len();
    let mut line = vec![Complex64::default(); n];
    for axis in 0..grid.dim() - 1 {
        let stride = n.pow((grid.dim() - 1 - axis) as u32);
        let block = stride * n;
        for base in (0..total).step_by(block) {
            for offset in 0..stride {
                let start = base + offset;
                for (i, slot) in line.iter_mut().enumerate() {
                    *slot = data[start + i * stride];
                }
                fft.process_with_scratch(&mut line, &mut scratch);
                for (i, value) in line.iter().enumerate() {
                    data[start + i * stride] = *value;
                }
            }
        }
    }
}

/// Parity of the multi-index sum; `x_0 = -L` turns the grid shift into a
/// sign `(-1)^{m_1 + ... + m_d}`.
fn shift_sign(grid: &GridSpec, flat: usize) -> f64 {
    let n = grid.points_per_axis();
    let mut rem = flat;
    let mut parity = 0;
    for _ in 0..grid.dim() {
        parity += rem % n;
        rem /= n;
    }
    if parity % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Fourier coefficients `c_k = N^{-d} sum_x f(x) e^{-i k.x}` with `x` the
/// physical grid positions.
pub(crate) fn forward(grid: &GridSpec, values: &[f64]) -> Vec<Complex64> {
    let mut data: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    transform_axes(grid, &mut data, true);
    let scale = 1.0 / data.len() as f64;
    for (idx, c) in data.iter_mut().enumerate() {
        *c *= scale * shift_sign(grid, idx);
    }
    data
}

/// Synthesis `f(x) = sum_k c_k e^{i k.x}`; returns the real part together
/// with the largest discarded imaginary residue.
pub(crate) fn inverse_with_residue(grid: &GridSpec, spectrum: &[Complex64]) -> (Vec<f64>, f64) {
    let mut data: Vec<Complex64> = spectrum
        .iter()
        .enumerate()
        .map(|(idx, c)| c * shift_sign(grid, idx))
        .collect();
    transform_axes(grid, &mut data, false);
    let mut residue = 0.0_f64;
    let values = data
        .iter()
        .map(|c| {
            residue = residue.max(c.im.abs());
            c.re
        })
        .collect();
    (values, residue)
}

pub(crate) fn inverse(grid: &GridSpec, spectrum: &[Complex64]) -> Vec<f64> {
    inverse_with_residue(grid, spectrum).0
}
