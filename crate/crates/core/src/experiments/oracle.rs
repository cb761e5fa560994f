use std::collections::BTreeMap;

use super::ExperimentError;
use crate::littlewood_paley::{block_symbol, data_frequency, BesovParams, DataProfile};
use crate::spectral::GridSpec;

/// `||(e^{t eps Lap} - Id) u_0^n||_{B^s_{2,r}}` evaluated on the lattice from
/// the closed-form Fourier coefficients of `u_0^n`, without transforms:
/// each block norm is `(2L)^{d/2} (sum_k |phi_j(k) (1 - e^{-t eps |k|^2}) c_k|^2)^{1/2}`.
///
/// Only `p = 2` has a transform-free block norm.
pub fn heat_defect_besov(
    n: u32,
    bp: &BesovParams,
    grid: &GridSpec,
    profile: &DataProfile,
    epsilon: f64,
    t: f64,
) -> Result<f64, ExperimentError> {
    if bp.p != 2.0 {
        return Err(ExperimentError::Spec(format!(
            "closed-form oracle needs p = 2, got {}",
            bp.p
        )));
    }
    let k0 = data_frequency(n);
    let amplitude = 2f64.powf(-(n as f64) * bp.s);
    let axis_scale = 1.0 / (2.0 * grid.half_period());
    let dim = grid.dim();
    let mut energy: BTreeMap<i32, f64> = BTreeMap::new();
    for flat in 0..grid.len() {
        if grid.is_nyquist(flat) {
            continue;
        }
        let k = grid.wavevector(flat);
        let mut c = 0.5 * (profile.transform(k[0] - k0) + profile.transform(k[0] + k0)) * axis_scale;
        for &ki in &k[1..dim] {
            c *= profile.transform(ki) * axis_scale;
        }
        if c == 0.0 {
            continue;
        }
        let k_sq: f64 = k[..dim].iter().map(|v| v * v).sum();
        let defect = amplitude * c * (1.0 - (-t * epsilon * k_sq).exp());
        let radius = k_sq.sqrt();
        // blocks whose annulus can contain `radius`
        let top = if radius > 0.0 { radius.log2().ceil() as i32 + 1 } else { -1 };
        for j in -1..=top.max(-1) {
            let sym = block_symbol(j, radius);
            if sym != 0.0 {
                *energy.entry(j).or_default() += (sym * defect).powi(2);
            }
        }
    }
    let volume = grid.volume();
    let weighted = energy
        .iter()
        .map(|(&j, &e)| 2f64.powf(bp.s * j as f64) * (volume * e).sqrt());
    Ok(if bp.r.is_infinite() {
        weighted.fold(0.0, f64::max)
    } else {
        weighted.map(|w| w.powf(bp.r)).sum::<f64>().powf(1.0 / bp.r)
    })
}
