//! Property suite behind `besov-ks validate`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Check, ExperimentError, ExperimentSpec, GridRule};
use crate::keller_segel::{solve, SolverConfig};
use crate::littlewood_paley::{initial_data, BesovParams, DataProfile, DyadicFamily};
use crate::spectral::{Field, GridSpec};

/// Frozen interval for `||grad f||_{L^p} / (2^j ||f||_{L^p})` over fields
/// spectrally supported in the annulus of `Delta_j`.
pub const BERNSTEIN_INTERVAL: (f64, f64) = (1.5, 2.5);

const SEED: u64 = 0x5eed_0b35;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn lines(&self) -> Vec<String> {
        self.checks.iter().map(Check::line).collect()
    }
}

/// Runs every property and collects one check per property.
pub fn run_validation() -> Result<ValidationReport, ExperimentError> {
    let mut checks = vec![
        fft_round_trip(),
        partition_of_unity()?,
        block_localization()?,
        mass_conservation()?,
    ];
    checks.extend(bernstein()?);
    checks.push(self_convergence()?);
    Ok(ValidationReport {
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

fn random_field(grid: GridSpec, rng: &mut ChaCha8Rng) -> Field {
    let values = (0..grid.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    Field::from_values(grid, values).expect("length matches")
}

/// Largest `max |f - F^{-1} F f| / max |f|` over random fields in `d = 1, 2, 3`.
pub fn fft_round_trip() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let grids = [(1, 1024, PI), (2, 64, 2.0 * PI), (3, 16, 1.0)];
    let mut worst: f64 = 0.0;
    for (d, n, l) in grids {
        let grid = GridSpec::new(d, n, l).expect("valid grid");
        for _ in 0..4 {
            let f = random_field(grid, &mut rng);
            let spectrum = f.to_fourier().into_spectrum();
            let back = Field::from_spectrum(grid, spectrum).expect("length matches");
            let dev = back
                .physical()
                .iter()
                .zip(f.physical().iter())
                .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
            worst = worst.max(dev / f.sup_norm());
        }
    }
    Check::at_most("fft_round_trip", worst, 0.0, 1e-12)
}

/// `|chi + sum_j phi_j - 1|` on the lattice of several grids.
pub fn partition_of_unity() -> Result<Check, ExperimentError> {
    let grids = [(1, 4096, 16.0 * PI), (2, 128, 2.0 * PI), (3, 32, PI)];
    let mut worst: f64 = 0.0;
    for (d, n, l) in grids {
        let family = DyadicFamily::new(GridSpec::new(d, n, l)?)?;
        worst = worst.max(family.partition_defect());
    }
    Ok(Check::at_most("partition_of_unity", worst, 0.0, 1e-12))
}

/// `||u_0^n - Delta_n u_0^n||_{L^2} / ||u_0^n||_{L^2}` for `n = 3..=5`.
pub fn block_localization() -> Result<Check, ExperimentError> {
    let bp = BesovParams::new(2.0, 2.0, 2.0);
    let half_period = 16.0 * PI;
    let mut worst: f64 = 0.0;
    for n in 3..=5 {
        let grid = GridSpec::new(1, GridRule::Linear.points_for(n, half_period), half_period)?;
        let profile = DataProfile::new(&grid);
        let u0 = initial_data(n, &bp, &grid, &profile)?;
        let family = DyadicFamily::new(grid)?;
        let off = &u0 - &family.block(&u0, n as i32)?;
        worst = worst.max(off.parseval_l2() / u0.parseval_l2());
    }
    Ok(Check::at_most("block_localization", worst, 0.0, 1e-12))
}

/// `|int u(t) - int u_0| / (1 + |int u_0|)` for PKS and HKS.
pub fn mass_conservation() -> Result<Check, ExperimentError> {
    let grid = GridSpec::new(1, 256, PI)?;
    let u0 = Field::from_fn(grid, |x| 0.2 + 0.1 * x[0].cos() + 0.05 * (3.0 * x[0]).sin());
    let m0 = u0.integral();
    let mut worst: f64 = 0.0;
    for eps in [0.0, 0.05] {
        let cfg = SolverConfig::new(&grid, eps, 1.0).with_save_times(vec![0.25, 0.5, 1.0]);
        for snap in solve(&u0, &cfg)?.snapshots {
            worst = worst.max((snap.mass - m0).abs() / (1.0 + m0.abs()));
        }
    }
    Ok(Check::at_most("mass_conservation", worst, 0.0, 1e-10))
}

/// Min and max of the Bernstein ratio per `p` in `{1, 2, inf}` over
/// `j = 3, 4, 5`, against [`BERNSTEIN_INTERVAL`].
pub fn bernstein() -> Result<Vec<Check>, ExperimentError> {
    let grid = GridSpec::new(1, 1024, PI)?;
    let family = DyadicFamily::new(grid)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let (lo, hi) = BERNSTEIN_INTERVAL;
    let mut checks = Vec::new();
    for p in [1.0, 2.0, f64::INFINITY] {
        let (mut min, mut max) = (f64::INFINITY, 0.0f64);
        for j in 3..=5 {
            let ratios = bernstein_ratios(&family, j, p, 8, &mut rng)?;
            for r in ratios {
                min = min.min(r);
                max = max.max(r);
            }
        }
        let label = crate::ext_real::format(p);
        checks.push(Check::at_least(format!("bernstein_min p={label}"), min, lo, 0.0));
        checks.push(Check::at_most(format!("bernstein_max p={label}"), max, hi, 0.0));
    }
    Ok(checks)
}

/// `||grad f||_{L^p} / (2^j ||f||_{L^p})` for `samples` random fields whose
/// spectrum lies in the support of the `Delta_j` symbol.
pub fn bernstein_ratios(
    family: &DyadicFamily,
    j: i32,
    p: f64,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<f64>, ExperimentError> {
    let grid = *family.grid();
    let symbol = family
        .symbol(j)
        .ok_or(crate::littlewood_paley::LpError::BlockOutOfRange { j, j_max: family.j_max() })?;
    (0..samples)
        .map(|_| {
            let spectrum = symbol
                .iter()
                .map(|&s| {
                    if s > 0.0 {
                        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                    } else {
                        Complex64::default()
                    }
                })
                .collect();
            // real part of the synthesis = Hermitian projection, same support
            let f = Field::from_spectrum(grid, spectrum)?.to_physical();
            let f = Field::from_values(grid, f.physical().into_owned())?;
            let grad = f.gradient();
            let num = grad.iter().map(|g| g.lp_norm(p)).collect::<Result<Vec<_>, _>>()?;
            let num = num.iter().map(|v| v * v).sum::<f64>().sqrt();
            Ok(num / (2f64.powi(j) * f.lp_norm(p)?))
        })
        .collect()
}

/// Observed order `log2(|u_dt - u_{dt/2}| / |u_{dt/2} - u_{dt/4}|)` of the
/// integrator on `u_0^5` with `eps = 2^{-10}` up to `t = 0.2`.
pub fn self_convergence() -> Result<Check, ExperimentError> {
    let order = self_convergence_order(5, 0.05)?;
    Ok(Check::within("self_convergence_order", order, 4.0, 0.5))
}

pub fn self_convergence_order(n: u32, dt: f64) -> Result<f64, ExperimentError> {
    let spec = ExperimentSpec::new(super::Scenario::E4);
    let grid = spec.grid_for(n)?;
    let profile = DataProfile::new(&grid);
    let u0 = initial_data(n, &spec.besov, &grid, &profile)?;
    let eps = ExperimentSpec::epsilon(n);
    let at = |dt: f64| -> Result<Field, ExperimentError> {
        let cfg = SolverConfig::new(&grid, eps, 0.2).with_dt(dt);
        Ok(solve(&u0, &cfg)?.snapshots.pop().expect("one snapshot").field)
    };
    let (a, b, c) = (at(dt)?, at(dt / 2.0)?, at(dt / 4.0)?);
    let e1 = (&a - &b).parseval_l2();
    let e2 = (&b - &c).parseval_l2();
    Ok((e1 / e2).log2())
}
