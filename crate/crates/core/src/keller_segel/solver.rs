use num_complex::Complex64;

use super::nonlinear::Chemotaxis;
use super::{KsError, SolverConfig};
use crate::littlewood_paley::{BesovParams, DyadicFamily};
use crate::spectral::Field;

#[derive(Debug, Clone)]
pub struct Snapshot {
    pub time: f64,
    pub field: Field,
    /// `int u dx`.
    pub mass: f64,
    pub sup_norm: f64,
    pub besov: Vec<(BesovParams, f64)>,
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub epsilon: f64,
    pub snapshots: Vec<Snapshot>,
}

impl Trajectory {
    pub fn times(&self) -> Vec<f64> {
        self.snapshots.iter().map(|s| s.time).collect()
    }

    /// Snapshot saved at `time` (matched to within `1e-12`).
    pub fn at(&self, time: f64) -> Option<&Snapshot> {
        self.snapshots
            .iter()
            .find(|s| (s.time - time).abs() <= 1e-12 * (1.0 + time.abs()))
    }

    pub fn last(&self) -> Option<&Snapshot> {
        self.snapshots.last()
    }
}

/// Integrates from `u0` up to every save time with the integrating-factor
/// RK4 scheme. Steps within each segment between save times are uniform and
/// land exactly on the save time.
pub fn solve(u0: &Field, cfg: &SolverConfig) -> Result<Trajectory, KsError> {
    cfg.validate()?;
    let op = Chemotaxis::new(*u0.grid(), cfg.dealias_fraction)?;
    let family = if cfg.besov_diagnostics.is_empty() {
        None
    } else {
        Some(DyadicFamily::new(*u0.grid())?)
    };

    let mut state = u0.fourier().into_owned();
    let mut time = 0.0;
    let mut snapshots = Vec::with_capacity(cfg.save_times.len());
    let mut stepper = Stepper::new(&op, cfg.epsilon);

    for &target in &cfg.save_times {
        let span = target - time;
        if span > 0.0 {
            let steps = ((span / cfg.dt) - 1e-9).ceil().max(1.0) as usize;
            let h = span / steps as f64;
            for _ in 0..steps {
                let sup = stepper.step(&mut state, h);
                check_ceiling(time, sup, cfg.blowup_ceiling)?;
                time += h;
            }
            time = target;
        }
        let field = Field::from_spectrum(*u0.grid(), state.clone())?.to_fourier();
        let sup_norm = field.sup_norm();
        check_ceiling(time, sup_norm, cfg.blowup_ceiling)?;
        let besov = match &family {
            Some(fam) => cfg
                .besov_diagnostics
                .iter()
                .map(|bp| Ok((*bp, fam.besov_norm(&field, bp)?)))
                .collect::<Result<_, KsError>>()?,
            None => Vec::new(),
        };
        snapshots.push(Snapshot {
            time,
            mass: field.integral(),
            sup_norm,
            field,
            besov,
        });
    }
    Ok(Trajectory {
        epsilon: cfg.epsilon,
        snapshots,
    })
}

fn check_ceiling(time: f64, sup: f64, ceiling: f64) -> Result<(), KsError> {
    if !(sup <= ceiling) {
        return Err(KsError::BlowUp { time, sup, ceiling });
    }
    Ok(())
}

/// Lawson RK4 with cached half- and full-step heat factors.
struct Stepper<'a> {
    op: &'a Chemotaxis,
    epsilon: f64,
    cached_h: f64,
    half: Vec<f64>,
    full: Vec<f64>,
}

impl<'a> Stepper<'a> {
    fn new(op: &'a Chemotaxis, epsilon: f64) -> Self {
        Self {
            op,
            epsilon,
            cached_h: f64::NAN,
            half: Vec::new(),
            full: Vec::new(),
        }
    }

    fn factors(&mut self, h: f64) {
        if self.cached_h == h {
            return;
        }
        if self.epsilon == 0.0 {
            self.half = vec![1.0; self.op.grid().len()];
            self.full = self.half.clone();
        } else {
            self.half = self.op.heat_factors(0.5 * h * self.epsilon);
            self.full = self.op.heat_factors(h * self.epsilon);
        }
        self.cached_h = h;
    }

    /// Advances `state` by `h`; returns `sup |u|` at the start of the step.
    fn step(&mut self, state: &mut [Complex64], h: f64) -> f64 {
        self.factors(h);
        let (e1, e2) = (&self.half, &self.full);
        let (a, sup) = self.op.forcing(state);

        let stage: Vec<Complex64> = (0..state.len())
            .map(|i| e1[i] * (state[i] + 0.5 * h * a[i]))
            .collect();
        let (b, _) = self.op.forcing(&stage);

        let stage: Vec<Complex64> = (0..state.len())
            .map(|i| e1[i] * state[i] + 0.5 * h * b[i])
            .collect();
        let (c, _) = self.op.forcing(&stage);

        let stage: Vec<Complex64> = (0..state.len())
            .map(|i| e2[i] * state[i] + h * e1[i] * c[i])
            .collect();
        let (d, _) = self.op.forcing(&stage);

        for i in 0..state.len() {
            state[i] = e2[i] * state[i] + h / 6.0 * (e2[i] * a[i] + 2.0 * e1[i] * (b[i] + c[i]) + d[i]);
        }
        sup
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::GridSpec;
    use std::f64::consts::PI;

    #[test]
    fn zero_data_stays_zero() {
        let g = GridSpec::new(1, 64, PI).unwrap();
        let cfg = SolverConfig::new(&g, 0.01, 0.5).with_save_times(vec![0.0, 0.25, 0.5]);
        let traj = solve(&Field::zeros(g), &cfg).unwrap();
        assert_eq!(traj.times(), vec![0.0, 0.25, 0.5]);
        assert!(traj.snapshots.iter().all(|s| s.field.sup_norm() == 0.0));
    }

    #[test]
    fn pure_diffusion_of_small_mode_is_exact_in_the_linear_part() {
        // The nonlinearity of a constant is zero, so a constant plus nothing
        // else must be preserved bit for bit in mass.
        let g = GridSpec::new(1, 64, PI).unwrap();
        let u0 = Field::from_fn(g, |_| 0.25);
        let cfg = SolverConfig::new(&g, 0.5, 1.0).with_dt(0.1);
        let traj = solve(&u0, &cfg).unwrap();
        let last = traj.last().unwrap();
        assert!((&last.field - &u0).sup_norm() < 1e-15);
    }

    #[test]
    fn blow_up_ceiling_triggers() {
        let g = GridSpec::new(1, 64, PI).unwrap();
        let u0 = Field::from_fn(g, |x| 3.0 + x[0].cos());
        let cfg = SolverConfig::new(&g, 0.0, 0.1).with_blowup_ceiling(2.0);
        assert!(matches!(solve(&u0, &cfg), Err(KsError::BlowUp { .. })));
    }

    #[test]
    fn first_snapshot_is_the_datum() {
        let g = GridSpec::new(1, 64, PI).unwrap();
        let u0 = Field::from_fn(g, |x| 0.1 * x[0].cos());
        let cfg = SolverConfig::new(&g, 0.0, 0.2)
            .with_save_times(vec![0.0, 0.2])
            .with_besov_diagnostics(vec![BesovParams::new(2.0, 2.0, 2.0)]);
        let traj = solve(&u0, &cfg).unwrap();
        assert!((&traj.snapshots[0].field - &u0).sup_norm() < 1e-16);
        assert_eq!(traj.snapshots[1].besov.len(), 1);
        assert!(traj.at(0.2).is_some() && traj.at(0.15).is_none());
    }
}
