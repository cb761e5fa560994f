use num_complex::Complex64;
use rayon::prelude::*;

use super::nonlinear::Chemotaxis;
use super::{solve, KsError, SolverConfig, Trajectory};
use crate::spectral::Field;

/// `u(t) = u1 + u2 + u3` for a given `(eps, u0)`:
///
/// * `u1 = e^{t eps Lap} u0` is the free heat flow (`u0` itself when `eps = 0`),
/// * `u2` solves the linear heat equation forced by the chemotactic term of
///   `u1`, from zero data,
/// * `u3` is the remainder.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub time: f64,
    pub epsilon: f64,
    pub u1: Field,
    pub u2: Field,
    pub u3: Field,
}

impl Decomposition {
    /// Builds the parts from a solution value `u_t` at time `t`.
    pub fn from_solution(
        u0: &Field,
        u_t: &Field,
        epsilon: f64,
        t: f64,
        quad_steps: usize,
        dealias_fraction: f64,
    ) -> Result<Self, KsError> {
        let u1 = solve_u1(u0, epsilon, t)?;
        let u2 = duhamel_u2(u0, epsilon, t, quad_steps, dealias_fraction)?;
        let u3 = &(u_t - &u1) - &u2;
        Ok(Self {
            time: t,
            epsilon,
            u1,
            u2,
            u3,
        })
    }

    /// `u1 + u2 + u3`.
    pub fn full(&self) -> Field {
        &(&self.u1 + &self.u2) + &self.u3
    }
}

/// `e^{t eps Lap} u0`.
pub fn solve_u1(u0: &Field, epsilon: f64, t: f64) -> Result<Field, KsError> {
    if !(t >= 0.0) {
        return Err(KsError::NegativeTime(t));
    }
    if epsilon == 0.0 {
        return Ok(u0.clone());
    }
    Ok(u0.heat_propagate(epsilon * t)?)
}

/// `u2(t) = int_0^t e^{(t - tau) eps Lap} F(u1(tau)) d tau` with
/// `F(u) = -div(u (1 - u) grad (1 - Lap)^{-1} u)`, by composite Simpson in
/// `tau` with exact propagators. With `eps = 0` the integrand is constant
/// and this is `t F(u0)`.
pub fn solve_u2(u0: &Field, epsilon: f64, t: f64, quad_steps: usize) -> Result<Field, KsError> {
    duhamel_u2(u0, epsilon, t, quad_steps, SolverConfig::DEFAULT_DEALIAS_FRACTION)
}

fn duhamel_u2(
    u0: &Field,
    epsilon: f64,
    t: f64,
    quad_steps: usize,
    dealias_fraction: f64,
) -> Result<Field, KsError> {
    if quad_steps < 8 || !quad_steps.is_multiple_of(2) {
        return Err(KsError::QuadratureSteps(quad_steps));
    }
    if !(t >= 0.0) {
        return Err(KsError::NegativeTime(t));
    }
    let grid = *u0.grid();
    if t == 0.0 {
        return Ok(Field::zeros(grid));
    }
    let op = Chemotaxis::new(grid, dealias_fraction)?;
    let u0_hat = u0.fourier();
    let h = t / quad_steps as f64;

    let node = |i: usize| -> Vec<Complex64> {
        let tau = i as f64 * h;
        let weight = if i == 0 || i == quad_steps {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let before = op.heat_factors(epsilon * tau);
        let u1: Vec<Complex64> = u0_hat.iter().zip(&before).map(|(c, e)| c * e).collect();
        let (f, _) = op.forcing(&u1);
        let after = op.heat_factors(epsilon * (t - tau));
        f.into_iter()
            .zip(after)
            .map(|(c, e)| c * (e * weight))
            .collect()
    };

    let terms: Vec<Vec<Complex64>> = if epsilon == 0.0 {
        // every node carries the same forcing
        let weights_total = 3.0 * quad_steps as f64;
        let (f, _) = op.forcing(&u0_hat);
        vec![f.into_iter().map(|c| c * weights_total).collect()]
    } else {
        (0..=quad_steps).into_par_iter().map(node).collect()
    };
    let mut acc = vec![Complex64::default(); grid.len()];
    for term in &terms {
        for (a, c) in acc.iter_mut().zip(term) {
            *a += c;
        }
    }
    let scale = h / 3.0;
    Ok(Field::from_spectrum(grid, acc.into_iter().map(|c| c * scale).collect())?)
}

/// Solves to `t` with `cfg` (its `epsilon` replaced) and splits the result.
pub fn decompose(u0: &Field, epsilon: f64, t: f64, cfg: &SolverConfig) -> Result<Decomposition, KsError> {
    let cfg = cfg
        .clone()
        .with_epsilon(epsilon)
        .with_save_times(vec![t]);
    let traj = solve(u0, &cfg)?;
    let u_t = &traj.snapshots[0].field;
    Decomposition::from_solution(u0, u_t, epsilon, t, cfg.quad_steps, cfg.dealias_fraction)
}

/// Decomposition at every snapshot of an already solved trajectory.
pub fn decompose_trajectory(
    u0: &Field,
    traj: &Trajectory,
    cfg: &SolverConfig,
) -> Result<Vec<Decomposition>, KsError> {
    traj.snapshots
        .iter()
        .map(|s| Decomposition::from_solution(u0, &s.field, traj.epsilon, s.time, cfg.quad_steps, cfg.dealias_fraction))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::GridSpec;
    use std::f64::consts::PI;

    fn grid() -> GridSpec {
        GridSpec::new(1, 64, PI).unwrap()
    }

    #[test]
    fn u1_examples() {
        let g = grid();
        let u0 = Field::from_fn(g, |x| (2.0 * x[0]).cos());
        assert!((&solve_u1(&u0, 0.0, 3.0).unwrap() - &u0).sup_norm() == 0.0);
        let got = solve_u1(&u0, 0.125, 2.0).unwrap();
        assert!((&got - &(&u0 * (-1.0f64).exp())).sup_norm() < 1e-15);
        assert!(solve_u1(&u0, 0.1, -1.0).is_err());
    }

    #[test]
    fn u2_vanishes_for_trivial_data() {
        let g = grid();
        assert!(solve_u2(&Field::zeros(g), 0.1, 0.2, 64).unwrap().sup_norm() == 0.0);
        let c = Field::from_fn(g, |_| 0.4);
        assert!(solve_u2(&c, 0.1, 0.2, 64).unwrap().sup_norm() < 1e-15);
        assert!(solve_u2(&c, 0.0, 0.2, 64).unwrap().sup_norm() < 1e-15);
    }

    #[test]
    fn u2_rejects_odd_or_small_step_counts() {
        let g = grid();
        assert_eq!(solve_u2(&Field::zeros(g), 0.1, 0.2, 63).unwrap_err(), KsError::QuadratureSteps(63));
        assert_eq!(solve_u2(&Field::zeros(g), 0.1, 0.2, 6).unwrap_err(), KsError::QuadratureSteps(6));
    }

    #[test]
    fn hyperbolic_u2_is_linear_in_time() {
        let g = grid();
        let u0 = Field::from_fn(g, |x| 0.1 * x[0].cos());
        let a = solve_u2(&u0, 0.0, 0.1, 8).unwrap();
        let b = solve_u2(&u0, 0.0, 0.3, 64).unwrap();
        assert!((&(&a * 3.0) - &b).sup_norm() < 1e-16);
    }

    #[test]
    fn parts_sum_to_solution() {
        let g = grid();
        let u0 = Field::from_fn(g, |x| 0.1 * x[0].cos() + 0.05 * (2.0 * x[0]).sin());
        let cfg = SolverConfig::new(&g, 0.01, 0.2);
        let dec = decompose(&u0, 0.01, 0.2, &cfg).unwrap();
        let traj = solve(&u0, &cfg).unwrap();
        let u = &traj.last().unwrap().field;
        assert!((&dec.full() - u).parseval_l2() <= 1e-12 * u.parseval_l2());
        let zero = decompose(&Field::zeros(g), 0.01, 0.2, &cfg).unwrap();
        assert!(zero.u1.sup_norm() == 0.0 && zero.u2.sup_norm() == 0.0 && zero.u3.sup_norm() == 0.0);
    }
}
