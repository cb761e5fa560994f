use std::f64::consts::PI;

use besov_ks::experiments::{ExperimentSpec, Scenario};
use besov_ks::keller_segel::{decompose, ks_rhs, solve, solve_u2};
use besov_ks::littlewood_paley::initial_data;
use besov_ks::{BesovParams, DataProfile, DyadicFamily, Field, GridSpec, SolverConfig};

fn data(n: u32) -> (GridSpec, Field) {
    let spec = ExperimentSpec::new(Scenario::E4);
    let grid = spec.grid_for(n).unwrap();
    let u0 = initial_data(n, &spec.besov, &grid, &DataProfile::new(&grid)).unwrap();
    (grid, u0)
}

#[test]
fn mass_is_conserved_for_both_systems() {
    let grid = GridSpec::new(2, 64, PI).unwrap();
    let u0 = Field::from_fn(grid, |x| 0.3 + 0.2 * x[0].cos() * (2.0 * x[1]).sin() + 0.1 * (x[0] + x[1]).cos());
    let m0 = u0.integral();
    for eps in [0.0, 0.02] {
        let cfg = SolverConfig::new(&grid, eps, 0.5).with_save_times(vec![0.1, 0.25, 0.5]);
        for snap in solve(&u0, &cfg).unwrap().snapshots {
            assert!((snap.mass - m0).abs() <= 1e-10 * (1.0 + m0.abs()));
        }
    }
}

#[test]
fn tiny_diffusivity_is_continuous_at_zero() {
    let (grid, u0) = data(3);
    let at = |eps: f64| {
        let cfg = SolverConfig::new(&grid, eps, 0.1);
        solve(&u0, &cfg).unwrap().snapshots.pop().unwrap().field
    };
    let diff = (&at(1e-14) - &at(0.0)).lp_norm(2.0).unwrap();
    assert!(diff <= 1e-10, "{diff}");
}

#[test]
fn integrator_is_fourth_order() {
    let order = besov_ks::experiments::validate::self_convergence_order(5, 0.05).unwrap();
    assert!((order - 4.0).abs() <= 0.5, "{order}");
}

#[test]
fn remainder_is_stable_under_step_halving() {
    let (grid, u0) = data(3);
    let eps = ExperimentSpec::epsilon(3);
    let cfg = SolverConfig::new(&grid, eps, 0.1);
    let a = decompose(&u0, eps, 0.1, &cfg).unwrap();
    let b = decompose(&u0, eps, 0.1, &cfg.clone().with_dt(cfg.dt / 2.0)).unwrap();
    let half = cfg.dt / 2.0;
    let u = solve(&u0, &cfg.with_dt(half)).unwrap().snapshots.pop().unwrap().field;
    // u3 is ~1e-9 of u, so its own relative change sits on the rounding floor of u
    let rel = (&a.u3 - &b.u3).parseval_l2() / u.parseval_l2();
    assert!(rel <= 1e-8, "{rel}");
    assert!((&b.full() - &u).parseval_l2() <= 1e-9 * u.parseval_l2());
}

/// Periodic solve of `(1 - D2) s = u` with second-order differences
/// (cyclic tridiagonal, Sherman-Morrison).
fn fd_helmholtz(u: &[f64], h: f64) -> Vec<f64> {
    let n = u.len();
    let off = -1.0 / (h * h);
    let diag = 1.0 + 2.0 / (h * h);
    let thomas = |rhs: &[f64], first: f64, last: f64| -> Vec<f64> {
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let mut b0 = vec![diag; n];
        b0[0] = first;
        b0[n - 1] = last;
        c[0] = off / b0[0];
        d[0] = rhs[0] / b0[0];
        for i in 1..n {
            let m = b0[i] - off * c[i - 1];
            c[i] = off / m;
            d[i] = (rhs[i] - off * d[i - 1]) / m;
        }
        let mut x = vec![0.0; n];
        x[n - 1] = d[n - 1];
        for i in (0..n - 1).rev() {
            x[i] = d[i] - c[i] * x[i + 1];
        }
        x
    };
    let gamma = -diag;
    let first = diag - gamma;
    let last = diag - off * off / gamma;
    let y = thomas(u, first, last);
    let mut w = vec![0.0; n];
    w[0] = gamma;
    w[n - 1] = off;
    let z = thomas(&w, first, last);
    let factor = (y[0] + off / gamma * y[n - 1]) / (1.0 + z[0] + off / gamma * z[n - 1]);
    y.iter().zip(&z).map(|(a, b)| a - factor * b).collect()
}

fn fd_derivative(f: &[f64], h: f64) -> Vec<f64> {
    let n = f.len();
    (0..n).map(|i| (f[(i + 1) % n] - f[(i + n - 1) % n]) / (2.0 * h)).collect()
}

#[test]
fn rhs_matches_finite_difference_oracle() {
    let grid = GridSpec::new(1, 2048, PI).unwrap();
    let u = Field::from_fn(grid, |x| 0.1 * x[0].cos());
    let spectral = ks_rhs(&u, &SolverConfig::new(&grid, 0.0, 1.0)).unwrap();

    let refine = 4;
    let m = grid.points_per_axis() * refine;
    let h = 2.0 * PI / m as f64;
    let uf: Vec<f64> = (0..m).map(|i| 0.1 * (-PI + i as f64 * h).cos()).collect();
    let s = fd_helmholtz(&uf, h);
    let ds = fd_derivative(&s, h);
    let flux: Vec<f64> = uf.iter().zip(&ds).map(|(u, g)| u * (1.0 - u) * g).collect();
    let fd: Vec<f64> = fd_derivative(&flux, h).iter().map(|v| -v).collect();

    let values = spectral.physical();
    let (mut err, mut norm) = (0.0, 0.0);
    for (i, v) in values.iter().enumerate() {
        err += (v - fd[i * refine]).powi(2);
        norm += v * v;
    }
    let rel = (err / norm).sqrt();
    assert!(rel <= 1e-6, "{rel}");
}

#[test]
fn rhs_vanishes_on_steady_states() {
    let grid = GridSpec::new(1, 64, PI).unwrap();
    let cfg = SolverConfig::new(&grid, 0.3, 1.0);
    assert!(ks_rhs(&Field::zeros(grid), &cfg).unwrap().sup_norm() == 0.0);
    assert!(ks_rhs(&Field::from_fn(grid, |_| 0.6), &cfg).unwrap().sup_norm() <= 1e-15);
}

#[test]
fn hyperbolic_u2_is_time_times_forcing() {
    let (_, u0) = data(3);
    let a = solve_u2(&u0, 0.0, 0.05, 8).unwrap();
    let b = solve_u2(&u0, 0.0, 0.2, 64).unwrap();
    assert!((&(&a * 4.0) - &b).parseval_l2() <= 1e-13 * b.parseval_l2());
}

#[test]
fn besov_norms_stay_uniformly_bounded() {
    let (grid, u0) = data(3);
    let fam = DyadicFamily::new(grid).unwrap();
    let bp = BesovParams::new(2.0, 2.0, 2.0);
    let exps = vec![bp, bp.with_s(3.0)];
    let data_norms: Vec<f64> = exps.iter().map(|b| fam.besov_norm(&u0, b).unwrap()).collect();
    for eps in [0.0, 2f64.powi(-6), 2f64.powi(-10), 2f64.powi(-14)] {
        let cfg = SolverConfig::new(&grid, eps, 0.2)
            .with_save_times(vec![0.05, 0.1, 0.2])
            .with_besov_diagnostics(exps.clone());
        for snap in solve(&u0, &cfg).unwrap().snapshots {
            for (k, (_, v)) in snap.besov.iter().enumerate() {
                assert!(v / data_norms[k] <= 1.05);
            }
        }
    }
}

#[test]
fn parabolic_converges_to_hyperbolic_for_fixed_data() {
    let (grid, u0) = data(3);
    let fam = DyadicFamily::new(grid).unwrap();
    let bp = BesovParams::new(2.0, 2.0, 2.0);
    let at = |eps: f64| solve(&u0, &SolverConfig::new(&grid, eps, 0.1)).unwrap().snapshots.pop().unwrap().field;
    let bar = at(0.0);
    let gaps: Vec<f64> = (3..=7)
        .map(|m| fam.besov_norm(&(&at(ExperimentSpec::epsilon(m)) - &bar), &bp).unwrap())
        .collect();
    assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
    assert!(gaps[4] < 0.05 * gaps[0]);
}
