use rayon::prelude::*;

use super::report::GridEntry;
use super::{fit_loglog, heat_defect_besov, Check, ExperimentError, ExperimentSpec, LogLogFit, RateReport, Scenario};
use crate::keller_segel::{solve, solve_u1, solve_u2, Decomposition, SolverConfig, Trajectory};
use crate::littlewood_paley::{initial_data, periodization_tail, BesovParams, DataProfile, DyadicFamily};
use crate::spectral::{Field, GridSpec};

/// Frozen bound on `sup_t ||u(t)||_{B^s} / ||u_0||_{B^s}` in E6.
pub const E6_BOUND_S: f64 = 1.05;
/// Frozen bound on the same ratio at exponent `s + 1`.
pub const E6_BOUND_S_PLUS_ONE: f64 = 1.05;

/// Runs one scenario.
pub fn run(spec: &ExperimentSpec) -> Result<RateReport, ExperimentError> {
    match spec.scenario {
        Scenario::E1 => run_e1(spec),
        Scenario::E2 => run_e2(spec),
        Scenario::E3 => run_e3(spec),
        Scenario::E4 => run_e4(spec),
        Scenario::E5 => run_e5(spec),
        Scenario::E6 => run_e6(spec),
    }
}

/// Runs E1..E6 with the same overrides; `base.scenario` is ignored.
pub fn run_all(base: &ExperimentSpec) -> Result<Vec<RateReport>, ExperimentError> {
    Scenario::ALL
        .iter()
        .map(|&scenario| {
            let spec = ExperimentSpec {
                scenario,
                ..base.clone()
            };
            spec.validate()?;
            run(&spec)
        })
        .collect()
}

/// Data `u_0^n` on the grid selected for `n`.
struct Case {
    n: u32,
    grid: GridSpec,
    family: DyadicFamily,
    profile: DataProfile,
    u0: Field,
}

impl Case {
    fn new(spec: &ExperimentSpec, n: u32) -> Result<Self, ExperimentError> {
        let grid = spec.grid_for(n)?;
        let family = DyadicFamily::new(grid)?;
        let profile = DataProfile::new(&grid);
        let u0 = initial_data(n, &spec.besov, &grid, &profile)?;
        Ok(Self {
            n,
            grid,
            family,
            profile,
            u0,
        })
    }

    fn besov(&self, f: &Field, bp: &BesovParams) -> Result<f64, ExperimentError> {
        Ok(self.family.besov_norm(f, bp)?)
    }

    fn epsilon(&self) -> f64 {
        ExperimentSpec::epsilon(self.n)
    }
}

fn cases(spec: &ExperimentSpec) -> Result<Vec<Case>, ExperimentError> {
    spec.n_values()
        .into_par_iter()
        .map(|n| Case::new(spec, n))
        .collect()
}

fn grid_entries(spec: &ExperimentSpec, cases: &[Case]) -> Vec<GridEntry> {
    cases
        .iter()
        .map(|c| GridEntry {
            n: c.n,
            points_per_axis: c.grid.points_per_axis(),
            half_period: c.grid.half_period(),
            k_max: c.grid.k_max(),
            j_max: c.family.j_max(),
            dt: spec.dt.unwrap_or(0.5 / c.grid.k_max()),
        })
        .collect()
}

fn sigma_label(offset: i32) -> &'static str {
    match offset {
        -1 => "besov_s-1",
        0 => "besov_s",
        1 => "besov_s+1",
        _ => unreachable!("only s-1, s, s+1 are reported"),
    }
}

/// Fit of `log2 y` against `n` (slope per unit `n`).
fn fit_in_n(ns: &[u32], ys: &[f64]) -> Result<LogLogFit, ExperimentError> {
    let pts: Vec<(f64, f64)> = ns.iter().zip(ys).map(|(&n, &y)| (2f64.powi(n as i32), y)).collect();
    fit_loglog(&pts)
}

fn fit_in_t(ts: &[f64], ys: &[f64]) -> Result<LogLogFit, ExperimentError> {
    let pts: Vec<(f64, f64)> = ts.iter().copied().zip(ys.iter().copied()).collect();
    fit_loglog(&pts)
}

fn max_consecutive_ratio(values: &[f64]) -> f64 {
    values.windows(2).map(|w| w[1] / w[0]).fold(f64::NEG_INFINITY, f64::max)
}

fn min_consecutive_ratio(values: &[f64]) -> f64 {
    values.windows(2).map(|w| w[1] / w[0]).fold(f64::INFINITY, f64::min)
}

/// E1: `log2 ||u_0^n||_{B^sigma}` against `n` for `sigma = s - 1, s, s + 1`.
pub fn run_e1(spec: &ExperimentSpec) -> Result<RateReport, ExperimentError> {
    spec.validate()?;
    let cases = cases(spec)?;
    let mut report = RateReport::new(spec, grid_entries(spec, &cases));
    let ns = spec.n_values();
    let s = spec.besov.s;

    let measured: Vec<[f64; 5]> = cases
        .par_iter()
        .map(|c| {
            let mut out = [0.0; 5];
            for (slot, offset) in (-1..=1).enumerate() {
                out[slot] = c.besov(&c.u0, &spec.besov.with_s(s + offset as f64))?;
            }
            out[3] = c.u0.sup_norm();
            out[4] = periodization_tail(&c.u0);
            Ok(out)
        })
        .collect::<Result<_, ExperimentError>>()?;

    for (c, m) in cases.iter().zip(&measured) {
        for (slot, offset) in (-1..=1).enumerate() {
            report.push_row(c.n, 0.0, 0.0, sigma_label(offset), m[slot]);
        }
        report.push_row(c.n, 0.0, 0.0, "sup", m[3]);
        report.push_row(c.n, 0.0, 0.0, "tail", m[4]);
    }
    for (slot, offset) in (-1..=1).enumerate() {
        let ys: Vec<f64> = measured.iter().map(|m| m[slot]).collect();
        let fit = fit_in_n(&ns, &ys)?;
        let label = sigma_label(offset);
        report.push_fit(label, "n", "t=0".into(), ns.len(), fit);
        report.push_check(Check::within(format!("slope_n({label})"), fit.slope, offset as f64, 0.05));
    }
    let at_s: Vec<f64> = measured.iter().map(|m| m[1]).collect();
    let (lo, hi) = min_max(&at_s);
    report.push_check(Check::at_most("spread_n(besov_s)", hi / lo, 1.0, 0.2));
    report.push_constant("R", None, None, hi);
    let c_sup = cases
        .iter()
        .zip(&measured)
        .map(|(c, m)| m[3] * 2f64.powf(c.n as f64 * s))
        .fold(0.0, f64::max);
    report.push_constant("C_sup", None, None, c_sup);
    let worst_tail = measured.iter().map(|m| m[4]).fold(0.0, f64::max);
    report.push_constant("periodization_tail", None, None, worst_tail);
    Ok(report)
}

/// E2: `I1 = ||(e^{t eps Lap} - Id) u_0^n||_{B^s}` against `t`, with the
/// closed-form oracle when `p = 2`.
pub fn run_e2(spec: &ExperimentSpec) -> Result<RateReport, ExperimentError> {
    spec.validate()?;
    let cases = cases(spec)?;
    let mut report = RateReport::new(spec, grid_entries(spec, &cases));
    let ts = &spec.t_grid;
    let with_oracle = spec.besov.p == 2.0;

    let measured: Vec<Vec<(f64, Option<f64>)>> = cases
        .par_iter()
        .map(|c| {
            let eps = c.epsilon();
            ts.iter()
                .map(|&t| {
                    let defect = &solve_u1(&c.u0, eps, t)? - &c.u0;
                    let value = c.besov(&defect, &spec.besov)?;
                    let oracle = if with_oracle {
                        Some(heat_defect_besov(c.n, &spec.besov, &c.grid, &c.profile, eps, t)?)
                    } else {
                        None
                    };
                    Ok((value, oracle))
                })
                .collect()
        })
        .collect::<Result<_, ExperimentError>>()?;

    let mut worst_oracle: f64 = 0.0;
    let mut spreads = Vec::new();
    for (c, values) in cases.iter().zip(&measured) {
        let eps = c.epsilon();
        for (&t, &(v, oracle)) in ts.iter().zip(values) {
            report.push_row(c.n, eps, t, "I1", v);
            if let Some(o) = oracle {
                report.push_row(c.n, eps, t, "I1_oracle", o);
                worst_oracle = worst_oracle.max((v - o).abs() / o.abs());
            }
        }
        let ys: Vec<f64> = values.iter().map(|v| v.0).collect();
        let fit = fit_in_t(ts, &ys)?;
        report.push_fit("I1", "t", format!("n={}", c.n), ts.len(), fit);
        report.push_check(Check::within(format!("slope_t(I1) n={}", c.n), fit.slope, 1.0, 0.1));
        let per_t: Vec<f64> = ts.iter().zip(&ys).map(|(t, y)| y / t).collect();
        let (c1, c2) = min_max(&per_t);
        report.push_constant("C1", Some(c.n), None, c1);
        report.push_constant("C2", Some(c.n), None, c2);
        spreads.push(c2 / c1);
    }
    if with_oracle {
        report.push_check(Check::at_most("oracle_relative_error(I1)", worst_oracle, 0.0, 1e-10));
    }
    let (lo, hi) = min_max(&spreads);
    report.push_check(Check::at_most("n_stability(C2/C1)", hi / lo, 1.0, 0.2));
    Ok(report)
}

/// E3: `||u2_bar||_{B^s}` and `||u2^eps||_{B^s}` against `n` and `t`.
pub fn run_e3(spec: &ExperimentSpec) -> Result<RateReport, ExperimentError> {
    spec.validate()?;
    let cases = cases(spec)?;
    let mut report = RateReport::new(spec, grid_entries(spec, &cases));
    let ts = &spec.t_grid;
    let ns = spec.n_values();
    let s = spec.besov.s;

    // (u2_bar, u2_eps) per n, per t
    let measured: Vec<Vec<(f64, f64)>> = cases
        .par_iter()
        .map(|c| {
            ts.iter()
                .map(|&t| {
                    let bar = solve_u2(&c.u0, 0.0, t, spec.quad_steps)?;
                    let eps = solve_u2(&c.u0, c.epsilon(), t, spec.quad_steps)?;
                    Ok((c.besov(&bar, &spec.besov)?, c.besov(&eps, &spec.besov)?))
                })
                .collect()
        })
        .collect::<Result<_, ExperimentError>>()?;

    for (c, values) in cases.iter().zip(&measured) {
        for (&t, &(bar, eps)) in ts.iter().zip(values) {
            report.push_row(c.n, 0.0, t, "u2_bar", bar);
            report.push_row(c.n, c.epsilon(), t, "u2_eps", eps);
        }
    }
    for (ti, &t) in ts.iter().enumerate() {
        for (curve, pick) in [("u2_bar", 0), ("u2_eps", 1)] {
            let ys: Vec<f64> = measured
                .iter()
                .map(|v| if pick == 0 { v[ti].0 } else { v[ti].1 })
                .collect();
            let fit = fit_in_n(&ns, &ys)?;
            report.push_fit(curve, "n", format!("t={t}"), ns.len(), fit);
            report.push_check(Check::within(format!("slope_n({curve}) t={t}"), fit.slope, -(s - 1.0), 0.15));
            report.push_check(Check::below(format!("decreasing_n({curve}) t={t}"), max_consecutive_ratio(&ys), 1.0));
        }
    }
    for (c, values) in cases.iter().zip(&measured) {
        let bar: Vec<f64> = values.iter().map(|v| v.0).collect();
        let fit = fit_in_t(ts, &bar)?;
        report.push_fit("u2_bar", "t", format!("n={}", c.n), ts.len(), fit);
        report.push_check(Check::within(format!("slope_t(u2_bar) n={}", c.n), fit.slope, 1.0, 0.1));
        let eps: Vec<f64> = values.iter().map(|v| v.1).collect();
        let fit = fit_in_t(ts, &eps)?;
        report.push_fit("u2_eps", "t", format!("n={}", c.n), ts.len(), fit);
        let c_bar = bar.iter().zip(ts).map(|(y, t)| y / t).fold(0.0, f64::max) * 2f64.powf(c.n as f64 * (s - 1.0));
        report.push_constant("C_u2_bar", Some(c.n), None, c_bar);
    }
    Ok(report)
}

/// Parabolic and hyperbolic solutions from one datum, split at each time.
struct Split {
    eps: Trajectory,
    bar: Trajectory,
    parts_eps: Vec<Decomposition>,
    parts_bar: Vec<Decomposition>,
}

fn split(spec: &ExperimentSpec, c: &Case) -> Result<Split, ExperimentError> {
    let cfg_eps = spec.solver_config(&c.grid, c.epsilon());
    let cfg_bar = spec.solver_config(&c.grid, 0.0);
    let eps = solve(&c.u0, &cfg_eps)?;
    let bar = solve(&c.u0, &cfg_bar)?;
    let parts = |traj: &Trajectory, cfg: &SolverConfig| {
        traj.snapshots
            .iter()
            .map(|snap| {
                Decomposition::from_solution(
                    &c.u0,
                    &snap.field,
                    traj.epsilon,
                    snap.time,
                    cfg.quad_steps,
                    cfg.dealias_fraction,
                )
            })
            .collect::<Result<Vec<_>, _>>()
    };
    let parts_eps = parts(&eps, &cfg_eps)?;
    let parts_bar = parts(&bar, &cfg_bar)?;
    Ok(Split {
        eps,
        bar,
        parts_eps,
        parts_bar,
    })
}

/// E4: `||u3||_{B^s}` against `t`, and `||u^eps - u1^eps||` at `s - 1`, `s`,
/// `s + 1` against `n`.
pub fn run_e4(spec: &ExperimentSpec) -> Result<RateReport, ExperimentError> {
    spec.validate()?;
    let cases = cases(spec)?;
    let mut report = RateReport::new(spec, grid_entries(spec, &cases));
    let ts = &spec.t_grid;
    let ns = spec.n_values();
    let s = spec.besov.s;

    // [u3_eps, u3_bar, L1, L2, L3] per n, per t
    let measured: Vec<Vec<[f64; 5]>> = cases
        .par_iter()
        .map(|c| {
            let run = split(spec, c)?;
            run.parts_eps
                .iter()
                .zip(&run.parts_bar)
                .zip(&run.eps.snapshots)
                .map(|((pe, pb), snap)| {
                    let nonlinear = &snap.field - &pe.u1;
                    Ok([
                        c.besov(&pe.u3, &spec.besov)?,
                        c.besov(&pb.u3, &spec.besov)?,
                        c.besov(&nonlinear, &spec.besov.with_s(s - 1.0))?,
                        c.besov(&nonlinear, &spec.besov)?,
                        c.besov(&nonlinear, &spec.besov.with_s(s + 1.0))?,
                    ])
                })
                .collect()
        })
        .collect::<Result<_, ExperimentError>>()?;

    const NAMES: [&str; 5] = ["u3_eps", "u3_bar", "L1", "L2", "L3"];
    for (c, values) in cases.iter().zip(&measured) {
        for (&t, v) in ts.iter().zip(values) {
            for (k, name) in NAMES.iter().enumerate() {
                let eps = if k == 1 { 0.0 } else { c.epsilon() };
                report.push_row(c.n, eps, t, name, v[k]);
            }
        }
    }
    for (c, values) in cases.iter().zip(&measured) {
        for k in 0..2 {
            let ys: Vec<f64> = values.iter().map(|v| v[k]).collect();
            let fit = fit_in_t(ts, &ys)?;
            report.push_fit(NAMES[k], "t", format!("n={}", c.n), ts.len(), fit);
            report.push_check(Check::at_least(format!("slope_t({}) n={}", NAMES[k], c.n), fit.slope, 2.0, 0.15));
        }
    }
    for (ti, &t) in ts.iter().enumerate() {
        for (k, target) in [(2, -1.0), (4, 1.0)] {
            let ys: Vec<f64> = measured.iter().map(|v| v[ti][k]).collect();
            let fit = fit_in_n(&ns, &ys)?;
            report.push_fit(NAMES[k], "n", format!("t={t}"), ns.len(), fit);
            report.push_check(Check::within(format!("slope_n({}) t={t}", NAMES[k]), fit.slope, target, 0.15));
        }
    }
    // (L2): C(n) = max_t L2 / t must not grow with n
    let c_l2: Vec<f64> = measured
        .iter()
        .map(|v| v.iter().zip(ts).map(|(m, t)| m[3] / t).fold(0.0, f64::max))
        .collect();
    for (c, &value) in cases.iter().zip(&c_l2) {
        report.push_constant("C_L2", Some(c.n), None, value);
    }
    let fit = fit_in_n(&ns, &c_l2)?;
    report.push_fit("C_L2", "n", "max_t".into(), ns.len(), fit);
    report.push_check(Check::at_most("slope_n(C_L2)", fit.slope, 0.0, 0.15));
    Ok(report)
}

/// E5: the gap `D(n, t) = ||u^eps(t) - u_bar(t)||_{B^s}` with `eps = 2^{-2n}`,
/// its pieces `I1, I2, I3`, and the fixed-data sweep over `eps`.
pub fn run_e5(spec: &ExperimentSpec) -> Result<RateReport, ExperimentError> {
    spec.validate()?;
    let cases = cases(spec)?;
    let mut report = RateReport::new(spec, grid_entries(spec, &cases));
    let ts = &spec.t_grid;
    let ns = spec.n_values();
    let t_ref = spec.reference_time;
    let i_ref = spec.reference_index().expect("validated");

    // [D, I1, I2, I3] per n, per t, and the data norm per n
    let measured: Vec<(Vec<[f64; 4]>, f64)> = cases
        .par_iter()
        .map(|c| {
            let run = split(spec, c)?;
            let rows = run
                .eps
                .snapshots
                .iter()
                .zip(&run.bar.snapshots)
                .zip(run.parts_eps.iter().zip(&run.parts_bar))
                .map(|((se, sb), (pe, pb))| {
                    Ok([
                        c.besov(&(&se.field - &sb.field), &spec.besov)?,
                        c.besov(&(&pe.u1 - &pb.u1), &spec.besov)?,
                        c.besov(&(&pe.u2 - &pb.u2), &spec.besov)?,
                        c.besov(&(&pe.u3 - &pb.u3), &spec.besov)?,
                    ])
                })
                .collect::<Result<Vec<_>, ExperimentError>>()?;
            Ok((rows, c.besov(&c.u0, &spec.besov)?))
        })
        .collect::<Result<_, ExperimentError>>()?;

    const NAMES: [&str; 4] = ["D", "I1", "I2", "I3"];
    let mut triangle = f64::INFINITY;
    for (c, (values, data_norm)) in cases.iter().zip(&measured) {
        report.push_row(c.n, 0.0, 0.0, "besov_data", *data_norm);
        for (&t, v) in ts.iter().zip(values) {
            for (k, name) in NAMES.iter().enumerate() {
                report.push_row(c.n, c.epsilon(), t, name, v[k]);
            }
            triangle = triangle.min((v[0] + v[2] + v[3]) / v[1]);
        }
    }
    for (ti, &t) in ts.iter().enumerate() {
        let floor = measured.iter().map(|(v, _)| v[ti][0] / t).fold(f64::INFINITY, f64::min);
        report.push_constant("c0", None, Some(t), floor);
    }

    let at_ref: Vec<f64> = measured.iter().map(|(v, _)| v[i_ref][0]).collect();
    let floor = at_ref.iter().fold(f64::INFINITY, |m, d| m.min(d / t_ref));
    report.push_check(Check::above(format!("c0 t={t_ref}"), floor, 0.0));
    let tail = &at_ref[at_ref.len().saturating_sub(3)..];
    report.push_check(Check::at_least(
        format!("nondecreasing_last3(D/t) t={t_ref}"),
        min_consecutive_ratio(tail),
        1.0,
        0.0,
    ));
    let level = at_ref.iter().sum::<f64>() / at_ref.len() as f64;
    let spread = at_ref.iter().map(|d| (d / level - 1.0).abs()).fold(0.0, f64::max);
    report.push_constant("D_level", None, Some(t_ref), level);
    report.push_check(Check::at_most(format!("level_spread(D) t={t_ref}"), spread, 0.0, 0.15));
    report.push_check(Check::at_least("triangle((D+I2+I3)/I1)", triangle, 1.0, 1e-9));
    let fit = fit_in_n(&ns, &at_ref)?;
    report.push_fit("D", "n", format!("t={t_ref}"), ns.len(), fit);

    let radius = measured.iter().map(|(_, r)| *r).fold(0.0, f64::max);
    report.push_constant("R", None, None, radius);
    if let Some(bound) = spec.data_family_radius {
        report.push_check(Check::at_most("data_radius", radius, bound, 0.0));
    }

    // Fixed datum u_0^{n_fix}, eps = 2^{-2m} for m = n_fix..n_fix+4
    let n_fix = spec.fixed_n.clamp(spec.n_min, spec.n_max);
    let case = Case::new(spec, n_fix)?;
    let single = |eps: f64| spec.solver_config(&case.grid, eps).with_save_times(vec![t_ref]);
    let bar = solve(&case.u0, &single(0.0))?;
    let bar_t = &bar.snapshots[0].field;
    let ms: Vec<u32> = (n_fix..=n_fix + 4).collect();
    let sweep: Vec<(f64, f64)> = ms
        .par_iter()
        .map(|&m| {
            let eps = ExperimentSpec::epsilon(m);
            let traj = solve(&case.u0, &single(eps))?;
            let d = case.besov(&(&traj.snapshots[0].field - bar_t), &spec.besov)?;
            Ok((eps, d))
        })
        .collect::<Result<_, ExperimentError>>()?;
    for &(eps, d) in &sweep {
        report.push_row(n_fix, eps, t_ref, "D_fixed", d);
    }
    let ds: Vec<f64> = sweep.iter().map(|p| p.1).collect();
    report.push_check(Check::below(
        format!("decreasing_eps(D_fixed) n={n_fix}"),
        max_consecutive_ratio(&ds),
        1.0,
    ));
    let mut by_eps = sweep.clone();
    by_eps.reverse();
    let fit = fit_loglog(&by_eps)?;
    report.push_fit("D_fixed", "epsilon", format!("n={n_fix},t={t_ref}"), by_eps.len(), fit);
    report.push_check(Check::at_least(format!("slope_eps(D_fixed) n={n_fix}"), fit.slope, 0.5, 0.0));
    Ok(report)
}

/// E6: `sup_t ||u(t)||_{B^sigma} / ||u_0^n||_{B^sigma}` at `sigma = s, s + 1`
/// over `eps` in `{0} U {2^{-2m}}` for every datum `u_0^n`.
pub fn run_e6(spec: &ExperimentSpec) -> Result<RateReport, ExperimentError> {
    spec.validate()?;
    let cases = cases(spec)?;
    let mut report = RateReport::new(spec, grid_entries(spec, &cases));
    let ns = spec.n_values();
    let exponents = [spec.besov, spec.besov.with_s(spec.besov.s + 1.0)];
    let epsilons: Vec<f64> = std::iter::once(0.0)
        .chain(ns.iter().map(|&m| ExperimentSpec::epsilon(m)))
        .collect();

    let jobs: Vec<(usize, f64)> = (0..cases.len())
        .flat_map(|i| epsilons.iter().map(move |&e| (i, e)))
        .collect();
    // per job: ratios[t][exponent]
    let measured: Vec<Vec<[f64; 2]>> = jobs
        .par_iter()
        .map(|&(i, eps)| {
            let c = &cases[i];
            let data = [c.besov(&c.u0, &exponents[0])?, c.besov(&c.u0, &exponents[1])?];
            let cfg = spec
                .solver_config(&c.grid, eps)
                .with_besov_diagnostics(exponents.to_vec());
            let traj = solve(&c.u0, &cfg)?;
            Ok(traj
                .snapshots
                .iter()
                .map(|snap| [snap.besov[0].1 / data[0], snap.besov[1].1 / data[1]])
                .collect())
        })
        .collect::<Result<_, ExperimentError>>()?;

    let mut worst = [0.0f64; 2];
    let mut worst_hyperbolic = [0.0f64; 2];
    for (&(i, eps), ratios) in jobs.iter().zip(&measured) {
        let n = cases[i].n;
        for (&t, r) in spec.t_grid.iter().zip(ratios) {
            report.push_row(n, eps, t, "ratio_s", r[0]);
            report.push_row(n, eps, t, "ratio_s+1", r[1]);
            for k in 0..2 {
                worst[k] = worst[k].max(r[k]);
                if eps == 0.0 {
                    worst_hyperbolic[k] = worst_hyperbolic[k].max(r[k]);
                }
            }
        }
    }
    report.push_constant("C1", None, None, worst[0]);
    report.push_constant("C2", None, None, worst[1]);
    report.push_check(Check::at_most("sup_ratio(besov_s)", worst[0], E6_BOUND_S, 0.0));
    report.push_check(Check::at_most("sup_ratio(besov_s+1)", worst[1], E6_BOUND_S_PLUS_ONE, 0.0));
    report.push_check(Check::at_most("sup_ratio(besov_s) eps=0", worst_hyperbolic[0], E6_BOUND_S, 0.0));
    report.push_check(Check::at_most(
        "sup_ratio(besov_s+1) eps=0",
        worst_hyperbolic[1],
        E6_BOUND_S_PLUS_ONE,
        0.0,
    ));
    Ok(report)
}

fn min_max(values: &[f64]) -> (f64, f64) {
    values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)))
}
