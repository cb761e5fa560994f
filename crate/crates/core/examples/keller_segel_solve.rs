//! Parabolic and hyperbolic Keller-Segel runs from the same datum.
//!
//! ```text
//! cargo run --release --example keller_segel_solve
//! ```

use besov_ks::experiments::ExperimentSpec;
use besov_ks::keller_segel::{ks_rhs, solve};
use besov_ks::littlewood_paley::initial_data;
use besov_ks::{BesovParams, DataProfile, Field, GridSpec, SolverConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a single low mode with a mean: visible dynamics at moderate N
    let grid = GridSpec::new(1, 256, std::f64::consts::PI)?;
    let u0 = Field::from_fn(grid, |x| 0.3 + 0.2 * x[0].cos());
    let rhs = ks_rhs(&u0, &SolverConfig::new(&grid, 0.0, 1.0))?;
    println!("|rhs(u0)|_inf = {:.4e}", rhs.sup_norm());
    for eps in [0.0, 0.01, 0.1] {
        let cfg = SolverConfig::new(&grid, eps, 1.0).with_save_times(vec![0.0, 0.5, 1.0]);
        let traj = solve(&u0, &cfg)?;
        for snap in &traj.snapshots {
            println!(
                "eps = {eps:<5} t = {:.2}  sup = {:.6}  mass = {:.12}",
                snap.time, snap.sup_norm, snap.mass
            );
        }
    }

    // the paper's regime: u_0^4 with eps = 2^-8, Besov diagnostics per snapshot
    let spec = ExperimentSpec::new(besov_ks::experiments::Scenario::E5);
    let grid = spec.grid_for(4)?;
    let bp = BesovParams::new(2.0, 2.0, 2.0);
    let u0 = initial_data(4, &bp, &grid, &DataProfile::new(&grid))?;
    let cfg = spec
        .solver_config(&grid, ExperimentSpec::epsilon(4))
        .with_besov_diagnostics(vec![bp, bp.with_s(3.0)]);
    let traj = solve(&u0, &cfg)?;
    for snap in &traj.snapshots {
        println!(
            "t = {:<6} B^2 = {:.6e}  B^3 = {:.6e}",
            snap.time, snap.besov[0].1, snap.besov[1].1
        );
    }
    Ok(())
}
