//! The split `u = u1 + u2 + u3` for parabolic and hyperbolic runs.
//!
//! ```text
//! cargo run --release --example decomposition
//! ```

use besov_ks::experiments::{ExperimentSpec, Scenario};
use besov_ks::keller_segel::{decompose, solve};
use besov_ks::littlewood_paley::initial_data;
use besov_ks::{DataProfile, DyadicFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ExperimentSpec::new(Scenario::E4);
    let n = 4;
    let grid = spec.grid_for(n)?;
    let family = DyadicFamily::new(grid)?;
    let u0 = initial_data(n, &spec.besov, &grid, &DataProfile::new(&grid))?;
    let eps = ExperimentSpec::epsilon(n);
    println!("n = {n}, N = {}, eps = {eps}", grid.points_per_axis());
    println!("    t       |u1-u0|     |u2|        |u3|        |u3_bar|");
    for &t in &spec.t_grid {
        let cfg = spec.solver_config(&grid, eps);
        let par = decompose(&u0, eps, t, &cfg)?;
        let hyp = decompose(&u0, 0.0, t, &cfg)?;
        let b = |f: &besov_ks::Field| family.besov_norm(f, &spec.besov);
        println!(
            "{t:<8} {:.4e}  {:.4e}  {:.4e}  {:.4e}",
            b(&(&par.u1 - &u0))?,
            b(&par.u2)?,
            b(&par.u3)?,
            b(&hyp.u3)?
        );
    }
    let cfg = spec.solver_config(&grid, eps);
    let traj = solve(&u0, &cfg)?;
    let last = traj.last().expect("snapshots");
    let parts = decompose(&u0, eps, last.time, &cfg)?;
    let defect = (&parts.full() - &last.field).parseval_l2() / last.field.parseval_l2();
    println!("reassembly defect at t = {}: {defect:.1e}", last.time);
    Ok(())
}
