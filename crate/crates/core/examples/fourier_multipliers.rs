//! Exact Fourier multipliers on a periodic grid.
//!
//! ```text
//! cargo run --release --example fourier_multipliers
//! ```

use std::f64::consts::PI;

use besov_ks::{Field, GridSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid = GridSpec::new(1, 64, PI)?;
    println!("grid: N = {}, L = pi, K_max = {}", grid.points_per_axis(), grid.k_max());

    let f = Field::from_fn(grid, |x| (2.0 * x[0]).cos());
    let spectrum = f.fourier();
    let plus = grid.flat_index_of_modes(&[2]);
    let minus = grid.flat_index_of_modes(&[-2]);
    println!("cos(2x): c(+2) = {:.3}, c(-2) = {:.3}", spectrum[plus], spectrum[minus]);

    let s = Field::from_fn(grid, |x| (3.0 * x[0]).sin());
    let ds = &s.gradient()[0];
    let exact = Field::from_fn(grid, |x| 3.0 * (3.0 * x[0]).cos());
    println!("d/dx sin(3x) error: {:.2e}", (ds - &exact).sup_norm());

    let c = Field::from_fn(grid, |x| x[0].cos());
    let helm = c.helmholtz_inverse();
    println!("(1 - Lap)^-1 cos(x) / cos(x) = {:.6}", helm.sup_norm() / c.sup_norm());

    let heat = f.heat_propagate(0.25)?;
    println!("e^(0.25 Lap) cos(2x) amplitude = {:.6} (e^-1 = {:.6})", heat.sup_norm(), (-1f64).exp());

    let a = f.heat_propagate(0.1)?.heat_propagate(0.15)?;
    println!("semigroup defect: {:.2e}", (&a - &heat).sup_norm());

    let one = Field::from_fn(grid, |_| 1.0);
    println!("||1||_2 = {:.6} (sqrt(2 pi) = {:.6})", one.lp_norm(2.0)?, (2.0 * PI).sqrt());
    println!("Parseval: {:.6} vs {:.6}", s.lp_norm(2.0)?, s.parseval_l2());

    let high = Field::from_fn(grid, |x| (30.0 * x[0]).cos());
    println!("dealias(1/2) of cos(30x): sup = {:.2e}", high.dealias(0.5)?.sup_norm());
    Ok(())
}
