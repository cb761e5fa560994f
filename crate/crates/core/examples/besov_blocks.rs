//! Littlewood-Paley blocks and nonhomogeneous Besov norms.
//!
//! ```text
//! cargo run --release --example besov_blocks
//! ```

use std::f64::consts::PI;

use besov_ks::littlewood_paley::{chi, phi, smooth_step};
use besov_ks::{BesovParams, DyadicFamily, Field, GridSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("smooth_step(0.5) = {}", smooth_step(0.5));
    for r in [0.0, 1.0, 1.2, 1.4, 2.0, 2.5, 3.0] {
        println!("  |xi| = {r:<4} chi = {:.6}  phi = {:.6}", chi(r), phi(r));
    }

    let grid = GridSpec::new(1, 512, PI)?;
    let family = DyadicFamily::new(grid)?;
    println!(
        "j_max = {}, covered radius = {:.2}, partition defect = {:.1e}",
        family.j_max(),
        family.covered_radius(),
        family.partition_defect()
    );

    // cos(11 x): |xi| = 11 = 1.375 * 8 lies on the plateau of phi(2^-3 .)
    let f = Field::from_fn(grid, |x| (11.0 * x[0]).cos() + 0.5 * (40.0 * x[0]).sin());
    for (j, norm) in family.block_norms(&f, 2.0)?.iter().enumerate() {
        if *norm > 1e-12 {
            println!("  ||Delta_{} f||_2 = {norm:.6}", j as i32 - 1);
        }
    }
    for bp in [
        BesovParams::new(2.0, 2.0, 2.0),
        BesovParams::new(1.5, 2.0, 1.0),
        BesovParams::new(2.0, f64::INFINITY, f64::INFINITY),
    ] {
        println!("{} = {:.6e}", bp.label(), family.besov_norm(&f, &bp)?);
    }

    let rough = Field::from_fn(grid, |x| (255.0 * x[0]).cos());
    let coarse = DyadicFamily::with_cutoff(grid, 64.0)?;
    match coarse.besov_norm(&rough, &BesovParams::new(2.0, 2.0, 2.0)) {
        Ok(v) => println!("unexpected norm {v}"),
        Err(e) => println!("beyond the covered bands: {e}"),
    }
    Ok(())
}
