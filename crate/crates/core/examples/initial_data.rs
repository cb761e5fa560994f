//! The oscillating data family `u_0^n` and its norm scaling.
//!
//! ```text
//! cargo run --release --example initial_data
//! ```

use besov_ks::experiments::GridRule;
use besov_ks::littlewood_paley::{data_frequency, initial_data, periodization_tail};
use besov_ks::{BesovParams, DataProfile, DyadicFamily, GridSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bp = BesovParams::new(2.0, 2.0, 2.0);
    let half_period = 16.0 * std::f64::consts::PI;
    println!(" n      N   k0        sup     B^(s-1)     B^s         B^(s+1)     tail");
    for n in 3..=7 {
        let grid = GridSpec::new(1, GridRule::Linear.points_for(n, half_period), half_period)?;
        let profile = DataProfile::new(&grid);
        let u0 = initial_data(n, &bp, &grid, &profile)?;
        let family = DyadicFamily::new(grid)?;
        let norms: Vec<f64> = [-1.0, 0.0, 1.0]
            .iter()
            .map(|ds| family.besov_norm(&u0, &bp.with_s(bp.s + ds)))
            .collect::<Result<_, _>>()?;
        let off = (&u0 - &family.block(&u0, n as i32)?).parseval_l2() / u0.parseval_l2();
        assert!(off <= 1e-12);
        println!(
            "{n:>2} {:>6} {:>6.2} {:.3e} {:.3e} {:.3e} {:.3e} {:.1e}",
            grid.points_per_axis(),
            data_frequency(n),
            u0.sup_norm(),
            norms[0],
            norms[1],
            norms[2],
            periodization_tail(&u0)
        );
    }
    Ok(())
}
