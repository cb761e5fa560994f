//! The property suite: FFT round trip, partition of unity, block
//! localization, mass conservation, Bernstein ratios, integrator order.
//!
//! ```text
//! cargo run --release --example property_suite
//! ```

use besov_ks::experiments::validate::{self, BERNSTEIN_INTERVAL};
use besov_ks::{DyadicFamily, GridSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = validate::run_validation()?;
    for line in report.lines() {
        println!("{line}");
    }

    println!("Bernstein ratio by octave (frozen interval {BERNSTEIN_INTERVAL:?}):");
    let family = DyadicFamily::new(GridSpec::new(1, 1024, std::f64::consts::PI)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for p in [1.0, 2.0, f64::INFINITY] {
        for j in 3..=5 {
            let r = validate::bernstein_ratios(&family, j, p, 16, &mut rng)?;
            let (lo, hi) = r.iter().fold((f64::INFINITY, 0.0f64), |(a, b), &v| (a.min(v), b.max(v)));
            println!("  p = {p:<4} j = {j}: [{lo:.4}, {hi:.4}]");
        }
    }
    for dt in [0.1, 0.05, 0.025] {
        println!("observed order from dt = {dt}: {:.4}", validate::self_convergence_order(5, dt)?);
    }
    Ok(())
}
