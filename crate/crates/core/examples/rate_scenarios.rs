//! Runs rate scenarios and writes CSV/JSON reports.
//!
//! ```text
//! cargo run --release --example rate_scenarios -- E1 E2 /tmp/reports
//! ```
//!
//! Arguments are scenario ids followed by an optional output directory;
//! with none, E1 and E2 run into `reports/`.

use std::path::PathBuf;

use besov_ks::experiments::{run, write_report, ExperimentSpec, Scenario};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut scenarios = Vec::new();
    let mut out = PathBuf::from("reports");
    for arg in std::env::args().skip(1) {
        match arg.parse::<Scenario>() {
            Ok(sc) => scenarios.push(sc),
            Err(_) => out = PathBuf::from(arg),
        }
    }
    if scenarios.is_empty() {
        scenarios = vec![Scenario::E1, Scenario::E2];
    }
    for sc in scenarios {
        let spec = ExperimentSpec::new(sc);
        let report = run(&spec)?;
        for line in report.summary_lines() {
            println!("{line}");
        }
        for fit in &report.fits {
            println!(
                "  fit {:<10} vs {:<7} at {:<10} slope {:+.4} residual {:.1e}",
                fit.curve, fit.variable, fit.at, fit.fit.slope, fit.fit.max_residual
            );
        }
        let (csv, json) = write_report(&report, &out)?;
        println!("{sc}: {} -> {} {}", if report.pass { "pass" } else { "fail" }, csv.display(), json.display());
    }
    Ok(())
}
