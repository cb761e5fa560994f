use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use besov_ks::experiments::validate::run_validation;
use besov_ks::experiments::{run, write_report, RunConfig, Scenario};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "besov-ks", version, about = "Rate scenarios for the vanishing-diffusivity limit of Keller-Segel")]
struct Cli {
    /// Flat TOML file with the same keys as the flags (flags win).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario (E1..E6) or `all`.
    Run {
        scenario: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        s: Option<f64>,
        /// Number or `inf`.
        #[arg(long)]
        p: Option<String>,
        /// Number or `inf`.
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        n_min: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        /// Points per axis for every n (default: chosen per n).
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long)]
        half_period: Option<f64>,
        /// Comma-separated times.
        #[arg(long)]
        t_grid: Option<String>,
        #[arg(long)]
        dt: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property suites.
    Validate,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: Cli) -> Result<bool, Box<dyn std::error::Error>> {
    let file = match &cli.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    match cli.command {
        Command::Validate => {
            let report = run_validation()?;
            for line in report.lines() {
                println!("{line}");
            }
            Ok(report.pass)
        }
        Command::Run {
            scenario,
            d,
            s,
            p,
            r,
            n_min,
            n_max,
            grid,
            half_period,
            t_grid,
            dt,
            out,
        } => {
            let flags = RunConfig {
                d,
                s,
                p: p.map(|v| v.parse()).transpose()?,
                r: r.map(|v| v.parse()).transpose()?,
                n_min,
                n_max,
                grid,
                half_period,
                t_grid: t_grid.map(|v| v.parse()).transpose()?,
                dt,
                out,
                ..Default::default()
            };
            let config = file.merged(flags);
            let scenarios = if scenario.eq_ignore_ascii_case("all") {
                Scenario::ALL.to_vec()
            } else {
                vec![scenario.parse()?]
            };
            let mut all_pass = true;
            for sc in scenarios {
                let spec = config.spec_for(sc)?;
                let start = Instant::now();
                let report = run(&spec)?;
                let (csv, json) = write_report(&report, &spec.out)?;
                for line in report.summary_lines() {
                    println!("{line}");
                }
                eprintln!(
                    "{sc}: {} in {:.1}s -> {}, {}",
                    if report.pass { "pass" } else { "fail" },
                    start.elapsed().as_secs_f64(),
                    csv.display(),
                    json.display()
                );
                all_pass &= report.pass;
            }
            Ok(all_pass)
        }
    }
}
