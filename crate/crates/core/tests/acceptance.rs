//! One line per acceptance criterion, at the default scenario settings.
//! Scenarios run one at a time so the runtime limits are measured fairly.

use std::sync::Mutex;
use std::time::{Duration, Instant};

use besov_ks::experiments::validate::run_validation;
use besov_ks::experiments::{run, Check, ExperimentSpec, Scenario};

static SERIAL: Mutex<()> = Mutex::new(());

fn report(label: &str, checks: &[Check], elapsed: Duration, limit: Duration) -> bool {
    let mut out = String::new();
    let mut pass = true;
    for c in checks {
        out += &format!("{label} {}\n", c.line());
        pass &= c.pass;
    }
    let in_time = elapsed <= limit;
    out += &format!(
        "{label} {} runtime: measured {:.1}s, required <= {}s\n",
        if in_time { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    pass &= in_time;
    out += &format!("{label} {}", if pass { "PASS" } else { "FAIL" });
    println!("{out}");
    pass
}

fn scenario(sc: Scenario, limit_secs: u64) {
    let guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let rep = run(&ExperimentSpec::new(sc)).expect("scenario runs");
    let elapsed = start.elapsed();
    drop(guard);
    let pass = report(sc.id(), &rep.checks, elapsed, Duration::from_secs(limit_secs));
    assert!(pass, "{sc} did not meet its acceptance targets");
}

#[test]
fn e1_data_norm_scaling() {
    scenario(Scenario::E1, 10);
}

#[test]
fn e2_heat_defect_rate() {
    scenario(Scenario::E2, 30);
}

#[test]
fn e3_second_order_term() {
    scenario(Scenario::E3, 5 * 60);
}

#[test]
fn e4_remainder_rates() {
    scenario(Scenario::E4, 15 * 60);
}

#[test]
fn e5_rate_floor() {
    scenario(Scenario::E5, 20 * 60);
}

#[test]
fn e6_uniform_bounds() {
    scenario(Scenario::E6, 10 * 60);
}

#[test]
fn property_suites() {
    let guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let rep = run_validation().expect("validation runs");
    let elapsed = start.elapsed();
    drop(guard);
    assert!(report("validate", &rep.checks, elapsed, Duration::from_secs(120)));
}
