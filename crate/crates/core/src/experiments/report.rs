use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::{ExperimentError, ExperimentSpec, LogLogFit, Scenario};
use crate::littlewood_paley::{CHI_OUTER_RADIUS, DATA_FREQUENCY_FACTOR, PLATEAU_RADIUS};

/// One measured value: CSV line `scenario,n,epsilon,t,norm,value`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub scenario: Scenario,
    pub n: u32,
    pub epsilon: f64,
    pub t: f64,
    pub norm: String,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    /// `|measured - target| <= tolerance`
    Within,
    /// `measured >= target - tolerance`
    AtLeast,
    /// `measured <= target + tolerance`
    AtMost,
    /// `measured > target`
    Above,
    /// `measured < target`
    Below,
}

/// A pass/fail flag together with what it was measured against.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub comparison: Comparison,
    pub target: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, measured: f64, comparison: Comparison, target: f64, tolerance: f64) -> Self {
        let pass = match comparison {
            Comparison::Within => (measured - target).abs() <= tolerance,
            Comparison::AtLeast => measured >= target - tolerance,
            Comparison::AtMost => measured <= target + tolerance,
            Comparison::Above => measured > target,
            Comparison::Below => measured < target,
        };
        Self {
            name: name.into(),
            measured,
            comparison,
            target,
            tolerance,
            pass,
        }
    }

    pub fn within(name: impl Into<String>, measured: f64, target: f64, tolerance: f64) -> Self {
        Self::new(name, measured, Comparison::Within, target, tolerance)
    }

    pub fn at_least(name: impl Into<String>, measured: f64, target: f64, tolerance: f64) -> Self {
        Self::new(name, measured, Comparison::AtLeast, target, tolerance)
    }

    pub fn at_most(name: impl Into<String>, measured: f64, target: f64, tolerance: f64) -> Self {
        Self::new(name, measured, Comparison::AtMost, target, tolerance)
    }

    pub fn above(name: impl Into<String>, measured: f64, target: f64) -> Self {
        Self::new(name, measured, Comparison::Above, target, 0.0)
    }

    pub fn below(name: impl Into<String>, measured: f64, target: f64) -> Self {
        Self::new(name, measured, Comparison::Below, target, 0.0)
    }

    /// `PASS name: measured 1.0e0 within 1 +- 0.1`
    pub fn line(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let relation = match self.comparison {
            Comparison::Within => format!("within {} +- {}", self.target, self.tolerance),
            Comparison::AtLeast => format!(">= {} - {}", self.target, self.tolerance),
            Comparison::AtMost => format!("<= {} + {}", self.target, self.tolerance),
            Comparison::Above => format!("> {}", self.target),
            Comparison::Below => format!("< {}", self.target),
        };
        format!("{verdict} {}: measured {:.6e}, required {relation}", self.name, self.measured)
    }
}

/// A fitted log-log line, labelled by the curve and the free variable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitRecord {
    pub curve: String,
    /// `n`, `t` or `epsilon`.
    pub variable: String,
    /// What is held fixed, e.g. `n=5` or `t=0.1`.
    pub at: String,
    pub points: usize,
    #[serde(flatten)]
    pub fit: LogLogFit,
}

/// A derived number such as a measured constant `C_1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Constant {
    pub name: String,
    pub n: Option<u32>,
    pub t: Option<f64>,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridEntry {
    pub n: u32,
    pub points_per_axis: usize,
    pub half_period: f64,
    pub k_max: f64,
    pub j_max: i32,
    pub dt: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileConstants {
    pub plateau_radius: f64,
    pub chi_outer_radius: f64,
    pub data_frequency_factor: f64,
    pub bump_inner_radius: f64,
    pub bump_outer_radius: f64,
}

impl ProfileConstants {
    pub fn for_dim(dim: usize) -> Self {
        Self {
            plateau_radius: PLATEAU_RADIUS,
            chi_outer_radius: CHI_OUTER_RADIUS,
            data_frequency_factor: DATA_FREQUENCY_FACTOR,
            bump_inner_radius: 4f64.powi(-(dim as i32)),
            bump_outer_radius: 2f64.powi(-(dim as i32)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metadata {
    pub crate_version: String,
    pub config_hash: String,
    pub spec: ExperimentSpec,
    pub profile: ProfileConstants,
    pub grids: Vec<GridEntry>,
    pub dealias_fraction: f64,
    pub blowup_ceiling: f64,
}

/// Raw table, fits, constants and checks of one scenario run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RateReport {
    pub scenario: Scenario,
    /// All checks pass.
    pub pass: bool,
    pub checks: Vec<Check>,
    pub fits: Vec<FitRecord>,
    pub constants: Vec<Constant>,
    pub metadata: Metadata,
    #[serde(skip)]
    pub rows: Vec<Row>,
}

impl RateReport {
    pub fn new(spec: &ExperimentSpec, grids: Vec<GridEntry>) -> Self {
        Self {
            scenario: spec.scenario,
            pass: true,
            checks: Vec::new(),
            fits: Vec::new(),
            constants: Vec::new(),
            metadata: Metadata {
                crate_version: env!("CARGO_PKG_VERSION").to_string(),
                config_hash: spec.config_hash(),
                spec: spec.clone(),
                profile: ProfileConstants::for_dim(spec.dim),
                grids,
                dealias_fraction: crate::keller_segel::SolverConfig::DEFAULT_DEALIAS_FRACTION,
                blowup_ceiling: crate::keller_segel::SolverConfig::DEFAULT_BLOWUP_CEILING,
            },
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, n: u32, epsilon: f64, t: f64, norm: &str, value: f64) {
        self.rows.push(Row {
            scenario: self.scenario,
            n,
            epsilon,
            t,
            norm: norm.to_string(),
            value,
        });
    }

    pub fn push_check(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    pub fn push_fit(&mut self, curve: &str, variable: &str, at: String, points: usize, fit: LogLogFit) {
        self.fits.push(FitRecord {
            curve: curve.to_string(),
            variable: variable.to_string(),
            at,
            points,
            fit,
        });
    }

    pub fn push_constant(&mut self, name: &str, n: Option<u32>, t: Option<f64>, value: f64) {
        self.constants.push(Constant {
            name: name.to_string(),
            n,
            t,
            value,
        });
    }

    /// Rows matching `norm`, in insertion order.
    pub fn values<'a>(&'a self, norm: &'a str) -> impl Iterator<Item = &'a Row> + 'a {
        self.rows.iter().filter(move |r| r.norm == norm)
    }

    /// The value recorded for `(norm, n, t)`.
    pub fn value(&self, norm: &str, n: u32, t: f64) -> Option<f64> {
        self.values(norm)
            .find(|r| r.n == n && (r.t - t).abs() <= 1e-12)
            .map(|r| r.value)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn summary_lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| format!("{} {}", self.scenario, c.line()))
            .collect()
    }
}

/// `{:.16e}`: 17 significant digits, enough to round-trip any `f64`.
pub(crate) fn format_number(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes `<dir>/<scenario>.csv` and `<dir>/<scenario>.json`, creating
/// `dir` if needed. Returns both paths.
pub fn write_report(report: &RateReport, dir: &Path) -> Result<(PathBuf, PathBuf), ExperimentError> {
    let io_err = |path: &Path| {
        let path = path.display().to_string();
        move |source| ExperimentError::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let csv_path = dir.join(format!("{}.csv", report.scenario));
    let json_path = dir.join(format!("{}.json", report.scenario));

    let mut buf = Vec::new();
    {
        let mut w = csv::Writer::from_writer(&mut buf);
        let ser_err = |e: csv::Error| ExperimentError::Serialize {
            path: csv_path.display().to_string(),
            message: e.to_string(),
        };
        w.write_record(["scenario", "n", "epsilon", "t", "norm", "value"])
            .map_err(ser_err)?;
        for row in &report.rows {
            w.write_record([
                row.scenario.id().to_string(),
                row.n.to_string(),
                format_number(row.epsilon),
                format_number(row.t),
                row.norm.clone(),
                format_number(row.value),
            ])
            .map_err(ser_err)?;
        }
        w.flush().map_err(io_err(&csv_path))?;
    }
    fs::write(&csv_path, &buf).map_err(io_err(&csv_path))?;

    let mut json = serde_json::to_vec_pretty(report).map_err(|e| ExperimentError::Serialize {
        path: json_path.display().to_string(),
        message: e.to_string(),
    })?;
    json.write_all(b"\n").expect("writing to a Vec cannot fail");
    fs::write(&json_path, json).map_err(io_err(&json_path))?;
    Ok((csv_path, json_path))
}
