use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ExperimentError;
use crate::ext_real;
use crate::keller_segel::SolverConfig;
use crate::littlewood_paley::{data_frequency, BesovParams};
use crate::spectral::GridSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Scenario {
    E1,
    E2,
    E3,
    E4,
    E5,
    E6,
}

impl Scenario {
    pub const ALL: [Scenario; 6] = [
        Scenario::E1,
        Scenario::E2,
        Scenario::E3,
        Scenario::E4,
        Scenario::E5,
        Scenario::E6,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Scenario::E1 => "E1",
            Scenario::E2 => "E2",
            Scenario::E3 => "E3",
            Scenario::E4 => "E4",
            Scenario::E5 => "E5",
            Scenario::E6 => "E6",
        }
    }

    /// E1 and E2 only apply linear multipliers to the data; the others
    /// evaluate the cubic nonlinearity.
    pub fn grid_rule(&self) -> GridRule {
        match self {
            Scenario::E1 | Scenario::E2 => GridRule::Linear,
            _ => GridRule::Cubic,
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Scenario {
    type Err = ExperimentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scenario::ALL
            .into_iter()
            .find(|sc| sc.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ExperimentError::Spec(format!("unknown scenario {s:?} (expected E1..E6)")))
    }
}

/// How many points per axis a data index `n` needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GridRule {
    /// `(17/12) 2^n + 1/2 <= K_max / 2`.
    Linear,
    /// `3 ((17/12) 2^n + 1/2) <= K_max / 2`: the third harmonic generated by
    /// the cubic nonlinearity is still resolved below the dealias cutoff.
    Cubic,
}

impl GridRule {
    /// Smallest power of two `N >= 8` meeting the rule on `[-L, L)`.
    pub fn points_for(&self, n: u32, half_period: f64) -> usize {
        let reach = data_frequency(n) + 0.5;
        let needed = match self {
            GridRule::Linear => reach,
            GridRule::Cubic => 3.0 * reach,
        };
        // K_max / 2 = pi N / (4 L)
        let mut points = 8;
        while std::f64::consts::PI * points as f64 / (4.0 * half_period) < needed {
            points *= 2;
        }
        points
    }
}

/// Everything a scenario run depends on. Serialized into each report and
/// hashed, except for the output directory.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentSpec {
    pub scenario: Scenario,
    pub dim: usize,
    pub besov: BesovParams,
    pub n_min: u32,
    pub n_max: u32,
    /// Fixed points per axis; `None` selects `N` per `n` from the grid rule.
    pub grid: Option<usize>,
    pub half_period: f64,
    pub t_grid: Vec<f64>,
    /// Time step; `None` uses `0.5 / K_max`.
    pub dt: Option<f64>,
    pub quad_steps: usize,
    /// Bound `R` on `||u_0^n||_{B^s}`; checked when given, reported always.
    pub data_family_radius: Option<f64>,
    /// Time at which E5 reads off the floor `c_0`.
    pub reference_time: f64,
    /// Data index held fixed in the E5 sweep over `eps`.
    pub fixed_n: u32,
    #[serde(skip)]
    pub out: PathBuf,
}

pub const DEFAULT_T_GRID: [f64; 5] = [0.0125, 0.025, 0.05, 0.1, 0.2];

impl ExperimentSpec {
    /// `d = 1`, `B^2_{2,2}`, `n = 3..=7`, `L = 16 pi`.
    pub fn new(scenario: Scenario) -> Self {
        Self {
            scenario,
            dim: 1,
            besov: BesovParams::new(2.0, 2.0, 2.0),
            n_min: 3,
            n_max: 7,
            grid: None,
            half_period: 16.0 * std::f64::consts::PI,
            t_grid: DEFAULT_T_GRID.to_vec(),
            dt: None,
            quad_steps: SolverConfig::DEFAULT_QUAD_STEPS,
            data_family_radius: None,
            reference_time: 0.1,
            fixed_n: 4,
            out: PathBuf::from("reports"),
        }
    }

    /// Defaults for dimension `dim`. In `d >= 2` the grid is `256^d` on
    /// `[-2 pi, 2 pi)^d` with `n = 2..=4` and `s = d/2 + 1.5`.
    pub fn for_dim(scenario: Scenario, dim: usize) -> Self {
        let mut spec = Self::new(scenario);
        if dim >= 2 {
            spec.dim = dim;
            spec.besov = BesovParams::new(dim as f64 / 2.0 + 1.5, 2.0, 2.0);
            spec.n_min = 2;
            spec.n_max = 4;
            spec.grid = Some(256);
            spec.half_period = 2.0 * std::f64::consts::PI;
        }
        spec
    }

    pub fn n_values(&self) -> Vec<u32> {
        (self.n_min..=self.n_max).collect()
    }

    /// `eps = 2^{-2n}`.
    pub fn epsilon(n: u32) -> f64 {
        2f64.powi(-2 * n as i32)
    }

    pub fn horizon(&self) -> f64 {
        self.t_grid.last().copied().unwrap_or(0.0)
    }

    pub fn grid_for(&self, n: u32) -> Result<GridSpec, ExperimentError> {
        let points = self
            .grid
            .unwrap_or_else(|| self.scenario.grid_rule().points_for(n, self.half_period));
        Ok(GridSpec::new(self.dim, points, self.half_period)?)
    }

    /// Solver settings for one run on `grid`, saving at every `t_grid` time.
    pub fn solver_config(&self, grid: &GridSpec, epsilon: f64) -> SolverConfig {
        let mut cfg = SolverConfig::new(grid, epsilon, self.horizon())
            .with_save_times(self.t_grid.clone())
            .with_quad_steps(self.quad_steps);
        if let Some(dt) = self.dt {
            cfg = cfg.with_dt(dt);
        }
        cfg
    }

    /// Index of `reference_time` in `t_grid`.
    pub fn reference_index(&self) -> Option<usize> {
        self.t_grid
            .iter()
            .position(|&t| (t - self.reference_time).abs() <= 1e-12)
    }

    pub fn validate(&self) -> Result<(), ExperimentError> {
        let bad = |msg: String| Err(ExperimentError::Spec(msg));
        if !self.besov.admissible(self.dim) {
            return bad(format!("{} is not admissible in d = {}", self.besov.label(), self.dim));
        }
        if self.n_min > self.n_max {
            return bad(format!("n range {}..={} is empty", self.n_min, self.n_max));
        }
        if self.n_max - self.n_min + 1 < 3 {
            return bad("rate fits in n need at least three data indices".into());
        }
        if self.t_grid.len() < 3 {
            return bad("rate fits in t need at least three times".into());
        }
        if self.t_grid.iter().any(|&t| !(t > 0.0 && t.is_finite()))
            || self.t_grid.windows(2).any(|w| w[1] <= w[0])
        {
            return bad("t grid must be positive and strictly increasing".into());
        }
        if let Some(dt) = self.dt {
            if !(dt > 0.0 && dt.is_finite()) {
                return bad(format!("dt = {dt} must be positive"));
            }
        }
        if self.quad_steps < 8 || !self.quad_steps.is_multiple_of(2) {
            return bad(format!("quad_steps = {} must be even and >= 8", self.quad_steps));
        }
        if self.scenario == Scenario::E5 && self.reference_index().is_none() {
            return bad(format!("reference time {} is not on the t grid", self.reference_time));
        }
        for n in self.n_values() {
            let grid = self.grid_for(n)?;
            let top = data_frequency(n) + 0.5;
            if top > 0.5 * grid.k_max() {
                return bad(format!(
                    "n = {n}: data frequency {top:.3} exceeds the dealias cutoff {:.3} on N = {}",
                    0.5 * grid.k_max(),
                    grid.points_per_axis()
                ));
            }
        }
        Ok(())
    }

    /// SHA-256 of the serialized spec, hex encoded.
    pub fn config_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let json = serde_json::to_string(self).expect("spec serializes");
        Sha256::digest(json.as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

/// Flat key-value overrides, read from TOML or assembled from CLI flags.
/// Unset keys keep the scenario defaults.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub d: Option<usize>,
    pub s: Option<f64>,
    pub p: Option<ExtReal>,
    pub r: Option<ExtReal>,
    pub n_min: Option<u32>,
    pub n_max: Option<u32>,
    pub grid: Option<usize>,
    pub half_period: Option<f64>,
    pub t_grid: Option<TimeGrid>,
    pub dt: Option<f64>,
    pub quad_steps: Option<usize>,
    pub data_family_radius: Option<f64>,
    pub reference_time: Option<f64>,
    pub fixed_n: Option<u32>,
    pub out: Option<PathBuf>,
}

/// A number or `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(transparent)]
pub struct ExtReal(#[serde(with = "ext_real")] pub f64);

impl FromStr for ExtReal {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ext_real::parse(s)
            .map(ExtReal)
            .ok_or_else(|| format!("not a number or inf: {s:?}"))
    }
}

/// Either a TOML array of numbers or a comma-separated string.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum TimeGrid {
    List(Vec<f64>),
    Csv(String),
}

impl TimeGrid {
    pub fn values(&self) -> Result<Vec<f64>, ExperimentError> {
        match self {
            TimeGrid::List(v) => Ok(v.clone()),
            TimeGrid::Csv(s) => parse_csv_times(s),
        }
    }
}

impl FromStr for TimeGrid {
    type Err = ExperimentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_csv_times(s)?;
        Ok(TimeGrid::Csv(s.to_string()))
    }
}

fn parse_csv_times(s: &str) -> Result<Vec<f64>, ExperimentError> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| ExperimentError::Spec(format!("bad time {part:?} in t grid")))
        })
        .collect()
}

impl RunConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn from_file(path: &Path) -> Result<Self, ExperimentError> {
        let text = std::fs::read_to_string(path).map_err(|source| ExperimentError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_toml_str(&text).map_err(|e| ExperimentError::Config {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    }

    /// Keys set in `other` win.
    pub fn merged(self, other: RunConfig) -> RunConfig {
        RunConfig {
            d: other.d.or(self.d),
            s: other.s.or(self.s),
            p: other.p.or(self.p),
            r: other.r.or(self.r),
            n_min: other.n_min.or(self.n_min),
            n_max: other.n_max.or(self.n_max),
            grid: other.grid.or(self.grid),
            half_period: other.half_period.or(self.half_period),
            t_grid: other.t_grid.or(self.t_grid),
            dt: other.dt.or(self.dt),
            quad_steps: other.quad_steps.or(self.quad_steps),
            data_family_radius: other.data_family_radius.or(self.data_family_radius),
            reference_time: other.reference_time.or(self.reference_time),
            fixed_n: other.fixed_n.or(self.fixed_n),
            out: other.out.or(self.out),
        }
    }

    /// Scenario defaults for the requested dimension with these overrides
    /// applied, validated.
    pub fn spec_for(&self, scenario: Scenario) -> Result<ExperimentSpec, ExperimentError> {
        let mut spec = ExperimentSpec::for_dim(scenario, self.d.unwrap_or(1));
        if let Some(s) = self.s {
            spec.besov.s = s;
        }
        if let Some(ExtReal(p)) = self.p {
            spec.besov.p = p;
        }
        if let Some(ExtReal(r)) = self.r {
            spec.besov.r = r;
        }
        if let Some(v) = self.n_min {
            spec.n_min = v;
        }
        if let Some(v) = self.n_max {
            spec.n_max = v;
        }
        if self.grid.is_some() {
            spec.grid = self.grid;
        }
        if let Some(v) = self.half_period {
            spec.half_period = v;
        }
        if let Some(t) = &self.t_grid {
            spec.t_grid = t.values()?;
        }
        if self.dt.is_some() {
            spec.dt = self.dt;
        }
        if let Some(v) = self.quad_steps {
            spec.quad_steps = v;
        }
        if self.data_family_radius.is_some() {
            spec.data_family_radius = self.data_family_radius;
        }
        if let Some(v) = self.reference_time {
            spec.reference_time = v;
        }
        if let Some(v) = self.fixed_n {
            spec.fixed_n = v;
        }
        if let Some(out) = &self.out {
            spec.out = out.clone();
        }
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_rules_on_default_torus() {
        let l = 16.0 * std::f64::consts::PI;
        let cubic: Vec<usize> = (3..=7).map(|n| GridRule::Cubic.points_for(n, l)).collect();
        assert_eq!(cubic, [4096, 8192, 16384, 32768, 65536]);
        let linear: Vec<usize> = (3..=7).map(|n| GridRule::Linear.points_for(n, l)).collect();
        assert_eq!(linear, [1024, 2048, 4096, 8192, 16384]);
    }

    #[test]
    fn defaults_validate() {
        for sc in Scenario::ALL {
            ExperimentSpec::new(sc).validate().unwrap();
            ExperimentSpec::for_dim(sc, 2).validate().unwrap();
        }
    }

    #[test]
    fn scenario_parsing() {
        assert_eq!("e4".parse::<Scenario>().unwrap(), Scenario::E4);
        assert!("E7".parse::<Scenario>().is_err());
    }

    #[test]
    fn toml_overrides_and_merge() {
        let file = RunConfig::from_toml_str(
            "s = 1.5\nr = 1\nt_grid = [0.05, 0.1, 0.2]\nn_max = 6\n",
        )
        .unwrap();
        let flags = RunConfig {
            n_max: Some(5),
            t_grid: Some("0.1,0.2,0.4".parse().unwrap()),
            ..Default::default()
        };
        let spec = file.merged(flags).spec_for(Scenario::E1).unwrap();
        assert_eq!(spec.besov, BesovParams::new(1.5, 2.0, 1.0));
        assert_eq!(spec.n_max, 5);
        assert_eq!(spec.t_grid, [0.1, 0.2, 0.4]);

        let inf = RunConfig::from_toml_str("p = \"inf\"\ns = 3\n").unwrap();
        assert_eq!(inf.p, Some(ExtReal(f64::INFINITY)));
        assert!(RunConfig::from_toml_str("bogus = 1").is_err());
    }

    #[test]
    fn rejects_inadmissible_or_aliased() {
        let cfg = RunConfig {
            s: Some(1.2),
            ..Default::default()
        };
        assert!(cfg.spec_for(Scenario::E1).is_err());
        let cfg = RunConfig {
            grid: Some(4096),
            ..Default::default()
        };
        assert!(cfg.spec_for(Scenario::E1).is_err());
    }

    #[test]
    fn hash_ignores_output_dir() {
        let a = ExperimentSpec::new(Scenario::E2);
        let mut b = a.clone();
        b.out = PathBuf::from("elsewhere");
        assert_eq!(a.config_hash(), b.config_hash());
        b.besov.s = 2.5;
        assert_ne!(a.config_hash(), b.config_hash());
    }
}
