use serde::Serialize;

use super::ExperimentError;

/// Least-squares line through `(ln x, ln y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogLogFit {
    pub slope: f64,
    /// Natural-log intercept: `ln y ~ slope * ln x + intercept`.
    pub intercept: f64,
    /// Largest absolute residual in `ln y`.
    pub max_residual: f64,
}

/// Fits `y ~ C x^slope`. Needs at least three points with `x` strictly
/// increasing and both coordinates positive.
///
/// For a rate in `n` at base two, pass `x = 2^n`: the slope is then
/// `d log2(y) / dn`.
pub fn fit_loglog(points: &[(f64, f64)]) -> Result<LogLogFit, ExperimentError> {
    if points.len() < 3 {
        return Err(ExperimentError::Fit(format!("need >= 3 points, got {}", points.len())));
    }
    if points.windows(2).any(|w| !(w[1].0 > w[0].0)) {
        return Err(ExperimentError::Fit("x must be strictly increasing".into()));
    }
    if let Some(&(x, y)) = points.iter().find(|(x, y)| !(*x > 0.0 && *y > 0.0 && x.is_finite() && y.is_finite())) {
        return Err(ExperimentError::Fit(format!("nonpositive or non-finite point ({x}, {y})")));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|(x, y)| (x.ln(), y.ln())).collect();
    let m = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / m;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let max_residual = logs
        .iter()
        .map(|(lx, ly)| (ly - (slope * lx + intercept)).abs())
        .fold(0.0, f64::max);
    Ok(LogLogFit {
        slope,
        intercept,
        max_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_power_laws() {
        let fit = fit_loglog(&[(1.0, 2.0), (2.0, 4.0), (4.0, 8.0)]).unwrap();
        assert!((fit.slope - 1.0).abs() < 1e-12);
        assert!((fit.intercept - 2f64.ln()).abs() < 1e-12);
        assert!(fit.max_residual < 1e-12);

        let fit = fit_loglog(&[(0.1, 0.01), (0.2, 0.04), (0.4, 0.16)]).unwrap();
        assert!((fit.slope - 2.0).abs() < 1e-12);
        assert!(fit.max_residual < 1e-12);
    }

    #[test]
    fn perturbed_linear_law() {
        let ts = [0.0125, 0.025, 0.05, 0.1, 0.2];
        let wiggle = [1.01, 0.99, 1.01, 0.99, 1.01];
        let pts: Vec<_> = ts.iter().zip(wiggle).map(|(&t, w)| (t, t * w)).collect();
        let fit = fit_loglog(&pts).unwrap();
        assert!((fit.slope - 1.0).abs() <= 0.03, "{}", fit.slope);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(fit_loglog(&[(1.0, 1.0), (2.0, 2.0)]).is_err());
        assert!(fit_loglog(&[(1.0, 1.0), (2.0, 0.0), (3.0, 1.0)]).is_err());
        assert!(fit_loglog(&[(1.0, 1.0), (-2.0, 1.0), (3.0, 1.0)]).is_err());
        assert!(fit_loglog(&[(1.0, 1.0), (1.0, 2.0), (3.0, 1.0)]).is_err());
    }
}
