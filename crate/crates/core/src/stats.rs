//! Log-log regression of empirical against real errors.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegressionSummary {
    pub slope: f64,
    pub intercept: f64,
    /// Pearson correlation of the two log series.
    pub correlation: f64,
    /// Pairs that survived filtering.
    pub n: usize,
}

impl fmt::Display for RegressionSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "slope={:.16e} intercept={:.16e} r={:.16e} n={}",
            self.slope, self.intercept, self.correlation, self.n
        )
    }
}

/// Least squares of `log10(eps_emp)` on `log10(eps_real)` over
/// `(eps_real, eps_emp)` pairs.
///
/// Pairs with a non-positive or non-finite entry are dropped; an exact zero
/// error carries no information on a log scale.
pub fn loglog_regression(pairs: &[(f64, f64)]) -> Result<RegressionSummary> {
    let usable = |v: f64| v.is_finite() && v > 0.0;
    let (xs, ys): (Vec<f64>, Vec<f64>) = pairs
        .iter()
        .filter(|(real, emp)| usable(*real) && usable(*emp))
        .map(|(real, emp)| (real.log10(), emp.log10()))
        .unzip();
    linear_fit(&xs, &ys)
}

/// Ordinary least squares `y = slope * x + intercept` with Pearson `r`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<RegressionSummary> {
    let n = xs.len().min(ys.len());
    if n < 2 {
        return Err(Error::DegenerateSample(format!("{n} usable pairs")));
    }
    let (xs, ys) = (&xs[..n], &ys[..n]);
    let mean_x = xs.iter().sum::<f64>() / n as f64;
    let mean_y = ys.iter().sum::<f64>() / n as f64;

    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        let dx = x - mean_x;
        let dy = y - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::DegenerateSample("zero variance".into()));
    }

    let slope = sxy / sxx;
    Ok(RegressionSummary {
        slope,
        intercept: mean_y - slope * mean_x,
        correlation: (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0),
        n,
    })
}

/// Pearson correlation of two equally long samples.
pub fn pearson(a: &[f64], b: &[f64]) -> Result<f64> {
    linear_fit(a, b).map(|s| s.correlation)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn identity_line() {
        let pairs: Vec<_> = (-9..=-1).map(|k| (10f64.powi(k), 10f64.powi(k))).collect();
        let fit = loglog_regression(&pairs).unwrap();
        assert!(close(fit.slope, 1.0));
        assert!(close(fit.intercept, 0.0));
        assert!(close(fit.correlation, 1.0));
        assert_eq!(fit.n, 9);
    }

    #[test]
    fn shifted_line() {
        let pairs: Vec<_> = (-9..=-1)
            .map(|k| (10f64.powi(k), 10f64.powi(k - 1)))
            .collect();
        let fit = loglog_regression(&pairs).unwrap();
        assert!(close(fit.slope, 1.0));
        assert!(close(fit.intercept, -1.0));
        assert!(close(fit.correlation, 1.0));
    }

    #[test]
    fn drops_unusable_pairs() {
        let pairs = [
            (1e-3, 1e-3),
            (0.0, 1e-2),
            (1e-2, f64::NAN),
            (1e-1, 1e-1),
            (1e-5, -1.0),
        ];
        let fit = loglog_regression(&pairs).unwrap();
        assert_eq!(fit.n, 2);
    }

    #[test]
    fn degenerate_sample() {
        let err = loglog_regression(&[(1e-3, 1e-3), (0.0, 0.0)]).unwrap_err();
        assert!(err.to_string().starts_with("degenerate sample"));
        assert!(loglog_regression(&[(1e-3, 1e-3), (1e-3, 1e-3)]).is_err());
    }

    #[test]
    fn anticorrelated() {
        let r = pearson(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap();
        assert!(close(r, -1.0));
    }

    #[test]
    fn display_round_trips() {
        let fit = RegressionSummary {
            slope: 0.5,
            intercept: -0.887,
            correlation: 0.979,
            n: 4000,
        };
        let text = fit.to_string();
        assert!(text.starts_with("slope=5.0000000000000000e-1 intercept="));
        assert!(text.ends_with(" n=4000"));
    }
}
