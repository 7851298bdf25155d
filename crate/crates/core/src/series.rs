//! Partial-sum generators and the divergent-series summation driver.

use rayon::prelude::*;

use crate::epsilon::{accelerate, ApproximantChoice};
use crate::error::{Error, Result};

/// Default number of terms for summing `ln(1 + x)`.
pub const DEFAULT_TERMS: usize = 25;

#[derive(Clone, Debug, PartialEq)]
pub enum SeriesKind {
    /// `S_n = sum_{k=1..n} (-1)^(k+1) x^k / k`, giving `S_1..S_N`.
    LogOnePlusX,
    /// `S_n = sum_{k=0..n} x^k`, giving `S_0..S_N`.
    Geometric,
    /// Prefix sums of `sum_k c_k x^k`.
    Coefficients(Vec<f64>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeriesSpec {
    pub kind: SeriesKind,
    pub x: f64,
    pub terms: usize,
}

impl SeriesSpec {
    pub fn log_one_plus_x(x: f64, terms: usize) -> Self {
        SeriesSpec {
            kind: SeriesKind::LogOnePlusX,
            x,
            terms,
        }
    }

    pub fn geometric(x: f64, terms: usize) -> Self {
        SeriesSpec {
            kind: SeriesKind::Geometric,
            x,
            terms,
        }
    }

    /// One partial sum per coefficient.
    pub fn coefficients(x: f64, coefficients: Vec<f64>) -> Self {
        let terms = coefficients.len();
        SeriesSpec {
            kind: SeriesKind::Coefficients(coefficients),
            x,
            terms,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.terms == 0 {
            return Err(Error::InvalidSeries("terms must be at least 1".into()));
        }
        if !self.x.is_finite() {
            return Err(Error::NonFinite("series argument"));
        }
        if let SeriesKind::Coefficients(c) = &self.kind {
            if c.len() < self.terms {
                return Err(Error::InvalidSeries(format!(
                    "{} terms requested from {} coefficients",
                    self.terms,
                    c.len()
                )));
            }
        }
        Ok(())
    }
}

/// Partial sums accumulated left to right in plain double precision.
pub fn partial_sums(spec: &SeriesSpec) -> Result<Vec<f64>> {
    spec.validate()?;
    let x = spec.x;
    let mut sum = 0.0;
    let sums = match &spec.kind {
        SeriesKind::LogOnePlusX => {
            let mut power = 1.0;
            (1..=spec.terms)
                .map(|k| {
                    power *= x;
                    let term = power / k as f64;
                    sum += if k % 2 == 1 { term } else { -term };
                    sum
                })
                .collect()
        }
        SeriesKind::Geometric => {
            let mut power = 1.0;
            (0..=spec.terms)
                .map(|_| {
                    sum += power;
                    power *= x;
                    sum
                })
                .collect()
        }
        SeriesKind::Coefficients(c) => {
            let mut power = 1.0;
            c[..spec.terms]
                .iter()
                .map(|ck| {
                    sum += ck * power;
                    power *= x;
                    sum
                })
                .collect()
        }
    };
    Ok(sums)
}

pub fn sum_series(spec: &SeriesSpec) -> Result<ApproximantChoice> {
    accelerate(&partial_sums(spec)?)
}

/// One grid point of a `ln(1 + x)` error sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRecord {
    pub x: f64,
    pub value: f64,
    /// `|η_min|`, absent when the table produced no η.
    pub eps_emp: Option<f64>,
    /// `|value - ln(1 + x)|` against the library logarithm.
    pub eps_real: f64,
    pub l: usize,
    pub m: usize,
}

/// Grid `x_min, x_min + step, ...` up to `x_max` inclusive (within rounding
/// of the step count).
pub fn grid(x_min: f64, x_max: f64, step: f64) -> Result<Vec<f64>> {
    if !(x_min.is_finite() && x_max.is_finite() && step.is_finite()) {
        return Err(Error::NonFinite("sweep bounds"));
    }
    if step <= 0.0 || x_max < x_min {
        return Err(Error::InvalidSeries(format!(
            "bad sweep {x_min}:{x_max}:{step}"
        )));
    }
    let count = ((x_max - x_min) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| x_min + i as f64 * step).collect())
}

/// Sums `ln(1 + x)` across the grid and records empirical and real errors.
pub fn error_sweep(x_min: f64, x_max: f64, step: f64, terms: usize) -> Result<Vec<SweepRecord>> {
    grid(x_min, x_max, step)?
        .into_par_iter()
        .map(|x| {
            let choice = sum_series(&SeriesSpec::log_one_plus_x(x, terms))?;
            Ok(SweepRecord {
                x,
                value: choice.value,
                eps_emp: choice.eta_min,
                eps_real: (choice.value - x.ln_1p()).abs(),
                l: choice.l,
                m: choice.m,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_partial_sums() {
        let sums = partial_sums(&SeriesSpec::log_one_plus_x(1.0, 3)).unwrap();
        assert_eq!(sums, [1.0, 0.5, 0.8333333333333333]);
    }

    #[test]
    fn geometric_partial_sums() {
        let sums = partial_sums(&SeriesSpec::geometric(0.5, 3)).unwrap();
        assert_eq!(sums, [1.0, 1.5, 1.75, 1.875]);
    }

    #[test]
    fn coefficient_partial_sums() {
        let spec = SeriesSpec::coefficients(1.0, vec![1.0, 1.0, 0.5, 1.0 / 6.0]);
        assert_eq!(
            partial_sums(&spec).unwrap(),
            [1.0, 2.0, 2.5, 2.6666666666666665]
        );
    }

    #[test]
    fn zero_terms_rejected() {
        assert!(partial_sums(&SeriesSpec::log_one_plus_x(1.0, 0)).is_err());
        let short = SeriesSpec {
            kind: SeriesKind::Coefficients(vec![1.0]),
            x: 1.0,
            terms: 3,
        };
        assert!(short.validate().is_err());
    }

    #[test]
    fn sum_ln2() {
        let choice = sum_series(&SeriesSpec::log_one_plus_x(1.0, 25)).unwrap();
        assert!((choice.value - std::f64::consts::LN_2).abs() < 1e-9);
    }

    #[test]
    fn sum_ln11_beyond_radius() {
        let choice = sum_series(&SeriesSpec::log_one_plus_x(10.0, 25)).unwrap();
        assert!((choice.value - 2.3978952727983707).abs() < 1e-3);
    }

    #[test]
    fn sum_geometric() {
        let choice = sum_series(&SeriesSpec::geometric(0.5, 6)).unwrap();
        assert!((choice.value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn zero_argument_sums_to_zero() {
        let choice = sum_series(&SeriesSpec::log_one_plus_x(0.0, 5)).unwrap();
        assert_eq!(choice.value, 0.0);
    }

    #[test]
    fn inside_radius() {
        for x in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let choice = sum_series(&SeriesSpec::log_one_plus_x(x, 25)).unwrap();
            assert!((choice.value - f64::ln_1p(x)).abs() <= 1e-8, "x = {x}");
        }
    }

    #[test]
    fn grid_is_inclusive() {
        let g = grid(1.0, 20.0, 0.1).unwrap();
        assert_eq!(g.len(), 191);
        assert!((g[190] - 20.0).abs() < 1e-12);
        assert_eq!(grid(1.0, 1.0, 0.1).unwrap(), [1.0]);
        assert!(grid(2.0, 1.0, 0.1).is_err());
        assert!(grid(1.0, 2.0, 0.0).is_err());
    }

    #[test]
    fn single_point_sweeps() {
        let one = error_sweep(1.0, 1.0, 1.0, 25).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].eps_real <= 1e-9);
        let half = error_sweep(0.5, 0.5, 1.0, 25).unwrap();
        assert!(half[0].eps_real <= 1e-14);
    }

    #[test]
    fn error_grows_away_from_radius() {
        let median = |lo: f64, hi: f64| {
            let mut e: Vec<f64> = error_sweep(lo, hi, 0.1, 25)
                .unwrap()
                .iter()
                .map(|r| r.eps_real)
                .collect();
            e.sort_by(f64::total_cmp);
            e[e.len() / 2]
        };
        assert!(median(1.0, 3.0) < median(10.0, 12.0));
    }
}
