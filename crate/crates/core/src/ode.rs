//! Single-equation ODE stepper `dy/dx = F(x, y)` driven by the N-point Padé
//! predictor.
//!
//! Each step takes the last `window` accepted points, uses their values and
//! first derivatives as Hermite data (`K = 1`), and extrapolates to
//! `x_new = x_last + h`. The derivative is then refreshed as
//! `F(x_new, y_pred)` and the node window slides forward by one point.
//! The first few points are seeded with classical fourth-order Runge-Kutta.

use crate::aitken::{Node, NodeSet};
use crate::error::{Error, Result};
use crate::npade::{evaluate, RationalEvaluation};

/// Points seeded by the single-step starter (including the initial point).
pub const SEED_POINTS: usize = 4;

pub struct OdeProblem<F> {
    pub rhs: F,
    pub x0: f64,
    pub y0: f64,
    pub x_end: f64,
    pub step: f64,
    /// Maximum number of past points fed to the predictor.
    pub window: usize,
    /// Steps with `|η_min|` above this are retried on a narrower window.
    pub eta_tol: f64,
}

impl<F: Fn(f64, f64) -> f64> OdeProblem<F> {
    pub fn new(rhs: F, x0: f64, y0: f64, x_end: f64, step: f64) -> Self {
        OdeProblem {
            rhs,
            x0,
            y0,
            x_end,
            step,
            window: 6,
            eta_tol: f64::INFINITY,
        }
    }

    pub fn with_window(mut self, window: usize) -> Self {
        self.window = window;
        self
    }

    pub fn with_eta_tol(mut self, eta_tol: f64) -> Self {
        self.eta_tol = eta_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.x0, self.y0, self.x_end, self.step]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::NonFinite("ode problem"));
        }
        if self.x_end <= self.x0 {
            return Err(Error::InvalidProblem("x_end must exceed x0".into()));
        }
        if self.step <= 0.0 {
            return Err(Error::InvalidProblem("step must be positive".into()));
        }
        if self.window < 2 {
            return Err(Error::InvalidProblem("window must be at least 2".into()));
        }
        if self.eta_tol.is_nan() || self.eta_tol < 0.0 {
            return Err(Error::InvalidProblem("eta_tol must be non-negative".into()));
        }
        Ok(())
    }

    fn slope(&self, x: f64, y: f64) -> f64 {
        (self.rhs)(x, y)
    }

    // Lands exactly on x_end instead of overshooting or leaving a sliver.
    fn next_abscissa(&self, x: f64) -> f64 {
        let target = x + self.step;
        if target >= self.x_end - 1e-9 * self.step {
            self.x_end
        } else {
            target
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OdePoint {
    pub x: f64,
    pub y: f64,
    /// `F(x, y)`.
    pub dy: f64,
    /// `|η_min|` of the prediction that produced this point.
    pub eta_used: Option<f64>,
    /// Indices `(L, M)` of the approximant picked for this point.
    pub accepted_order: Option<(usize, usize)>,
    /// The prediction stayed above `eta_tol` even after the retry.
    pub eta_exceeded: bool,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct OdeTrace {
    pub points: Vec<OdePoint>,
}

impl OdeTrace {
    pub fn last(&self) -> Option<&OdePoint> {
        self.points.last()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Hermite node set from the `count` most recent points.
    pub fn window_nodes(&self, count: usize) -> Result<NodeSet> {
        let start = self.points.len().saturating_sub(count);
        NodeSet::new(
            self.points[start..]
                .iter()
                .map(|p| Node::with_derivs(p.x, p.y, vec![p.dy]))
                .collect(),
        )
    }
}

fn diverged(x: f64, trace: &OdeTrace) -> Error {
    Error::Diverged {
        x,
        trace: Box::new(trace.clone()),
    }
}

/// Seeds the first `min(window, 4)` points with fixed-step classical RK4.
pub fn bootstrap<F: Fn(f64, f64) -> f64>(problem: &OdeProblem<F>) -> Result<OdeTrace> {
    problem.validate()?;
    let mut trace = OdeTrace::default();
    let dy0 = problem.slope(problem.x0, problem.y0);
    if !dy0.is_finite() {
        return Err(diverged(problem.x0, &trace));
    }
    trace.points.push(OdePoint {
        x: problem.x0,
        y: problem.y0,
        dy: dy0,
        eta_used: None,
        accepted_order: None,
        eta_exceeded: false,
    });

    while trace.len() < problem.window.min(SEED_POINTS) {
        let last = trace.points[trace.len() - 1];
        if last.x >= problem.x_end {
            break;
        }
        let x = problem.next_abscissa(last.x);
        let h = x - last.x;
        let k1 = last.dy;
        let k2 = problem.slope(last.x + 0.5 * h, last.y + 0.5 * h * k1);
        let k3 = problem.slope(last.x + 0.5 * h, last.y + 0.5 * h * k2);
        let k4 = problem.slope(x, last.y + h * k3);
        let y = last.y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        let dy = problem.slope(x, y);
        if !(y.is_finite() && dy.is_finite()) {
            return Err(diverged(x, &trace));
        }
        trace.points.push(OdePoint {
            x,
            y,
            dy,
            eta_used: None,
            accepted_order: None,
            eta_exceeded: false,
        });
    }
    Ok(trace)
}

/// Appends one predicted point at `x_last + h` (clamped to `x_end`).
///
/// When `|η_min|` exceeds `eta_tol` the prediction is repeated on the nearest
/// `max(2, window / 2)` points; the one with the smaller `|η_min|` is kept,
/// flagged if it still exceeds the tolerance.
pub fn step<F: Fn(f64, f64) -> f64>(trace: &mut OdeTrace, problem: &OdeProblem<F>) -> Result<()> {
    let Some(last) = trace.last().copied() else {
        return Err(Error::InvalidProblem("empty trace".into()));
    };
    if trace.len() < 2 {
        return Err(Error::InvalidProblem(
            "step needs at least two points".into(),
        ));
    }
    let x_new = problem.next_abscissa(last.x);
    let exceeds = |e: &RationalEvaluation| e.eta_min.is_some_and(|eta| eta > problem.eta_tol);

    let mut prediction = evaluate(&trace.window_nodes(problem.window)?, x_new)?;
    let mut flagged = false;
    if exceeds(&prediction) {
        let narrow = (problem.window / 2).max(2);
        let retry = evaluate(&trace.window_nodes(narrow)?, x_new)?;
        if retry.eta_min.unwrap_or(f64::INFINITY) < prediction.eta_min.unwrap_or(f64::INFINITY) {
            prediction = retry;
        }
        flagged = exceeds(&prediction);
    }

    let y = prediction.value;
    let dy = problem.slope(x_new, y);
    if !(y.is_finite() && dy.is_finite()) {
        return Err(diverged(x_new, trace));
    }
    trace.points.push(OdePoint {
        x: x_new,
        y,
        dy,
        eta_used: prediction.eta_min,
        accepted_order: prediction.eta_min.map(|_| (prediction.l, prediction.m)),
        eta_exceeded: flagged,
    });
    Ok(())
}

/// Bootstraps, then steps until `x_end` is reached exactly.
pub fn solve<F: Fn(f64, f64) -> f64>(problem: &OdeProblem<F>) -> Result<OdeTrace> {
    let mut trace = bootstrap(problem)?;
    while trace.last().is_some_and(|p| p.x < problem.x_end) {
        step(&mut trace, problem)?;
    }
    Ok(trace)
}
