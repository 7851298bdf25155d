//! Robust N-point Padé approximation built on the Wynn cross rule.
//!
//! A sequence `S_0..S_n` is expanded into a Padé table by the cross rule,
//! and the same rule yields an η-table whose smallest `|η|` both picks the
//! optimal approximant and estimates its error. On top of that:
//!
//! - [`aitken`] turns tabulated nodes into the sequence of polynomial
//!   interpolants at a query point (optionally with Taylor-shifted Hermite
//!   data),
//! - [`npade`] accelerates that sequence into a rational interpolant or
//!   extrapolant with an error estimate,
//! - [`series`] sums divergent power series such as `ln(1 + x)` past its
//!   radius of convergence,
//! - [`ode`] uses the extrapolant as a predictor for `dy/dx = F(x, y)`,
//! - [`stats`] checks empirical against real errors on a log-log scale.
//!
//! ```
//! use wynn_pade::accelerate;
//!
//! let partial_sums = [1.0, 1.5, 1.75, 1.875, 1.9375];
//! let choice = accelerate(&partial_sums).unwrap();
//! assert_eq!(choice.value, 2.0);
//! ```

pub mod aitken;
pub mod cli;
pub mod epsilon;
pub mod error;
pub mod npade;
pub mod ode;
pub mod scalar;
pub mod series;
pub mod stats;

pub use aitken::{
    aitken_sequence, order_by_proximity, taylor_shift, AitkenSequence, Node, NodeSet,
};
pub use epsilon::{
    accelerate, select_optimal, ApproximantChoice, CellStatus, EtaTable, PadeCell, PadeTable,
};
pub use error::{Error, Result};
pub use npade::{evaluate, evaluate_sweep, RationalEvaluation};
pub use ode::{bootstrap, solve, step, OdePoint, OdeProblem, OdeTrace};
pub use scalar::Scalar;
pub use series::{error_sweep, partial_sums, sum_series, SeriesKind, SeriesSpec, SweepRecord};
pub use stats::{loglog_regression, RegressionSummary};
