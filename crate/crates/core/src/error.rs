use thiserror::Error;

use crate::ode::OdeTrace;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty sequence")]
    EmptySequence,

    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    #[error("coincident nodes at x = {0}")]
    CoincidentNodes(f64),

    #[error("empty node set")]
    NoNodes,

    #[error("{xs} abscissas but {ys} ordinates")]
    LengthMismatch { xs: usize, ys: usize },

    #[error("node {index} has {found} derivatives, expected {expected}")]
    DerivativeOrder {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("invalid series: {0}")]
    InvalidSeries(String),

    #[error("invalid ode problem: {0}")]
    InvalidProblem(String),

    #[error("degenerate sample: {0}")]
    DegenerateSample(String),

    /// Integration produced a non-finite state; `trace` holds every point
    /// accepted before the failure.
    #[error("ode diverged at x = {x}")]
    Diverged { x: f64, trace: Box<OdeTrace> },
}
