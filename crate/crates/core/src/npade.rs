//! N-point Padé evaluation: the Aitken sequence of polynomial interpolants
//! at a query point, turned into a rational estimate by the epsilon table.

use rayon::prelude::*;

use crate::aitken::{aitken_sequence, NodeSet};
use crate::epsilon::accelerate;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RationalEvaluation {
    pub x: f64,
    pub value: f64,
    /// Empirical error `|η_min|`. `None` when the node set is too small to
    /// produce an η (the last polynomial interpolant is returned instead).
    pub eta_min: Option<f64>,
    pub l: usize,
    pub m: usize,
    pub used_nodes: usize,
}

/// Rational interpolant/extrapolant of `nodes` evaluated at `x`.
///
/// A query equal to a node abscissa returns that node's ordinate with
/// `eta_min = Some(0.0)`.
pub fn evaluate(nodes: &NodeSet, x: f64) -> Result<RationalEvaluation> {
    if !x.is_finite() {
        return Err(Error::NonFinite("query"));
    }
    if let Some(node) = nodes.node_at(x) {
        return Ok(RationalEvaluation {
            x,
            value: node.y,
            eta_min: Some(0.0),
            l: 0,
            m: 0,
            used_nodes: nodes.len(),
        });
    }

    let sequence = aitken_sequence(nodes, x);
    let choice = accelerate(&sequence.values)?;
    Ok(RationalEvaluation {
        x,
        value: choice.value,
        eta_min: choice.eta_min,
        l: choice.l,
        m: choice.m,
        used_nodes: nodes.len(),
    })
}

/// [`evaluate`] at every query, in order. Queries run in parallel.
pub fn evaluate_sweep(nodes: &NodeSet, queries: &[f64]) -> Result<Vec<RationalEvaluation>> {
    queries.par_iter().map(|&x| evaluate(nodes, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aitken::Node;
    use std::f64::consts::PI;

    fn sine_nodes(count: usize) -> NodeSet {
        let xs: Vec<f64> = (0..count)
            .map(|i| -PI + PI * i as f64 / (count - 1) as f64)
            .collect();
        let ys: Vec<f64> = xs.iter().map(|x| x.sin()).collect();
        NodeSet::from_samples(&xs, &ys).unwrap()
    }

    #[test]
    fn on_node_returns_ordinate() {
        let nodes =
            NodeSet::from_samples(&[0.0, 1.0, 2.0, 3.0], &[1.0, 0.5, 1.0 / 3.0, 0.25]).unwrap();
        let eval = evaluate(&nodes, 2.0).unwrap();
        assert_eq!(eval.value, 1.0 / 3.0);
        assert_eq!(eval.used_nodes, 4);
    }

    #[test]
    fn single_node_is_constant() {
        let nodes = NodeSet::from_samples(&[1.0], &[4.0]).unwrap();
        let eval = evaluate(&nodes, 10.0).unwrap();
        assert_eq!(eval.value, 4.0);
        assert_eq!(eval.eta_min, None);
    }

    #[test]
    fn two_nodes_fall_back_to_line() {
        let nodes = NodeSet::from_samples(&[0.0, 1.0], &[1.0, 3.0]).unwrap();
        let eval = evaluate(&nodes, 2.0).unwrap();
        assert_eq!(eval.value, 5.0);
        assert_eq!(eval.eta_min, None);
    }

    #[test]
    fn polynomial_data_extrapolates() {
        let xs = [0.0, 0.5, 1.0, 1.5, 2.0];
        let ys: Vec<f64> = xs.iter().map(|x| 1.0 - x + 0.5 * x * x).collect();
        let nodes = NodeSet::from_samples(&xs, &ys).unwrap();
        let eval = evaluate(&nodes, 3.0).unwrap();
        assert!((eval.value - 2.5).abs() < 1e-12, "{eval:?}");
    }

    #[test]
    fn sine_extrapolation_quarter_period() {
        let eval = evaluate(&sine_nodes(21), PI / 2.0).unwrap();
        assert!((eval.value - 1.0).abs() < 1e-3, "{eval:?}");
        assert!(eval.eta_min.is_some());
    }

    #[test]
    fn more_nodes_improve_reciprocal() {
        let error = |count: usize| {
            let xs: Vec<f64> = (0..count).map(|i| i as f64).collect();
            let ys: Vec<f64> = xs.iter().map(|x| 1.0 / (1.0 + x)).collect();
            let nodes = NodeSet::from_samples(&xs, &ys).unwrap();
            (evaluate(&nodes, 9.5).unwrap().value - 1.0 / 10.5).abs()
        };
        assert!(error(9) < error(4));
        assert!(error(9) < 1e-4);
    }

    #[test]
    fn non_finite_query_rejected() {
        let nodes = sine_nodes(3);
        assert!(evaluate(&nodes, f64::NAN).is_err());
    }

    #[test]
    fn sweep_empty() {
        assert!(evaluate_sweep(&sine_nodes(5), &[]).unwrap().is_empty());
    }

    #[test]
    fn sweep_on_nodes() {
        let nodes = sine_nodes(21);
        let xs: Vec<f64> = nodes.nodes().iter().map(|n| n.x).collect();
        let evals = evaluate_sweep(&nodes, &xs).unwrap();
        for (eval, node) in evals.iter().zip(nodes.nodes()) {
            assert!((eval.value - node.y).abs() <= 1e-10);
        }
    }

    #[test]
    fn sweep_matches_sequential() {
        let nodes = sine_nodes(21);
        let queries: Vec<f64> = (0..200).map(|j| 0.01 + 0.03 * j as f64).collect();
        let parallel = evaluate_sweep(&nodes, &queries).unwrap();
        for (x, eval) in queries.iter().zip(&parallel) {
            assert_eq!(*eval, evaluate(&nodes, *x).unwrap());
        }
    }

    #[test]
    fn hermite_nodes_flow_through() {
        let nodes = NodeSet::new(
            (0..6)
                .map(|i| {
                    let x = 0.2 * i as f64;
                    Node::with_derivs(x, x.exp(), vec![x.exp()])
                })
                .collect(),
        )
        .unwrap();
        let eval = evaluate(&nodes, 1.3).unwrap();
        let error = (eval.value - 1.3f64.exp()).abs();
        assert!(error < eval.eta_min.unwrap(), "{eval:?}");
        assert!(error < 1e-4, "{eval:?}");
    }
}
