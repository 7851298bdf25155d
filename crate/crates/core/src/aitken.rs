//! Aitken's nested linear interpolation, evaluated "crest by crest" at a
//! fixed query point, with optional Taylor pre-shift of the nodal values.
//!
//! Nodes are first ordered by distance from the query so that entry `l` of
//! the output is the degree-`l` interpolant through the `l + 1` nearest
//! nodes. That ordering keeps the rounding noise fed into the epsilon table
//! as small as possible.

use crate::error::{Error, Result};

/// One interpolation node: abscissa, ordinate, and the first `K` derivatives.
#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub x: f64,
    pub y: f64,
    /// `derivs[j]` is the `(j + 1)`-th derivative at `x`.
    pub derivs: Vec<f64>,
}

impl Node {
    pub fn new(x: f64, y: f64) -> Self {
        Node {
            x,
            y,
            derivs: Vec::new(),
        }
    }

    pub fn with_derivs(x: f64, y: f64, derivs: Vec<f64>) -> Self {
        Node { x, y, derivs }
    }
}

/// Validated set of nodes with pairwise distinct abscissas and a uniform
/// derivative order.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeSet {
    nodes: Vec<Node>,
    order: usize,
}

impl NodeSet {
    pub fn new(nodes: Vec<Node>) -> Result<Self> {
        let first = nodes.first().ok_or(Error::NoNodes)?;
        let order = first.derivs.len();
        for (index, node) in nodes.iter().enumerate() {
            if node.derivs.len() != order {
                return Err(Error::DerivativeOrder {
                    index,
                    expected: order,
                    found: node.derivs.len(),
                });
            }
            if !node.x.is_finite()
                || !node.y.is_finite()
                || node.derivs.iter().any(|d| !d.is_finite())
            {
                return Err(Error::NonFinite("node"));
            }
        }

        let mut xs: Vec<f64> = nodes.iter().map(|n| n.x).collect();
        xs.sort_by(f64::total_cmp);
        if let Some(pair) = xs.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::CoincidentNodes(pair[0]));
        }
        Ok(NodeSet { nodes, order })
    }

    /// Nodes without derivative data.
    pub fn from_samples(xs: &[f64], ys: &[f64]) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::LengthMismatch {
                xs: xs.len(),
                ys: ys.len(),
            });
        }
        Self::new(xs.iter().zip(ys).map(|(&x, &y)| Node::new(x, y)).collect())
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Derivative order `K` carried by every node.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node whose abscissa equals `x` exactly.
    pub fn node_at(&self, x: f64) -> Option<&Node> {
        self.nodes.iter().find(|n| n.x == x)
    }

    /// Same nodes with derivative data dropped beyond order `k`.
    pub fn truncate_order(&self, k: usize) -> NodeSet {
        let k = k.min(self.order);
        NodeSet {
            nodes: self
                .nodes
                .iter()
                .map(|n| Node::with_derivs(n.x, n.y, n.derivs[..k].to_vec()))
                .collect(),
            order: k,
        }
    }
}

/// Values at `query` of the interpolants on the 1, 2, ..., n+1 nearest nodes.
#[derive(Clone, Debug, PartialEq)]
pub struct AitkenSequence {
    pub query: f64,
    pub values: Vec<f64>,
}

/// Sorts by `|x - x_i|`, ties going to the smaller abscissa.
pub fn order_by_proximity(nodes: &NodeSet, x: f64) -> NodeSet {
    let mut sorted = nodes.nodes.clone();
    sorted.sort_by(|a, b| {
        (a.x - x)
            .abs()
            .total_cmp(&(b.x - x).abs())
            .then(a.x.total_cmp(&b.x))
    });
    NodeSet {
        nodes: sorted,
        order: nodes.order,
    }
}

/// Truncated Taylor expansion of the node's data, evaluated at `x`:
/// `y + (x - x_i) y' + ... + (x - x_i)^K y^(K) / K!`.
pub fn taylor_shift(node: &Node, x: f64) -> f64 {
    let h = x - node.x;
    let mut factor = 1.0;
    let mut value = node.y;
    for (j, d) in node.derivs.iter().enumerate() {
        factor *= h / (j + 1) as f64;
        value += factor * d;
    }
    value
}

/// Runs the in-place column sweep on proximity-ordered, Taylor-shifted
/// values.
///
/// For column `l`, every later entry becomes the linear interpolant at `x`
/// through nodes `l` and `k`:
/// `f_k <- ((x_l - x) f_k - (x_k - x) f_l) / (x_l - x_k)`,
/// evaluated as `f_l + (f_k - f_l) (x - x_l) / (x_k - x_l)` so that equal
/// values and queries on node `l` come out exact.
pub fn aitken_sequence(nodes: &NodeSet, x: f64) -> AitkenSequence {
    let ordered = order_by_proximity(nodes, x);
    let xs: Vec<f64> = ordered.nodes.iter().map(|n| n.x).collect();
    let mut f: Vec<f64> = ordered.nodes.iter().map(|n| taylor_shift(n, x)).collect();

    let n = f.len() - 1;
    let mut values = Vec::with_capacity(f.len());
    for l in 0..n {
        values.push(f[l]);
        let (head, tail) = f.split_at_mut(l + 1);
        let fl = head[l];
        let offset_l = x - xs[l];
        for (offset, fk) in tail.iter_mut().enumerate() {
            let k = l + 1 + offset;
            *fk = fl + (*fk - fl) * offset_l / (xs[k] - xs[l]);
        }
    }
    values.push(f[n]);

    AitkenSequence { query: x, values }
}
