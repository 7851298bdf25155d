//! Uses first derivatives at the nodes through the Taylor shift and compares
//! with value-only data on the same abscissas.
//!
//! cargo run --example hermite_interpolation

use wynn_pade::{evaluate, Node, NodeSet};

fn nodes(with_slope: bool) -> wynn_pade::Result<NodeSet> {
    NodeSet::new(
        (0..6)
            .map(|i| {
                let x = 0.25 * i as f64;
                let derivs = if with_slope { vec![x.exp()] } else { vec![] };
                Node::with_derivs(x, x.exp(), derivs)
            })
            .collect(),
    )
}

fn main() -> wynn_pade::Result<()> {
    let (plain, hermite) = (nodes(false)?, nodes(true)?);
    println!(
        "{:>6} {:>12} {:>12} {:>12}",
        "x", "exp x", "err K=0", "err K=1"
    );
    for x in [0.1, 0.6, 1.1, 1.5, 1.8, 2.2] {
        let a = evaluate(&plain, x)?.value;
        let b = evaluate(&hermite, x)?.value;
        println!(
            "{x:>6} {:>12.8} {:>12.2e} {:>12.2e}",
            x.exp(),
            (a - x.exp()).abs(),
            (b - x.exp()).abs()
        );
    }

    let delta = 1e-6;
    println!();
    println!("slope at the nodes (centered difference of the K=1 interpolant):");
    for node in hermite.nodes() {
        let slope = (evaluate(&hermite, node.x + delta)?.value
            - evaluate(&hermite, node.x - delta)?.value)
            / (2.0 * delta);
        println!("  x={:.2}: {slope:.8} vs {:.8}", node.x, node.derivs[0]);
    }
    Ok(())
}
