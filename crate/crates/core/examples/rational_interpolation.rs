//! Interpolates Runge's function 1/(1+25x^2) on equidistant nodes, where the
//! polynomial interpolant oscillates, and compares it with the rational
//! estimate built from the same Aitken sequence.
//!
//! cargo run --example rational_interpolation

use wynn_pade::{aitken_sequence, evaluate, NodeSet};

fn runge(x: f64) -> f64 {
    1.0 / (1.0 + 25.0 * x * x)
}

fn main() -> wynn_pade::Result<()> {
    let count = 15;
    let xs: Vec<f64> = (0..count)
        .map(|i| -1.0 + 2.0 * i as f64 / (count - 1) as f64)
        .collect();
    let ys: Vec<f64> = xs.iter().map(|&x| runge(x)).collect();
    let nodes = NodeSet::from_samples(&xs, &ys)?;

    println!(
        "{:>7} {:>12} {:>12} {:>12} {:>8}",
        "x", "exact", "polynomial", "rational", "(L,M)"
    );
    let (mut poly_max, mut rat_max) = (0.0f64, 0.0f64);
    for j in 0..=40 {
        let x = -1.0 + 2.0 * j as f64 / 40.0 + 0.01;
        let poly = *aitken_sequence(&nodes, x).values.last().unwrap();
        let rational = evaluate(&nodes, x)?;
        poly_max = poly_max.max((poly - runge(x)).abs());
        rat_max = rat_max.max((rational.value - runge(x)).abs());
        if j % 4 == 0 {
            println!(
                "{x:>7.3} {:>12.6} {poly:>12.6} {:>12.6} {:>8}",
                runge(x),
                rational.value,
                format!("({},{})", rational.l, rational.m)
            );
        }
    }
    println!();
    println!("max error: polynomial {poly_max:.2e}, rational {rat_max:.2e}");
    Ok(())
}
