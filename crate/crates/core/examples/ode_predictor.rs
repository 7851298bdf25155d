//! Integrates dy/dx = F(x, y) with the Padé predictor and prints the
//! terminal error for a few step sizes and windows, along with how many
//! steps exceeded the η tolerance.
//!
//! cargo run --example ode_predictor

use std::f64::consts::E;

use wynn_pade::{solve, Error, OdeProblem};

fn main() -> wynn_pade::Result<()> {
    println!("dy/dx = y, y(0) = 1, exact y(1) = e");
    println!(
        "{:>8} {:>7} {:>12} {:>8}",
        "h", "window", "|y(1)-e|", "flagged"
    );
    for window in [2, 4, 6] {
        for h in [0.05, 0.02, 0.01] {
            let problem = OdeProblem::new(|_, y| y, 0.0, 1.0, 1.0, h)
                .with_window(window)
                .with_eta_tol(1e-6);
            match solve(&problem) {
                Ok(trace) => {
                    let flagged = trace.points.iter().filter(|p| p.eta_exceeded).count();
                    let err = (trace.last().unwrap().y - E).abs();
                    println!("{h:>8} {window:>7} {err:>12.2e} {flagged:>8}");
                }
                Err(Error::Diverged { x, trace }) => {
                    println!(
                        "{h:>8} {window:>7} diverged at x={x:.3} after {} points",
                        trace.len()
                    );
                }
                Err(e) => return Err(e),
            }
        }
    }

    let trace = solve(&OdeProblem::new(|x: f64, _| x.cos(), 0.0, 0.0, 1.0, 0.1).with_window(4))?;
    println!();
    println!("dy/dx = cos x, y(0) = 0, h = 0.1, window 4:");
    for p in &trace.points {
        println!(
            "  x={:.1} y={:.8} sin x={:.8} eta={}",
            p.x,
            p.y,
            p.x.sin(),
            p.eta_used
                .map_or(String::from("seed"), |e| format!("{e:.1e}"))
        );
    }
    Ok(())
}
