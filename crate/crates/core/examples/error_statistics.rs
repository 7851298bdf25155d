//! Sweeps the ln(1+x) summation over [1, 20] and regresses the empirical
//! error estimate against the real error.
//!
//! cargo run --example error_statistics

use wynn_pade::{error_sweep, loglog_regression};

fn main() -> wynn_pade::Result<()> {
    let records = error_sweep(1.0, 20.0, 0.1, 25)?;
    for r in records.iter().step_by(19) {
        println!(
            "x={:>5.1}  eps_real={:.2e}  eps_emp={:.2e}  cell=({},{})",
            r.x,
            r.eps_real,
            r.eps_emp.unwrap_or(f64::NAN),
            r.l,
            r.m
        );
    }
    let pairs: Vec<(f64, f64)> = records
        .iter()
        .map(|r| (r.eps_real, r.eps_emp.unwrap_or(f64::NAN)))
        .collect();
    let fit = loglog_regression(&pairs)?;
    println!();
    println!(
        "slope {:.3}, intercept {:.3}, r {:.3} over {} points",
        fit.slope, fit.intercept, fit.correlation, fit.n
    );
    Ok(())
}
