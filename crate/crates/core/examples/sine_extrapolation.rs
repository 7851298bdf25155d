//! Extrapolates sin x from 21 nodes on [-pi, 0] across two full arches and
//! compares the empirical error estimate with the true error.
//!
//! cargo run --release --example sine_extrapolation

use std::f64::consts::PI;

use wynn_pade::{evaluate_sweep, loglog_regression, NodeSet};

fn main() -> wynn_pade::Result<()> {
    let xs: Vec<f64> = (0..21).map(|i| -PI + PI * i as f64 / 20.0).collect();
    let ys: Vec<f64> = xs.iter().map(|x| x.sin()).collect();
    let nodes = NodeSet::from_samples(&xs, &ys)?;

    let per_arch = 2000;
    let queries: Vec<f64> = (0..2)
        .flat_map(|k| {
            (1..=per_arch).map(move |j| PI * (k as f64 + j as f64 / (per_arch + 1) as f64))
        })
        .collect();
    let evals = evaluate_sweep(&nodes, &queries)?;

    for (k, arch) in evals.chunks(per_arch).enumerate() {
        let mut errs: Vec<f64> = arch.iter().map(|e| (e.value - e.x.sin()).abs()).collect();
        errs.sort_by(f64::total_cmp);
        println!(
            "arch ({}pi, {}pi): median error {:.2e}, max error {:.2e}",
            k,
            k + 1,
            errs[errs.len() / 2],
            errs[errs.len() - 1]
        );
    }

    println!();
    println!(
        "{:>8} {:>12} {:>12} {:>10} {:>10}",
        "x", "value", "sin x", "eps_real", "eps_emp"
    );
    for e in evals.iter().step_by(400) {
        println!(
            "{:>8.4} {:>12.8} {:>12.8} {:>10.2e} {:>10.2e}",
            e.x,
            e.value,
            e.x.sin(),
            (e.value - e.x.sin()).abs(),
            e.eta_min.unwrap_or(f64::NAN)
        );
    }

    let pairs: Vec<(f64, f64)> = evals
        .iter()
        .map(|e| ((e.value - e.x.sin()).abs(), e.eta_min.unwrap_or(f64::NAN)))
        .collect();
    println!();
    println!(
        "log10 eps_emp vs log10 eps_real: {}",
        loglog_regression(&pairs)?
    );
    Ok(())
}
