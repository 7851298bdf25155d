//! Sums the Taylor series of ln(1+x) far outside its radius of convergence.
//!
//! cargo run --example divergent_series

use wynn_pade::{partial_sums, sum_series, SeriesSpec};

fn main() -> wynn_pade::Result<()> {
    println!(
        "{:>6} {:>22} {:>22} {:>10} {:>10}",
        "x", "partial S_25", "accelerated", "eps_real", "eps_emp"
    );
    for x in [0.5, 1.0, 2.0, 5.0, 10.0, 20.0] {
        let spec = SeriesSpec::log_one_plus_x(x, 25);
        let last = *partial_sums(&spec)?.last().unwrap();
        let choice = sum_series(&spec)?;
        println!(
            "{x:>6} {last:>22.6e} {:>22.16} {:>10.2e} {:>10.2e}",
            choice.value,
            (choice.value - x.ln_1p()).abs(),
            choice.eta_min.unwrap_or(f64::NAN)
        );
    }

    // Arbitrary coefficients: Euler's divergent series sum (-1)^k k! x^k at x = 0.1.
    let coefficients: Vec<f64> = (0..20)
        .scan(1.0, |fact, k| {
            let c = if k % 2 == 0 { *fact } else { -*fact };
            *fact *= (k + 1) as f64;
            Some(c)
        })
        .collect();
    let euler = sum_series(&SeriesSpec::coefficients(0.1, coefficients))?;
    println!();
    println!(
        "Euler series at x=0.1: {:.12} (Borel sum 0.915633339...)",
        euler.value
    );
    Ok(())
}
