//! The epsilon table over complex numbers: continues the series of ln(1+z)
//! to points outside the unit disk.
//!
//! cargo run --example complex_epsilon

use num_complex::Complex64;
use wynn_pade::accelerate;

fn main() -> wynn_pade::Result<()> {
    for z in [
        Complex64::new(0.0, 1.0),
        Complex64::new(1.5, 1.5),
        Complex64::new(-0.5, 2.0),
    ] {
        let mut power = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(0.0, 0.0);
        let sums: Vec<Complex64> = (1..=25)
            .map(|k| {
                power *= z;
                let term = power / k as f64;
                sum += if k % 2 == 1 { term } else { -term };
                sum
            })
            .collect();
        let choice = accelerate(&sums)?;
        let exact = (Complex64::new(1.0, 0.0) + z).ln();
        println!(
            "z = {z:>9}: value {:.10}, ln(1+z) {:.10}, |error| {:.2e}, eta_min {:.2e}",
            choice.value,
            exact,
            (choice.value - exact).norm(),
            choice.eta_min.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
