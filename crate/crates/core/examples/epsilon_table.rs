//! Builds the Padé table for a slowly converging sequence, prints the
//! η-table, and shows which cell the minimal-|η| rule picks.
//!
//! cargo run --example epsilon_table

use wynn_pade::{select_optimal, EtaTable, PadeTable};

fn main() -> wynn_pade::Result<()> {
    // Leibniz series for pi/4.
    let sums: Vec<f64> = (0..10)
        .scan(0.0, |s, k| {
            *s += if k % 2 == 0 { 1.0 } else { -1.0 } / (2 * k + 1) as f64;
            Some(*s)
        })
        .collect();

    let table = PadeTable::build(&sums)?;
    let etas = EtaTable::from_table(&table);

    println!(
        "{:>3} {:>3} {:>22} {:>10} {:>12}",
        "l", "m", "value", "status", "|eta|"
    );
    for (l, m, cell) in table.cells() {
        let eta = etas
            .get(l, m)
            .map_or(String::from("-"), |e| format!("{:.3e}", e.abs()));
        println!(
            "{l:>3} {m:>3} {:>22.16} {:>10} {eta:>12}",
            cell.value,
            cell.status.as_str()
        );
    }

    let choice = select_optimal(&table, &etas);
    let exact = std::f64::consts::FRAC_PI_4;
    println!();
    println!(
        "last partial sum   {:.16}  (error {:.2e})",
        sums[9],
        (sums[9] - exact).abs()
    );
    println!(
        "optimal cell ({}, {})  {:.16}  (error {:.2e}, eta_min {:.2e})",
        choice.l,
        choice.m,
        choice.value,
        (choice.value - exact).abs(),
        choice.eta_min.unwrap_or(f64::NAN)
    );
    Ok(())
}
