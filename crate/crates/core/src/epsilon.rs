//! Padé table construction from a sequence via the Wynn cross rule, the
//! companion η-table, and minimal-|η| selection of the optimal approximant.
//!
//! Layout: cell `(l, m)` holds `r_{l,m}`, with `l` the numerator degree and
//! `m` the denominator degree. Row `m = 0` is the input sequence. Row `m`
//! spans `m <= l <= n - m`, so each southward row loses one cell at either
//! end. A virtual row `m = -1` of infinite entries sits above row 0.
//!
//! Compass names for the stencil around a center `C = (l, m)`:
//!
//! ```text
//!            N (l, m-1)
//! W (l-1, m)  C (l, m)  E (l+1, m)
//!            S (l, m+1)
//! ```
//!
//! The cross rule `1/(S-C) + 1/(N-C) = 1/(E-C) + 1/(W-C)` both fills the table
//! southward and defines `η = 1 / (1/(E-C) + 1/(W-C))`, whose modulus is
//! the empirical error of the approximant south of `C`.

use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::scalar::{is_negligible, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellStatus {
    Valid,
    /// Member of the virtual row `m = -1`. Its reciprocal difference is zero.
    Infinite,
    /// Breakdown; excluded from selection and from further propagation.
    Invalid,
    /// The sequence converged locally: an east or west difference vanished.
    Converged,
}

impl CellStatus {
    /// Whether the cell carries a meaningful finite value.
    pub fn is_usable(self) -> bool {
        matches!(self, CellStatus::Valid | CellStatus::Converged)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CellStatus::Valid => "valid",
            CellStatus::Infinite => "infinite",
            CellStatus::Invalid => "invalid",
            CellStatus::Converged => "converged",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PadeCell<T = f64> {
    pub value: T,
    pub status: CellStatus,
}

impl<T: Scalar> PadeCell<T> {
    pub fn valid(value: T) -> Self {
        Self {
            value,
            status: CellStatus::Valid,
        }
    }

    pub fn converged(value: T) -> Self {
        Self {
            value,
            status: CellStatus::Converged,
        }
    }

    pub fn invalid() -> Self {
        Self {
            value: T::zero(),
            status: CellStatus::Invalid,
        }
    }

    pub fn infinite() -> Self {
        Self {
            value: T::zero(),
            status: CellStatus::Infinite,
        }
    }

    /// The value if the cell is [`CellStatus::Valid`] or [`CellStatus::Converged`].
    pub fn usable_value(&self) -> Option<T> {
        self.status.is_usable().then_some(self.value)
    }
}

/// Triangular Padé table built from `S_0..S_n`.
#[derive(Clone, Debug)]
pub struct PadeTable<T = f64> {
    n: usize,
    // rows[m][l - m]
    rows: Vec<Vec<PadeCell<T>>>,
}

impl<T: Scalar> PadeTable<T> {
    /// Fills the table row by row in the south direction.
    pub fn build(sequence: &[T]) -> Result<Self> {
        if sequence.is_empty() {
            return Err(Error::EmptySequence);
        }
        if sequence.iter().any(|s| !s.is_finite()) {
            return Err(Error::NonFinite("sequence"));
        }

        let n = sequence.len() - 1;
        let mut table = PadeTable {
            n,
            rows: vec![sequence.iter().map(|&s| PadeCell::valid(s)).collect()],
        };

        let mut m = 0;
        while 2 * (m + 1) <= n {
            let row = ((m + 1)..=(n - m - 1))
                .map(|l| {
                    let center = table.rows[m][l - m];
                    let east = table.rows[m][l + 1 - m];
                    let west = table.rows[m][l - 1 - m];
                    let north = table.north(l, m).unwrap_or_else(PadeCell::invalid);
                    south_cell(center, east, west, north)
                })
                .collect();
            table.rows.push(row);
            m += 1;
        }
        Ok(table)
    }

    /// Index of the last sequence term.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored rows, `m = 0..row_count()`.
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn cell(&self, l: usize, m: usize) -> Option<&PadeCell<T>> {
        if l < m {
            return None;
        }
        self.rows.get(m)?.get(l - m)
    }

    /// Cell `(l, m - 1)`, which is the virtual infinite row when `m == 0`.
    pub fn north(&self, l: usize, m: usize) -> Option<PadeCell<T>> {
        if m == 0 {
            return (l <= self.n + 1).then(PadeCell::infinite);
        }
        self.cell(l, m - 1).copied()
    }

    /// Every stored cell as `(l, m, cell)`, row-major by `m` then `l`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &PadeCell<T>)> + '_ {
        self.rows.iter().enumerate().flat_map(|(m, row)| {
            row.iter()
                .enumerate()
                .map(move |(offset, cell)| (m + offset, m, cell))
        })
    }

    /// Row 0, the input sequence.
    pub fn sequence(&self) -> impl Iterator<Item = T> + '_ {
        self.rows[0].iter().map(|c| c.value)
    }

    pub fn last_term(&self) -> T {
        self.rows[0][self.n].value
    }
}

fn south_cell<T: Scalar>(
    center: PadeCell<T>,
    east: PadeCell<T>,
    west: PadeCell<T>,
    north: PadeCell<T>,
) -> PadeCell<T> {
    let (Some(c), Some(e), Some(w)) = (
        center.usable_value(),
        east.usable_value(),
        west.usable_value(),
    ) else {
        return PadeCell::invalid();
    };
    let north_term = match north.status {
        CellStatus::Infinite => T::zero(),
        CellStatus::Invalid => return PadeCell::invalid(),
        CellStatus::Valid | CellStatus::Converged => (north.value - c).recip(),
    };

    let to_east = e - c;
    let to_west = w - c;
    if is_negligible(to_east, c) || is_negligible(to_west, c) {
        return PadeCell::converged(c);
    }

    let bracket = to_east.recip() + to_west.recip() - north_term;
    if bracket == T::zero() || !bracket.is_finite() {
        return PadeCell::invalid();
    }
    let south = c + bracket.recip();
    if south.is_finite() {
        PadeCell::valid(south)
    } else {
        PadeCell::invalid()
    }
}

/// η values aligned with the cells of a [`PadeTable`].
#[derive(Clone, Debug)]
pub struct EtaTable<T = f64> {
    rows: Vec<Vec<Option<T>>>,
}

impl<T: Scalar> EtaTable<T> {
    /// η at every cell with usable center, east and west neighbours.
    ///
    /// An exactly vanishing east or west difference records `η = 0`; a zero
    /// or non-finite reciprocal sum leaves the entry absent.
    pub fn from_table(table: &PadeTable<T>) -> Self {
        let rows = table
            .rows
            .iter()
            .enumerate()
            .map(|(m, row)| {
                (0..row.len())
                    .map(|offset| {
                        let l = m + offset;
                        let west = table.cell(l.checked_sub(1)?, m)?;
                        let east = table.cell(l + 1, m)?;
                        eta_at(row[offset], *east, *west)
                    })
                    .collect()
            })
            .collect();
        EtaTable { rows }
    }

    pub fn get(&self, l: usize, m: usize) -> Option<T> {
        if l < m {
            return None;
        }
        *self.rows.get(m)?.get(l - m)?
    }

    /// Defined entries as `(l, m, η)`, row-major by `m` then `l`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, T)> + '_ {
        self.rows.iter().enumerate().flat_map(|(m, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(offset, eta)| eta.map(|eta| (m + offset, m, eta)))
        })
    }

    pub fn len(&self) -> usize {
        self.iter().count()
    }

    pub fn is_empty(&self) -> bool {
        self.iter().next().is_none()
    }
}

fn eta_at<T: Scalar>(center: PadeCell<T>, east: PadeCell<T>, west: PadeCell<T>) -> Option<T> {
    let c = center.usable_value()?;
    let to_east = east.usable_value()? - c;
    let to_west = west.usable_value()? - c;
    if is_negligible(to_east, c) || is_negligible(to_west, c) {
        return Some(T::zero());
    }
    let inverse = to_east.recip() + to_west.recip();
    if inverse == T::zero() || !inverse.is_finite() {
        return None;
    }
    let eta = inverse.recip();
    eta.is_finite().then_some(eta)
}

/// The approximant picked by the minimal-|η| criterion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproximantChoice<T = f64> {
    pub value: T,
    /// `|η_min|`, the empirical error. `None` when the η-table is empty.
    pub eta_min: Option<f64>,
    /// Numerator degree of the cell holding `value`.
    pub l: usize,
    /// Denominator degree of the cell holding `value`.
    pub m: usize,
    /// The winning η was an exact zero.
    pub converged_exactly: bool,
}

/// Minimal-|η| search over `etas`.
///
/// The winner's south neighbour `(L, M + 1)` is reported when usable, since
/// that is the approximant its η estimates; otherwise the center `(L, M)`.
/// Equal |η| prefers the smaller `l + m`, then the smaller `m`.
pub fn select_optimal<T: Scalar>(table: &PadeTable<T>, etas: &EtaTable<T>) -> ApproximantChoice<T> {
    let best = etas
        .iter()
        .map(|(l, m, eta)| (eta.modulus(), l, m))
        .min_by(|a, b| {
            a.0.total_cmp(&b.0)
                .then((a.1 + a.2).cmp(&(b.1 + b.2)))
                .then(a.2.cmp(&b.2))
        });

    let Some((eta_min, l, m)) = best else {
        return ApproximantChoice {
            value: table.last_term(),
            eta_min: None,
            l: table.n(),
            m: 0,
            converged_exactly: false,
        };
    };

    let (value, m_reported) = match table.cell(l, m + 1).and_then(|c| c.usable_value()) {
        Some(south) => (south, m + 1),
        None => (table.cell(l, m).map(|c| c.value).unwrap_or(T::zero()), m),
    };
    ApproximantChoice {
        value,
        eta_min: Some(eta_min),
        l,
        m: m_reported,
        converged_exactly: eta_min == 0.0,
    }
}

/// Limit estimate of `sequence`: table, η-table and selection in one call.
pub fn accelerate<T: Scalar>(sequence: &[T]) -> Result<ApproximantChoice<T>> {
    let table = PadeTable::build(sequence)?;
    let etas = EtaTable::from_table(&table);
    Ok(select_optimal(&table, &etas))
}

impl PadeTable<f64> {
    /// Debug dump with header `l,m,value,status,eta`, row-major by `m`
    /// then `l`. Empty fields mark missing values.
    pub fn write_csv<W: Write>(&self, etas: &EtaTable<f64>, mut out: W) -> io::Result<()> {
        writeln!(out, "l,m,value,status,eta")?;
        for (l, m, cell) in self.cells() {
            let value = cell
                .usable_value()
                .map(|v| format!("{v:.16e}"))
                .unwrap_or_default();
            let eta = etas
                .get(l, m)
                .map(|e| format!("{e:.16e}"))
                .unwrap_or_default();
            writeln!(out, "{l},{m},{value},{},{eta}", cell.status.as_str())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent closed form for row m = 1.
    fn shanks(prev: f64, cur: f64, next: f64) -> f64 {
        (next * prev - cur * cur) / (next + prev - 2.0 * cur)
    }

    #[test]
    fn geometric_shanks_cell() {
        let s = [1.0, 1.5, 1.75, 1.875];
        let table = PadeTable::build(&s).unwrap();
        assert_eq!(shanks(1.0, 1.5, 1.75), 2.0);
        assert_eq!(table.cell(1, 1).unwrap().value, 2.0);
        assert_eq!(table.cell(1, 1).unwrap().status, CellStatus::Valid);
    }

    #[test]
    fn exp_partial_sums_shanks_cell() {
        let table = PadeTable::build(&[1.0, 2.0, 2.5]).unwrap();
        assert_eq!(shanks(1.0, 2.0, 2.5), 3.0);
        assert_eq!(table.cell(1, 1).unwrap().value, 3.0);
    }

    #[test]
    fn constant_sequence_converges() {
        let table = PadeTable::build(&[7.0, 7.0, 7.0]).unwrap();
        let cell = table.cell(1, 1).unwrap();
        assert_eq!(cell.status, CellStatus::Converged);
        assert_eq!(cell.value, 7.0);
    }

    #[test]
    fn empty_sequence_is_an_error() {
        let err = PadeTable::<f64>::build(&[]).unwrap_err();
        assert_eq!(err.to_string(), "empty sequence");
    }

    #[test]
    fn non_finite_input_rejected() {
        assert!(PadeTable::build(&[1.0, f64::NAN]).is_err());
        assert!(PadeTable::build(&[f64::INFINITY]).is_err());
    }

    #[test]
    fn triangular_extent() {
        let table = PadeTable::build(&[1.0, 2.0, 4.0, 3.0, 5.0, 6.0]).unwrap();
        assert_eq!(table.n(), 5);
        assert_eq!(table.row_count(), 3);
        for m in 0..table.row_count() {
            for l in 0..=table.n() + 1 {
                let inside = m <= l && l <= table.n() - m;
                assert_eq!(table.cell(l, m).is_some(), inside, "(l, m) = ({l}, {m})");
            }
        }
        assert_eq!(table.cell(0, 3), None);
        assert_eq!(table.north(3, 0).unwrap().status, CellStatus::Infinite);
    }

    #[test]
    fn row_zero_is_input() {
        let s = [0.3, -1.0, 2.5, 8.0];
        let table = PadeTable::build(&s).unwrap();
        assert_eq!(table.sequence().collect::<Vec<_>>(), s);
    }

    #[test]
    fn eta_on_short_geometric() {
        let table = PadeTable::build(&[1.0, 1.5, 1.75]).unwrap();
        let etas = EtaTable::from_table(&table);
        // 1 / (1/(1.75 - 1.5) + 1/(1 - 1.5)) = 1 / (4 - 2)
        assert_eq!(etas.get(1, 0), Some(0.5));
        assert_eq!(etas.len(), 1);
    }

    #[test]
    fn eta_zero_on_constant() {
        let table = PadeTable::build(&[7.0, 7.0, 7.0]).unwrap();
        assert_eq!(EtaTable::from_table(&table).get(1, 0), Some(0.0));
    }

    #[test]
    fn eta_empty_for_two_terms() {
        let table = PadeTable::build(&[1.0, 2.0]).unwrap();
        assert!(EtaTable::from_table(&table).is_empty());
    }

    #[test]
    fn select_geometric_four_terms() {
        let choice = accelerate(&[1.0, 1.5, 1.75, 1.875]).unwrap();
        assert_eq!(choice.value, 2.0);
        assert_eq!(choice.eta_min, Some(0.25));
        assert_eq!((choice.l, choice.m), (2, 1));
        assert!(!choice.converged_exactly);
    }

    #[test]
    fn select_geometric_five_terms_converges_exactly() {
        let choice = accelerate(&[1.0, 1.5, 1.75, 1.875, 1.9375]).unwrap();
        assert_eq!(choice.value, 2.0);
        assert!(choice.converged_exactly);
        assert_eq!(choice.eta_min, Some(0.0));
    }

    #[test]
    fn single_term() {
        let choice = accelerate(&[42.0]).unwrap();
        assert_eq!(choice.value, 42.0);
        assert_eq!(choice.eta_min, None);
        assert_eq!((choice.l, choice.m), (0, 0));
    }

    #[test]
    fn two_terms_return_last() {
        let choice = accelerate(&[1.0, 3.0]).unwrap();
        assert_eq!(choice.value, 3.0);
        assert_eq!(choice.eta_min, None);
        assert_eq!((choice.l, choice.m), (1, 0));
    }

    #[test]
    fn log_series_beyond_radius() {
        let x: f64 = 5.0;
        let mut sum = 0.0;
        let mut sums = Vec::new();
        for k in 1..=25 {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            sum += sign * x.powi(k) / k as f64;
            sums.push(sum);
        }
        let choice = accelerate(&sums).unwrap();
        assert!((choice.value - x.ln_1p()).abs() < 1e-3);
    }

    #[test]
    fn alternating_harmonic() {
        let mut sum = 0.0;
        let sums: Vec<f64> = (1..=25)
            .map(|k| {
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                sum += sign / k as f64;
                sum
            })
            .collect();
        let choice = accelerate(&sums).unwrap();
        assert!((choice.value - std::f64::consts::LN_2).abs() < 1e-9);
    }

    #[test]
    fn exact_tie_inside_sequence() {
        // S_1 == S_2 forces a converged cell in row 1.
        let table = PadeTable::build(&[0.0, 1.0, 1.0, 3.0, 2.0]).unwrap();
        assert_eq!(table.cell(1, 1).unwrap().status, CellStatus::Converged);
        assert_eq!(table.cell(2, 1).unwrap().status, CellStatus::Converged);
        let choice = accelerate(&[0.0, 1.0, 1.0, 3.0, 2.0]).unwrap();
        assert!(choice.value.is_finite());
        assert!(choice.converged_exactly);
    }

    #[test]
    fn zero_bracket_is_invalid_and_propagates() {
        // E - C = 1, W - C = -1: reciprocal sum vanishes in row 1.
        let s = [0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let table = PadeTable::build(&s).unwrap();
        for l in 1..=5 {
            assert_eq!(table.cell(l, 1).unwrap().status, CellStatus::Invalid);
        }
        for l in 2..=4 {
            assert_eq!(table.cell(l, 2).unwrap().status, CellStatus::Invalid);
        }
        // Every η denominator vanishes as well.
        let etas = EtaTable::from_table(&table);
        assert!(etas.is_empty());
        let choice = select_optimal(&table, &etas);
        assert_eq!(choice.value, 6.0);
        assert_eq!(choice.eta_min, None);
    }

    #[test]
    fn tie_break_prefers_low_order() {
        // Linear-in-l pattern: equal η along row 0 except where broken.
        let s = [0.0, 1.0, 0.0, 1.0, 0.0];
        let choice = accelerate(&s).unwrap();
        let table = PadeTable::build(&s).unwrap();
        let etas = EtaTable::from_table(&table);
        let min = etas
            .iter()
            .map(|(_, _, e)| e.abs())
            .fold(f64::INFINITY, f64::min);
        let first = etas
            .iter()
            .filter(|(_, _, e)| e.abs() == min)
            .min_by_key(|(l, m, _)| (l + m, *m))
            .unwrap();
        assert_eq!(choice.l, first.0);
        assert_eq!(choice.eta_min, Some(min));
    }

    #[test]
    fn csv_dump_layout() {
        let table = PadeTable::build(&[1.0, 1.5, 1.75]).unwrap();
        let etas = EtaTable::from_table(&table);
        let mut buf = Vec::new();
        table.write_csv(&etas, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "l,m,value,status,eta");
        assert_eq!(lines.len(), 1 + 3 + 1);
        assert_eq!(
            lines[2],
            "1,0,1.5000000000000000e0,valid,5.0000000000000000e-1"
        );
        assert_eq!(lines[4], "1,1,2.0000000000000000e0,valid,");
    }

    #[test]
    fn complex_geometric() {
        use num_complex::Complex64;
        let z = Complex64::new(0.3, 0.4);
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(0.0, 0.0);
        let sums: Vec<_> = (0..6)
            .map(|_| {
                sum += term;
                term *= z;
                sum
            })
            .collect();
        let choice = accelerate(&sums).unwrap();
        let limit = Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) - z);
        assert!((choice.value - limit).norm() < 1e-12);
    }
}
