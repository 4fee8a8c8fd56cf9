//! Parameter tables and their golden-file checks.
//!
//! Four tables are emitted: the (q, c, delta) parameters per s, the
//! (x, y) pairs per s and parity, and the piecewise bounds N in symbolic
//! form (both at level s = k(k+1)+i and shifted one level down, which is
//! the form the inductive argument consumes). The symbolic rows are not
//! hardcoded: each cell is obtained by evaluating the bound at large
//! sample values of k and fitting the (provably linear) dependence, so a
//! transcription error in the formulas cannot survive the golden diff.

use serde::{Deserialize, Serialize};

use crate::triangular::{closed_params, n_bound, xy_pair, Parity};

/// A small rectangular table with one header row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub header: Vec<String>,
    pub name: String,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    /// CSV with a trailing newline; cells never contain commas.
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }
}

/// All four tables at their default ranges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSet {
    pub qcdelta: Table,
    pub xy: Table,
    pub bounds: Table,
    pub bounds_shifted: Table,
}

/// The (q_s, c_s, delta_s) rows for s = 0..=s_max.
pub fn qcdelta_table(s_max: u64) -> Table {
    let mut header = vec!["s".to_string()];
    let mut q_row = vec!["q".to_string()];
    let mut c_row = vec!["c".to_string()];
    let mut d_row = vec!["delta".to_string()];
    for s in 0..=s_max {
        let p = closed_params(s);
        header.push(s.to_string());
        q_row.push(p.q.to_string());
        c_row.push(p.c.to_string());
        d_row.push(p.delta.to_string());
    }
    Table {
        header,
        name: "qcdelta".into(),
        rows: vec![q_row, c_row, d_row],
    }
}

/// The (x, y) rows per parity for s = 0..=s_max.
pub fn xy_table(s_max: u64) -> Table {
    let mut header = vec!["s".to_string()];
    let mut rows: Vec<Vec<String>> = ["x_even", "y_even", "x_odd", "y_odd"]
        .iter()
        .map(|label| vec![label.to_string()])
        .collect();
    for s in 0..=s_max {
        header.push(s.to_string());
        let even = xy_pair(s, Parity::Even);
        let odd = xy_pair(s, Parity::Odd);
        rows[0].push(even.x.to_string());
        rows[1].push(even.y.to_string());
        rows[2].push(odd.x.to_string());
        rows[3].push(odd.y.to_string());
    }
    Table {
        header,
        name: "xy".into(),
        rows,
    }
}

/// A linear expression a*k + b printed in the tables' shorthand.
fn format_linear(slope: i64, constant: i64) -> String {
    match constant {
        0 => format!("{slope}k"),
        c if c > 0 => format!("{slope}k+{c}"),
        c => format!("{slope}k{c}"),
    }
}

/// Fits value(k) = slope*k + constant from sample evaluations and checks
/// the fit on a third point. Panics if the dependence is not linear —
/// that would mean the bound formulas changed shape.
fn fit_linear(eval: impl Fn(u64) -> i64) -> String {
    let (k1, k2, k3) = (101u64, 103u64, 107u64);
    let (v1, v2, v3) = (eval(k1), eval(k2), eval(k3));
    let rise = v2 - v1;
    assert_eq!(rise % (k2 - k1) as i64, 0, "bound is not linear in k");
    let slope = rise / (k2 - k1) as i64;
    let constant = v1 - slope * k1 as i64;
    assert_eq!(v3, slope * k3 as i64 + constant, "bound is not linear in k");
    format_linear(slope, constant)
}

fn bound_at(k: u64, i: u64, parity: Parity) -> i64 {
    n_bound(k * (k + 1) + i, parity)
}

/// Representative i (or r) for a column, as a function of k.
type ColumnPick = fn(u64) -> u64;

/// N^even and N^odd per column of the split s = k(k+1) + i, k >= 1.
pub fn bounds_table() -> Table {
    // Representative i per column: 0 | k | k+1 | 2k+1.
    let columns: [(&str, ColumnPick); 4] = [
        ("0..k-1", |_| 0),
        ("k", |k| k),
        ("k+1..2k", |k| k + 1),
        ("2k+1", |k| 2 * k + 1),
    ];
    let mut header = vec!["i".to_string()];
    let mut even_row = vec!["N_even".to_string()];
    let mut odd_row = vec!["N_odd".to_string()];
    for (label, pick) in columns {
        header.push(label.to_string());
        even_row.push(fit_linear(|k| bound_at(k, pick(k), Parity::Even)));
        odd_row.push(fit_linear(|k| bound_at(k, pick(k), Parity::Odd)));
    }
    Table {
        header,
        name: "bounds".into(),
        rows: vec![even_row, odd_row],
    }
}

/// Same bounds one level down: v = (k-1)k + r, the shape used when
/// stepping from level k-1 to level k.
pub fn bounds_shifted_table() -> Table {
    let columns: [(&str, ColumnPick); 4] = [
        ("0..k-2", |_| 0),
        ("k-1", |k| k - 1),
        ("k..2k-2", |k| k),
        ("2k-1", |k| 2 * k - 1),
    ];
    let mut header = vec!["r".to_string()];
    let mut even_row = vec!["N_even".to_string()];
    let mut odd_row = vec!["N_odd".to_string()];
    for (label, pick) in columns {
        header.push(label.to_string());
        even_row.push(fit_linear(|k| bound_at(k - 1, pick(k), Parity::Even)));
        odd_row.push(fit_linear(|k| bound_at(k - 1, pick(k), Parity::Odd)));
    }
    Table {
        header,
        name: "bounds_shifted".into(),
        rows: vec![even_row, odd_row],
    }
}

/// The default table set: s = 0..=20 for the parameters, s = 0..=19 for
/// the pairs, symbolic bounds.
pub fn reproduce_tables() -> TableSet {
    TableSet {
        qcdelta: qcdelta_table(20),
        xy: xy_table(19),
        bounds: bounds_table(),
        bounds_shifted: bounds_shifted_table(),
    }
}

/// Golden transcriptions committed alongside the crate.
pub mod golden {
    pub const QCDELTA: &str = include_str!("../../golden/table1_qcdelta.csv");
    pub const XY: &str = include_str!("../../golden/table2_xy.csv");
    pub const BOUNDS: &str = include_str!("../../golden/table3_bounds.csv");
    pub const BOUNDS_SHIFTED: &str = include_str!("../../golden/table4_bounds_shifted.csv");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_tables_match() {
        let set = reproduce_tables();
        assert_eq!(set.qcdelta.to_csv(), golden::QCDELTA);
        assert_eq!(set.xy.to_csv(), golden::XY);
        assert_eq!(set.bounds.to_csv(), golden::BOUNDS);
        assert_eq!(set.bounds_shifted.to_csv(), golden::BOUNDS_SHIFTED);
    }

    #[test]
    fn csv_shape() {
        let t = qcdelta_table(3);
        assert_eq!(
            t.to_csv(),
            "s,0,1,2,3\nq,3,4,5,5\nc,0,0,0,1\ndelta,1,0,1,1\n"
        );
    }

    #[test]
    fn symbolic_columns_agree_with_floor_form() {
        // Every admissible (k, i) must land on its column's linear form.
        for k in 1..=50u64 {
            for i in 0..=(2 * k + 1) {
                let even = bound_at(k, i, Parity::Even);
                let odd = bound_at(k, i, Parity::Odd);
                let expected_even = if i < k {
                    6 * k as i64 - 6
                } else {
                    6 * k as i64
                };
                let expected_odd = if i <= 2 * k {
                    6 * k as i64 - 3
                } else {
                    6 * k as i64 + 3
                };
                assert_eq!(even, expected_even, "k={k} i={i}");
                assert_eq!(odd, expected_odd, "k={k} i={i}");
            }
        }
    }
}
