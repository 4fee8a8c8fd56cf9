//! Structured verification reports.
//!
//! Reports are deterministic: cells are sorted by (suite, s, n, detail)
//! and failures are then moved to the front, so identical grids produce
//! byte-identical output regardless of how many threads evaluated them.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    MainFormula,
    ReducedFormula,
    ExactCount,
    Differences,
    TwoVar,
    BeckKifer,
    Remark,
    Tables,
    Corollary,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::MainFormula,
        Suite::ReducedFormula,
        Suite::ExactCount,
        Suite::Differences,
        Suite::TwoVar,
        Suite::BeckKifer,
        Suite::Remark,
        Suite::Tables,
        Suite::Corollary,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::MainFormula => "main_formula",
            Suite::ReducedFormula => "reduced_formula",
            Suite::ExactCount => "exact_count",
            Suite::Differences => "differences",
            Suite::TwoVar => "two_var",
            Suite::BeckKifer => "beck_kifer",
            Suite::Remark => "remark",
            Suite::Tables => "tables",
            Suite::Corollary => "corollary",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Outcome of a single comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Pass,
    Fail,
    /// The hypothesis for this cell was unmet (below the proven bound,
    /// cap exhausted, branch condition failed); not a failure.
    Skipped,
}

/// One comparison: expected vs observed at a grid point.
///
/// Fields are declared in alphabetical order so that emitted JSON is
/// byte-stable under parse-and-re-emit with key-sorting parsers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub observed: Option<String>,
    pub s: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    pub status: CellStatus,
    pub suite: Suite,
}

impl Cell {
    pub fn compare<E: ToString, O: ToString>(
        suite: Suite,
        n: u64,
        s: u64,
        expected: E,
        observed: O,
    ) -> Self {
        let expected = expected.to_string();
        let observed = observed.to_string();
        let status = if expected == observed {
            CellStatus::Pass
        } else {
            CellStatus::Fail
        };
        Cell {
            detail: None,
            expected: Some(expected),
            n,
            observed: Some(observed),
            s,
            skip_reason: None,
            status,
            suite,
        }
    }

    pub fn skipped(suite: Suite, n: u64, s: u64, reason: impl Into<String>) -> Self {
        Cell {
            detail: None,
            expected: None,
            n,
            observed: None,
            s,
            skip_reason: Some(reason.into()),
            status: CellStatus::Skipped,
            suite,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Pass/fail/skip tallies for one suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub fail: u64,
    pub pass: u64,
    pub skipped: u64,
    pub suite: Suite,
}

/// The full outcome of a verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub cells: Vec<Cell>,
    pub summary: Vec<SuiteSummary>,
}

impl VerificationReport {
    /// Builds a report: sorts cells canonically, moves failures to the
    /// front, and tallies the summary.
    pub fn from_cells(mut cells: Vec<Cell>) -> Self {
        cells.sort_by(|a, b| (a.suite, a.s, a.n, &a.detail).cmp(&(b.suite, b.s, b.n, &b.detail)));
        cells.sort_by_key(|c| c.status != CellStatus::Fail);
        let mut tallies: BTreeMap<Suite, SuiteSummary> = BTreeMap::new();
        for cell in &cells {
            let entry = tallies.entry(cell.suite).or_insert(SuiteSummary {
                fail: 0,
                pass: 0,
                skipped: 0,
                suite: cell.suite,
            });
            match cell.status {
                CellStatus::Pass => entry.pass += 1,
                CellStatus::Fail => entry.fail += 1,
                CellStatus::Skipped => entry.skipped += 1,
            }
        }
        VerificationReport {
            cells,
            summary: tallies.into_values().collect(),
        }
    }

    pub fn merge(reports: impl IntoIterator<Item = VerificationReport>) -> Self {
        let cells = reports.into_iter().flat_map(|r| r.cells).collect();
        VerificationReport::from_cells(cells)
    }

    pub fn all_passed(&self) -> bool {
        self.summary.iter().all(|s| s.fail == 0)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| c.status == CellStatus::Fail)
    }

    pub fn total(&self, pick: impl Fn(&SuiteSummary) -> u64) -> u64 {
        self.summary.iter().map(pick).sum()
    }

    /// Compact single-line JSON (machine format).
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Aligned human-readable text: failures first, then the summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for cell in self.failures() {
            out.push_str(&format!(
                "FAIL {suite} n={n} s={s} expected={e} observed={o}{d}\n",
                suite = cell.suite,
                n = cell.n,
                s = cell.s,
                e = cell.expected.as_deref().unwrap_or("-"),
                o = cell.observed.as_deref().unwrap_or("-"),
                d = cell
                    .detail
                    .as_deref()
                    .map(|d| format!(" ({d})"))
                    .unwrap_or_default(),
            ));
        }
        let width = self
            .summary
            .iter()
            .map(|s| s.suite.name().len())
            .max()
            .unwrap_or(5)
            .max("suite".len());
        out.push_str(&format!(
            "{:<width$}  {:>8}  {:>8}  {:>8}\n",
            "suite", "pass", "fail", "skipped"
        ));
        for row in &self.summary {
            out.push_str(&format!(
                "{:<width$}  {:>8}  {:>8}  {:>8}\n",
                row.suite.name(),
                row.pass,
                row.fail,
                row.skipped
            ));
        }
        out.push_str(&format!(
            "{:<width$}  {:>8}  {:>8}  {:>8}\n",
            "total",
            self.total(|s| s.pass),
            self.total(|s| s.fail),
            self.total(|s| s.skipped)
        ));
        out.push_str(if self.all_passed() {
            "result: PASS\n"
        } else {
            "result: FAIL\n"
        });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_first_and_tallied() {
        let cells = vec![
            Cell::compare(Suite::MainFormula, 2, 0, 17, 17),
            Cell::compare(Suite::MainFormula, 3, 0, 29, 30),
            Cell::skipped(Suite::MainFormula, 2, 40, "below bound"),
        ];
        let report = VerificationReport::from_cells(cells);
        assert_eq!(report.cells[0].status, CellStatus::Fail);
        assert!(!report.all_passed());
        let summary = &report.summary[0];
        assert_eq!((summary.pass, summary.fail, summary.skipped), (1, 1, 1));
        assert!(report.to_text().contains("result: FAIL"));
    }

    #[test]
    fn json_round_trip() {
        let report = VerificationReport::from_cells(vec![
            Cell::compare(Suite::TwoVar, 7, 0, 59, 59).with_detail("b=11"),
            Cell::skipped(Suite::Remark, 6, 1, "boundary ratio"),
        ]);
        let json = report.to_json();
        let parsed: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(parsed.to_json(), json);
    }
}
