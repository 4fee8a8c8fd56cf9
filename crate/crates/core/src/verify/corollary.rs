//! Reconciliation of the printed per-level formulas for s = 11..=17.
//!
//! For each of those levels the published table states a linear
//! coefficient pattern like `9n+6` per parity (one merged line when both
//! parities agree) together with the set of n it covers, e.g.
//! "n = 17 and n >= 19". Both are treated as derived data: the pattern is
//! recomputed from (q, c, delta), the n-set from the bound preconditions
//! (boundary included exactly when it is proven), and each is compared as
//! a string against the printed form.

use crate::triangular::{bound_relaxable, closed_params, n_bound, Parity};
use crate::verify::report::{Cell, Suite};

/// Expected n-ranges, either one merged line or one per parity.
enum Ranges {
    Merged(&'static str),
    Split {
        even: &'static str,
        odd: &'static str,
    },
}

struct Line {
    s: u64,
    even_pattern: &'static str,
    odd_pattern: &'static str,
    ranges: Ranges,
}

/// Transcription of the printed lines for s = 11..=17.
const LINES: [Line; 7] = [
    Line {
        s: 11,
        even_pattern: "8n+12",
        odd_pattern: "8n+12",
        ranges: Ranges::Merged("n = 12 and n >= 14"),
    },
    Line {
        s: 12,
        even_pattern: "9n",
        odd_pattern: "9n-3",
        ranges: Ranges::Split {
            even: "even n >= 14",
            odd: "odd n >= 17",
        },
    },
    Line {
        s: 13,
        even_pattern: "9n+6",
        odd_pattern: "9n+3",
        ranges: Ranges::Split {
            even: "even n >= 12",
            odd: "odd n >= 15",
        },
    },
    Line {
        s: 14,
        even_pattern: "9n+12",
        odd_pattern: "9n+9",
        ranges: Ranges::Split {
            even: "even n >= 12",
            odd: "odd n >= 15",
        },
    },
    Line {
        s: 15,
        even_pattern: "9n+18",
        odd_pattern: "9n+15",
        ranges: Ranges::Split {
            even: "even n >= 18",
            odd: "odd n >= 15",
        },
    },
    Line {
        s: 16,
        even_pattern: "10n",
        odd_pattern: "10n",
        ranges: Ranges::Merged("n = 17 and n >= 19"),
    },
    Line {
        s: 17,
        even_pattern: "10n+6",
        odd_pattern: "10n+6",
        ranges: Ranges::Merged("n = 15 and n >= 17"),
    },
];

fn format_pattern(q: u64, constant: i64) -> String {
    match constant {
        0 => format!("{q}n"),
        c if c > 0 => format!("{q}n+{c}"),
        c => format!("{q}n{c}"),
    }
}

/// The inner linear form per parity: q*n + 6c for even n, q*n + 6c - 3d
/// for odd n.
fn derived_pattern(s: u64, parity: Parity) -> String {
    let p = closed_params(s);
    let constant = match parity {
        Parity::Even => 6 * p.c as i64,
        Parity::Odd => 6 * p.c as i64 - 3 * p.delta as i64,
    };
    format_pattern(p.q, constant)
}

/// Smallest n of the given parity admitted by the bound precondition
/// (boundary included only when proven for this s).
fn min_valid_n(s: u64, parity: Parity) -> u64 {
    let bound = n_bound(s, parity);
    let threshold = if bound_relaxable(s) { bound } else { bound + 1 };
    let floor = match parity {
        Parity::Even => 2i64,
        Parity::Odd => 1i64,
    };
    let mut n = threshold.max(floor);
    let want_odd = parity == Parity::Odd;
    if (n % 2 != 0) != want_odd {
        n += 1;
    }
    n as u64
}

/// Canonical "n = a, b and n >= T" form of the union of both parity
/// ranges.
fn merged_range_string(s: u64) -> String {
    let even_min = min_valid_n(s, Parity::Even);
    let odd_min = min_valid_n(s, Parity::Odd);
    let valid = |n: u64| {
        if n.is_multiple_of(2) {
            n >= even_min
        } else {
            n >= odd_min
        }
    };
    // Everything from max(even_min, odd_min) on is valid; scan downward
    // to extend the tail, anything valid below it is exceptional.
    let mut tail = even_min.max(odd_min);
    while tail > 1 && valid(tail - 1) {
        tail -= 1;
    }
    let exceptions: Vec<String> = (1..tail.saturating_sub(1))
        .filter(|&n| valid(n))
        .map(|n| n.to_string())
        .collect();
    if exceptions.is_empty() {
        format!("n >= {tail}")
    } else {
        format!("n = {} and n >= {tail}", exceptions.join(", "))
    }
}

/// Cells comparing derived patterns and n-ranges against the printed
/// lines for s = 11..=17.
pub fn corollary_cells() -> Vec<Cell> {
    let mut cells = Vec::new();
    for line in &LINES {
        let s = line.s;
        cells.push(
            Cell::compare(
                Suite::Corollary,
                0,
                s,
                line.even_pattern,
                derived_pattern(s, Parity::Even),
            )
            .with_detail("even pattern"),
        );
        cells.push(
            Cell::compare(
                Suite::Corollary,
                0,
                s,
                line.odd_pattern,
                derived_pattern(s, Parity::Odd),
            )
            .with_detail("odd pattern"),
        );
        match line.ranges {
            Ranges::Merged(expected) => {
                // A merged line is only honest if both parities print the
                // same polynomial.
                cells.push(
                    Cell::compare(
                        Suite::Corollary,
                        0,
                        s,
                        derived_pattern(s, Parity::Even),
                        derived_pattern(s, Parity::Odd),
                    )
                    .with_detail("patterns merge"),
                );
                cells.push(
                    Cell::compare(Suite::Corollary, 0, s, expected, merged_range_string(s))
                        .with_detail("valid n"),
                );
            }
            Ranges::Split { even, odd } => {
                cells.push(
                    Cell::compare(
                        Suite::Corollary,
                        0,
                        s,
                        even,
                        format!("even n >= {}", min_valid_n(s, Parity::Even)),
                    )
                    .with_detail("valid even n"),
                );
                cells.push(
                    Cell::compare(
                        Suite::Corollary,
                        0,
                        s,
                        odd,
                        format!("odd n >= {}", min_valid_n(s, Parity::Odd)),
                    )
                    .with_detail("valid odd n"),
                );
            }
        }
    }
    cells
}
