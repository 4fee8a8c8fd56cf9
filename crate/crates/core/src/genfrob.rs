//! Generalized Frobenius numbers for arbitrary tuples.
//!
//! g(A; s) is the largest integer with at most s representations by A
//! (g(A; 0) is the classical Frobenius number). Two variables have the
//! exact closed form g(a, b; s) = (s+1)ab - a - b; everything else is
//! served by [`g_search`], a brute-force window search over the count
//! table that doubles as the ground-truth oracle for the closed forms.
//!
//! The search terminates because of the shift property d(n + a; A) >=
//! d(n; A): once min(A) consecutive integers all have more than s
//! representations, every larger integer can be reached from one of them
//! by adding tuple elements, so it also has more than s representations.
//! The run of witnesses is returned alongside the value.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::gcd_all;
use crate::error::{Error, Result};
use crate::repcount::{count_prefix_with_cap, CountTable, Tuple};

/// How a generalized Frobenius value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedTwoVar,
    OracleSearch,
    BeckKifer,
}

/// A generalized Frobenius number plus the evidence that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GFrobResult {
    /// The value g(A; s); -1 when every non-negative integer already has
    /// more than s representations.
    pub value: BigInt,
    pub s: u64,
    pub method: Method,
    /// min(A) consecutive (n, d(n; A)) pairs just above the value, each
    /// with count >= s+1. Present for oracle searches.
    pub witness_window: Option<Vec<(u64, BigUint)>>,
}

/// g(a, b; s) = (s+1)ab - a - b for coprime (a, b). May be negative,
/// e.g. g(1, 2; 0) = -1.
pub fn g_two_var(a: u64, b: u64, s: u64) -> Result<BigInt> {
    if a == 0 || b == 0 {
        return Err(Error::Precondition("a and b must be positive".into()));
    }
    let gcd = gcd_all(&[a, b]);
    if gcd != 1 {
        return Err(Error::NotCoprime {
            elements: vec![a, b],
            gcd,
        });
    }
    let ab = BigInt::from(a) * BigInt::from(b);
    Ok((BigInt::from(s) + 1) * ab - a - b)
}

/// Scans an existing count table for g(A; s).
///
/// Returns `None` if the table is too short to contain a full run of
/// min(A) consecutive counts above s. On success the result is exact: all
/// integers past the window inherit its counts via the shift property.
pub fn window_search(table: &CountTable, s: u64) -> Option<GFrobResult> {
    let window = table.tuple().min_element() as usize;
    let threshold = BigUint::from(s) + 1u32;
    let mut run = 0usize;
    let mut last_low: Option<u64> = None;
    for (n, count) in table.counts().iter().enumerate() {
        if *count >= threshold {
            run += 1;
            if run == window {
                let start = n + 1 - window;
                let witness = (start..=n)
                    .map(|m| (m as u64, table.counts()[m].clone()))
                    .collect();
                return Some(GFrobResult {
                    value: last_low
                        .map(BigInt::from)
                        .unwrap_or_else(|| BigInt::from(-1)),
                    s,
                    method: Method::OracleSearch,
                    witness_window: Some(witness),
                });
            }
        } else {
            run = 0;
            last_low = Some(n as u64);
        }
    }
    None
}

/// Grows a count table (doubling the limit) until it contains the
/// terminating window for level `s`, staying under `cap` entries.
pub fn grow_table_for_window(tuple: &Tuple, s: u64, cap: u64) -> Result<CountTable> {
    if cap == 0 {
        return Err(Error::Precondition("cap must be positive".into()));
    }
    let mut limit = tuple.max_element().saturating_mul(2).max(64);
    loop {
        limit = limit.min(cap - 1);
        let table = count_prefix_with_cap(limit, tuple, cap)?;
        if window_search(&table, s).is_some() {
            return Ok(table);
        }
        if limit == cap - 1 {
            return Err(Error::CapExhausted {
                window: tuple.min_element(),
                s,
                cap,
            });
        }
        limit = limit.saturating_mul(2);
    }
}

/// Brute-force g(A; s): count upward until min(A) consecutive integers
/// all exceed s representations, then report the last integer below that
/// run (or -1 if there is none).
pub fn g_search(tuple: &Tuple, s: u64, cap: u64) -> Result<GFrobResult> {
    let table = grow_table_for_window(tuple, s, cap)?;
    Ok(window_search(&table, s).expect("window present in grown table"))
}

/// One application of the gcd reduction: with l = gcd(a_2, ..., a_k),
///
/// ```text
/// g(a_1, a_2, ..., a_k; s) = l * g(a_1, a_2/l, ..., a_k/l; s) + a_1*(l - 1)
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    /// gcd of every element after the first.
    pub ell: u64,
    /// (a_1, a_2/ell, ..., a_k/ell); gcd 1 again.
    pub reduced: Tuple,
    first: u64,
}

impl ReductionStep {
    pub fn new(tuple: &Tuple) -> Result<Self> {
        if tuple.len() < 2 {
            return Err(Error::TupleTooShort {
                min: 2,
                got: tuple.len(),
            });
        }
        let gcd = tuple.gcd();
        if gcd != 1 {
            return Err(Error::NotCoprime {
                elements: tuple.elements().to_vec(),
                gcd,
            });
        }
        let first = tuple.elements()[0];
        let ell = gcd_all(&tuple.elements()[1..]);
        let mut reduced = Vec::with_capacity(tuple.len());
        reduced.push(first);
        reduced.extend(tuple.elements()[1..].iter().map(|&a| a / ell));
        debug_assert_eq!(gcd_all(&reduced), 1);
        Ok(ReductionStep {
            ell,
            reduced: Tuple::new_unchecked(reduced),
            first,
        })
    }

    /// Maps a solution of the reduced problem back: value -> ell*value +
    /// a_1*(ell - 1).
    pub fn apply(&self, reduced_value: &BigInt) -> BigInt {
        BigInt::from(self.ell) * reduced_value + BigInt::from(self.first) * (self.ell - 1)
    }
}

/// Computes g(A; s) through the gcd reduction, delegating the reduced
/// problem to `inner`. The inner solver can be the oracle or any closed
/// form, which is how the triangular formulas are composed.
pub fn beck_kifer_g<F>(tuple: &Tuple, s: u64, inner: F) -> Result<BigInt>
where
    F: FnOnce(&Tuple, u64) -> Result<BigInt>,
{
    let step = ReductionStep::new(tuple)?;
    let reduced_value = inner(&step.reduced, s)?;
    Ok(step.apply(&reduced_value))
}

/// The exact count d(g(a, b; s) + j*c; a, b), computed arithmetically.
///
/// When c is a multiple of a or of b, shifting g(a, b; s) by j*c lands in
/// a unique interval (g(a, b; i-1), g(a, b; i)], and the count at the
/// shifted point is exactly that i (with g(a, b; -1) = -infinity). Solving
/// the interval condition for i gives
///
/// ```text
/// i = ceil((g(a, b; s) + j*c + a + b) / (a*b)) - 1
/// ```
///
/// which works far beyond any count-table cap.
pub fn classify_shifted(a: u64, b: u64, s: u64, c: u64, j: i64) -> Result<u64> {
    let g_s = g_two_var(a, b, s)?;
    if c == 0 || (!c.is_multiple_of(a) && !c.is_multiple_of(b)) {
        return Err(Error::Precondition(format!(
            "c = {c} must be a positive multiple of a = {a} or b = {b}"
        )));
    }
    let shifted = g_s + BigInt::from(j) * BigInt::from(c);
    if shifted < BigInt::from(0) {
        return Err(Error::Precondition(format!(
            "g(a, b; s) + j*c = {shifted} must be non-negative"
        )));
    }
    let ab = BigInt::from(a) * BigInt::from(b);
    let i = (shifted + a + b).div_ceil(&ab) - 1;
    u64::try_from(i).map_err(|_| Error::ValueOutOfRange("count does not fit in u64".into()))
}
