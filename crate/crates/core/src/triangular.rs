//! Closed forms for three consecutive triangular numbers.
//!
//! For t_n = n(n+1)/2 the crate computes g(t_n, t_{n+1}, t_{n+2}; s) — the
//! largest integer with at most s representations — in closed form, valid
//! for n above a parity-dependent bound:
//!
//! ```text
//! even n:  (n+1)(n+2)/4 * (q_s*n + 6*c_s)           - 1
//! odd  n:  (n+1)(n+2)/4 * (q_s*n + 6*c_s - 3*d_s)   - 1
//! ```
//!
//! where (q_s, c_s, d_s) derive from the integer square root of s.  An
//! equivalent route goes through the reduced triple (t_n, t_{n+1}/d_1,
//! t_{n+2}/d_1) with d_1 = gcd(t_{n+1}, t_{n+2}) and a parity-dependent
//! pair (x_s, y_s): g of the reduced triple equals g(b, c; x_s) + y_s*t_n.
//! Both routes are implemented here and checked against each other and
//! against the brute-force oracle by the `verify` module.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd_all, isqrt, isqrt_u128};
use crate::error::{Error, Result};
use crate::genfrob::g_two_var;
use crate::repcount::Tuple;

/// Parity of the triangular index n, which selects the formula branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u64) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// Whether a closed form may be evaluated at n = N (relaxed) or only for
/// n > N (strict). Strict is always sound; relaxed is proven only for
/// s in {0, 1, 2} and for s outside the exceptional set B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMode {
    Strict,
    Relaxed,
}

impl fmt::Display for BoundMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundMode::Strict => write!(f, "strict"),
            BoundMode::Relaxed => write!(f, "relaxed"),
        }
    }
}

/// The n-th triangular number n(n+1)/2.
pub fn triangular_number(n: u64) -> BigUint {
    let n = BigUint::from(n);
    let succ = &n + 1u32;
    n * succ / 2u32
}

/// n(n+1)/2 as a machine word, None on overflow.
pub fn triangular_u64_checked(n: u64) -> Option<u64> {
    let t = u128::from(n) * (u128::from(n) + 1) / 2;
    u64::try_from(t).ok()
}

pub(crate) use triangular_u64_checked as triangular_u64;

/// The checked tuple (t_n, t_{n+1}, t_{n+2}).
pub fn triangular_triple(n: u64) -> Result<Tuple> {
    if n == 0 {
        return Err(Error::Precondition(
            "triangular index n must be >= 1".into(),
        ));
    }
    let parts = [n, n + 1, n + 2]
        .iter()
        .map(|&m| {
            triangular_u64(m)
                .ok_or_else(|| Error::ValueOutOfRange(format!("t_{m} does not fit in 64 bits")))
        })
        .collect::<Result<Vec<u64>>>()?;
    Tuple::new(parts)
}

/// The unique split s = k(k+1) + i with 0 <= i <= 2k+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SDecomposition {
    pub s: u64,
    pub k: u64,
    pub i: u64,
}

/// Decomposes s as k(k+1) + i; k is the largest integer with k(k+1) <= s.
pub fn s_decompose(s: u64) -> SDecomposition {
    let k = ((isqrt_u128(4 * u128::from(s) + 1) - 1) / 2) as u64;
    let base = (u128::from(k) * (u128::from(k) + 1)) as u64;
    let i = s - base;
    debug_assert!(i <= 2 * k + 1);
    SDecomposition { s, k, i }
}

/// The square-root parameters (q_s, c_s, delta_s) of the main closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedParams {
    pub q: u64,
    pub c: u64,
    pub delta: u64,
}

/// q_s = 2*floor(sqrt(s)) + 2 + delta_s, c_s = s - floor(sqrt(s))^2 -
/// delta_s*floor(sqrt(s)), delta_s = 1 iff s >= floor(sqrt(s))^2 +
/// floor(sqrt(s)).
pub fn closed_params(s: u64) -> ClosedParams {
    let r = isqrt(s);
    let delta = u64::from(s >= r * r + r);
    let q = 2 * r + 2 + delta;
    let c = s - r * r - delta * r;
    debug_assert!(c <= r || r == 0);
    debug_assert_eq!(r * r + delta * r + c, s);
    ClosedParams { q, c, delta }
}

/// The parity-dependent pair (x_s, y_s) feeding the reduced-triple form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityPair {
    pub parity: Parity,
    pub x: u64,
    pub y: u64,
}

/// Piecewise definition of (x_s, y_s) from the split s = k(k+1) + i.
pub fn xy_pair(s: u64, parity: Parity) -> ParityPair {
    let SDecomposition { k, i, .. } = s_decompose(s);
    let (x, y) = match parity {
        Parity::Even => {
            if i <= k {
                (i, 2 * (k - i))
            } else {
                (i - k - 1, 4 * k + 3 - 2 * i)
            }
        }
        Parity::Odd => {
            if i <= k {
                (2 * i, k - i)
            } else {
                (2 * (i - k) - 1, 2 * k + 1 - i)
            }
        }
    };
    ParityPair { parity, x, y }
}

/// The lower bound N on n above which the closed forms are proven:
/// N_even = 6*floor(sqrt(s+1)) - 6 and N_odd =
/// 6*floor((sqrt(4s+5) - 1)/2) - 3. May be negative (N_0^odd = -3).
pub fn n_bound(s: u64, parity: Parity) -> i64 {
    match parity {
        Parity::Even => 6 * isqrt_u128(u128::from(s) + 1) as i64 - 6,
        Parity::Odd => 6 * ((isqrt_u128(4 * u128::from(s) + 5) - 1) / 2) as i64 - 3,
    }
}

/// The same bound expressed piecewise in the split s = k(k+1) + i.
pub fn n_bound_piecewise(s: u64, parity: Parity) -> i64 {
    let SDecomposition { k, i, .. } = s_decompose(s);
    let k = k as i64;
    let i = i as i64;
    match parity {
        Parity::Even => {
            if i < k {
                6 * k - 6
            } else {
                6 * k
            }
        }
        Parity::Odd => {
            if i <= 2 * k {
                6 * k - 3
            } else {
                6 * k + 3
            }
        }
    }
}

/// Membership in the exceptional set B = {k^2 or k(k+1), k >= 1}
/// = {1, 2, 4, 6, 9, 12, 16, ...}. Returns false for s = 0.
pub fn in_b(s: u64) -> bool {
    if s == 0 {
        return false;
    }
    let r = isqrt(s);
    if r * r == s {
        return true;
    }
    let d = s_decompose(s);
    d.i == 0 && d.k >= 1
}

/// Whether the bound may be relaxed from n > N to n >= N for this s.
pub fn bound_relaxable(s: u64) -> bool {
    s <= 2 || !in_b(s)
}

fn below_bound(n: u64, s: u64, parity: Parity, bound: i64, strict: bool) -> Error {
    let op = if strict { ">" } else { ">=" };
    Error::BelowBound {
        n,
        s,
        requirement: format!("{parity} n {op} {bound}"),
    }
}

fn check_main_bound(n: u64, s: u64, mode: BoundMode) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition(
            "triangular index n must be >= 1".into(),
        ));
    }
    let parity = Parity::of(n);
    let bound = n_bound(s, parity);
    match mode {
        BoundMode::Strict => {
            if i128::from(n) > i128::from(bound) {
                Ok(())
            } else {
                Err(below_bound(n, s, parity, bound, true))
            }
        }
        BoundMode::Relaxed => {
            if !bound_relaxable(s) {
                Err(Error::RelaxedUnavailable { s })
            } else if i128::from(n) >= i128::from(bound) {
                Ok(())
            } else {
                Err(below_bound(n, s, parity, bound, false))
            }
        }
    }
}

/// The main closed-form value without any bound check. Internal: callers
/// go through [`g_triangular_closed`] unless they are deliberately probing
/// below the proven range.
pub(crate) fn triangular_closed_raw(n: u64, s: u64) -> BigInt {
    let params = closed_params(s);
    let mut inner = BigInt::from(params.q) * n + 6 * BigInt::from(params.c);
    if Parity::of(n) == Parity::Odd {
        inner -= 3 * BigInt::from(params.delta);
    }
    let numerator = (BigInt::from(n) + 1) * (BigInt::from(n) + 2) * inner;
    // (n+1)(n+2)(q n + 6c - 3 delta [n odd]) is always divisible by 4.
    let remainder: BigInt = &numerator % 4u32;
    assert!(remainder.is_zero(), "numerator not divisible by 4");
    numerator / 4u32 - 1
}

/// g(t_n, t_{n+1}, t_{n+2}; s) in closed form.
///
/// Strict mode requires n > N; relaxed mode allows n = N, which is proven
/// only when `bound_relaxable(s)`. Outside the proven range the call is
/// refused rather than extrapolated.
pub fn g_triangular_closed(n: u64, s: u64, mode: BoundMode) -> Result<BigInt> {
    check_main_bound(n, s, mode)?;
    Ok(triangular_closed_raw(n, s))
}

/// The reduced triple (t_n, t_{n+1}/d_1, t_{n+2}/d_1) with
/// d_1 = gcd(t_{n+1}, t_{n+2}).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedTriple {
    pub n: u64,
    pub t_n: u64,
    pub d1: u64,
    /// t_{n+1}/d_1: n+1 for even n, (n+1)/2 for odd n.
    pub b: u64,
    /// t_{n+2}/d_1: n+3 for even n, (n+3)/2 for odd n.
    pub c: u64,
}

impl ReducedTriple {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition(
                "triangular index n must be >= 1".into(),
            ));
        }
        let t_n = triangular_u64(n)
            .ok_or_else(|| Error::ValueOutOfRange(format!("t_{n} does not fit in 64 bits")))?;
        let (d1, b, c) = if n.is_multiple_of(2) {
            ((n + 2) / 2, n + 1, n + 3)
        } else {
            // (n+1)/2 and (n+3)/2 are consecutive, hence coprime.
            let half = n.div_ceil(2);
            (n + 2, half, half + 1)
        };
        debug_assert_eq!(
            u128::from(d1) * u128::from(b) * 2,
            u128::from(n + 1) * u128::from(n + 2)
        );
        debug_assert_eq!(gcd_all(&[b, c]), 1);
        debug_assert_eq!(t_n % b, 0);
        Ok(ReducedTriple { n, t_n, d1, b, c })
    }

    /// The tuple (t_n, b, c); coprime because gcd(b, c) = 1.
    pub fn reduced_tuple(&self) -> Tuple {
        Tuple::new_unchecked(vec![self.t_n, self.b, self.c])
    }
}

fn check_reduced_bound(n: u64, s: u64) -> Result<()> {
    let parity = Parity::of(n);
    let bound = n_bound(s, parity);
    let n_wide = i128::from(n);
    let strict_ok = n_wide > i128::from(bound);
    let relaxed_ok = bound_relaxable(s) && n_wide >= i128::from(bound);
    if strict_ok || relaxed_ok {
        Ok(())
    } else {
        Err(below_bound(n, s, parity, bound, !bound_relaxable(s)))
    }
}

/// The reduced-triple closed value without the bound check; see
/// [`triangular_closed_raw`].
pub(crate) fn reduced_closed_raw(n: u64, s: u64) -> Option<BigInt> {
    let triple = ReducedTriple::new(n).ok()?;
    let pair = xy_pair(s, Parity::of(n));
    let base = g_two_var(triple.b, triple.c, pair.x).ok()?;
    Some(base + BigInt::from(pair.y) * BigInt::from(triple.t_n))
}

/// g(t_n, t_{n+1}/d_1, t_{n+2}/d_1; s) = g(b, c; x_s) + y_s * t_n.
///
/// The boundary n = N is admitted automatically whenever it is proven
/// (`bound_relaxable(s)`); otherwise strict n > N is required.
pub fn g_reduced_closed(n: u64, s: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Precondition(
            "triangular index n must be >= 1".into(),
        ));
    }
    check_reduced_bound(n, s)?;
    let triple = ReducedTriple::new(n)?;
    let pair = xy_pair(s, Parity::of(n));
    let base = g_two_var(triple.b, triple.c, pair.x)?;
    Ok(base + BigInt::from(pair.y) * BigInt::from(triple.t_n))
}

/// Which case of the difference identity fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "case", content = "k")]
pub enum DiffCase {
    /// s+1 is neither a square nor pronic: the difference is 6(n+1)(n+2)/4
    /// independent of s.
    Generic,
    /// Even n, s+1 = k^2: (n - 6k + 6)(n+1)(n+2)/4.
    EvenSquare(u64),
    /// Even n, s+1 = k(k+1): (n - 6k + 6)(n+1)(n+2)/4.
    EvenPronic(u64),
    /// Odd n, s+1 = k^2: (n - 6k + 9)(n+1)(n+2)/4.
    OddSquare(u64),
    /// Odd n, s+1 = k(k+1): (n - 6k + 3)(n+1)(n+2)/4.
    OddPronic(u64),
}

impl fmt::Display for DiffCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffCase::Generic => write!(f, "generic (s+1 is neither a square nor pronic)"),
            DiffCase::EvenSquare(k) => write!(f, "even n, s+1 = k^2 with k = {k}"),
            DiffCase::EvenPronic(k) => write!(f, "even n, s+1 = k(k+1) with k = {k}"),
            DiffCase::OddSquare(k) => write!(f, "odd n, s+1 = k^2 with k = {k}"),
            DiffCase::OddPronic(k) => write!(f, "odd n, s+1 = k(k+1) with k = {k}"),
        }
    }
}

/// A predicted difference g(...; s+1) - g(...; s) and the case that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Difference {
    pub value: BigInt,
    pub case: DiffCase,
}

/// The predicted jump g(t_n, t_{n+1}, t_{n+2}; s+1) - g(t_n, t_{n+1},
/// t_{n+2}; s), requiring n > N_{s+1} for the parity of n.
pub fn g_difference_closed(n: u64, s: u64) -> Result<Difference> {
    if n == 0 {
        return Err(Error::Precondition(
            "triangular index n must be >= 1".into(),
        ));
    }
    let next = s
        .checked_add(1)
        .ok_or_else(|| Error::ValueOutOfRange("s + 1 overflows".into()))?;
    let parity = Parity::of(n);
    let bound = n_bound(next, parity);
    if i128::from(n) <= i128::from(bound) {
        return Err(Error::BelowBound {
            n,
            s,
            requirement: format!("{parity} n > {bound} (N at level s+1 = {next})"),
        });
    }
    let case = if !in_b(next) {
        DiffCase::Generic
    } else {
        let r = isqrt(next);
        let square = r * r == next;
        let k = if square { r } else { s_decompose(next).k };
        match (parity, square) {
            (Parity::Even, true) => DiffCase::EvenSquare(k),
            (Parity::Even, false) => DiffCase::EvenPronic(k),
            (Parity::Odd, true) => DiffCase::OddSquare(k),
            (Parity::Odd, false) => DiffCase::OddPronic(k),
        }
    };
    let multiplier: BigInt = match case {
        DiffCase::Generic => BigInt::from(6),
        DiffCase::EvenSquare(k) | DiffCase::EvenPronic(k) => {
            BigInt::from(i128::from(n) - 6 * i128::from(k) + 6)
        }
        DiffCase::OddSquare(k) => BigInt::from(i128::from(n) - 6 * i128::from(k) + 9),
        DiffCase::OddPronic(k) => BigInt::from(i128::from(n) - 6 * i128::from(k) + 3),
    };
    let numerator = multiplier * (BigInt::from(n) + 1) * (BigInt::from(n) + 2);
    let remainder: BigInt = &numerator % 4u32;
    assert!(remainder.is_zero(), "numerator not divisible by 4");
    Ok(Difference {
        value: numerator / 4u32,
        case,
    })
}

/// g(A1, A2, A3; s) for any triple with A2 | A1 whose ratio A2*A3/A1 lands
/// strictly inside one of two windows (compared with exact rational
/// arithmetic):
///
/// ```text
/// even branch:  2  <  A2*A3/A1  <  2 + 1/K_ev,          K_ev = floor(sqrt(s+1)) - 1
/// odd  branch: 1/2 <  A2*A3/A1  <  K_od/(2*K_od - 1),   K_od = floor((sqrt(4s+5)-1)/2)
/// ```
///
/// In the even window g = g(A2, A3; x_s^even) + y_s^even * A1, in the odd
/// window the odd pair is used instead. Boundary ratios are rejected, and
/// the even branch is refused for s < 3 where its upper bound 2 + 1/K_ev
/// is undefined.
pub fn g_general_triple(a1: u64, a2: u64, a3: u64, s: u64) -> Result<BigInt> {
    if a1 <= 1 || a2 <= 1 || a3 <= 1 {
        return Err(Error::Precondition(
            "A1, A2, A3 must all be greater than 1".into(),
        ));
    }
    if s == 0 {
        return Err(Error::Precondition("s must be positive".into()));
    }
    let gcd = gcd_all(&[a1, a2, a3]);
    if gcd != 1 {
        return Err(Error::NotCoprime {
            elements: vec![a1, a2, a3],
            gcd,
        });
    }
    if !a1.is_multiple_of(a2) {
        return Err(Error::Precondition(format!(
            "A1 = {a1} must be divisible by A2 = {a2}"
        )));
    }
    let product = u128::from(a2) * u128::from(a3);
    let base = u128::from(a1);
    if product > 2 * base {
        // Even-branch territory: ratio > 2 strictly.
        let k_ev = (isqrt_u128(u128::from(s) + 1) as u64).saturating_sub(1);
        if s_decompose(s).k == 0 || k_ev == 0 {
            return Err(Error::UndefinedBound { s });
        }
        // ratio < 2 + 1/K  <=>  A2*A3*K < A1*(2K + 1)
        let lhs = BigUint::from(product) * k_ev;
        let rhs = BigUint::from(base) * (2 * k_ev + 1);
        if lhs < rhs {
            let pair = xy_pair(s, Parity::Even);
            Ok(g_two_var(a2, a3, pair.x)? + BigInt::from(pair.y) * BigInt::from(a1))
        } else {
            Err(Error::ConditionNotMet(format!(
                "A2*A3/A1 = {product}/{base} is not < 2 + 1/{k_ev}"
            )))
        }
    } else if 2 * product > base {
        // Odd-branch territory: 1/2 < ratio <= 2.
        let k_od = ((isqrt_u128(4 * u128::from(s) + 5) - 1) / 2) as u64;
        debug_assert!(k_od >= 1);
        // ratio < K/(2K - 1)  <=>  A2*A3*(2K - 1) < A1*K
        let lhs = BigUint::from(product) * (2 * k_od - 1);
        let rhs = BigUint::from(base) * k_od;
        if lhs < rhs {
            let pair = xy_pair(s, Parity::Odd);
            Ok(g_two_var(a2, a3, pair.x)? + BigInt::from(pair.y) * BigInt::from(a1))
        } else {
            Err(Error::ConditionNotMet(format!(
                "A2*A3/A1 = {product}/{base} is not < {k_od}/{}",
                2 * k_od - 1
            )))
        }
    } else {
        Err(Error::ConditionNotMet(format!(
            "A2*A3/A1 = {product}/{base} is not > 1/2"
        )))
    }
}
