//! Test-only oracles, independent of the library's counting path.
#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Brute force: enumerate every coefficient vector.
pub fn enumerate_count(n: u64, elements: &[u64]) -> u64 {
    match elements.split_first() {
        None => u64::from(n == 0),
        Some((&a, rest)) => {
            let mut total = 0;
            let mut used = 0;
            while used <= n {
                total += enumerate_count(n - used, rest);
                used += a;
            }
            total
        }
    }
}

/// First `limit + 1` coefficients of 1 / prod_j (1 - x^{a_j}) via
/// polynomial expansion of the denominator followed by power-series
/// inversion — a different computation path from the knapsack recurrence.
pub fn series_prefix(elements: &[u64], limit: usize) -> Vec<BigUint> {
    // Expand prod (1 - x^a) truncated at degree `limit`.
    let mut denom = vec![0i64; limit + 1];
    denom[0] = 1;
    for &a in elements {
        let a = a as usize;
        for i in (0..=limit).rev() {
            if i >= a {
                denom[i] -= denom[i - a];
            }
        }
    }
    // Invert the series: c_0 = 1, c_n = -sum_{k=1}^{n} denom_k c_{n-k}.
    let mut coeffs = vec![BigInt::zero(); limit + 1];
    coeffs[0] = BigInt::one();
    for n in 1..=limit {
        let mut acc = BigInt::zero();
        for k in 1..=n {
            if denom[k] != 0 {
                acc += &coeffs[n - k] * denom[k];
            }
        }
        coeffs[n] = -acc;
    }
    coeffs
        .into_iter()
        .map(|c| {
            assert!(!c.is_negative(), "series coefficient went negative");
            c.to_biguint().expect("non-negative")
        })
        .collect()
}

#[test]
fn oracles_agree_on_a_known_case() {
    // d(n; 2, 3): 1,0,1,1,1,1,2,...
    let series = series_prefix(&[2, 3], 6);
    let expected: Vec<u64> = (0..=6).map(|n| enumerate_count(n, &[2, 3])).collect();
    let series_u64: Vec<u64> = series.iter().map(|c| u64::try_from(c).unwrap()).collect();
    assert_eq!(series_u64, expected);
    assert_eq!(series_u64, vec![1, 0, 1, 1, 1, 1, 2]);
}
