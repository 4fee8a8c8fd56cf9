//! Exact representation counting.
//!
//! `count_representations(n, A)` is the number of ways to write `n` as a
//! non-negative integer combination of the tuple `A`, the quantity usually
//! written d(n; A) with generating series 1 / prod_j (1 - x^{a_j}).
//!
//! This module is the ground-truth kernel: every closed form in the crate
//! is checked against these counts. The counting itself is a single
//! unbounded-knapsack pass (elements outermost, amounts ascending), O(k*n)
//! time and O(n) space, with arbitrary-precision counts since d(n; A)
//! outgrows 64 bits for long tuples.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::gcd_all;
use crate::error::{Error, Result};
use crate::triangular::ReducedTriple;

/// Default cap on count-table entries. Counting is exact well past this
/// size, but a table this large is almost always a sign of a runaway
/// argument, so callers must opt in explicitly via the `_with_cap` forms.
pub const DEFAULT_TABLE_CAP: u64 = 100_000_000;

/// An ordered tuple of positive integers with overall gcd 1.
///
/// Elements are kept exactly as given: no sorting, no deduplication.
/// d(n; A) depends on multiplicity, so (3, 6, 10) and (3, 10) are
/// different tuples.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tuple {
    elements: Vec<u64>,
}

impl Tuple {
    /// Builds a tuple, validating positivity, length >= 2 and gcd 1.
    pub fn new(elements: Vec<u64>) -> Result<Self> {
        if elements.len() < 2 {
            return Err(Error::TupleTooShort {
                min: 2,
                got: elements.len(),
            });
        }
        if elements.contains(&0) {
            return Err(Error::ZeroElement);
        }
        let gcd = gcd_all(&elements);
        if gcd != 1 {
            return Err(Error::NotCoprime { elements, gcd });
        }
        Ok(Tuple { elements })
    }

    /// Builds a tuple without the gcd or length checks.
    ///
    /// For intermediate reduced tuples where the caller has already
    /// established coprimality, and for degenerate fixtures like `(1)`.
    /// Elements must still be positive.
    pub fn new_unchecked(elements: Vec<u64>) -> Self {
        assert!(!elements.is_empty(), "tuple must be non-empty");
        assert!(
            elements.iter().all(|&a| a > 0),
            "tuple elements must be positive"
        );
        Tuple { elements }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min_element(&self) -> u64 {
        *self.elements.iter().min().expect("tuple is non-empty")
    }

    pub fn max_element(&self) -> u64 {
        *self.elements.iter().max().expect("tuple is non-empty")
    }

    pub fn gcd(&self) -> u64 {
        gcd_all(&self.elements)
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for a in &self.elements {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Tuple {
    type Err = Error;

    /// Parses a comma-separated list of positive integers, e.g. `7,11`.
    fn from_str(s: &str) -> Result<Self> {
        let elements = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::InvalidTuple(format!("{part:?}: {e}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        Tuple::new(elements)
    }
}

/// The counts d(0; A), d(1; A), ..., d(limit; A) for one tuple.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    tuple: Tuple,
    counts: Vec<BigUint>,
}

impl CountTable {
    pub fn tuple(&self) -> &Tuple {
        &self.tuple
    }

    pub fn limit(&self) -> u64 {
        (self.counts.len() - 1) as u64
    }

    /// d(n; A); panics if `n` is past the table limit.
    pub fn count(&self, n: u64) -> &BigUint {
        &self.counts[n as usize]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }
}

/// Counts for all of 0..=limit in one dynamic-programming pass.
pub fn count_prefix(limit: u64, tuple: &Tuple) -> Result<CountTable> {
    count_prefix_with_cap(limit, tuple, DEFAULT_TABLE_CAP)
}

/// As [`count_prefix`], with an explicit entry cap.
pub fn count_prefix_with_cap(limit: u64, tuple: &Tuple, cap: u64) -> Result<CountTable> {
    let needed = limit.checked_add(1).ok_or(Error::CapExceeded {
        needed: u64::MAX,
        cap,
    })?;
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    let len = needed as usize;
    let mut counts = vec![BigUint::zero(); len];
    counts[0] = BigUint::one();
    for &a in tuple.elements() {
        let a = a as usize;
        // counts[i] += counts[i - a], ascending i: unbounded knapsack.
        for i in a..len {
            let (lower, upper) = counts.split_at_mut(i);
            upper[0] += &lower[i - a];
        }
    }
    Ok(CountTable {
        tuple: tuple.clone(),
        counts,
    })
}

/// The single count d(n; A).
pub fn count_representations(n: u64, tuple: &Tuple) -> Result<BigUint> {
    count_representations_with_cap(n, tuple, DEFAULT_TABLE_CAP)
}

/// As [`count_representations`], with an explicit entry cap.
pub fn count_representations_with_cap(n: u64, tuple: &Tuple, cap: u64) -> Result<BigUint> {
    Ok(count_prefix_with_cap(n, tuple, cap)?.count(n).clone())
}

/// d(m; t_n, t_{n+1}/d_1, t_{n+2}/d_1) computed by splitting off the
/// t_n coordinate:
///
/// ```text
/// d(m; t_n, b, c) = sum_{j=0}^{floor(m / t_n)} d(m - j*t_n; b, c)
/// ```
///
/// This is a second, independent route to the same number as running the
/// three-element dynamic program on the reduced triple, kept around for
/// cross-checking.
pub fn count_by_decomposition(m: u64, n: u64) -> Result<BigUint> {
    count_by_decomposition_with_cap(m, n, DEFAULT_TABLE_CAP)
}

/// As [`count_by_decomposition`], with an explicit entry cap.
pub fn count_by_decomposition_with_cap(m: u64, n: u64, cap: u64) -> Result<BigUint> {
    let triple = ReducedTriple::new(n)?;
    let pair = Tuple::new_unchecked(vec![triple.b, triple.c]);
    let table = count_prefix_with_cap(m, &pair, cap)?;
    let mut total = BigUint::zero();
    let mut j = 0u64;
    loop {
        let offset = match j.checked_mul(triple.t_n) {
            Some(offset) if offset <= m => offset,
            _ => break,
        };
        total += table.count(m - offset);
        j += 1;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force oracle: enumerate every coefficient vector directly.
    fn enumerate_count(n: u64, elements: &[u64]) -> u64 {
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

    fn t(elements: &[u64]) -> Tuple {
        Tuple::new(elements.to_vec()).unwrap()
    }

    #[test]
    fn tuple_validation() {
        assert!(Tuple::new(vec![7, 11]).is_ok());
        assert!(matches!(
            Tuple::new(vec![7]),
            Err(Error::TupleTooShort { .. })
        ));
        assert!(matches!(Tuple::new(vec![2, 0]), Err(Error::ZeroElement)));
        assert!(matches!(
            Tuple::new(vec![6, 10]),
            Err(Error::NotCoprime { gcd: 2, .. })
        ));
        // Order and multiplicity are preserved.
        assert_ne!(t(&[3, 6, 10]), t(&[3, 10]));
        assert_eq!(t(&[3, 6, 10]).elements(), &[3, 6, 10]);
    }

    #[test]
    fn tuple_parsing() {
        assert_eq!("7,11".parse::<Tuple>().unwrap(), t(&[7, 11]));
        assert_eq!(" 4, 11 ,20 ".parse::<Tuple>().unwrap(), t(&[4, 11, 20]));
        assert!(matches!(
            "6,10".parse::<Tuple>(),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            "7,x".parse::<Tuple>(),
            Err(Error::InvalidTuple(_))
        ));
    }

    #[test]
    fn count_examples() {
        // Only the empty representation reaches 0.
        assert_eq!(count_representations(0, &t(&[7, 11])).unwrap(), 1u32.into());
        // 59 = g(7, 11), so it has no representation at all.
        assert_eq!(
            count_representations(59, &t(&[7, 11])).unwrap(),
            0u32.into()
        );
        // Frozen from the enumeration oracle.
        assert_eq!(enumerate_count(74, &[4, 11, 20]), 4);
        assert_eq!(
            count_representations(74, &t(&[4, 11, 20])).unwrap(),
            4u32.into()
        );
    }

    #[test]
    fn prefix_examples() {
        let table = count_prefix(5, &t(&[2, 3])).unwrap();
        let expected: Vec<BigUint> = [1u32, 0, 1, 1, 1, 1].iter().map(|&v| v.into()).collect();
        assert_eq!(table.counts(), expected.as_slice());

        let table = count_prefix(0, &t(&[7, 11])).unwrap();
        assert_eq!(table.counts(), &[BigUint::one()]);

        // Degenerate fixture: the one-element tuple (1) counts everything once.
        let ones = Tuple::new_unchecked(vec![1]);
        let table = count_prefix(10, &ones).unwrap();
        assert!(table.counts().iter().all(|c| c.is_one()));
    }

    #[test]
    fn prefix_matches_enumeration() {
        for elements in [&[2u64, 3][..], &[7, 11], &[4, 11, 20], &[3, 3, 5]] {
            let tuple = Tuple::new_unchecked(elements.to_vec());
            let table = count_prefix(80, &tuple).unwrap();
            for n in 0..=80 {
                assert_eq!(
                    *table.count(n),
                    BigUint::from(enumerate_count(n, elements)),
                    "d({n}; {tuple})"
                );
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = count_prefix_with_cap(1000, &t(&[2, 3]), 1000).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                needed: 1001,
                cap: 1000
            }
        );
        assert!(count_prefix_with_cap(999, &t(&[2, 3]), 1000).is_ok());
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(count_by_decomposition(0, 2).unwrap(), 1u32.into());
        // Reduced triple for n = 2 is (3, 3, 5); the oracle gives 5 ways.
        assert_eq!(enumerate_count(17, &[3, 3, 5]), 5);
        assert_eq!(count_by_decomposition(17, 2).unwrap(), 5u32.into());
        // Reduced triple for n = 3 is (6, 2, 3).
        assert_eq!(enumerate_count(29, &[6, 2, 3]), 15);
        assert_eq!(count_by_decomposition(29, 3).unwrap(), 15u32.into());
        // The full (unreduced) triples at the same arguments have no
        // representations: 17 = g(3,6,10) and 29 = g(6,10,15).
        assert_eq!(
            count_representations(17, &t(&[3, 6, 10])).unwrap(),
            0u32.into()
        );
        assert_eq!(
            count_representations(29, &t(&[6, 10, 15])).unwrap(),
            0u32.into()
        );
    }

    #[test]
    fn decomposition_equals_direct_count() {
        for n in 2..=8u64 {
            let triple = ReducedTriple::new(n).unwrap();
            let tuple = triple.reduced_tuple();
            let table = count_prefix(2000, &tuple).unwrap();
            for m in (0..=2000).step_by(37).chain([2000]) {
                assert_eq!(
                    count_by_decomposition(m, n).unwrap(),
                    *table.count(m),
                    "m = {m}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn monotone_shift() {
        for elements in [&[7u64, 11][..], &[4, 11, 20], &[3, 3, 5]] {
            let tuple = Tuple::new_unchecked(elements.to_vec());
            let table = count_prefix(500, &tuple).unwrap();
            for &a in tuple.elements() {
                for n in 0..=(500 - a) {
                    assert!(table.count(n + a) >= table.count(n));
                }
            }
        }
    }
}
