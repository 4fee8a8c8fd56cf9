//! Exact integer helpers: floor square roots and gcds.
//!
//! The square roots are pure integer Newton iterations. Floating-point
//! square roots mis-round near perfect squares, which is exactly where the
//! parameter formulas flip, so no float is used anywhere.

/// Floor of the square root of `n`, exact for all `u64` inputs.
pub fn isqrt(n: u64) -> u64 {
    isqrt_u128(u128::from(n)) as u64
}

/// Floor of the square root of `n`, exact for all `u128` inputs.
///
/// Newton iteration started from a power of two above the root; the
/// sequence decreases monotonically to `floor(sqrt(n))`.
pub fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    let mut x = 1u128 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// gcd of a non-empty slice.
pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().copied().fold(0, num_integer::gcd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_small_exhaustive() {
        for n in 0u64..100_000 {
            let r = isqrt(n);
            assert!(r * r <= n, "floor({n}) too big");
            assert!((r + 1) * (r + 1) > n, "floor({n}) too small");
        }
    }

    #[test]
    fn isqrt_near_squares() {
        for r in [3u64, 10, 1 << 16, 1 << 31, 4_294_967_295] {
            let sq = r * r;
            assert_eq!(isqrt(sq - 1), r - 1);
            assert_eq!(isqrt(sq), r);
            assert_eq!(isqrt(sq + 1), r);
        }
        assert_eq!(isqrt(u64::MAX), 4_294_967_295);
    }

    #[test]
    fn isqrt_u128_extremes() {
        assert_eq!(isqrt_u128(0), 0);
        assert_eq!(isqrt_u128(1), 1);
        assert_eq!(isqrt_u128(2), 1);
        assert_eq!(isqrt_u128(u128::MAX), (1 << 64) - 1);
        let r = 0xffff_ffff_ffff_fff1u128;
        assert_eq!(isqrt_u128(r * r), r);
        assert_eq!(isqrt_u128(r * r - 1), r - 1);
        assert_eq!(isqrt_u128(r * r + 1), r);
    }

    #[test]
    fn gcd_all_basics() {
        assert_eq!(gcd_all(&[7, 11]), 1);
        assert_eq!(gcd_all(&[6, 10, 15]), 1);
        assert_eq!(gcd_all(&[6, 10]), 2);
        assert_eq!(gcd_all(&[42]), 42);
    }
}
