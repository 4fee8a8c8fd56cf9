//! Property tests: the spec-level invariants that need no table of
//! known values, run over randomized inputs.

mod common;

use gfrob::arith::{gcd_all, isqrt, isqrt_u128};
use gfrob::{
    closed_params, count_prefix, count_representations, g_search, g_two_var, n_bound,
    n_bound_piecewise, s_decompose, xy_pair, Parity, Tuple,
};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn tuple_elements() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..=30, 2..=4)
        .prop_filter("overall gcd must be 1", |v| gcd_all(v) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counts_match_enumeration(elements in tuple_elements(), n in 0u64..=120) {
        let tuple = Tuple::new_unchecked(elements.clone());
        let counted = count_representations(n, &tuple).unwrap();
        prop_assert_eq!(counted, BigUint::from(common::enumerate_count(n, &elements)));
    }

    #[test]
    fn monotone_shift(elements in tuple_elements()) {
        let tuple = Tuple::new_unchecked(elements);
        let table = count_prefix(300, &tuple).unwrap();
        for &a in tuple.elements() {
            for n in 0..=(300 - a) {
                prop_assert!(table.count(n + a) >= table.count(n));
            }
        }
    }

    #[test]
    fn permutation_invariance(
        (original, shuffled) in tuple_elements()
            .prop_flat_map(|v| (Just(v.clone()), Just(v).prop_shuffle()))
    ) {
        let a = count_prefix(200, &Tuple::new_unchecked(original)).unwrap();
        let b = count_prefix(200, &Tuple::new_unchecked(shuffled)).unwrap();
        prop_assert_eq!(a.counts(), b.counts());
    }

    #[test]
    fn series_prefix_equality(elements in tuple_elements()) {
        let tuple = Tuple::new_unchecked(elements.clone());
        let table = count_prefix(200, &tuple).unwrap();
        let series = common::series_prefix(&elements, 200);
        prop_assert_eq!(table.counts(), series.as_slice());
    }

    #[test]
    fn isqrt_is_exact(n in any::<u64>()) {
        let r = isqrt(n);
        let r2 = u128::from(r) * u128::from(r);
        prop_assert!(r2 <= u128::from(n));
        prop_assert!((u128::from(r) + 1).pow(2) > u128::from(n));
    }

    #[test]
    fn isqrt_u128_is_exact(n in any::<u128>()) {
        let r = isqrt_u128(n);
        prop_assert!(r.checked_mul(r).map(|sq| sq <= n).unwrap_or(false) || r == 0 && n == 0);
        if let Some(next) = (r + 1).checked_mul(r + 1) {
            prop_assert!(next > n);
        }
    }

    #[test]
    fn decomposition_is_inverse(s in any::<u64>()) {
        let d = s_decompose(s);
        prop_assert_eq!(
            u128::from(d.k) * (u128::from(d.k) + 1) + u128::from(d.i),
            u128::from(s)
        );
        prop_assert!(d.i <= 2 * d.k + 1);
    }

    #[test]
    fn closed_params_reconstruct(s in any::<u64>()) {
        let r = isqrt(s);
        let p = closed_params(s);
        prop_assert!(p.delta <= 1);
        prop_assert_eq!(p.delta == 1, s >= r * r + r);
        prop_assert_eq!(p.q, 2 * r + 2 + p.delta);
        prop_assert!(p.c <= r || r == 0);
        prop_assert_eq!(
            u128::from(r) * u128::from(r) + u128::from(p.delta) * u128::from(r) + u128::from(p.c),
            u128::from(s)
        );
    }

    #[test]
    fn cross_links(s in 0u64..=1_000_000_000_000) {
        let p = closed_params(s);
        let even = xy_pair(s, Parity::Even);
        let odd = xy_pair(s, Parity::Odd);
        prop_assert_eq!(p.q, 2 * even.x + even.y + 3);
        prop_assert_eq!(p.c, even.x);
        prop_assert_eq!(p.q, odd.x + 2 * odd.y + 3);
        prop_assert_eq!(
            6 * i128::from(p.c) - 3 * i128::from(p.delta),
            3 * i128::from(odd.x) - 3
        );
    }

    #[test]
    fn bound_floor_matches_piecewise(s in any::<u64>()) {
        for parity in [Parity::Even, Parity::Odd] {
            prop_assert_eq!(n_bound(s, parity), n_bound_piecewise(s, parity));
        }
    }

    #[test]
    fn two_var_closed_matches_oracle(a in 2u64..=10, b in 2u64..=10, s in 0u64..=4) {
        prop_assume!(gcd_all(&[a, b]) == 1 && a != b);
        let tuple = Tuple::new_unchecked(vec![a, b]);
        let closed = g_two_var(a, b, s).unwrap();
        let found = g_search(&tuple, s, 1 << 20).unwrap();
        prop_assert_eq!(&found.value, &closed);
        // Two variables attain the level exactly.
        let value = u64::try_from(&closed).unwrap();
        let d = count_representations(value, &tuple).unwrap();
        prop_assert_eq!(d, BigUint::from(s));
    }

    #[test]
    fn search_result_contract(elements in tuple_elements(), s in 0u64..=4) {
        let tuple = Tuple::new_unchecked(elements);
        let result = g_search(&tuple, s, 1 << 20).unwrap();
        let threshold = BigUint::from(s + 1);
        let window = result.witness_window.as_ref().unwrap();
        prop_assert_eq!(window.len() as u64, tuple.min_element());
        for (_, count) in window {
            prop_assert!(*count >= threshold);
        }
        if let Ok(value) = u64::try_from(&result.value) {
            // d(value) <= s and everything in (value, window end] exceeds s.
            let end = window.last().unwrap().0;
            let table = count_prefix(end, &tuple).unwrap();
            prop_assert!(*table.count(value) <= BigUint::from(s));
            for m in (value + 1)..=end {
                prop_assert!(*table.count(m) >= threshold);
            }
        } else {
            prop_assert_eq!(&result.value, &BigInt::from(-1));
            prop_assert_eq!(window.first().unwrap().0, 0);
        }
    }
}
