use std::collections::BTreeMap;

use gorenstein_core::dataset;
use gorenstein_core::duality::{gamma_homotopy, vanishes_on, VANISHING_WINDOW};
use gorenstein_core::graded_ring::{
    brute_force_hilbert, dual_series, gorenstein_shift_formula, gorenstein_shift_stanley,
    hilbert_series, krull_dimension, GradedModuleSeries, RingPresentation,
};
use gorenstein_core::invariants::{invariant_basis, molien_series, Twist, DEFAULT_MONOMIAL_BOUND};
use gorenstein_core::series::{rational, HilbertSeries, LaurentPolynomial};
use gorenstein_core::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((-6i64..10, -5i64..6), 0..5).prop_map(LaurentPolynomial::from_ints)
}

fn series() -> impl Strategy<Value = HilbertSeries> {
    (laurent(), prop::collection::vec(1u32..7, 0..4)).prop_map(|(n, d)| HilbertSeries::new(n, d))
}

/// Complete-intersection degree data with positive Krull dimension.
fn presentation() -> impl Strategy<Value = RingPresentation> {
    prop::collection::vec(1u32..=60, 1..=5)
        .prop_flat_map(|gens| {
            let max_rel = 2.min(gens.len() - 1);
            let top = *gens.iter().max().unwrap();
            let rels = prop::collection::vec(top + 1..=top + 60, 0..=max_rel);
            (Just(gens), rels)
        })
        .prop_map(|(g, r)| RingPresentation::from_degrees("random", &g, &r).unwrap())
}

/// Number of solutions of `Σ d_i x_i = k` in nonnegative integers, for each `k ≤ n`,
/// by listing every exponent vector.
fn count_solutions(degrees: &[u32], n: u32) -> Vec<u64> {
    let mut counts = vec![0u64; n as usize + 1];
    let mut stack = vec![(0usize, 0u32)];
    while let Some((i, used)) = stack.pop() {
        if i == degrees.len() {
            counts[used as usize] += 1;
            continue;
        }
        let mut total = used;
        while total <= n {
            stack.push((i + 1, total));
            total += degrees[i];
        }
    }
    counts
}

fn convolve(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    (0..a.len())
        .map(|k| (0..=k).map(|i| &a[i] * &b[k - i]).sum())
        .collect()
}

/// Series with numerator support starting at degree zero or above, so that
/// truncations from zero capture the whole product.
fn nonnegative_series() -> impl Strategy<Value = HilbertSeries> {
    (
        prop::collection::vec((0i64..8, -4i64..5), 0..5).prop_map(LaurentPolynomial::from_ints),
        prop::collection::vec(1u32..6, 0..3),
    )
        .prop_map(|(n, d)| HilbertSeries::new(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn stanley_extraction_matches_formula(p in presentation()) {
        let s = hilbert_series(&p);
        prop_assert_eq!(
            gorenstein_shift_stanley(&s, krull_dimension(&p)),
            Ok(gorenstein_shift_formula(&p))
        );
    }

    #[test]
    fn substitute_inverse_is_an_involution(s in series()) {
        prop_assert_eq!(s.substitute_inverse().substitute_inverse(), s);
    }

    #[test]
    fn reduction_is_idempotent(s in series()) {
        prop_assert!(s.is_canonical());
        let again = HilbertSeries::new(s.numerator().clone(), s.denominator_degrees().to_vec());
        prop_assert_eq!(again.numerator(), s.numerator());
        prop_assert_eq!(again.denominator_degrees(), s.denominator_degrees());
    }

    #[test]
    fn expansion_is_additive(a in series(), b in series(), from in -12i64..0, len in 0i64..30) {
        let to = from + len;
        let sum: Vec<BigRational> = a.expand(from, to).iter().zip(b.expand(from, to)).map(|(x, y)| x + y).collect();
        prop_assert_eq!(a.add(&b).expand(from, to), sum);
    }

    #[test]
    fn expansion_is_multiplicative(a in nonnegative_series(), b in nonnegative_series(), n in 0i64..30) {
        let product = convolve(&a.expand(0, n), &b.expand(0, n));
        prop_assert_eq!(a.mul(&b).expand(0, n), product);
    }

    #[test]
    fn free_series_counts_solutions(degrees in prop::collection::vec(1u32..9, 1..4), n in 0u32..40) {
        let expected: Vec<BigRational> = count_solutions(&degrees, n).into_iter().map(|c| rational(c as i64)).collect();
        prop_assert_eq!(HilbertSeries::free(&degrees).expand(0, i64::from(n)), expected);
    }

    #[test]
    fn expansion_matches_enumeration(p in presentation()) {
        let expected: Vec<BigRational> = brute_force_hilbert(&p, 80).into_iter().map(BigRational::from_integer).collect();
        prop_assert_eq!(hilbert_series(&p).expand(0, 80), expected);
    }

    #[test]
    fn dual_is_an_involution(s in series(), k in -20i64..20) {
        let m = GradedModuleSeries::new(s, "M").suspend(k, "Σ M");
        let back = dual_series(&dual_series(&m));
        prop_assert_eq!(back.coefficients(-60, 60), m.coefficients(-60, 60));
        prop_assert_eq!(&back.label, &m.label);
        let once = dual_series(&m);
        let mirrored: Vec<BigRational> = m.coefficients(-60, 60).into_iter().rev().collect();
        prop_assert_eq!(once.coefficients(-60, 60), mirrored);
    }
}

#[test]
fn molien_agrees_with_reynolds_through_48() {
    for (key, _, _) in dataset::GROUPS {
        let g = dataset::group(key).group;
        let molien = molien_series(&g, &Twist::Trivial)
            .unwrap()
            .series
            .expand(0, 48);
        for k in 0..=48u32 {
            let dim = invariant_basis(&g, k, DEFAULT_MONOMIAL_BOUND)
                .unwrap()
                .len();
            assert_eq!(molien[k as usize], rational(dim as i64), "{key} degree {k}");
        }
    }
}

#[test]
fn gamma_vanishes_above_shift_for_bundled_rings() {
    let mut checked = BTreeMap::new();
    for (key, _) in dataset::RINGS {
        let p = dataset::ring(key);
        let a = gorenstein_shift_formula(&p);
        if a > -2 {
            continue;
        }
        let g = gamma_homotopy(&p).unwrap();
        assert!(vanishes_on(&g, a + 1, a + VANISHING_WINDOW), "{key}");
        // and the top class sits exactly in degree a
        assert!(!g.coefficients(a, a)[0].is_zero(), "{key}");
        checked.insert(*key, a);
    }
    assert_eq!(
        checked.into_iter().collect::<Vec<_>>(),
        vec![
            ("ku", -3),
            ("taf_d14", -22),
            ("taf_d6_al_alpha", -10),
            ("taf_d6_al_beta", -22),
            ("tmf2", -10)
        ]
    );
}
