//! Property tests for the algebraic invariants of every layer.

use catdet::combinatorics::{carlitz, catalan, catalan_power, q_catalan_power};
use catdet::exact_arith::{int, int_binomial, rat, ExactInt};
use catdet::identity_suite::{build_matrix, coherence, Params};
use catdet::linalg::{det_bareiss, det_cofactor, det_condensation, RingMatrix};
use catdet::modular_lab::{lift_is_faithful, lucas_binomial_mod2, odd_power_indices, unique_power_index, ResidueLift};
use catdet::orthopoly::{favard_coeffs, moments, pair, FavardSystem};
use catdet::qseries::{q_binomial, QPoly};
use num_integer::Integer;
use proptest::prelude::*;

fn int_matrix(n: usize, entries: &[i64]) -> RingMatrix<ExactInt> {
    RingMatrix::square(n, |i, j| int(entries[i * n + j]))
}

fn square_ints(max: usize, range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = (usize, Vec<i64>)> {
    (0..=max).prop_flat_map(move |n| (Just(n), prop::collection::vec(range.clone(), n * n)))
}

fn small_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-3i64..=3, 0..4).prop_map(|c| QPoly::from_coeffs(&c))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn binomial_symmetry(a in 0i64..60, k in 0i64..60) {
        prop_assume!(k <= a);
        prop_assert_eq!(int_binomial(a, k), int_binomial(a, a - k));
    }

    #[test]
    fn binomial_pascal_for_every_upper_index(a in -40i64..40, k in 1i64..30) {
        prop_assert_eq!(int_binomial(a, k), int_binomial(a - 1, k) + int_binomial(a - 1, k - 1));
    }

    #[test]
    fn binomial_negative_upper_reflection(a in 1i64..30, k in 0i64..30) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(int_binomial(-a, k), int_binomial(a + k - 1, k) * sign);
    }

    #[test]
    fn rationals_are_canonical(p in -1000i64..1000, q in (-1000i64..1000).prop_filter("nonzero", |q| *q != 0)) {
        let r = rat(p, q);
        prop_assert!(r.denom() > &int(0));
        prop_assert_eq!(r.numer().gcd(r.denom()), int(1));
        prop_assert_eq!(r.numer() * int(q), r.denom() * int(p));
    }

    #[test]
    fn q_pascal(n in 2i64..25, k in 1i64..24) {
        prop_assume!(k < n);
        let left = q_binomial(n - 1, k).shift2(2 * k) + q_binomial(n - 1, k - 1);
        prop_assert_eq!(q_binomial(n, k), left);
    }

    #[test]
    fn q_binomial_symmetry_and_degree(n in 0i64..25, k in 0i64..25) {
        prop_assume!(k <= n);
        let b = q_binomial(n, k);
        prop_assert_eq!(&b, &q_binomial(n, n - k));
        prop_assert_eq!(b.degree2(), Some(2 * k * (n - k)));
        prop_assert_eq!(b.specialize(1).unwrap(), int_binomial(n, k));
    }

    #[test]
    fn specialization_at_one_is_a_ring_morphism(a in small_poly(), b in small_poly()) {
        let at = |p: &QPoly| p.specialize(1).unwrap();
        prop_assert_eq!(at(&(&a * &b)), at(&a) * at(&b));
        prop_assert_eq!(at(&(a.clone() + b.clone())), at(&a) + at(&b));
        prop_assert_eq!(at(&(a.clone() - b.clone())), at(&a) - at(&b));
    }

    #[test]
    fn integer_determinant_engines_agree((n, e) in square_ints(6, -9..=9)) {
        let m = int_matrix(n, &e);
        let d = det_bareiss(&m).unwrap();
        prop_assert_eq!(&d, &det_condensation(&m).unwrap());
        prop_assert_eq!(&d, &det_cofactor(&m).unwrap());
        prop_assert_eq!(&d, &det_bareiss(&m.transpose()).unwrap());
    }

    #[test]
    fn polynomial_determinant_engines_agree(n in 0usize..=4, entries in prop::collection::vec(small_poly(), 16)) {
        let m = RingMatrix::square(n, |i, j| entries[i * 4 + j].clone());
        let d = det_bareiss(&m).unwrap();
        prop_assert_eq!(&d, &det_condensation(&m).unwrap());
        prop_assert_eq!(&d, &det_cofactor(&m).unwrap());
        prop_assert_eq!(&d, &det_bareiss(&m.transpose()).unwrap());
    }

    #[test]
    fn determinant_is_multiplicative(a in prop::collection::vec(-6i64..=6, 16), b in prop::collection::vec(-6i64..=6, 16)) {
        let (a, b) = (int_matrix(4, &a), int_matrix(4, &b));
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(det_bareiss(&ab).unwrap(), det_bareiss(&a).unwrap() * det_bareiss(&b).unwrap());
    }

    #[test]
    fn random_favard_systems_are_orthogonal(seed in 0u64..10_000) {
        let sys = FavardSystem::random(seed, 12);
        let table = favard_coeffs(&sys, 8);
        let mom = moments(&sys, 8).moments();
        for n in 0..=8 {
            let expected = int((n == 0) as i64);
            prop_assert_eq!(pair(table.row(n), &mom), expected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 10_000, ..ProptestConfig::default() })]

    #[test]
    fn lifts_respect_congruence(x in -1_000_000_000i64..1_000_000_000) {
        for lift in [ResidueLift::Mod2, ResidueLift::Mod3Standard, ResidueLift::Mu] {
            prop_assert!(lift_is_faithful(lift, &int(x)));
        }
    }
}

#[test]
fn lucas_parity_agrees_with_exact_binomials() {
    for a in 0..=256u64 {
        for b in 0..=256u64 {
            let exact = int_binomial(a as i64, b as i64).is_odd() as u8;
            assert_eq!(lucas_binomial_mod2(a, b), exact, "a = {a}, b = {b}");
        }
    }
}

#[test]
fn exactly_one_odd_binomial_for_every_m() {
    for m in 0..512u64 {
        let found = odd_power_indices(m);
        assert_eq!(found.len(), 1, "m = {m}");
        assert_eq!(unique_power_index(m).unwrap(), found[0]);
    }
}

#[test]
fn catalan_power_recurrence() {
    for n in 1..=12 {
        for k in 1..=12 {
            assert_eq!(catalan_power(n, k), catalan_power(n, k - 1) + catalan_power(n - 1, k + 1), "n = {n}, k = {k}");
        }
    }
    for n in 0..=20 {
        assert_eq!(catalan_power(n, 2), catalan(n + 1));
    }
}

#[test]
fn q_numbers_reduce_to_classical_ones() {
    for n in 0..=10 {
        assert_eq!(carlitz(n as usize).specialize(1).unwrap(), catalan(n));
        for k in 0..=6 {
            assert_eq!(q_catalan_power(n, k).specialize(1).unwrap(), catalan_power(n, k));
        }
    }
}

#[test]
fn transposition_and_reversal_keep_family_determinants() {
    for n in 0..=8 {
        let mut points = vec![("eq1", Params::from([("n", n)]))];
        for m in 0..=3 {
            for k in 0..=3 {
                points.push(("eq74", Params::from([("n", n), ("m", m), ("k", k)])));
            }
        }
        for (id, p) in points {
            let a = build_matrix(id, &p).unwrap();
            let d = a.det().unwrap();
            assert_eq!(a.transpose().det().unwrap(), d, "{id} {p}");
            assert_eq!(a.reverse().det().unwrap(), d, "{id} {p}");
        }
    }
}

#[test]
fn row_operation_equivalent_families_share_determinants() {
    for n in 0..=10 {
        for k in 0..=6 {
            let p = Params::from([("n", n), ("k", k)]);
            let a = build_matrix("eq54", &p).unwrap().det().unwrap();
            let b = build_matrix("eq55", &p).unwrap().det().unwrap();
            assert_eq!(a, b, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn classical_limits_of_q_families() {
    for pair in coherence::pairs() {
        let bad = pair.failures().unwrap();
        assert!(bad.is_empty(), "{} vs {} fails at {bad:?}", pair.q_family, pair.classical_family);
    }
}
