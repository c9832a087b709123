use fuscat::exactnum::{euler_phi, CycNum, Rational};
use num::complex::Complex64;
use num::traits::{One, Zero};
use proptest::prelude::*;

const CONDUCTORS: &[u32] = &[1, 3, 4, 5, 7, 8, 12, 15, 20, 24];

fn cyc_in(n: u32, lo: i64, hi: i64) -> impl Strategy<Value = CycNum> {
    let phi = euler_phi(n);
    (prop::collection::vec((lo..=hi, 1i64..=4), phi)).prop_map(move |cs| {
        let coeffs = cs.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect();
        CycNum::from_coeffs(n, coeffs).unwrap()
    })
}

fn cyc() -> impl Strategy<Value = CycNum> {
    prop::sample::select(CONDUCTORS).prop_flat_map(|n| cyc_in(n, -5, 5))
}

/// Integer combination of roots of unity: always an algebraic integer.
fn cyc_integral() -> impl Strategy<Value = CycNum> {
    (prop::sample::select(CONDUCTORS), prop::collection::vec((-3i64..=3, 0i64..48), 1..5)).prop_map(|(n, terms)| {
        terms.into_iter().map(|(c, k)| CycNum::zeta_power(n, k).scale_int(c)).sum()
    })
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-8 * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_and_multiplication_commute(a in cyc(), b in cyc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_is_associative_and_distributive(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn nonzero_elements_invert(a in cyc()) {
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).is_one());
    }

    #[test]
    fn subtraction_cancels(a in cyc(), b in cyc()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn lifting_the_conductor_preserves_value(a in cyc(), m in 1u32..4) {
        let lifted = a.change_conductor(a.conductor() * m).unwrap();
        prop_assert_eq!(&lifted, &a);
        prop_assert!(close(lifted.embed_complex(), a.embed_complex()));
    }

    #[test]
    fn embedding_is_a_ring_map(a in cyc(), b in cyc()) {
        prop_assert!(close((&a * &b).embed_complex(), a.embed_complex() * b.embed_complex()));
        prop_assert!(close((&a + &b).embed_complex(), a.embed_complex() + b.embed_complex()));
        prop_assert!(close(a.conjugate().embed_complex(), a.embed_complex().conj()));
    }

    #[test]
    fn minimal_polynomial_annihilates(a in cyc()) {
        let p = a.minimal_polynomial();
        prop_assert!(p.eval(&a).is_zero());
        let chi = a.characteristic_polynomial();
        prop_assert!(chi.div_rem(&p).1.is_zero(), "minimal polynomial divides the characteristic polynomial");
    }

    #[test]
    fn integer_combinations_of_roots_are_integral(a in cyc_integral(), b in cyc_integral()) {
        prop_assert!(a.is_algebraic_integer());
        prop_assert!((&a * &b).is_algebraic_integer());
        prop_assert!((&a + &b).is_algebraic_integer());
    }

    #[test]
    fn characteristic_polynomial_sees_integral_coordinates(a in cyc()) {
        let integral_coords = a.coeffs().iter().all(|c| c.is_integer());
        prop_assert_eq!(a.characteristic_polynomial().is_integral(), integral_coords);
        prop_assert_eq!(a.is_algebraic_integer(), integral_coords);
    }

    #[test]
    fn integral_plus_half_is_not_integral(a in cyc_integral()) {
        // algebraic integers form a ring, so a + 1/2 integral would make 1/2 integral
        let shifted = &a + &CycNum::from_ratio(1, 2);
        prop_assert!(!shifted.is_algebraic_integer());
    }

    #[test]
    fn serde_round_trip(a in cyc()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: CycNum = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn powers_of_zeta_cycle(n in prop::sample::select(CONDUCTORS), k in -50i64..50) {
        prop_assert!(CycNum::zeta(n).pow(n).is_one());
        prop_assert_eq!(CycNum::zeta_power(n, k), CycNum::zeta_power(n, k + i64::from(n)));
    }
}

#[test]
fn rational_integrality_matches_denominators() {
    for num in -12i64..=12 {
        for den in 1i64..=7 {
            let q = CycNum::from_ratio(num, den);
            assert_eq!(q.is_algebraic_integer(), num % den == 0, "{num}/{den}");
        }
    }
    assert!(CycNum::one().is_algebraic_integer());
}
