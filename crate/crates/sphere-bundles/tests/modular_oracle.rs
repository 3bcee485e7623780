//! Brute-force oracles and randomized properties for the modular layer.
//!
//! The square-root solver is the foundation everything else stands on, so it
//! is checked element-for-element against exhaustive search over a wide
//! range, and its structural properties (group closure, negation closure,
//! the 2^(r+u) count) are fuzzed well beyond that range.

use proptest::prelude::*;
use sphere_bundles::modular::{factorize, gcd, minus_one_solvable, root_count, unit_square_roots};
use sphere_bundles::Sign;

/// All x in [0, n) with x² ≡ ±1 (mod n), by exhaustive search.
fn brute_roots(n: i64, sign: Sign) -> Vec<i64> {
    let target = match sign {
        Sign::Plus => 1i64.rem_euclid(n),
        Sign::Minus => (-1i64).rem_euclid(n),
    };
    (0..n).filter(|&x| x * x % n == target).collect()
}

/// Trial-division primality, independent of the factorizer under test.
fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[test]
fn solver_matches_brute_force_up_to_3000() {
    for n in 1..=3000 {
        for sign in [Sign::Plus, Sign::Minus] {
            let solved = unit_square_roots(n, sign).unwrap();
            assert_eq!(solved.elements, brute_roots(n, sign), "n = {n}, sign {sign}");
        }
    }
}

#[test]
fn root_count_formula_matches_set_size_up_to_3000() {
    for n in 1..=3000 {
        let counted = root_count(n).unwrap();
        let solved = unit_square_roots(n, Sign::Plus).unwrap();
        assert_eq!(counted.count, solved.len() as u64, "n = {n}");
        assert_eq!(counted.count, 1 << (counted.r + counted.u), "n = {n}");
    }
}

#[test]
fn minus_one_solvable_iff_roots_exist_up_to_3000() {
    for n in 1..=3000 {
        let solvable = minus_one_solvable(n).unwrap();
        let set = unit_square_roots(n, Sign::Minus).unwrap();
        assert_eq!(solvable, !set.is_empty(), "n = {n}");
    }
}

proptest! {
    #[test]
    fn gcd_divides_both_and_is_greatest(a in -1_000_000_000i64..1_000_000_000, b in -1_000_000_000i64..1_000_000_000) {
        let g = gcd(a, b);
        if a == 0 && b == 0 {
            prop_assert_eq!(g, 0);
        } else {
            prop_assert!(g >= 1);
            prop_assert_eq!(a.unsigned_abs() % g, 0);
            prop_assert_eq!(b.unsigned_abs() % g, 0);
            for d in 1..=40u64 {
                if a.unsigned_abs() % d == 0 && b.unsigned_abs() % d == 0 {
                    prop_assert_eq!(g % d, 0, "common divisor {} must divide gcd {}", d, g);
                }
            }
        }
    }

    #[test]
    fn factorization_reconstructs_with_prime_factors(n in 1i64..5_000_000) {
        let f = factorize(n).unwrap();
        let mut product = 1i64;
        let mut last = 1i64;
        for &(p, e) in &f.factors {
            prop_assert!(is_prime(p), "{} is not prime", p);
            prop_assert!(p > last, "factors must be strictly increasing");
            prop_assert!(e >= 1);
            last = p;
            product *= p.pow(e);
        }
        prop_assert_eq!(product, n);
    }

    #[test]
    fn roots_square_to_their_target(n in 1i64..2_000_000, plus in any::<bool>()) {
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let target = match sign {
            Sign::Plus => 1i64.rem_euclid(n),
            Sign::Minus => (-1i64).rem_euclid(n),
        };
        let set = unit_square_roots(n, sign).unwrap();
        prop_assert!(set.elements.windows(2).all(|w| w[0] < w[1]), "sorted, distinct");
        for &x in &set.elements {
            prop_assert!((0..n).contains(&x));
            prop_assert_eq!((x as i128 * x as i128).rem_euclid(n as i128) as i64, target, "n = {}", n);
            prop_assert!(set.contains((n - x) % n), "negation closure at {} mod {}", x, n);
        }
    }

    #[test]
    fn plus_roots_form_a_group_and_minus_roots_a_coset(n in 1i64..200_000) {
        let plus = unit_square_roots(n, Sign::Plus).unwrap();
        let minus = unit_square_roots(n, Sign::Minus).unwrap();
        let product = |a: i64, b: i64| (a as i128 * b as i128).rem_euclid(n as i128) as i64;
        for &a in &plus.elements {
            for &b in &plus.elements {
                prop_assert!(plus.contains(product(a, b)));
            }
        }
        for &a in &minus.elements {
            for &b in &minus.elements {
                prop_assert!(plus.contains(product(a, b)));
            }
            for &b in &plus.elements {
                prop_assert!(minus.contains(product(a, b)));
            }
        }
    }

    #[test]
    fn root_count_matches_solver_everywhere(n in 1i64..2_000_000) {
        let counted = root_count(n).unwrap();
        prop_assert_eq!(counted.count, unit_square_roots(n, Sign::Plus).unwrap().len() as u64);
    }

    #[test]
    fn minus_one_characterization(n in 1i64..2_000_000) {
        let f = factorize(n).unwrap();
        let expected = f.exponent_of_two() <= 1 && f.odd_primes().all(|(p, _)| p % 4 == 1);
        prop_assert_eq!(minus_one_solvable(n).unwrap(), expected);
        prop_assert_eq!(expected, !unit_square_roots(n, Sign::Minus).unwrap().is_empty());
    }
}
