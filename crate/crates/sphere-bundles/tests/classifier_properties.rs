//! Relation laws, gates and cross-form checks for the pairwise deciders.
//!
//! The deciders must behave like genuine equivalence relations (reflexive
//! in the preserving mode, symmetric, transitive), two orientation-reversing
//! equivalences must compose to an orientation-preserving one, reversing
//! equivalences must not exist unless −1 is a square modulo n, and the fast
//! window engine must agree verdict-for-verdict with the slow deciders.

use proptest::prelude::*;
use sphere_bundles::classifier::{
    diffeomorphic_congruence, equivalent, homeomorphic_congruence, homotopy_equivalent,
    symmetric_partner,
};
use sphere_bundles::modular::gcd;
use sphere_bundles::{Bundle, Category, Error, Orientation, Window};

const CATEGORIES: [Category; 3] = [
    Category::Homotopy,
    Category::Homeomorphism,
    Category::Diffeomorphism,
];
const ORIENTATIONS: [Orientation; 3] = [
    Orientation::Preserving,
    Orientation::Reversing,
    Orientation::Either,
];

fn b(m: i64, n: i64) -> Bundle {
    Bundle::new(m, n).unwrap()
}

fn mulm(a: i64, x: i64, n: i64) -> i64 {
    (a as i128 * x as i128).rem_euclid(n as i128) as i64
}

#[test]
fn preserving_is_reflexive() {
    for n in 0..=20 {
        for m in (-40..=40).step_by(7) {
            for c in CATEGORIES {
                assert!(equivalent(b(m, n), b(m, n), c, Orientation::Preserving).equivalent);
                assert!(equivalent(b(m, n), b(m, n), c, Orientation::Either).equivalent);
            }
        }
    }
}

#[test]
fn relations_are_symmetric() {
    for n in [1, 2, 3, 5, 8, 12, 13] {
        let w = Window::new(n).unwrap();
        let step = (w.len() / 40).max(1);
        for i in (0..w.len()).step_by(step) {
            for j in (0..w.len()).step_by(step) {
                for c in CATEGORIES {
                    for o in ORIENTATIONS {
                        assert_eq!(
                            w.equivalent(i, j, c, o),
                            w.equivalent(j, i, c, o),
                            "n={n} i={i} j={j} {c} {o}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn transitivity_on_sampled_windows() {
    for n in [4i64, 5, 12] {
        let w = Window::new(n).unwrap();
        let step = (w.len() / 24).max(1);
        for c in CATEGORIES {
            for o in [Orientation::Preserving, Orientation::Either] {
                for i in (0..w.len()).step_by(step) {
                    for j in (0..w.len()).step_by(step) {
                        if !w.equivalent(i, j, c, o) {
                            continue;
                        }
                        for k in (0..w.len()).step_by(step) {
                            if w.equivalent(j, k, c, o) {
                                assert!(
                                    w.equivalent(i, k, c, o),
                                    "n={n} {c} {o}: {i} ~ {j} ~ {k} but not {i} ~ {k}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn two_reversals_compose_to_a_preserving_equivalence() {
    for n in [1i64, 2, 5, 10, 13] {
        let w = Window::new(n).unwrap();
        let step = (w.len() / 32).max(1);
        for c in CATEGORIES {
            for i in (0..w.len()).step_by(step) {
                for j in (0..w.len()).step_by(step) {
                    if !w.equivalent(i, j, c, Orientation::Reversing) {
                        continue;
                    }
                    for k in (0..w.len()).step_by(step) {
                        if w.equivalent(j, k, c, Orientation::Reversing) {
                            assert!(
                                w.equivalent(i, k, c, Orientation::Preserving),
                                "n={n} {c}: reversals {i}~{j}~{k} must preserve"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn window_engine_matches_the_slow_deciders() {
    for n in [5i64, 6, 7, 9, 10, 13] {
        let w = Window::new(n).unwrap();
        let step = (w.len() / 28).max(1);
        for i in (0..w.len()).step_by(step) {
            for j in (0..w.len()).step_by(step) {
                for c in CATEGORIES {
                    for o in ORIENTATIONS {
                        assert_eq!(
                            w.equivalent(i, j, c, o),
                            equivalent(w.bundle(i), w.bundle(j), c, o).equivalent,
                            "n={n} i={i} j={j} {c} {o}"
                        );
                    }
                }
                for o in ORIENTATIONS {
                    assert_eq!(
                        w.homeomorphic_congruence(i, j, o),
                        homeomorphic_congruence(w.bundle(i), w.bundle(j), o)
                            .unwrap()
                            .equivalent,
                        "homeo congruence n={n} i={i} j={j} {o}"
                    );
                    assert_eq!(
                        w.diffeomorphic_congruence(i, j, o),
                        diffeomorphic_congruence(w.bundle(i), w.bundle(j), o)
                            .unwrap()
                            .equivalent,
                        "diffeo congruence n={n} i={i} j={j} {o}"
                    );
                }
            }
        }
    }
}

#[test]
fn no_reversing_equivalence_without_the_gate() {
    for n in [3i64, 4, 6, 7, 8, 9, 11, 12, 14, 15, 16] {
        let w = Window::new(n).unwrap();
        for c in CATEGORIES {
            for i in 0..w.len() {
                for j in 0..w.len() {
                    assert!(
                        !w.equivalent(i, j, c, Orientation::Reversing),
                        "n={n} {c}: unexpected reversing equivalence {i} ~ {j}"
                    );
                }
            }
        }
    }
}

#[test]
fn implication_chain_diffeo_homeo_homotopy() {
    for n in 1..=30i64 {
        let w = Window::new(n).unwrap();
        let step = (w.len() / 36).max(1);
        for o in ORIENTATIONS {
            for i in (0..w.len()).step_by(step) {
                for j in (0..w.len()).step_by(step) {
                    if w.equivalent(i, j, Category::Diffeomorphism, o) {
                        assert!(
                            w.equivalent(i, j, Category::Homeomorphism, o),
                            "n={n} {o}: diffeomorphic pair {i},{j} must be homeomorphic"
                        );
                    }
                    if w.equivalent(i, j, Category::Homeomorphism, o) {
                        assert!(
                            w.equivalent(i, j, Category::Homotopy, o),
                            "n={n} {o}: homeomorphic pair {i},{j} must be homotopy equivalent"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn homotopy_self_reversal_depends_on_parity_structure() {
    // Odd admissible Euler numbers admit a reversing self equivalence;
    // twice-odd admissible ones never reverse a bundle onto itself.
    for n in [5i64, 13, 25] {
        assert!(homotopy_equivalent(b(3, n), b(3, n), Orientation::Reversing).equivalent);
    }
    for n in [2i64, 10, 26] {
        assert!(!homotopy_equivalent(b(3, n), b(3, n), Orientation::Reversing).equivalent);
        // But a parity-crossing partner always exists.
        assert!(homotopy_equivalent(b(3, n), b(4, n), Orientation::Reversing).equivalent);
    }
}

#[test]
fn euler_zero_rules() {
    for c in [Category::Homeomorphism, Category::Diffeomorphism] {
        for o in ORIENTATIONS {
            assert!(equivalent(b(9, 0), b(9, 0), c, o).equivalent);
            assert!(equivalent(b(9, 0), b(-9, 0), c, o).equivalent);
            assert!(!equivalent(b(9, 0), b(10, 0), c, o).equivalent);
            assert!(!equivalent(b(9, 0), b(-10, 0), c, o).equivalent);
        }
    }
    for o in ORIENTATIONS {
        assert!(equivalent(b(9, 0), b(-9, 0), Category::Homotopy, o).equivalent);
        assert!(equivalent(b(9, 0), b(15, 0), Category::Homotopy, o).equivalent);
        assert!(equivalent(b(9, 0), b(21, 0), Category::Homotopy, o).equivalent);
        assert!(!equivalent(b(9, 0), b(10, 0), Category::Homotopy, o).equivalent);
    }
    assert_eq!(
        homeomorphic_congruence(b(1, 0), b(1, 0), Orientation::Preserving),
        Err(Error::EulerZeroCongruence)
    );
    assert_eq!(
        diffeomorphic_congruence(b(1, 0), b(-1, 0), Orientation::Either),
        Err(Error::EulerZeroCongruence)
    );
}

#[test]
fn mismatched_euler_numbers_are_never_equivalent() {
    for c in CATEGORIES {
        for o in ORIENTATIONS {
            let v = equivalent(b(0, 3), b(0, 4), c, o);
            assert!(!v.equivalent);
            assert_eq!(v.rule, "euler-mismatch");
        }
    }
}

proptest! {
    #[test]
    fn witness_alphas_satisfy_their_congruences(
        m1 in -500i64..500,
        m2 in -500i64..500,
        n in 1i64..120,
    ) {
        for c in CATEGORIES {
            for o in [Orientation::Preserving, Orientation::Reversing, Orientation::Either] {
                let v = equivalent(b(m1, n), b(m2, n), c, o);
                if let Some(alpha) = v.witness_alpha {
                    let (modulus, x, y) = match c {
                        Category::Homotopy => {
                            let g = gcd(n, 12) as i64;
                            (g, m1.rem_euclid(g), m2.rem_euclid(g))
                        }
                        _ => {
                            let left = v.left.record().unwrap().half_p1;
                            let right = v.right.record().unwrap().half_p1;
                            (n, left, right)
                        }
                    };
                    prop_assert_eq!(mulm(alpha, x, modulus), y.rem_euclid(modulus));
                    let square = mulm(alpha, alpha, modulus);
                    let reversing_used = v.rule.contains("reversing") && !v.rule.contains("self-equivalence");
                    let expected = if reversing_used { (-1i64).rem_euclid(modulus) } else { 1i64.rem_euclid(modulus) };
                    prop_assert_eq!(square, expected, "rule {}", v.rule);
                }
            }
        }
    }

    #[test]
    fn symmetric_partner_is_equivalent_in_every_category(
        m in -1_000_000i64..1_000_000,
        n in 0i64..5000,
    ) {
        let x = b(m, n);
        let y = symmetric_partner(x);
        for c in CATEGORIES {
            prop_assert!(equivalent(x, y, c, Orientation::Preserving).equivalent, "{}", c);
        }
    }

    #[test]
    fn twelve_shift_preserves_homotopy_type(m in -10_000i64..10_000, n in 1i64..2000) {
        prop_assert!(homotopy_equivalent(b(m, n), b(m + 12, n), Orientation::Preserving).equivalent);
        prop_assert!(homotopy_equivalent(b(m, n), b(m - 12, n), Orientation::Preserving).equivalent);
    }
}
