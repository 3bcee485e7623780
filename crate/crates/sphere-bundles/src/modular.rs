//! Integer substrate: gcd, trial-division factorization, and the solution
//! sets of the congruences α² ≡ +1 and α² ≡ −1 (mod n).
//!
//! The root sets are assembled prime power by prime power and recombined with
//! the Chinese remainder theorem, so building them costs O(√n) rather than a
//! scan of all residues; the O(n) scan survives in the test suite as the
//! oracle the solver is checked against.

use crate::Error;

/// Nonnegative greatest common divisor, insensitive to signs; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> u64 {
    let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}

/// Prime factorization `n = ∏ pᵢ^eᵢ` with the primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: i64,
    /// `(prime, exponent)` pairs, primes ascending, exponents >= 1.
    pub factors: Vec<(i64, u32)>,
}

impl Factorization {
    /// Exponent of 2 in `n` (0 when `n` is odd).
    pub fn exponent_of_two(&self) -> u32 {
        self.factors.first().filter(|&&(p, _)| p == 2).map_or(0, |&(_, e)| e)
    }

    /// The odd `(prime, exponent)` pairs.
    pub fn odd_primes(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.factors.iter().copied().filter(|&(p, _)| p != 2)
    }

    /// Number of distinct odd prime divisors of `n`.
    pub fn distinct_odd_primes(&self) -> u32 {
        self.odd_primes().count() as u32
    }
}

/// Factorize a positive integer by trial division. `factorize(1)` has an
/// empty factor list.
pub fn factorize(n: i64) -> Result<Factorization, Error> {
    if n <= 0 {
        return Err(Error::NonPositive(n));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut p: i64 = 2;
    while p <= rest / p {
        if rest % p == 0 {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

/// Which congruence a residue set solves: α² ≡ +1 or α² ≡ −1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// The full solution set of α² ≡ sign (mod modulus), sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSet {
    pub modulus: i64,
    pub sign: Sign,
    pub elements: Vec<i64>,
}

impl ResidueSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// Solution count data for α² ≡ +1 (mod n): the count is exactly `2^(r+u)`,
/// where `r` is the number of distinct odd prime divisors and `u` encodes the
/// power of two (`u = 0` when 4 ∤ n, `u = 1` when 4 | n but 8 ∤ n, `u = 2`
/// when 8 | n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootCount {
    pub modulus: i64,
    pub r: u32,
    pub u: u32,
    pub count: u64,
}

/// Count the solutions of α² ≡ +1 (mod n) without enumerating them.
pub fn root_count(n: i64) -> Result<RootCount, Error> {
    let f = factorize(n)?;
    let r = f.distinct_odd_primes();
    let u = match f.exponent_of_two() {
        0 | 1 => 0,
        2 => 1,
        _ => 2,
    };
    Ok(RootCount { modulus: n, r, u, count: 1u64 << (r + u) })
}

/// Does α² ≡ −1 (mod n) have a solution? True exactly when `n` or `n/2` is a
/// product of primes ≡ 1 (mod 4); the empty product qualifies, so n = 1 and
/// n = 2 both pass.
pub fn minus_one_solvable(n: i64) -> Result<bool, Error> {
    let f = factorize(n)?;
    Ok(f.exponent_of_two() <= 1 && f.odd_primes().all(|(p, _)| p % 4 == 1))
}

/// All residues α in `[0, n)` with α² ≡ sign (mod n), sorted. For n = 1 the
/// unique residue 0 solves both congruences.
pub fn unit_square_roots(n: i64, sign: Sign) -> Result<ResidueSet, Error> {
    let f = factorize(n)?;
    if n == 1 {
        return Ok(ResidueSet { modulus: 1, sign, elements: vec![0] });
    }
    let mut elements: Vec<i64> = vec![0];
    let mut modulus: i64 = 1;
    for &(p, e) in &f.factors {
        let q = p.pow(e);
        let roots = prime_power_roots(p, e, sign);
        if roots.is_empty() {
            return Ok(ResidueSet { modulus: n, sign, elements: Vec::new() });
        }
        let mut combined = Vec::with_capacity(elements.len() * roots.len());
        for &s in &elements {
            for &r in &roots {
                combined.push(crt_pair(s, modulus, r, q));
            }
        }
        modulus *= q;
        elements = combined;
    }
    elements.sort_unstable();
    Ok(ResidueSet { modulus: n, sign, elements })
}

/// Roots of x² ≡ sign (mod p^e) for a single prime power.
fn prime_power_roots(p: i64, e: u32, sign: Sign) -> Vec<i64> {
    let q = p.pow(e);
    if p == 2 {
        return match (sign, e) {
            (Sign::Plus, 1) => vec![1],
            (Sign::Plus, 2) => vec![1, 3],
            // Mod 2^e with e >= 3 the four roots of +1 are ±1 and 2^(e-1) ± 1.
            (Sign::Plus, _) => {
                let h = q / 2;
                vec![1, h - 1, h + 1, q - 1]
            }
            (Sign::Minus, 1) => vec![1],
            (Sign::Minus, _) => Vec::new(),
        };
    }
    match sign {
        Sign::Plus => vec![1, q - 1],
        Sign::Minus => {
            if p % 4 != 1 {
                return Vec::new();
            }
            let x = lift_root_of_minus_one(p, e);
            let mut v = vec![x, q - x];
            v.sort_unstable();
            v
        }
    }
}

/// A root of x² ≡ −1 (mod p) for p ≡ 1 (mod 4): if a is any quadratic
/// nonresidue then a^((p−1)/4) squares to a^((p−1)/2) ≡ −1.
fn sqrt_minus_one_mod_prime(p: i64) -> i64 {
    let mut a = 2;
    while pow_mod(a, (p - 1) / 2, p) != p - 1 {
        a += 1;
    }
    pow_mod(a, (p - 1) / 4, p)
}

/// Hensel lift of the mod-p root of x² ≡ −1 up to p^e; the derivative 2x is a
/// unit mod p, so the lift exists and is unique at each step.
fn lift_root_of_minus_one(p: i64, e: u32) -> i64 {
    let mut x = sqrt_minus_one_mod_prime(p);
    let mut modulus = p;
    for _ in 1..e {
        modulus *= p;
        let fx = ((x as i128 * x as i128 + 1).rem_euclid(modulus as i128)) as i64;
        let step = mul_mod(fx, inv_mod(mul_mod(2, x, modulus), modulus), modulus);
        x = (x - step).rem_euclid(modulus);
    }
    x
}

/// `b^e mod m` with u128 intermediates.
fn pow_mod(b: i64, e: i64, m: i64) -> i64 {
    debug_assert!(m > 0 && e >= 0);
    let m = m as u128;
    let mut base = (b.rem_euclid(m as i64)) as u128;
    let mut exp = e as u64;
    let mut acc: u128 = 1 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as i64
}

/// `a * b mod m` for a nonneg pair, overflow-safe.
pub(crate) fn mul_mod(a: i64, b: i64, m: i64) -> i64 {
    (a as i128 * b as i128).rem_euclid(m as i128) as i64
}

/// Modular inverse for gcd(a, m) = 1, via the extended Euclidean algorithm.
fn inv_mod(a: i64, m: i64) -> i64 {
    let (mut r0, mut r1) = (m as i128, a.rem_euclid(m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse of a non-unit");
    t0.rem_euclid(m as i128) as i64
}

/// The unique x in [0, m1·m2) with x ≡ r1 (mod m1) and x ≡ r2 (mod m2), for
/// coprime moduli.
fn crt_pair(r1: i64, m1: i64, r2: i64, m2: i64) -> i64 {
    let d = (r2 - r1).rem_euclid(m2);
    let k = mul_mod(d, inv_mod(m1.rem_euclid(m2), m2), m2);
    r1 + m1 * k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_roots(n: i64, sign: Sign) -> Vec<i64> {
        let target = match sign {
            Sign::Plus => 1 % n,
            Sign::Minus => (n - 1) % n,
        };
        (0..n).filter(|&a| mul_mod(a, a, n) == target).collect()
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(12, 30), 6);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(-12, 18), 6);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(i64::MIN, i64::MIN), 1u64 << 63);
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(12).unwrap().factors, vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(1).unwrap().factors, vec![]);
        assert_eq!(factorize(56).unwrap().factors, vec![(2, 3), (7, 1)]);
        assert_eq!(factorize(97).unwrap().factors, vec![(97, 1)]);
        assert_eq!(factorize(0), Err(Error::NonPositive(0)));
        assert_eq!(factorize(-6), Err(Error::NonPositive(-6)));
    }

    #[test]
    fn factorization_helpers() {
        let f = factorize(360).unwrap();
        assert_eq!(f.exponent_of_two(), 3);
        assert_eq!(f.distinct_odd_primes(), 2);
        let f = factorize(45).unwrap();
        assert_eq!(f.exponent_of_two(), 0);
        assert_eq!(f.odd_primes().collect::<Vec<_>>(), vec![(3, 2), (5, 1)]);
    }

    #[test]
    fn roots_examples() {
        assert_eq!(unit_square_roots(12, Sign::Plus).unwrap().elements, vec![1, 5, 7, 11]);
        assert_eq!(unit_square_roots(5, Sign::Minus).unwrap().elements, vec![2, 3]);
        assert_eq!(unit_square_roots(4, Sign::Minus).unwrap().elements, Vec::<i64>::new());
        assert_eq!(unit_square_roots(8, Sign::Plus).unwrap().elements, vec![1, 3, 5, 7]);
        assert_eq!(unit_square_roots(1, Sign::Plus).unwrap().elements, vec![0]);
        assert_eq!(unit_square_roots(1, Sign::Minus).unwrap().elements, vec![0]);
        assert_eq!(unit_square_roots(2, Sign::Minus).unwrap().elements, vec![1]);
    }

    #[test]
    fn root_count_examples() {
        let c = root_count(12).unwrap();
        assert_eq!((c.r, c.u, c.count), (1, 1, 4));
        let c = root_count(7).unwrap();
        assert_eq!((c.r, c.u, c.count), (1, 0, 2));
        let c = root_count(1).unwrap();
        assert_eq!((c.r, c.u, c.count), (0, 0, 1));
        let c = root_count(16).unwrap();
        assert_eq!((c.r, c.u, c.count), (0, 2, 4));
    }

    #[test]
    fn minus_one_solvable_examples() {
        for n in [1, 2, 5, 10, 13, 25, 26, 50, 65] {
            assert!(minus_one_solvable(n).unwrap(), "n = {n}");
        }
        for n in [3, 4, 6, 7, 8, 9, 12, 15, 16, 20] {
            assert!(!minus_one_solvable(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn solver_matches_brute_force_small() {
        for n in 1..=512 {
            for sign in [Sign::Plus, Sign::Minus] {
                let got = unit_square_roots(n, sign).unwrap();
                assert_eq!(got.elements, brute_roots(n, sign), "n = {n}, sign = {sign}");
            }
        }
    }

    #[test]
    fn root_sets_closed_under_negation() {
        for n in 2..=512 {
            for sign in [Sign::Plus, Sign::Minus] {
                let set = unit_square_roots(n, sign).unwrap();
                for &a in &set.elements {
                    assert!(set.contains((n - a) % n), "n = {n}, a = {a}");
                }
            }
        }
    }

    #[test]
    fn contains_uses_the_sorted_order() {
        let set = unit_square_roots(60, Sign::Plus).unwrap();
        for a in 0..60 {
            assert_eq!(set.contains(a), brute_roots(60, Sign::Plus).contains(&a));
        }
    }

    #[test]
    fn large_modulus_spot_checks() {
        // 1000003 is prime and ≡ 3 (mod 4); 1000037 is prime and ≡ 1 (mod 4).
        let s = unit_square_roots(1000003, Sign::Minus).unwrap();
        assert!(s.is_empty());
        let s = unit_square_roots(1000037, Sign::Minus).unwrap();
        assert_eq!(s.len(), 2);
        for &a in &s.elements {
            assert_eq!(mul_mod(a, a, 1000037), 1000036);
        }
        let s = unit_square_roots(1 << 40, Sign::Plus).unwrap();
        assert_eq!(s.len(), 4);
        for &a in &s.elements {
            assert_eq!(mul_mod(a, a, 1 << 40), 1);
        }
    }
}
