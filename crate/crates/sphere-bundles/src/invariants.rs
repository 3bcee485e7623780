//! The bundle label type, exact arithmetic in ℚ/ℤ, and the three
//! classification invariants ½p₁, s₁ and μ.
//!
//! For the total space `M_{m,n}` with `n ≥ 1` (so that H⁴ is the torsion
//! group ℤ/n):
//!
//! * `half_p1(m, n) = 2m mod n`,
//! * `mu(m, n) = ((n + 2m)² − n) / (224·n) mod 1`,
//! * `s1(m, n) = ((n + 2m)² − n) / (8·n) mod 1`, which equals `28·mu`.
//!
//! Everything is arbitrary-precision and exact; equality in ℚ/ℤ is the entire
//! content of the classification theorems, so no floating point appears
//! anywhere.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// Label `(m, n)` of an S³-bundle over S⁴; `n` is the Euler number.
///
/// Construction rejects `n < 0`: every bundle with negative Euler number is
/// orientation-preserving diffeomorphic to one with the sign flipped
/// (`M_{m,n} ≅ M_{m+n,−n}`), so the library works with `n ≥ 0` throughout.
/// `n = 0` labels are constructible but their torsion invariants are not
/// defined; the classifier handles them by dedicated rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bundle {
    m: i64,
    n: i64,
}

impl Bundle {
    pub fn new(m: i64, n: i64) -> Result<Self, Error> {
        if n < 0 {
            return Err(Error::NegativeEuler(n));
        }
        Ok(Bundle { m, n })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// The Euler number.
    pub fn n(&self) -> i64 {
        self.n
    }
}

impl std::fmt::Display for Bundle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "M_{{{},{}}}", self.m, self.n)
    }
}

/// An element of ℚ/ℤ as a fully reduced fraction with
/// `0 ≤ numerator < denominator`; the zero class is `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalResidue {
    num: BigUint,
    den: BigUint,
}

impl RationalResidue {
    /// The class of `p/q` in ℚ/ℤ. Accepts any integers with `q ≠ 0`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, Error> {
        let mut p: BigInt = p.into();
        let mut q: BigInt = q.into();
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        let p = p.mod_floor(&q);
        let (p, q) = (p.to_biguint().unwrap(), q.to_biguint().unwrap());
        let g = p.gcd(&q);
        Ok(RationalResidue { num: &p / &g, den: &q / &g })
    }

    pub fn zero() -> Self {
        RationalResidue { num: BigUint::zero(), den: BigUint::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn denominator(&self) -> &BigUint {
        &self.den
    }

    /// The class of `k · self`.
    pub fn scaled(&self, k: u64) -> Self {
        RationalResidue::new(
            BigInt::from(&self.num * k),
            BigInt::from(self.den.clone()),
        )
        .expect("denominator is nonzero")
    }

    /// `(numerator, denominator)` as machine words when both fit.
    pub fn as_u64_pair(&self) -> Option<(u64, u64)> {
        Some((self.num.to_u64()?, self.den.to_u64()?))
    }
}

impl std::ops::Add for &RationalResidue {
    type Output = RationalResidue;

    fn add(self, rhs: &RationalResidue) -> RationalResidue {
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        RationalResidue::new(BigInt::from(num), BigInt::from(den))
            .expect("denominator is nonzero")
    }
}

impl std::ops::Neg for &RationalResidue {
    type Output = RationalResidue;

    fn neg(self) -> RationalResidue {
        if self.is_zero() {
            return RationalResidue::zero();
        }
        RationalResidue { num: &self.den - &self.num, den: self.den.clone() }
    }
}

impl PartialOrd for RationalResidue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalResidue {
    /// Numeric order of the representatives in `[0, 1)`.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl std::fmt::Display for RationalResidue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The invariant triple of a bundle with `n ≥ 1`, produced by
/// [`invariant_record`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantRecord {
    pub bundle: Bundle,
    /// ½p₁ as a residue in `[0, n)`.
    pub half_p1: i64,
    pub s1: RationalResidue,
    pub mu: RationalResidue,
}

/// ½p₁ of `M_{m,n}`: the residue of `2m` in `[0, n)`. Undefined for `n = 0`.
pub fn half_p1(b: Bundle) -> Result<i64, Error> {
    if b.n() == 0 {
        return Err(Error::EulerZeroInvariants);
    }
    Ok((2 * b.m() as i128).rem_euclid(b.n() as i128) as i64)
}

/// `(n + 2m)² − n` as a big integer; shared numerator of μ and s₁.
fn invariant_numerator(b: Bundle) -> BigInt {
    let t = BigInt::from(b.n() as i128 + 2 * b.m() as i128);
    &t * &t - BigInt::from(b.n())
}

/// The Eells–Kuiper μ-invariant of `M_{m,n}` in ℚ/ℤ:
/// `((n + 2m)² − n) / (224·n) mod 1`. Undefined for `n = 0`.
pub fn mu(b: Bundle) -> Result<RationalResidue, Error> {
    if b.n() == 0 {
        return Err(Error::EulerZeroInvariants);
    }
    RationalResidue::new(invariant_numerator(b), BigInt::from(224) * BigInt::from(b.n()))
}

/// The topological Eells–Kuiper invariant `s₁ = 28·μ` of `M_{m,n}`, computed
/// from its own closed form `((n + 2m)² − n) / (8·n) mod 1`. Undefined for
/// `n = 0`.
pub fn s1(b: Bundle) -> Result<RationalResidue, Error> {
    if b.n() == 0 {
        return Err(Error::EulerZeroInvariants);
    }
    RationalResidue::new(invariant_numerator(b), BigInt::from(8) * BigInt::from(b.n()))
}

/// Bundle ½p₁, s₁ and μ into one record. s₁ and μ come from independent
/// closed forms; construction fails with an internal-consistency error if
/// `s1 ≠ 28·mu`, which would mean one of the formulas was transcribed wrong.
pub fn invariant_record(b: Bundle) -> Result<InvariantRecord, Error> {
    let half_p1 = half_p1(b)?;
    let s1 = s1(b)?;
    let mu = mu(b)?;
    if s1 != mu.scaled(28) {
        return Err(Error::InvariantCrossCheck { m: b.m(), n: b.n() });
    }
    Ok(InvariantRecord { bundle: b, half_p1, s1, mu })
}
