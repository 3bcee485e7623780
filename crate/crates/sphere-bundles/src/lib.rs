//! Exact classification of the total spaces of S³-bundles over S⁴.
//!
//! Such a bundle is labelled by a pair of integers `(m, n)`; its total space
//! `M_{m,n}` is a closed 2-connected 7-manifold and `n` is the Euler number
//! of the bundle. Two total spaces are compared up to homotopy equivalence,
//! (PL-)homeomorphism and diffeomorphism, in both the orientation preserving
//! and the orientation reversing sense. The decisions are made from three
//! invariants, all computed in exact arithmetic:
//!
//! * `half_p1` — the spin characteristic class ½p₁, a residue mod `n`,
//! * `s1` — the topological Eells–Kuiper invariant in ℚ/ℤ,
//! * `mu` — the Eells–Kuiper μ-invariant in ℚ/ℤ, with `s1 = 28·mu`.
//!
//! The heavy lifting reduces to number theory: the solution sets of
//! `α² ≡ ±1 (mod n)` ([`modular`]), exact rational residues ([`invariants`]),
//! pairwise decision procedures with witnesses ([`classifier`]), and orbit
//! enumeration producing class-count tables ([`enumeration`]).

use thiserror::Error;

pub mod classifier;
pub mod enumeration;
pub mod invariants;
pub mod modular;

pub use classifier::{equivalent, Category, Orientation, SideInvariants, Verdict};
pub use enumeration::{
    classification_table, partition, verify_classification_tables, ClassPartition, CountMode,
    CountsReport, SphereCensus, Window,
};
pub use invariants::{invariant_record, Bundle, InvariantRecord, RationalResidue};
pub use modular::{unit_square_roots, Factorization, ResidueSet, RootCount, Sign};

/// Errors shared by all modules. Every rejected input gets its own variant so
/// callers (notably the CLI) can report distinct messages.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Factorization and root solving are defined for positive moduli only.
    #[error("modulus must be a positive integer, got {0}")]
    NonPositive(i64),
    /// Bundles are labelled with n >= 0; the flipped label is diffeomorphic.
    #[error(
        "Euler number must be nonnegative, got n = {0}; \
         M_{{m,n}} is diffeomorphic to M_{{m+n,-n}}, so renormalize the label first"
    )]
    NegativeEuler(i64),
    /// half_p1, s1 and mu live in torsion groups; for n = 0 the fourth
    /// cohomology of the total space is infinite cyclic.
    #[error("the invariants half_p1, s1 and mu are undefined for Euler number 0")]
    EulerZeroInvariants,
    /// The congruence-form deciders assume n >= 1; n = 0 has its own rules.
    #[error("congruence-form classification is undefined for Euler number 0")]
    EulerZeroCongruence,
    /// There are infinitely many equivalence classes with Euler number 0.
    #[error("class enumeration is undefined for Euler number 0 (infinitely many classes)")]
    EulerZeroEnumeration,
    /// Enumeration materializes one full period of labels; a cap keeps the
    /// memory footprint and running time bounded.
    #[error("enumerating Euler number {n} needs a window of {period} labels, more than the supported {max}")]
    EnumerationTooLarge { n: i64, period: u64, max: u64 },
    /// A rational residue p/q needs q != 0.
    #[error("rational residue denominator must be nonzero")]
    ZeroDenominator,
    /// s1 and mu are computed from independent formulas and cross-checked at
    /// record construction; a mismatch means a transcription bug, not bad input.
    #[error("internal consistency failure for (m, n) = ({m}, {n}): s1 != 28 * mu")]
    InvariantCrossCheck { m: i64, n: i64 },
}
