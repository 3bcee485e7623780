//! Class enumeration over a fundamental window of bundle labels.
//!
//! Every invariant of `M_{m,n}` is periodic in `m` with period dividing
//! `56n` — `½p₁` and `s₁` repeat with period `n`, μ with period `56n` — so
//! the labels `m ∈ [0, 56n)` exhaust all equivalence classes for a fixed
//! Euler number `n ≥ 1`. This module partitions that window under each
//! equivalence relation, counts classes, renders residue descriptors such
//! as `m ≡ 0, ±4 (mod 12)`, and checks the computed tables against
//! independently transcribed expected counts.
//!
//! [`Window`] is a flat-array engine over the window: it interns the s₁ and
//! μ values, caches `½p₁`, `m(n + m) mod 56n` and the relevant unit square
//! root sets, and answers pairwise queries in a handful of word operations.
//! It is built from the same public invariant functions the slow deciders
//! use, and the test suite cross-validates it against [`crate::classifier`]
//! verdict by verdict.

use std::collections::{BTreeSet, HashMap};

use crate::classifier::{Category, Orientation};
use crate::invariants::{invariant_record, mu, Bundle, RationalResidue};
use crate::modular::{self, Sign};
use crate::Error;

/// Largest window (in labels) the enumeration will materialize.  One full
/// period is `56n` labels, so this admits Euler numbers up to 50 000; the
/// per-label invariant records dominate both construction time and memory,
/// and this bound keeps a worst-case partition under a minute.
pub const WINDOW_CAPACITY: u64 = 2_800_000;

/// Whether classes are taken up to orientation preserving equivalence only,
/// or up to equivalence of either orientation behaviour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMode {
    Preserving,
    Either,
}

impl CountMode {
    pub fn orientation(self) -> Orientation {
        match self {
            CountMode::Preserving => Orientation::Preserving,
            CountMode::Either => Orientation::Either,
        }
    }
}

impl std::fmt::Display for CountMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CountMode::Preserving => "preserving",
            CountMode::Either => "either",
        })
    }
}

/// Precomputed invariant data for the labels `m = 0, 1, …, 56n·k − 1`.
///
/// Index `i` stands for the bundle `M_{i,n}`. All pairwise queries agree
/// exactly with the corresponding [`crate::classifier`] functions; they are
/// plain array lookups plus a scan over at most a few unit square roots.
#[derive(Debug)]
pub struct Window {
    n: i64,
    period: usize,
    nu: u64,
    p56: u64,
    g: u64,
    a2: u32,
    minus_gate: bool,
    halfp: Vec<u64>,
    s1_id: Vec<u32>,
    mu_id: Vec<u32>,
    neg_s1: Vec<Option<u32>>,
    neg_mu: Vec<Option<u32>>,
    q56: Vec<u64>,
    roots_plus: Vec<u64>,
    roots_minus: Vec<u64>,
    roots_plus_g: Vec<u64>,
}

/// Interns rational residues, returning dense ids and the negation map.
fn intern(values: &[RationalResidue]) -> (Vec<u32>, Vec<Option<u32>>) {
    let mut ids: HashMap<&RationalResidue, u32> = HashMap::new();
    let mut order: Vec<&RationalResidue> = Vec::new();
    let mut id_of = Vec::with_capacity(values.len());
    for v in values {
        let next = order.len() as u32;
        let id = *ids.entry(v).or_insert_with(|| {
            order.push(v);
            next
        });
        id_of.push(id);
    }
    let neg = order
        .iter()
        .map(|&v| {
            let negated = -v;
            ids.get(&negated).copied()
        })
        .collect();
    (id_of, neg)
}

impl Window {
    /// The window `[0, 56n)`.
    pub fn new(n: i64) -> Result<Self, Error> {
        Self::with_period(n, 1)
    }

    /// The window `[0, 56n·multiple)`. Enlarging the window must not change
    /// any class count, which the test suite uses as a periodicity check.
    pub fn with_period(n: i64, multiple: i64) -> Result<Self, Error> {
        if n < 0 {
            return Err(Error::NegativeEuler(n));
        }
        if n == 0 {
            return Err(Error::EulerZeroEnumeration);
        }
        assert!(multiple >= 1, "window multiple must be at least 1");
        let period = 56 * n as u64 * multiple as u64;
        if period > WINDOW_CAPACITY {
            return Err(Error::EnumerationTooLarge {
                n,
                period,
                max: WINDOW_CAPACITY,
            });
        }
        let period = period as usize;

        let nu = n as u64;
        let mut halfp = Vec::with_capacity(period);
        let mut s1 = Vec::with_capacity(period);
        let mut mu = Vec::with_capacity(period);
        let mut q56 = Vec::with_capacity(period);
        let p56 = 56 * nu;
        for i in 0..period {
            let m = i as i64;
            let r = invariant_record(Bundle::new(m, n)?)?;
            halfp.push(r.half_p1 as u64);
            s1.push(r.s1);
            mu.push(r.mu);
            q56.push((m as u128 * (n as u128 + m as u128) % p56 as u128) as u64);
        }
        let (s1_id, neg_s1) = intern(&s1);
        let (mu_id, neg_mu) = intern(&mu);

        let g = modular::gcd(n, 12) as i64;
        let as_u64 = |s: &[i64]| s.iter().map(|&x| x as u64).collect::<Vec<u64>>();
        let roots_plus = as_u64(&modular::unit_square_roots(n, Sign::Plus)?.elements);
        let roots_minus = as_u64(&modular::unit_square_roots(n, Sign::Minus)?.elements);
        let roots_plus_g = as_u64(&modular::unit_square_roots(g, Sign::Plus)?.elements);
        Ok(Window {
            n,
            period,
            nu,
            p56,
            g: g as u64,
            a2: modular::factorize(n)?.exponent_of_two(),
            minus_gate: modular::minus_one_solvable(n)?,
            halfp,
            s1_id,
            mu_id,
            neg_s1,
            neg_mu,
            q56,
            roots_plus,
            roots_minus,
            roots_plus_g,
        })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Number of labels in the window.
    pub fn len(&self) -> usize {
        self.period
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The bundle at window position `i`.
    pub fn bundle(&self, i: usize) -> Bundle {
        Bundle::new(i as i64, self.n).expect("window labels are valid")
    }

    fn carries(roots: &[u64], modulus: u64, h1: u64, h2: u64) -> bool {
        roots.iter().any(|&a| a * h1 % modulus == h2)
    }

    /// Same answer as [`crate::classifier::equivalent`] on the bundles at
    /// positions `i` and `j`.
    pub fn equivalent(&self, i: usize, j: usize, category: Category, orientation: Orientation) -> bool {
        match orientation {
            Orientation::Preserving => self.preserving(i, j, category),
            Orientation::Reversing => self.reversing(i, j, category),
            Orientation::Either => self.preserving(i, j, category) || self.reversing(i, j, category),
        }
    }

    fn preserving(&self, i: usize, j: usize, category: Category) -> bool {
        match category {
            Category::Homotopy => {
                Self::carries(&self.roots_plus_g, self.g, i as u64 % self.g, j as u64 % self.g)
            }
            Category::Homeomorphism => {
                self.s1_id[i] == self.s1_id[j]
                    && Self::carries(&self.roots_plus, self.nu, self.halfp[i], self.halfp[j])
            }
            Category::Diffeomorphism => {
                self.mu_id[i] == self.mu_id[j]
                    && Self::carries(&self.roots_plus, self.nu, self.halfp[i], self.halfp[j])
            }
        }
    }

    fn reversing(&self, i: usize, j: usize, category: Category) -> bool {
        match category {
            Category::Homotopy => {
                if !self.minus_gate {
                    false
                } else if self.n % 2 == 1 {
                    Self::carries(&self.roots_plus_g, self.g, i as u64 % self.g, j as u64 % self.g)
                } else {
                    (i + j) % 2 == 1
                }
            }
            Category::Homeomorphism => {
                self.neg_s1[self.s1_id[i] as usize] == Some(self.s1_id[j])
                    && Self::carries(&self.roots_minus, self.nu, self.halfp[i], self.halfp[j])
            }
            Category::Diffeomorphism => {
                self.neg_mu[self.mu_id[i] as usize] == Some(self.mu_id[j])
                    && Self::carries(&self.roots_minus, self.nu, self.halfp[i], self.halfp[j])
            }
        }
    }

    /// Same answer as [`crate::classifier::homeomorphic_congruence`] on the
    /// bundles at positions `i` and `j`.
    pub fn homeomorphic_congruence(&self, i: usize, j: usize, orientation: Orientation) -> bool {
        match orientation {
            Orientation::Preserving => self.homeo_congruence_preserving(i, j),
            Orientation::Reversing => self.homeo_congruence_reversing(i, j),
            Orientation::Either => {
                self.homeo_congruence_preserving(i, j) || self.homeo_congruence_reversing(i, j)
            }
        }
    }

    fn homeo_congruence_preserving(&self, i: usize, j: usize) -> bool {
        let n = self.nu;
        let (m1, m2) = (i as u64, j as u64);
        let a = self.a2;
        let m1_odd = m1 & 1 != 0;
        let half_modulus = (a == 2 && m1_odd) || (a > 2 && !m1_odd);
        if a == 0 {
            Self::carries(&self.roots_plus, n, m1 % n, m2 % n)
        } else if half_modulus {
            let h = n / 2;
            self.roots_plus.iter().any(|&al| al % h * (m1 % h) % h == m2 % h)
        } else {
            let tp = 1u64 << a;
            self.roots_plus
                .iter()
                .filter(|&&al| al % tp == 1 % tp || al % tp == tp - 1)
                .any(|&al| al * (m1 % n) % n == m2 % n)
        }
    }

    fn homeo_congruence_reversing(&self, i: usize, j: usize) -> bool {
        if !self.minus_gate {
            return false;
        }
        let n = self.nu;
        let base = if self.n % 2 == 1 {
            i as u64 % n
        } else {
            (i as u64 + n / 2) % n
        };
        Self::carries(&self.roots_minus, n, base, j as u64 % n)
    }

    /// Same answer as [`crate::classifier::diffeomorphic_congruence`] on the
    /// bundles at positions `i` and `j`.
    pub fn diffeomorphic_congruence(&self, i: usize, j: usize, orientation: Orientation) -> bool {
        match orientation {
            Orientation::Preserving => self.diffeo_congruence(i, j, Sign::Plus),
            Orientation::Reversing => self.diffeo_congruence(i, j, Sign::Minus),
            Orientation::Either => {
                self.diffeo_congruence(i, j, Sign::Plus) || self.diffeo_congruence(i, j, Sign::Minus)
            }
        }
    }

    fn diffeo_congruence(&self, i: usize, j: usize, sign: Sign) -> bool {
        let q_ok = match sign {
            Sign::Plus => self.q56[i] == self.q56[j],
            Sign::Minus => (self.q56[i] + self.q56[j]) % self.p56 == 0,
        };
        if !q_ok {
            return false;
        }
        let roots = match sign {
            Sign::Plus => &self.roots_plus,
            Sign::Minus => &self.roots_minus,
        };
        Self::carries(roots, self.nu, self.halfp[i], self.halfp[j])
    }
}

/// The classes of a window under one equivalence relation.
///
/// `classes` holds the labels of each class in ascending order; the classes
/// themselves are ordered by smallest label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    pub n: i64,
    pub period: i64,
    pub category: Category,
    pub mode: CountMode,
    pub classes: Vec<Vec<i64>>,
}

impl ClassPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing `M_{m,n}` (labels are periodic, so `m`
    /// is first reduced into the window).
    pub fn class_of(&self, m: i64) -> usize {
        let mm = (m as i128).rem_euclid(self.period as i128) as i64;
        self.classes
            .iter()
            .position(|c| c.binary_search(&mm).is_ok())
            .expect("every window label lies in a class")
    }

    pub fn representative(&self, idx: usize) -> i64 {
        self.classes[idx][0]
    }

    /// The distinct values of `m mod n` over the class, ascending. Every
    /// class is closed under `m ↦ −m mod n` because `M_{−m−n,n}` is
    /// orientation preserving diffeomorphic to `M_{m,n}`.
    pub fn residues_mod_n(&self, idx: usize) -> Vec<i64> {
        let set: BTreeSet<i64> = self.classes[idx].iter().map(|&m| m % self.n.max(1)).collect();
        set.into_iter().collect()
    }

    /// Human-readable congruence description of the class, in the style
    /// `m ≡ 0, ±4 (mod 12)`: residues `r` and `n − r` are folded into `±r`,
    /// while `0` and `n/2` stand alone.
    pub fn residue_condition(&self, idx: usize) -> String {
        residue_condition(self.n, &self.residues_mod_n(idx))
    }
}

/// Renders a `±`-folded congruence condition for a set of residues mod `n`
/// that is closed under negation.
pub fn residue_condition(n: i64, residues: &[i64]) -> String {
    let set: BTreeSet<i64> = residues.iter().copied().collect();
    let mut parts = Vec::new();
    for &r in &set {
        if r == 0 || 2 * r == n {
            parts.push(r.to_string());
        } else if r < n - r {
            parts.push(format!("±{r}"));
        } else if !set.contains(&(n - r)) {
            // Not negation-closed; fall back to the bare residue.
            parts.push(r.to_string());
        }
    }
    format!("m ≡ {} (mod {n})", parts.join(", "))
}

/// Partition of the window `[0, 56n)` under the given relation.
pub fn partition(n: i64, category: Category, mode: CountMode) -> Result<ClassPartition, Error> {
    partition_in_window(n, 1, category, mode)
}

/// Partition of the enlarged window `[0, 56n·multiple)`; class counts are
/// independent of `multiple`.
pub fn partition_in_window(
    n: i64,
    multiple: i64,
    category: Category,
    mode: CountMode,
) -> Result<ClassPartition, Error> {
    let w = Window::with_period(n, multiple)?;
    let classes = classes_of(&w, category, mode.orientation());
    Ok(ClassPartition {
        n,
        period: w.len() as i64,
        category,
        mode,
        classes,
    })
}

/// For each residue `h` in `[0, modulus)`, the least element of the set
/// `{α·h mod modulus : α ∈ roots}`.
fn orbit_min_table(modulus: u64, roots: &[u64]) -> Vec<u64> {
    (0..modulus)
        .map(|h| {
            roots
                .iter()
                .map(|&a| a * h % modulus)
                .min()
                .unwrap_or(h)
        })
        .collect()
}

/// Canonical class keys for homotopy equivalence: two labels are in the same
/// class exactly when their keys agree.
///
/// The preserving relation compares labels through `A⁺(g)`, `g = gcd(n, 12)`,
/// which is a group, so the orbit minimum of `m mod g` is a sound canonical
/// form.  With reversing maps admitted as well, an odd Euler number reuses the
/// preserving test, while an even one links every pair of labels of opposite
/// parity, which fuses the whole window into a single class.
fn homotopy_keys(w: &Window, orientation: Orientation) -> Vec<(u32, u64)> {
    let g = w.g as usize;
    let table = orbit_min_table(w.g, &w.roots_plus_g);
    let fused = orientation == Orientation::Either && w.minus_gate && w.n % 2 == 0;
    (0..w.len())
        .map(|i| if fused { (0, 0) } else { (0, table[i % g]) })
        .collect()
}

/// Canonical class keys for the relations of the shape "invariant equal and
/// `½p₁` carried by a root of `±1`": homeomorphism keys on `s₁`,
/// diffeomorphism keys on `μ`.
///
/// The preserving key pairs the interned invariant id with the minimum of the
/// `½p₁` orbit under the group `A⁺(n)`.  In either mode a label additionally
/// offers a reversing-partner key — the negated invariant's id with the
/// minimum over the coset `A⁻(n)·½p₁` — and the smaller of the two keys is
/// canonical.  Since `A⁻·A⁻ ⊆ A⁺` and `A⁻` is closed under negation, two
/// labels share a key value only when the closure of the preserving and
/// reversing relations genuinely links them, even if the partner key belongs
/// to no label of the window.
fn invariant_keys(
    w: &Window,
    orientation: Orientation,
    ids: &[u32],
    neg: &[Option<u32>],
) -> Vec<(u32, u64)> {
    let plus_min = orbit_min_table(w.nu, &w.roots_plus);
    let minus_min = if orientation == Orientation::Either && !w.roots_minus.is_empty() {
        Some(orbit_min_table(w.nu, &w.roots_minus))
    } else {
        None
    };
    (0..w.len())
        .map(|i| {
            let h = w.halfp[i] as usize;
            let own = (ids[i], plus_min[h]);
            match (&minus_min, neg[ids[i] as usize]) {
                (Some(coset), Some(partner_id)) => own.min((partner_id, coset[h])),
                _ => own,
            }
        })
        .collect()
}

fn classes_of(w: &Window, category: Category, orientation: Orientation) -> Vec<Vec<i64>> {
    assert!(
        orientation != Orientation::Reversing,
        "a partition needs a reflexive relation; reversing alone is not one"
    );
    let keys = match category {
        Category::Homotopy => homotopy_keys(w, orientation),
        Category::Homeomorphism => invariant_keys(w, orientation, &w.s1_id, &w.neg_s1),
        Category::Diffeomorphism => invariant_keys(w, orientation, &w.mu_id, &w.neg_mu),
    };
    let mut index_of: HashMap<(u32, u64), usize> = HashMap::new();
    let mut classes: Vec<Vec<i64>> = Vec::new();
    for (i, key) in keys.into_iter().enumerate() {
        let idx = *index_of.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[idx].push(i as i64);
    }
    classes
}

/// Number of homeomorphism classes among `{M_{m,n} : m ∈ ℤ}`.
pub fn hom_count(n: i64, mode: CountMode) -> Result<usize, Error> {
    Ok(partition(n, Category::Homeomorphism, mode)?.class_count())
}

/// Number of homotopy equivalence classes among `{M_{m,n} : m ∈ ℤ}`.
pub fn homotopy_count(n: i64, mode: CountMode) -> Result<usize, Error> {
    Ok(partition(n, Category::Homotopy, mode)?.class_count())
}

/// Number of diffeomorphism classes inside the homeomorphism class of
/// `M_{m,n}` — how many mutually non-diffeomorphic manifolds are
/// homeomorphic to this one (within the bundle family).
pub fn diff_count(m: i64, n: i64, mode: CountMode) -> Result<usize, Error> {
    let homeo = partition(n, Category::Homeomorphism, mode)?;
    let diffeo = partition(n, Category::Diffeomorphism, mode)?;
    let class = &homeo.classes[homeo.class_of(m)];
    let distinct: BTreeSet<usize> = class.iter().map(|&x| diffeo.class_of(x)).collect();
    Ok(distinct.len())
}

/// One line of a classification table: the homeomorphism classes whose
/// residues satisfy `condition` each contain `count` diffeomorphism classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffEntry {
    pub residues: Vec<i64>,
    pub condition: String,
    pub count: usize,
}

/// Class counts for one Euler number: homeomorphism class totals and, for
/// each homeomorphism class, the number of diffeomorphism classes inside
/// it, in both counting modes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountsReport {
    pub n: i64,
    pub hom_plus: usize,
    pub diff_plus: Vec<DiffEntry>,
    pub hom_either: usize,
    pub diff_either: Vec<DiffEntry>,
}

fn diff_entries(homeo: &ClassPartition, diffeo: &ClassPartition) -> Vec<DiffEntry> {
    let mut class_of_label: HashMap<i64, usize> = HashMap::new();
    for (idx, class) in diffeo.classes.iter().enumerate() {
        for &m in class {
            class_of_label.insert(m, idx);
        }
    }
    (0..homeo.class_count())
        .map(|idx| {
            let distinct: BTreeSet<usize> = homeo.classes[idx]
                .iter()
                .map(|m| class_of_label[m])
                .collect();
            DiffEntry {
                residues: homeo.residues_mod_n(idx),
                condition: homeo.residue_condition(idx),
                count: distinct.len(),
            }
        })
        .collect()
}

/// The full class-count table for Euler number `n ≥ 1`.
pub fn classification_table(n: i64) -> Result<CountsReport, Error> {
    let hom_p = partition(n, Category::Homeomorphism, CountMode::Preserving)?;
    let dif_p = partition(n, Category::Diffeomorphism, CountMode::Preserving)?;
    let hom_e = partition(n, Category::Homeomorphism, CountMode::Either)?;
    let dif_e = partition(n, Category::Diffeomorphism, CountMode::Either)?;
    Ok(CountsReport {
        n,
        hom_plus: hom_p.class_count(),
        diff_plus: diff_entries(&hom_p, &dif_p),
        hom_either: hom_e.class_count(),
        diff_either: diff_entries(&hom_e, &dif_e),
    })
}

/// Expected class counts, transcribed independently of the computation.
/// `diff_plus` groups homeomorphism classes sharing a diffeomorphism-class
/// count by representative residues; a group covers every residue `r` it
/// lists together with `n − r`.
struct GoldenTable {
    n: i64,
    hom_plus: usize,
    diff_plus: &'static [(&'static [i64], usize)],
    hom_either: Option<usize>,
    diff_either: Option<&'static [(&'static [i64], usize)]>,
}

static GOLDEN_TABLES: &[GoldenTable] = &[
    GoldenTable {
        n: 1,
        hom_plus: 1,
        diff_plus: &[(&[0], 16)],
        hom_either: Some(1),
        diff_either: Some(&[(&[0], 11)]),
    },
    GoldenTable {
        n: 2,
        hom_plus: 2,
        diff_plus: &[(&[0, 1], 8)],
        hom_either: Some(1),
        diff_either: Some(&[(&[0, 1], 13)]),
    },
    GoldenTable {
        n: 4,
        hom_plus: 3,
        diff_plus: &[(&[0], 4), (&[2], 8), (&[1], 16)],
        hom_either: None,
        diff_either: None,
    },
    GoldenTable {
        n: 5,
        hom_plus: 3,
        diff_plus: &[(&[0, 1, 2], 16)],
        hom_either: Some(2),
        diff_either: Some(&[(&[0], 12), (&[1, 2], 24)]),
    },
    GoldenTable {
        n: 7,
        hom_plus: 4,
        diff_plus: &[(&[0], 4), (&[1, 2, 3], 28)],
        hom_either: None,
        diff_either: None,
    },
    GoldenTable {
        n: 8,
        hom_plus: 4,
        diff_plus: &[(&[0, 2, 4], 8), (&[1, 3], 16)],
        hom_either: None,
        diff_either: None,
    },
    GoldenTable {
        n: 10,
        hom_plus: 6,
        diff_plus: &[(&[0, 1, 2, 3, 4, 5], 8)],
        hom_either: Some(3),
        diff_either: Some(&[(&[0, 1, 2, 3, 4, 5], 14)]),
    },
    GoldenTable {
        n: 12,
        hom_plus: 6,
        diff_plus: &[(&[0, 4], 4), (&[2, 6], 8), (&[1, 3, 5], 16)],
        hom_either: None,
        diff_either: None,
    },
    GoldenTable {
        n: 14,
        hom_plus: 8,
        diff_plus: &[(&[0, 7], 2), (&[1, 2, 3, 4, 5, 6], 14)],
        hom_either: None,
        diff_either: None,
    },
    GoldenTable {
        n: 16,
        hom_plus: 7,
        diff_plus: &[(&[4], 4), (&[0, 8], 8), (&[1, 2, 3, 5, 6, 7], 16)],
        hom_either: None,
        diff_either: None,
    },
];

/// Result of replaying the expected tables against the computed partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableVerification {
    /// Euler numbers checked.
    pub checked: Vec<i64>,
    /// Human-readable discrepancy reports; empty on success.
    pub mismatches: Vec<String>,
}

impl TableVerification {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn expand_group(n: i64, residues: &[i64]) -> BTreeSet<i64> {
    let mut set = BTreeSet::new();
    for &r in residues {
        set.insert(r.rem_euclid(n));
        set.insert((n - r).rem_euclid(n));
    }
    set
}

fn check_against_groups(
    n: i64,
    label: &str,
    entries: &[DiffEntry],
    groups: &[(&[i64], usize)],
    mismatches: &mut Vec<String>,
) {
    let expanded: Vec<(BTreeSet<i64>, usize)> = groups
        .iter()
        .map(|&(rs, count)| (expand_group(n, rs), count))
        .collect();
    let mut union: BTreeSet<i64> = BTreeSet::new();
    let mut total = 0usize;
    for (set, _) in &expanded {
        total += set.len();
        union.extend(set.iter().copied());
    }
    if union.len() != total || union != (0..n).collect::<BTreeSet<i64>>() {
        mismatches.push(format!(
            "n = {n} ({label}): expected residue groups must tile 0..{n} exactly"
        ));
        return;
    }
    for entry in entries {
        let home = expanded
            .iter()
            .filter(|(set, _)| entry.residues.iter().all(|r| set.contains(r)))
            .collect::<Vec<_>>();
        match home.as_slice() {
            [(_, expected)] => {
                if entry.count != *expected {
                    mismatches.push(format!(
                        "n = {n} ({label}): class with {} expected {expected} \
                         diffeomorphism classes, found {}",
                        entry.condition, entry.count
                    ));
                }
            }
            _ => mismatches.push(format!(
                "n = {n} ({label}): class with {} straddles the expected residue groups",
                entry.condition
            )),
        }
    }
}

/// Recomputes every expected table and reports discrepancies.
pub fn verify_classification_tables() -> Result<TableVerification, Error> {
    let mut checked = Vec::new();
    let mut mismatches = Vec::new();
    for golden in GOLDEN_TABLES {
        let n = golden.n;
        checked.push(n);
        let report = classification_table(n)?;
        if report.hom_plus != golden.hom_plus {
            mismatches.push(format!(
                "n = {n} (preserving): expected {} homeomorphism classes, found {}",
                golden.hom_plus, report.hom_plus
            ));
        }
        check_against_groups(n, "preserving", &report.diff_plus, golden.diff_plus, &mut mismatches);
        if let Some(hom_either) = golden.hom_either {
            if report.hom_either != hom_either {
                mismatches.push(format!(
                    "n = {n} (either): expected {} homeomorphism classes, found {}",
                    hom_either, report.hom_either
                ));
            }
        }
        if let Some(groups) = golden.diff_either {
            check_against_groups(n, "either", &report.diff_either, groups, &mut mismatches);
        }
    }
    Ok(TableVerification { checked, mismatches })
}

/// The homotopy 7-spheres arising as bundle total spaces: μ values over the
/// Euler number 1 window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereCensus {
    /// Distinct μ values, ascending.
    pub values: Vec<RationalResidue>,
    /// Number of distinct μ values (diffeomorphism classes realized).
    pub distinct: usize,
    /// How many of them are nonzero (exotic smooth structures).
    pub nonzero: usize,
    /// Whether μ = 0 (the standard sphere) occurs.
    pub zero_represented: bool,
}

/// Census of the smooth structures realized by `M_{m,1}`, all of which are
/// homeomorphic to S⁷.
pub fn exotic_sphere_census() -> SphereCensus {
    let values: BTreeSet<RationalResidue> = (0..56)
        .map(|m| mu(Bundle::new(m, 1).expect("valid label")).expect("n = 1"))
        .collect();
    let values: Vec<RationalResidue> = values.into_iter().collect();
    let distinct = values.len();
    let nonzero = values.iter().filter(|v| !v.is_zero()).count();
    SphereCensus {
        distinct,
        nonzero,
        zero_represented: distinct != nonzero,
        values,
    }
}
