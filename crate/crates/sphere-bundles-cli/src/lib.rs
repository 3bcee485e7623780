//! Command-line front end for the `sphere-bundles` library.
//!
//! The binary exposes the classification machinery through six subcommands
//! (`invariants`, `compare`, `classes`, `table`, `verify-tables`, `sqrt`) and
//! two output formats.  Every run produces a [`Report`]: in text mode it is
//! rendered for humans, in JSON mode it is serialized verbatim, so the two
//! formats always carry the same numeric content.  Exit codes are part of the
//! contract: `0` for success (including "equivalent"), `1` when a comparison
//! concludes "not equivalent" or a table verification finds a mismatch, and
//! `2` for usage or domain errors.

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sphere_bundles::{
    classification_table, equivalent, invariant_record, unit_square_roots,
    verify_classification_tables, Bundle, Category, CountsReport, Error as MathError,
    InvariantRecord, Orientation, ResidueSet, Sign, Verdict,
};

/// Version stamp carried by every report so downstream consumers can detect
/// incompatible payload changes.
pub const SCHEMA_VERSION: &str = "1";

// ---------------------------------------------------------------------------
// Argument grammar
// ---------------------------------------------------------------------------

/// Top-level command-line grammar.
#[derive(Debug, Parser)]
#[command(
    name = "sphere-bundles",
    version,
    about = "Classify the total spaces M_{m,n} of 3-sphere bundles over the 4-sphere",
    long_about = "Classify the total spaces M_{m,n} of 3-sphere bundles over the 4-sphere \
                  up to homotopy equivalence, homeomorphism and diffeomorphism, preserving \
                  or reversing orientation.  Labels use the Euler-number convention n >= 0; \
                  a bundle with negative Euler number should be relabeled first via the \
                  orientation-preserving diffeomorphism M_{m,n} ~ M_{m+n,-n}."
)]
pub struct Cli {
    /// Output format for the report.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,

    /// Increase diagnostic chatter on stderr (repeatable).
    #[arg(short, long, global = true, action = ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: CommandKind,
}

/// Output format selector.
#[derive(Clone, Copy, Debug, Eq, PartialEq, ValueEnum)]
pub enum FormatArg {
    /// Human-readable text.
    Text,
    /// A single JSON object on stdout.
    Json,
}

/// Equivalence categories accepted on the command line.
///
/// `pl` and `almost-diffeo` are aliases for the homeomorphism decider: in
/// dimension seven the homeomorphism, PL-homeomorphism and almost-diffeo
/// classifications of these bundle spaces coincide.  The requested name is
/// echoed back in the report even when it routes to the same decider.
#[derive(Clone, Copy, Debug, Eq, PartialEq, ValueEnum)]
pub enum CategoryArg {
    /// Homotopy equivalence.
    Homotopy,
    /// Homeomorphism.
    Homeo,
    /// PL-homeomorphism (same decider as homeo).
    Pl,
    /// Almost-diffeomorphism (same decider as homeo).
    AlmostDiffeo,
    /// Diffeomorphism.
    Diffeo,
}

impl CategoryArg {
    /// The library category this argument routes to.
    pub fn category(self) -> Category {
        match self {
            CategoryArg::Homotopy => Category::Homotopy,
            CategoryArg::Homeo | CategoryArg::Pl | CategoryArg::AlmostDiffeo => {
                Category::Homeomorphism
            }
            CategoryArg::Diffeo => Category::Diffeomorphism,
        }
    }

    /// The name as typed on the command line (used in report echoes).
    pub fn as_str(self) -> &'static str {
        match self {
            CategoryArg::Homotopy => "homotopy",
            CategoryArg::Homeo => "homeo",
            CategoryArg::Pl => "pl",
            CategoryArg::AlmostDiffeo => "almost-diffeo",
            CategoryArg::Diffeo => "diffeo",
        }
    }
}

/// Orientation modes accepted on the command line.
#[derive(Clone, Copy, Debug, Eq, PartialEq, ValueEnum)]
pub enum OrientationArg {
    /// Orientation preserving maps only.
    Preserving,
    /// Orientation reversing maps only.
    Reversing,
    /// Either orientation behaviour counts.
    Either,
}

impl OrientationArg {
    /// The library orientation this argument routes to.
    pub fn orientation(self) -> Orientation {
        match self {
            OrientationArg::Preserving => Orientation::Preserving,
            OrientationArg::Reversing => Orientation::Reversing,
            OrientationArg::Either => Orientation::Either,
        }
    }

    /// The name as typed on the command line (used in report echoes).
    pub fn as_str(self) -> &'static str {
        match self {
            OrientationArg::Preserving => "preserving",
            OrientationArg::Reversing => "reversing",
            OrientationArg::Either => "either",
        }
    }
}

/// The subcommands.
#[derive(Debug, Subcommand)]
pub enum CommandKind {
    /// Compute half_p1, s1 and mu for the bundle space M_{m,n}.
    Invariants {
        /// Clutching parameter m (any integer).
        #[arg(allow_negative_numbers = true)]
        m: i64,
        /// Euler number n (must be >= 0).
        #[arg(allow_negative_numbers = true, value_parser = euler_number)]
        n: i64,
    },
    /// Decide whether M_{m,n} and M_{m2,n2} are equivalent.
    Compare {
        /// Clutching parameter of the first bundle.
        #[arg(allow_negative_numbers = true)]
        m: i64,
        /// Euler number of the first bundle (must be >= 0).
        #[arg(allow_negative_numbers = true, value_parser = euler_number)]
        n: i64,
        /// Clutching parameter of the second bundle.
        #[arg(allow_negative_numbers = true)]
        m2: i64,
        /// Euler number of the second bundle (must be >= 0).
        #[arg(allow_negative_numbers = true, value_parser = euler_number)]
        n2: i64,
        /// Equivalence category to decide.
        #[arg(long, value_enum, default_value_t = CategoryArg::Homeo)]
        category: CategoryArg,
        /// Orientation behaviour of the admissible equivalences.
        #[arg(long, value_enum, default_value_t = OrientationArg::Preserving)]
        orientation: OrientationArg,
    },
    /// Enumerate the equivalence classes of labels for a fixed Euler number.
    Classes {
        /// Euler number n (must be >= 1 for enumeration).
        #[arg(allow_negative_numbers = true, value_parser = euler_number)]
        n: i64,
        /// Equivalence category to partition by.
        #[arg(long, value_enum, default_value_t = CategoryArg::Homeo)]
        category: CategoryArg,
        /// Orientation mode: `preserving` or `either` (a partition needs a
        /// reflexive relation, so `reversing` alone is rejected).
        #[arg(long, value_enum, default_value_t = OrientationArg::Preserving)]
        orientation: OrientationArg,
    },
    /// Print the class-count table for a fixed Euler number.
    Table {
        /// Euler number n (must be >= 1 for enumeration).
        #[arg(allow_negative_numbers = true, value_parser = euler_number)]
        n: i64,
    },
    /// Recompute the ten embedded class-count tables and check them.
    VerifyTables,
    /// List the square roots of +1 (or of -1) modulo n.
    Sqrt {
        /// Modulus n (must be >= 1).
        #[arg(allow_negative_numbers = true, value_parser = positive_modulus)]
        n: i64,
        /// Solve a^2 = -1 (mod n) instead of a^2 = +1 (mod n).
        #[arg(long)]
        minus: bool,
    },
}

/// Parser for Euler-number arguments: any nonnegative integer.
fn euler_number(raw: &str) -> Result<i64, String> {
    let value: i64 = raw
        .parse()
        .map_err(|_| format!("`{raw}` is not an integer"))?;
    if value < 0 {
        Err(format!(
            "the Euler number must be nonnegative, got {value}; \
             M_{{m,n}} is orientation-preserving diffeomorphic to M_{{m+n,-n}}, \
             so relabel the bundle with Euler number {} first",
            -value
        ))
    } else {
        Ok(value)
    }
}

/// Parser for modulus arguments: any positive integer.
fn positive_modulus(raw: &str) -> Result<i64, String> {
    let value: i64 = raw
        .parse()
        .map_err(|_| format!("`{raw}` is not an integer"))?;
    if value < 1 {
        Err(format!("the modulus must be a positive integer, got {value}"))
    } else {
        Ok(value)
    }
}

// ---------------------------------------------------------------------------
// Report model
// ---------------------------------------------------------------------------

/// Overall outcome of a run.
#[derive(Clone, Copy, Debug, Deserialize, Eq, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The command succeeded (for `compare`: the spaces are equivalent).
    Ok,
    /// A comparison concluded "not equivalent", or a table check mismatched.
    NotEquivalent,
    /// A usage or domain error prevented a meaningful answer.
    Error,
}

/// Echo of the invocation, so a report is self-describing.
#[derive(Clone, Debug, Deserialize, Eq, PartialEq, Serialize)]
pub struct CommandEcho {
    /// Subcommand name as typed.
    pub name: String,
    /// Arguments in a stable (alphabetical) key order.
    pub args: serde_json::Map<String, serde_json::Value>,
}

/// Invariant record of one bundle space, with rationals rendered as `p/q`.
#[derive(Clone, Debug, Deserialize, Eq, PartialEq, Serialize)]
pub struct InvariantsPayload {
    pub m: i64,
    pub n: i64,
    /// Representative of half the first Pontryagin class modulo n.
    pub half_p1: i64,
    /// Linking-form invariant s1 in Q/Z, reduced, as `p/q`.
    pub s1: String,
    /// Eells-Kuiper invariant mu in Q/Z, reduced, as `p/q`.
    pub mu: String,
}

impl InvariantsPayload {
    fn from_record(record: &InvariantRecord) -> Self {
        InvariantsPayload {
            m: record.bundle.m(),
            n: record.bundle.n(),
            half_p1: record.half_p1,
            s1: record.s1.to_string(),
            mu: record.mu.to_string(),
        }
    }
}

/// Outcome of a `compare` run.
#[derive(Clone, Debug, Deserialize, Eq, PartialEq, Serialize)]
pub struct ComparePayload {
    pub equivalent: bool,
    /// Category as requested on the command line (aliases are echoed).
    pub category: String,
    pub orientation: String,
    /// Identifier of the decision rule that settled the question.
    pub rule: String,
    /// Smallest witness alpha when an alpha-clause decided positively.
    pub witness_alpha: Option<i64>,
    /// Invariants of the left bundle (absent when its Euler number is 0).
    pub left: Option<InvariantsPayload>,
    /// Invariants of the right bundle (absent when its Euler number is 0).
    pub right: Option<InvariantsPayload>,
}

/// One equivalence class in a `classes` listing.
#[derive(Clone, Debug, Deserialize, Eq, PartialEq, Serialize)]
pub struct ClassSummary {
    /// Position in the listing (classes are ordered by least representative).
    pub index: usize,
    /// Least label in the class within the enumeration window.
    pub representative: i64,
    /// Number of labels of the class inside the window.
    pub size: usize,
    /// Distinct residues of the class modulo n, ascending.
    pub residues: Vec<i64>,
    /// Human-readable congruence condition, e.g. `m = 0, +-4 (mod 12)`.
    pub condition: String,
}

/// Outcome of a `classes` run.
#[derive(Clone, Debug, Deserialize, Eq, PartialEq, Serialize)]
pub struct ClassesPayload {
    pub n: i64,
    pub category: String,
    pub orientation: String,
    /// Length of the enumeration window (one full period of the invariants).
    pub period: i64,
    pub class_count: usize,
    pub classes: Vec<ClassSummary>,
}

/// One row of the diffeomorphism section of a `table` report.
#[derive(Clone, Debug, Deserialize, Eq, PartialEq, Serialize)]
pub struct TableRow {
    /// Residues of m modulo n this row applies to, ascending.
    pub residues: Vec<i64>,
    /// The same residues as a congruence condition.
    pub condition: String,
    /// Number of diffeomorphism classes within one homeomorphism class.
    pub count: usize,
}

/// Outcome of a `table` run.
#[derive(Clone, Debug, Deserialize, Eq, PartialEq, Serialize)]
pub struct TablePayload {
    pub n: i64,
    /// Homeomorphism classes, orientation preserving.
    pub hom_plus: usize,
    /// Diffeomorphism counts per homeomorphism class, orientation preserving.
    pub diff_plus: Vec<TableRow>,
    /// Homeomorphism classes, either orientation.
    pub hom_either: usize,
    /// Diffeomorphism counts per homeomorphism class, either orientation.
    pub diff_either: Vec<TableRow>,
}

/// Outcome of a `verify-tables` run.
#[derive(Clone, Debug, Deserialize, Eq, PartialEq, Serialize)]
pub struct VerifyPayload {
    /// Euler numbers whose tables were recomputed.
    pub checked: Vec<i64>,
    /// Number of tables that matched in every count.
    pub matched: usize,
    /// Total number of embedded tables.
    pub total: usize,
    /// Human-readable description of every mismatch (empty on success).
    pub mismatches: Vec<String>,
}

/// Outcome of a `sqrt` run.
#[derive(Clone, Debug, Deserialize, Eq, PartialEq, Serialize)]
pub struct SqrtPayload {
    pub modulus: i64,
    /// `+1` or `-1`: the right-hand side of a^2 = sign (mod modulus).
    pub sign: String,
    pub count: usize,
    /// All solutions in [0, modulus), ascending.
    pub elements: Vec<i64>,
}

/// Payload of a failed run.
#[derive(Clone, Debug, Deserialize, Eq, PartialEq, Serialize)]
pub struct ErrorPayload {
    pub message: String,
}

/// The command-specific part of a report.
#[derive(Clone, Debug, Deserialize, Eq, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Invariants(InvariantsPayload),
    Compare(ComparePayload),
    Classes(ClassesPayload),
    Table(TablePayload),
    VerifyTables(VerifyPayload),
    Sqrt(SqrtPayload),
    Error(ErrorPayload),
}

/// The complete, format-independent result of one invocation.
#[derive(Clone, Debug, Deserialize, Eq, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: String,
    pub command: CommandEcho,
    pub status: Status,
    pub payload: Payload,
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

/// Exit code conventions of the binary.
pub mod exit_code {
    /// Success; for `compare`, the spaces are equivalent.
    pub const OK: i32 = 0;
    /// `compare` concluded "not equivalent", or `verify-tables` mismatched.
    pub const NOT_EQUIVALENT: i32 = 1;
    /// Usage or domain error.
    pub const ERROR: i32 = 2;
}

fn echo(name: &str, args: &[(&str, serde_json::Value)]) -> CommandEcho {
    let mut map = serde_json::Map::new();
    for (key, value) in args {
        map.insert((*key).to_string(), value.clone());
    }
    CommandEcho {
        name: name.to_string(),
        args: map,
    }
}

fn error_report(command: CommandEcho, message: String) -> (Report, i32) {
    (
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            command,
            status: Status::Error,
            payload: Payload::Error(ErrorPayload { message }),
        },
        exit_code::ERROR,
    )
}

fn ok_report(command: CommandEcho, payload: Payload) -> (Report, i32) {
    (
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            command,
            status: Status::Ok,
            payload,
        },
        exit_code::OK,
    )
}

/// Invariant payload for one side of a comparison, or `None` when the Euler
/// number is 0 (the invariants are not defined there).
fn side_payload(bundle: Bundle) -> Result<Option<InvariantsPayload>, MathError> {
    if bundle.n() == 0 {
        return Ok(None);
    }
    invariant_record(bundle).map(|record| Some(InvariantsPayload::from_record(&record)))
}

fn compare_payload(
    verdict: &Verdict,
    category: CategoryArg,
    orientation: OrientationArg,
) -> Result<ComparePayload, MathError> {
    Ok(ComparePayload {
        equivalent: verdict.equivalent,
        category: category.as_str().to_string(),
        orientation: orientation.as_str().to_string(),
        rule: verdict.rule.to_string(),
        witness_alpha: verdict.witness_alpha,
        left: side_payload(verdict.left.bundle())?,
        right: side_payload(verdict.right.bundle())?,
    })
}

fn table_rows(report: &CountsReport, mode_either: bool) -> Vec<TableRow> {
    let entries = if mode_either {
        &report.diff_either
    } else {
        &report.diff_plus
    };
    entries
        .iter()
        .map(|entry| TableRow {
            residues: entry.residues.clone(),
            condition: entry.condition.clone(),
            count: entry.count,
        })
        .collect()
}

/// Run one parsed command and produce its report plus the process exit code.
///
/// This function performs no I/O, which keeps every outcome unit-testable and
/// guarantees that text and JSON renderings are views of the same data.
pub fn execute(cli: &Cli) -> (Report, i32) {
    match &cli.command {
        CommandKind::Invariants { m, n } => {
            let command = echo(
                "invariants",
                &[("m", (*m).into()), ("n", (*n).into())],
            );
            let bundle = match Bundle::new(*m, *n) {
                Ok(bundle) => bundle,
                Err(err) => return error_report(command, err.to_string()),
            };
            match invariant_record(bundle) {
                Ok(record) => ok_report(
                    command,
                    Payload::Invariants(InvariantsPayload::from_record(&record)),
                ),
                Err(err) => error_report(command, err.to_string()),
            }
        }
        CommandKind::Compare {
            m,
            n,
            m2,
            n2,
            category,
            orientation,
        } => {
            let command = echo(
                "compare",
                &[
                    ("m", (*m).into()),
                    ("n", (*n).into()),
                    ("m2", (*m2).into()),
                    ("n2", (*n2).into()),
                    ("category", category.as_str().into()),
                    ("orientation", orientation.as_str().into()),
                ],
            );
            let left = match Bundle::new(*m, *n) {
                Ok(bundle) => bundle,
                Err(err) => return error_report(command, err.to_string()),
            };
            let right = match Bundle::new(*m2, *n2) {
                Ok(bundle) => bundle,
                Err(err) => return error_report(command, err.to_string()),
            };
            let verdict = equivalent(left, right, category.category(), orientation.orientation());
            let payload = match compare_payload(&verdict, *category, *orientation) {
                Ok(payload) => payload,
                Err(err) => return error_report(command, err.to_string()),
            };
            let status = if verdict.equivalent {
                Status::Ok
            } else {
                Status::NotEquivalent
            };
            let code = if verdict.equivalent {
                exit_code::OK
            } else {
                exit_code::NOT_EQUIVALENT
            };
            (
                Report {
                    schema_version: SCHEMA_VERSION.to_string(),
                    command,
                    status,
                    payload: Payload::Compare(payload),
                },
                code,
            )
        }
        CommandKind::Classes {
            n,
            category,
            orientation,
        } => {
            let command = echo(
                "classes",
                &[
                    ("n", (*n).into()),
                    ("category", category.as_str().into()),
                    ("orientation", orientation.as_str().into()),
                ],
            );
            let mode = match orientation {
                OrientationArg::Preserving => sphere_bundles::CountMode::Preserving,
                OrientationArg::Either => sphere_bundles::CountMode::Either,
                OrientationArg::Reversing => {
                    return error_report(
                        command,
                        "a class partition needs a reflexive relation, so --orientation \
                         reversing alone does not define one; use `preserving` or `either`"
                            .to_string(),
                    )
                }
            };
            match sphere_bundles::partition(*n, category.category(), mode) {
                Ok(partition) => {
                    let classes = partition
                        .classes
                        .iter()
                        .enumerate()
                        .map(|(index, members)| {
                            let residues = partition.residues_mod_n(index);
                            ClassSummary {
                                index,
                                representative: partition.representative(index),
                                size: members.len(),
                                residues,
                                condition: partition.residue_condition(index),
                            }
                        })
                        .collect();
                    ok_report(
                        command,
                        Payload::Classes(ClassesPayload {
                            n: *n,
                            category: category.as_str().to_string(),
                            orientation: orientation.as_str().to_string(),
                            period: partition.period,
                            class_count: partition.class_count(),
                            classes,
                        }),
                    )
                }
                Err(err) => error_report(command, err.to_string()),
            }
        }
        CommandKind::Table { n } => {
            let command = echo("table", &[("n", (*n).into())]);
            match classification_table(*n) {
                Ok(counts) => ok_report(
                    command,
                    Payload::Table(TablePayload {
                        n: counts.n,
                        hom_plus: counts.hom_plus,
                        diff_plus: table_rows(&counts, false),
                        hom_either: counts.hom_either,
                        diff_either: table_rows(&counts, true),
                    }),
                ),
                Err(err) => error_report(command, err.to_string()),
            }
        }
        CommandKind::VerifyTables => {
            let command = echo("verify-tables", &[]);
            match verify_classification_tables() {
                Ok(verification) => {
                    let total = verification.checked.len();
                    let matched = verification
                        .checked
                        .iter()
                        .filter(|n| {
                            let prefix = format!("n = {n} ");
                            !verification
                                .mismatches
                                .iter()
                                .any(|line| line.starts_with(&prefix))
                        })
                        .count();
                    let all_match = verification.all_match();
                    let payload = Payload::VerifyTables(VerifyPayload {
                        checked: verification.checked.clone(),
                        matched,
                        total,
                        mismatches: verification.mismatches.clone(),
                    });
                    let (status, code) = if all_match {
                        (Status::Ok, exit_code::OK)
                    } else {
                        (Status::NotEquivalent, exit_code::NOT_EQUIVALENT)
                    };
                    (
                        Report {
                            schema_version: SCHEMA_VERSION.to_string(),
                            command,
                            status,
                            payload,
                        },
                        code,
                    )
                }
                Err(err) => error_report(command, err.to_string()),
            }
        }
        CommandKind::Sqrt { n, minus } => {
            let command = echo(
                "sqrt",
                &[("n", (*n).into()), ("minus", (*minus).into())],
            );
            let sign = if *minus { Sign::Minus } else { Sign::Plus };
            match unit_square_roots(*n, sign) {
                Ok(set) => ok_report(command, Payload::Sqrt(sqrt_payload(&set))),
                Err(err) => error_report(command, err.to_string()),
            }
        }
    }
}

fn sqrt_payload(set: &ResidueSet) -> SqrtPayload {
    SqrtPayload {
        modulus: set.modulus,
        sign: set.sign.to_string(),
        count: set.len(),
        elements: set.elements.clone(),
    }
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

fn invariants_line(inv: &InvariantsPayload) -> String {
    format!(
        "M_{{{},{}}}: half_p1 = {} (mod {}), s1 = {}, mu = {}",
        inv.m, inv.n, inv.half_p1, inv.n, inv.s1, inv.mu
    )
}

/// Render a report as human-readable text (without a trailing newline).
pub fn render_text(report: &Report) -> String {
    match &report.payload {
        Payload::Invariants(inv) => invariants_line(inv),
        Payload::Compare(cmp) => {
            let heading = match (&cmp.left, &cmp.right) {
                (Some(l), Some(r)) => format!(
                    "M_{{{},{}}} vs M_{{{},{}}} ({}, {})",
                    l.m, l.n, r.m, r.n, cmp.category, cmp.orientation
                ),
                _ => format!("comparison ({}, {})", cmp.category, cmp.orientation),
            };
            let verdict = if cmp.equivalent {
                match cmp.witness_alpha {
                    Some(alpha) => format!("equivalent, witness α = {alpha}"),
                    None => "equivalent".to_string(),
                }
            } else {
                "not equivalent".to_string()
            };
            let mut lines = vec![format!("{heading}: {verdict}  [rule {}]", cmp.rule)];
            if let Some(left) = &cmp.left {
                lines.push(format!("  left   {}", invariants_line(left)));
            }
            if let Some(right) = &cmp.right {
                lines.push(format!("  right  {}", invariants_line(right)));
            }
            lines.join("\n")
        }
        Payload::Classes(cls) => {
            let mut lines = vec![format!(
                "n = {} ({}, {}): {} classes over one period of {} labels",
                cls.n, cls.category, cls.orientation, cls.class_count, cls.period
            )];
            for class in &cls.classes {
                lines.push(format!(
                    "  class {}: {} — representative M_{{{},{}}}, {} labels in the window",
                    class.index, class.condition, class.representative, cls.n, class.size
                ));
            }
            lines.join("\n")
        }
        Payload::Table(table) => {
            let mut lines = vec![format!("n = {}", table.n)];
            lines.push(format!(
                "  orientation preserving: {} homeomorphism classes",
                table.hom_plus
            ));
            for row in &table.diff_plus {
                lines.push(format!(
                    "    {}: {} diffeomorphism classes per homeomorphism class",
                    row.condition, row.count
                ));
            }
            lines.push(format!(
                "  either orientation: {} homeomorphism classes",
                table.hom_either
            ));
            for row in &table.diff_either {
                lines.push(format!(
                    "    {}: {} diffeomorphism classes per homeomorphism class",
                    row.condition, row.count
                ));
            }
            lines.join("\n")
        }
        Payload::VerifyTables(verify) => {
            let mut lines = vec![format!("{}/{} tables match", verify.matched, verify.total)];
            for mismatch in &verify.mismatches {
                lines.push(format!("  mismatch: {mismatch}"));
            }
            lines.join("\n")
        }
        Payload::Sqrt(sqrt) => {
            if sqrt.elements.is_empty() {
                format!(
                    "α² ≡ {} (mod {}): no solutions",
                    sqrt.sign, sqrt.modulus
                )
            } else {
                let list: Vec<String> =
                    sqrt.elements.iter().map(|e| e.to_string()).collect();
                format!(
                    "α² ≡ {} (mod {}): {} solutions: {}",
                    sqrt.sign,
                    sqrt.modulus,
                    sqrt.count,
                    list.join(", ")
                )
            }
        }
        Payload::Error(err) => format!("error: {}", err.message),
    }
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    fn run(args: &[&str]) -> (Report, i32) {
        let cli = Cli::try_parse_from(args).expect("arguments should parse");
        execute(&cli)
    }

    #[test]
    fn grammar_is_well_formed() {
        Cli::command().debug_assert();
    }

    #[test]
    fn invariants_of_m_1_12() {
        let (report, code) = run(&["sphere-bundles", "invariants", "1", "12"]);
        assert_eq!(code, exit_code::OK);
        assert_eq!(report.status, Status::Ok);
        match report.payload {
            Payload::Invariants(inv) => {
                assert_eq!(inv.half_p1, 2);
                assert_eq!(inv.s1, "11/12");
                assert_eq!(inv.mu, "23/336");
            }
            other => panic!("expected invariants payload, got {other:?}"),
        }
    }

    #[test]
    fn compare_equivalent_pair_reports_witness_and_both_records() {
        let (report, code) = run(&[
            "sphere-bundles",
            "compare",
            "1",
            "12",
            "5",
            "12",
            "--category",
            "homeo",
            "--orientation",
            "preserving",
        ]);
        assert_eq!(code, exit_code::OK);
        match &report.payload {
            Payload::Compare(cmp) => {
                assert!(cmp.equivalent);
                assert_eq!(cmp.witness_alpha, Some(5));
                assert_eq!(cmp.rule, "homeo.preserving");
                assert_eq!(cmp.left.as_ref().unwrap().half_p1, 2);
                assert_eq!(cmp.right.as_ref().unwrap().half_p1, 10);
            }
            other => panic!("expected compare payload, got {other:?}"),
        }
        let text = render_text(&report);
        assert!(text.contains("equivalent, witness α = 5"), "{text}");
    }

    #[test]
    fn compare_not_equivalent_exits_one() {
        let (report, code) = run(&[
            "sphere-bundles",
            "compare",
            "0",
            "2",
            "-1",
            "2",
            "--category",
            "homotopy",
            "--orientation",
            "preserving",
        ]);
        assert_eq!(code, exit_code::NOT_EQUIVALENT);
        assert_eq!(report.status, Status::NotEquivalent);
        assert!(render_text(&report).contains("not equivalent"));
    }

    #[test]
    fn category_aliases_route_to_the_homeomorphism_decider() {
        for alias in ["pl", "almost-diffeo"] {
            let (aliased, code) = run(&[
                "sphere-bundles",
                "compare",
                "1",
                "12",
                "5",
                "12",
                "--category",
                alias,
            ]);
            assert_eq!(code, exit_code::OK);
            let (direct, _) = run(&[
                "sphere-bundles",
                "compare",
                "1",
                "12",
                "5",
                "12",
                "--category",
                "homeo",
            ]);
            match (&aliased.payload, &direct.payload) {
                (Payload::Compare(a), Payload::Compare(d)) => {
                    assert_eq!(a.category, alias);
                    assert_eq!(d.category, "homeo");
                    assert_eq!(a.equivalent, d.equivalent);
                    assert_eq!(a.rule, d.rule);
                    assert_eq!(a.witness_alpha, d.witness_alpha);
                }
                other => panic!("expected compare payloads, got {other:?}"),
            }
        }
    }

    #[test]
    fn classes_reversing_is_a_domain_error() {
        let (report, code) = run(&[
            "sphere-bundles",
            "classes",
            "12",
            "--orientation",
            "reversing",
        ]);
        assert_eq!(code, exit_code::ERROR);
        assert_eq!(report.status, Status::Error);
    }

    #[test]
    fn classes_listing_is_ordered_by_least_representative() {
        let (report, code) = run(&["sphere-bundles", "classes", "16"]);
        assert_eq!(code, exit_code::OK);
        match report.payload {
            Payload::Classes(cls) => {
                assert_eq!(cls.class_count, 7);
                let reps: Vec<i64> = cls.classes.iter().map(|c| c.representative).collect();
                let mut sorted = reps.clone();
                sorted.sort_unstable();
                assert_eq!(reps, sorted);
                for class in &cls.classes {
                    let mut residues = class.residues.clone();
                    residues.sort_unstable();
                    assert_eq!(class.residues, residues);
                }
            }
            other => panic!("expected classes payload, got {other:?}"),
        }
    }

    #[test]
    fn euler_zero_is_a_domain_error_for_invariants() {
        let (report, code) = run(&["sphere-bundles", "invariants", "0", "0"]);
        assert_eq!(code, exit_code::ERROR);
        assert_eq!(report.status, Status::Error);
        match report.payload {
            Payload::Error(err) => assert!(!err.message.is_empty()),
            other => panic!("expected error payload, got {other:?}"),
        }
    }

    #[test]
    fn negative_euler_number_is_rejected_at_parse_time_with_guidance() {
        let err = Cli::try_parse_from(["sphere-bundles", "invariants", "3", "-7"])
            .expect_err("negative Euler numbers must not parse");
        let rendered = err.to_string();
        assert!(rendered.contains("M_{m+n,-n}"), "{rendered}");
    }

    #[test]
    fn verify_tables_matches_everything() {
        let (report, code) = run(&["sphere-bundles", "verify-tables"]);
        assert_eq!(code, exit_code::OK);
        match &report.payload {
            Payload::VerifyTables(verify) => {
                assert_eq!(verify.matched, verify.total);
                assert_eq!(verify.total, 10);
                assert!(verify.mismatches.is_empty());
            }
            other => panic!("expected verify payload, got {other:?}"),
        }
        assert_eq!(render_text(&report).lines().next(), Some("10/10 tables match"));
    }

    #[test]
    fn sqrt_reports_ascending_residues() {
        let (report, code) = run(&["sphere-bundles", "sqrt", "12"]);
        assert_eq!(code, exit_code::OK);
        match report.payload {
            Payload::Sqrt(sqrt) => {
                assert_eq!(sqrt.elements, vec![1, 5, 7, 11]);
                assert_eq!(sqrt.sign, "+1");
            }
            other => panic!("expected sqrt payload, got {other:?}"),
        }

        let (report, _) = run(&["sphere-bundles", "sqrt", "13", "--minus"]);
        match report.payload {
            Payload::Sqrt(sqrt) => {
                assert_eq!(sqrt.elements, vec![5, 8]);
                assert_eq!(sqrt.sign, "-1");
            }
            other => panic!("expected sqrt payload, got {other:?}"),
        }
    }

    #[test]
    fn reports_round_trip_through_json() {
        let invocations: &[&[&str]] = &[
            &["sphere-bundles", "invariants", "1", "12"],
            &["sphere-bundles", "compare", "1", "12", "5", "12"],
            &["sphere-bundles", "compare", "0", "2", "-1", "2", "--category", "homotopy"],
            &["sphere-bundles", "compare", "0", "0", "5", "0", "--category", "diffeo"],
            &["sphere-bundles", "classes", "10", "--category", "diffeo", "--orientation", "either"],
            &["sphere-bundles", "table", "12"],
            &["sphere-bundles", "verify-tables"],
            &["sphere-bundles", "sqrt", "65", "--minus"],
            &["sphere-bundles", "invariants", "0", "0"],
        ];
        for args in invocations {
            let (report, _) = run(args);
            let json = serde_json::to_string(&report).expect("report should serialize");
            let back: Report = serde_json::from_str(&json).expect("report should deserialize");
            assert_eq!(back, report, "round trip changed the report for {args:?}");
        }
    }

    #[test]
    fn rationals_are_rendered_as_fraction_strings() {
        let (report, _) = run(&["sphere-bundles", "invariants", "0", "1"]);
        let value = serde_json::to_value(&report).unwrap();
        let payload = &value["payload"];
        assert_eq!(payload["s1"], serde_json::json!("0/1"));
        assert_eq!(payload["mu"], serde_json::json!("0/1"));
    }
}
