//! Structured reports and their text and CSV renderings.
//!
//! The text form of [`InvariantReport`] is one `key: value` line per field in
//! a fixed order; see [`InvariantReport::fields`] for the schema.

use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::catalog::{Catalog, EntryError};
use crate::error::{Error, Result};
use crate::invariants::{power_lemma_holds, AbelianType, PureStatus};
use crate::profile::GroupProfile;
use crate::theorems::{non_sufficiency_witnesses, TheoremId, TheoremSelection, TheoremVerdict};

/// A computed value, or why there is none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<T> {
    Value(T),
    NotApplicable,
    Undecided(String),
}

impl<T> Outcome<T> {
    fn from_result(result: Result<T>) -> Self {
        match result {
            Ok(v) => Outcome::Value(v),
            Err(Error::NotApplicable(_) | Error::NotPurelyNonabelian) => Outcome::NotApplicable,
            Err(e) => Outcome::Undecided(e.to_string()),
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Outcome::Value(v) => Some(v),
            _ => None,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Outcome<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Value(v) => v.fmt(f),
            Outcome::NotApplicable => f.write_str("n/a"),
            Outcome::Undecided(why) => write!(f, "undecided ({why})"),
        }
    }
}

/// Status of one theorem check inside a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Verdict(TheoremVerdict),
    Error(String),
}

impl CheckOutcome {
    fn from_result(result: Result<TheoremVerdict>) -> Self {
        match result {
            Ok(v) => CheckOutcome::Verdict(v),
            Err(e) => CheckOutcome::Error(e.to_string()),
        }
    }

    /// True for a failed applicable verdict or an error.
    pub fn is_failure(&self) -> bool {
        match self {
            CheckOutcome::Verdict(v) => v.is_applicable() && !v.pass,
            CheckOutcome::Error(_) => true,
        }
    }

    fn status(&self) -> String {
        match self {
            CheckOutcome::Verdict(v) if !v.is_applicable() => {
                format!("n/a ({})", v.failed_hypothesis().unwrap_or_default())
            }
            CheckOutcome::Verdict(v) => format!(
                "{} left={} right={} [{}]",
                pass_word(v.pass),
                v.left,
                v.right,
                v.notes.join("; ")
            ),
            CheckOutcome::Error(e) => format!("error ({e})"),
        }
    }

    fn short_status(&self) -> &'static str {
        match self {
            CheckOutcome::Verdict(v) if !v.is_applicable() => "n/a",
            CheckOutcome::Verdict(v) => pass_word(v.pass),
            CheckOutcome::Error(_) => "error",
        }
    }
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn join_orders(orders: &[usize]) -> String {
    orders
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Every invariant of one group, plus all theorem verdicts.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub name: String,
    pub p: u32,
    pub n: usize,
    pub order: usize,
    pub abelian: bool,
    pub class: usize,
    pub rank: usize,
    pub center_order: usize,
    pub lower_central_orders: Vec<usize>,
    pub upper_central_orders: Vec<usize>,
    pub frattini_order: usize,
    pub abelianization_type: AbelianType,
    pub center_type: AbelianType,
    pub regular: Outcome<bool>,
    pub power_lemma: Outcome<bool>,
    pub purely_nonabelian: Outcome<PureStatus>,
    pub autz_enumerated: Outcome<usize>,
    pub autz_formula: Outcome<u64>,
    pub zinn_order: Outcome<usize>,
    pub autz_equals_zinn: Outcome<bool>,
    pub containment_witness: Outcome<bool>,
    pub verdicts: Vec<(TheoremId, CheckOutcome)>,
}

impl InvariantReport {
    pub fn from_profile(profile: &GroupProfile) -> Self {
        let equality = Outcome::from_result(profile.equality());
        Self {
            name: profile.name().to_string(),
            p: profile.prime(),
            n: profile.exponent_n(),
            order: profile.order(),
            abelian: profile.is_abelian(),
            class: profile.class(),
            rank: profile.rank(),
            center_order: profile.center().order(),
            lower_central_orders: profile.lower_series().orders(),
            upper_central_orders: profile.upper_series().orders(),
            frattini_order: profile.frattini().order(),
            abelianization_type: profile.abelianization_type().clone(),
            center_type: profile.center_type().clone(),
            regular: Outcome::from_result(profile.is_regular()),
            power_lemma: power_lemma_outcome(profile),
            purely_nonabelian: Outcome::from_result(profile.purity()),
            autz_enumerated: Outcome::from_result(profile.autz().map(|s| s.order())),
            autz_formula: Outcome::from_result(profile.formula()),
            zinn_order: Outcome::from_result(profile.zinn_order()),
            autz_equals_zinn: match &equality {
                Outcome::Value(v) => Outcome::Value(v.equal),
                Outcome::NotApplicable => Outcome::NotApplicable,
                Outcome::Undecided(e) => Outcome::Undecided(e.clone()),
            },
            containment_witness: match &equality {
                Outcome::Value(v) => Outcome::Value(v.containment_witness),
                Outcome::NotApplicable => Outcome::NotApplicable,
                Outcome::Undecided(e) => Outcome::Undecided(e.clone()),
            },
            verdicts: TheoremId::ALL
                .into_iter()
                .map(|id| (id, CheckOutcome::from_result(id.check(profile))))
                .collect(),
        }
    }

    pub fn has_failure(&self) -> bool {
        self.power_lemma == Outcome::Value(false)
            || self.verdicts.iter().any(|(_, v)| v.is_failure())
    }

    /// Scalar fields in schema order.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("name", self.name.clone()),
            ("p", self.p.to_string()),
            ("n", self.n.to_string()),
            ("order", self.order.to_string()),
            ("abelian", self.abelian.to_string()),
            ("class", self.class.to_string()),
            ("rank", self.rank.to_string()),
            ("center_order", self.center_order.to_string()),
            (
                "lower_central_orders",
                join_orders(&self.lower_central_orders),
            ),
            (
                "upper_central_orders",
                join_orders(&self.upper_central_orders),
            ),
            ("frattini_order", self.frattini_order.to_string()),
            ("abelianization_type", self.abelianization_type.to_string()),
            ("center_type", self.center_type.to_string()),
            ("regular", self.regular.to_string()),
            ("power_lemma", self.power_lemma.to_string()),
            ("purely_nonabelian", self.purely_nonabelian.to_string()),
            ("autz_enumerated", self.autz_enumerated.to_string()),
            ("autz_formula", self.autz_formula.to_string()),
            ("zinn_order", self.zinn_order.to_string()),
            ("autz_equals_zinn", self.autz_equals_zinn.to_string()),
            ("containment_witness", self.containment_witness.to_string()),
        ]
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (key, value) in self.fields() {
            writeln!(out, "{key}: {value}").unwrap();
        }
        for (id, outcome) in &self.verdicts {
            writeln!(out, "verdict.{id}: {}", outcome.status()).unwrap();
        }
        out
    }

    /// Header and one row: the scalar fields, then one status column per
    /// theorem.
    pub fn to_csv(&self) -> String {
        let mut header: Vec<String> = self.fields().iter().map(|(k, _)| k.to_string()).collect();
        let mut row: Vec<String> = self.fields().into_iter().map(|(_, v)| v).collect();
        for (id, outcome) in &self.verdicts {
            header.push(format!("verdict.{id}"));
            row.push(outcome.short_status().to_string());
        }
        write_csv([header, row])
    }
}

fn write_csv<I, R>(rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.write_record(row).expect("writing to memory");
    }
    String::from_utf8(writer.into_inner().expect("flushing to memory")).expect("utf-8 input")
}

/// Result of one theorem over one catalog entry.
#[derive(Debug, Clone)]
pub struct VerdictRow {
    pub name: String,
    pub outcome: CheckOutcome,
}

#[derive(Debug, Clone)]
pub struct TheoremSection {
    pub id: TheoremId,
    /// One row per entry, in catalog order.
    pub rows: Vec<VerdictRow>,
}

impl TheoremSection {
    fn applicable(&self) -> impl Iterator<Item = (&str, &TheoremVerdict)> {
        self.rows.iter().filter_map(|r| match &r.outcome {
            CheckOutcome::Verdict(v) if v.is_applicable() => Some((r.name.as_str(), v)),
            _ => None,
        })
    }

    fn inapplicable(&self) -> impl Iterator<Item = (&str, &str)> {
        self.rows.iter().filter_map(|r| match &r.outcome {
            CheckOutcome::Verdict(v) => v.failed_hypothesis().map(|h| (r.name.as_str(), h)),
            CheckOutcome::Error(_) => None,
        })
    }

    fn errors(&self) -> impl Iterator<Item = (&str, &str)> {
        self.rows.iter().filter_map(|r| match &r.outcome {
            CheckOutcome::Error(e) => Some((r.name.as_str(), e.as_str())),
            CheckOutcome::Verdict(_) => None,
        })
    }

    pub fn applicable_count(&self) -> usize {
        self.applicable().count()
    }

    pub fn failed_count(&self) -> usize {
        self.applicable().filter(|(_, v)| !v.pass).count()
    }

    pub fn error_count(&self) -> usize {
        self.errors().count()
    }
}

/// Outcome of `verify` over a catalog.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub sections: Vec<TheoremSection>,
    pub load_errors: Vec<EntryError>,
    pub skipped: Vec<String>,
    /// Present when the necessary-conditions check was selected.
    pub witnesses: Option<Vec<String>>,
}

/// Exit status of the command line: all checks passed.
pub const EXIT_PASS: i32 = 0;
/// A verdict failed or a check could not be completed.
pub const EXIT_VERDICT_FAILED: i32 = 1;
/// An input could not be read, parsed, or realized.
pub const EXIT_INPUT_ERROR: i32 = 2;

impl VerifyReport {
    pub fn run(catalog: &Catalog, selection: TheoremSelection) -> Self {
        let ids = selection.ids();
        // per entry, per id
        let results: Vec<Vec<CheckOutcome>> = catalog
            .entries
            .par_iter()
            .map(|e| {
                ids.iter()
                    .map(|id| CheckOutcome::from_result(id.check(&e.profile)))
                    .collect()
            })
            .collect();
        let sections = ids
            .iter()
            .enumerate()
            .map(|(k, &id)| TheoremSection {
                id,
                rows: catalog
                    .entries
                    .iter()
                    .zip(&results)
                    .map(|(e, r)| VerdictRow {
                        name: e.name().to_string(),
                        outcome: r[k].clone(),
                    })
                    .collect(),
            })
            .collect();
        let witnesses = ids
            .contains(&TheoremId::NecessaryConditions)
            .then(|| non_sufficiency_witnesses(&catalog.profiles()));
        Self {
            sections,
            load_errors: catalog.errors.clone(),
            skipped: catalog.skipped.clone(),
            witnesses,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if !self.load_errors.is_empty() {
            EXIT_INPUT_ERROR
        } else if self
            .sections
            .iter()
            .any(|s| s.failed_count() > 0 || s.error_count() > 0)
        {
            EXIT_VERDICT_FAILED
        } else {
            EXIT_PASS
        }
    }

    /// Diagnostics that do not affect the exit code.
    pub fn warnings(&self) -> Vec<String> {
        self.sections
            .iter()
            .filter(|s| s.applicable_count() == 0)
            .map(|s| format!("warning: {}: no applicable entries", s.id))
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self
            .sections
            .iter()
            .flat_map(|s| s.rows.iter().map(|r| r.name.len()))
            .max()
            .unwrap_or(4)
            .max(4);
        for s in &self.sections {
            writeln!(out, "== {}: {}", s.id, s.id.statement()).unwrap();
            writeln!(
                out,
                "{:width$}  {:5}  {:5}  {:4}  notes",
                "name", "left", "right", "pass"
            )
            .unwrap();
            for (name, v) in s.applicable() {
                writeln!(
                    out,
                    "{name:width$}  {:5}  {:5}  {:4}  {}",
                    v.left,
                    v.right,
                    pass_word(v.pass),
                    v.notes.join("; ")
                )
                .unwrap();
            }
            let inapplicable: Vec<_> = s.inapplicable().collect();
            writeln!(out, "inapplicable ({}):", inapplicable.len()).unwrap();
            for (name, why) in inapplicable {
                writeln!(out, "  {name}: {why}").unwrap();
            }
            for (name, e) in s.errors() {
                writeln!(out, "error: {name}: {e}").unwrap();
            }
            writeln!(
                out,
                "summary: {} applicable, {} passed, {} failed, {} errors\n",
                s.applicable_count(),
                s.applicable_count() - s.failed_count(),
                s.failed_count(),
                s.error_count()
            )
            .unwrap();
        }
        if let Some(w) = &self.witnesses {
            writeln!(out, "non-sufficiency witnesses: {}", list_or_none(w)).unwrap();
        }
        writeln!(out, "skipped p=5 entries: {}", list_or_none(&self.skipped)).unwrap();
        writeln!(out, "load errors ({}):", self.load_errors.len()).unwrap();
        for e in &self.load_errors {
            writeln!(out, "  {e}").unwrap();
        }
        let overall = match self.exit_code() {
            EXIT_PASS => "PASS",
            EXIT_VERDICT_FAILED => "FAIL",
            _ => "INPUT ERROR",
        };
        writeln!(out, "overall: {overall}").unwrap();
        out
    }

    /// One row per (theorem, entry); load errors are not included.
    pub fn to_csv(&self) -> String {
        let header = [
            "theorem",
            "name",
            "applicable",
            "left",
            "right",
            "pass",
            "detail",
        ]
        .map(String::from)
        .to_vec();
        let mut rows = vec![header];
        for s in &self.sections {
            for r in &s.rows {
                let row = match &r.outcome {
                    CheckOutcome::Verdict(v) => [
                        s.id.to_string(),
                        r.name.clone(),
                        v.is_applicable().to_string(),
                        v.left.to_string(),
                        v.right.to_string(),
                        r.outcome.short_status().to_string(),
                        v.failed_hypothesis()
                            .map(str::to_string)
                            .unwrap_or_else(|| v.notes.join("; ")),
                    ],
                    CheckOutcome::Error(e) => [
                        s.id.to_string(),
                        r.name.clone(),
                        "true".into(),
                        String::new(),
                        String::new(),
                        "error".into(),
                        e.clone(),
                    ],
                };
                rows.push(row.to_vec());
            }
        }
        write_csv(rows)
    }
}

fn list_or_none(items: &[String]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.join(", ")
    }
}

/// Formula against enumeration, and the homomorphism count against brute
/// force when both abelian groups are small enough.
#[derive(Debug, Clone)]
pub struct OracleComparison {
    pub name: String,
    pub purity: PureStatus,
    pub abelianization_type: AbelianType,
    pub center_type: AbelianType,
    pub formula: u64,
    pub enumerated: usize,
    /// `(brute force count, formula)` when run.
    pub hom_check: Option<(u64, u64)>,
}

/// Largest abelian group order for the brute-force homomorphism count.
pub const HOM_BRUTE_FORCE_LIMIT: usize = 81;

impl OracleComparison {
    pub fn run(profile: &GroupProfile) -> Result<Self> {
        use crate::central_aut::{count_homomorphisms, hom_order};
        use crate::group::{FiniteGroup, QuotientGroup};

        let purity = profile.purity()?;
        let formula = profile.formula()?;
        let enumerated = profile.autz()?.order();
        let group = profile.group();
        let derived = profile.derived();
        let quotient = QuotientGroup::new(group, &derived)?;
        let center = profile.center().as_group(group);
        let hom_check = (quotient.order() <= HOM_BRUTE_FORCE_LIMIT
            && center.order() <= HOM_BRUTE_FORCE_LIMIT)
            .then(|| {
                (
                    count_homomorphisms(&quotient, &center),
                    hom_order(profile.abelianization_type(), profile.center_type()),
                )
            });
        Ok(Self {
            name: profile.name().to_string(),
            purity,
            abelianization_type: profile.abelianization_type().clone(),
            center_type: profile.center_type().clone(),
            formula,
            enumerated,
            hom_check,
        })
    }

    pub fn pass(&self) -> bool {
        self.formula == self.enumerated as u64 && self.hom_check.is_none_or(|(a, b)| a == b)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "name: {}", self.name).unwrap();
        writeln!(out, "purely_nonabelian: {}", self.purity).unwrap();
        writeln!(out, "abelianization_type: {}", self.abelianization_type).unwrap();
        writeln!(out, "center_type: {}", self.center_type).unwrap();
        writeln!(
            out,
            "autz: formula {} vs enumerated {}: {}",
            self.formula,
            self.enumerated,
            pass_word(self.formula == self.enumerated as u64)
        )
        .unwrap();
        match self.hom_check {
            Some((brute, formula)) => writeln!(
                out,
                "hom: formula {formula} vs brute force {brute}: {}",
                pass_word(brute == formula)
            )
            .unwrap(),
            None => writeln!(
                out,
                "hom: brute force skipped (order above {HOM_BRUTE_FORCE_LIMIT})"
            )
            .unwrap(),
        }
        writeln!(out, "result: {}", pass_word(self.pass())).unwrap();
        out
    }

    pub fn to_csv(&self) -> String {
        let (brute, hom) = match self.hom_check {
            Some((a, b)) => (a.to_string(), b.to_string()),
            None => ("n/a".into(), "n/a".into()),
        };
        write_csv([
            [
                "name",
                "purely_nonabelian",
                "abelianization_type",
                "center_type",
                "autz_formula",
                "autz_enumerated",
                "hom_formula",
                "hom_brute_force",
                "result",
            ]
            .map(String::from),
            [
                self.name.clone(),
                self.purity.to_string(),
                self.abelianization_type.to_string(),
                self.center_type.to_string(),
                self.formula.to_string(),
                self.enumerated.to_string(),
                hom,
                brute,
                pass_word(self.pass()).to_string(),
            ],
        ])
    }
}

/// The power-commutator property check, run only on regular groups.
pub fn power_lemma_outcome(profile: &GroupProfile) -> Outcome<bool> {
    match profile.is_regular() {
        Ok(true) => Outcome::Value(power_lemma_holds(profile.group())),
        Ok(false) => Outcome::NotApplicable,
        Err(e) => Outcome::Undecided(e.to_string()),
    }
}
