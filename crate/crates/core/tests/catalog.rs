mod common;

use std::fs;

use centaut::catalog::{load_catalog, CatalogEntry, LoadOptions};
use centaut::report::{VerifyReport, EXIT_INPUT_ERROR, EXIT_PASS};
use centaut::theorems::{TheoremId, TheoremSelection};
use centaut::Error;

use common::{catalog_dir, fixture_dir, HEISENBERG};

#[test]
fn shipped_catalog_loads() {
    let catalog = load_catalog(&catalog_dir(), LoadOptions::default()).unwrap();
    assert!(catalog.errors.is_empty(), "{:?}", catalog.errors);
    assert!(catalog.entries.len() >= 8);
    assert_eq!(catalog.skipped, ["heisenberg_p5", "phi8_32_p5"]);
    let names: Vec<&str> = catalog.entries.iter().map(|e| e.name()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for e in &catalog.entries {
        assert!(
            e.entry.provenance.is_some(),
            "{} has no provenance",
            e.name()
        );
        assert!(
            !e.entry.expectations.is_empty(),
            "{} has no expectations",
            e.name()
        );
    }
}

#[test]
fn p5_entries_gated() {
    let catalog = load_catalog(&catalog_dir(), LoadOptions { include_p5: true }).unwrap();
    assert!(catalog.skipped.is_empty());
    let p5: Vec<&str> = catalog
        .entries
        .iter()
        .filter(|e| e.profile.prime() == 5)
        .map(|e| e.name())
        .collect();
    assert_eq!(p5, ["heisenberg_p5", "phi8_32_p5"]);
}

#[test]
fn corrupt_entry_reported_and_excluded() {
    let catalog = load_catalog(&fixture_dir("corrupt"), LoadOptions::default()).unwrap();
    assert_eq!(catalog.entries.len(), 2);
    assert_eq!(catalog.errors.len(), 1);
    let err = &catalog.errors[0];
    assert!(err.to_string().starts_with("metacyclic_bad.pc: "), "{err}");
    assert!(
        matches!(err.error, Error::InconsistentPresentation { .. }),
        "{err}"
    );

    let report = VerifyReport::run(&catalog, TheoremSelection::All);
    assert_eq!(report.exit_code(), EXIT_INPUT_ERROR);
    assert!(report.to_text().contains("metacyclic_bad.pc"));
}

#[test]
fn empty_directory() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("notes.txt"), "not a presentation").unwrap();
    let catalog = load_catalog(dir.path(), LoadOptions::default()).unwrap();
    assert!(catalog.entries.is_empty() && catalog.errors.is_empty());
    let report = VerifyReport::run(&catalog, TheoremSelection::All);
    assert_eq!(report.exit_code(), EXIT_PASS);
    assert_eq!(report.warnings().len(), TheoremId::ALL.len());
}

#[test]
fn missing_directory_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let err = load_catalog(&dir.path().join("absent"), LoadOptions::default()).unwrap_err();
    assert!(matches!(err, Error::Io { .. }));
}

#[test]
fn failed_expectation_names_the_key() {
    let dir = tempfile::tempdir().unwrap();
    let text = format!("#@ provenance derived: test\n#@ expect class 3\n{HEISENBERG}");
    fs::write(dir.path().join("h.pc"), text).unwrap();
    let catalog = load_catalog(dir.path(), LoadOptions::default()).unwrap();
    assert!(catalog.entries.is_empty());
    match &catalog.errors[0].error {
        Error::ExpectationFailed {
            key,
            expected,
            found,
            ..
        } => assert_eq!(
            (key.as_str(), expected.as_str(), found.as_str()),
            ("class", "3", "2")
        ),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn p2_order_p6_theorem_has_no_applicable_entries() {
    let catalog = load_catalog(&fixture_dir("p2"), LoadOptions::default()).unwrap();
    assert!(catalog.errors.is_empty());
    let id = TheoremId::OrderP6ClassThreeOrFour;
    let report = VerifyReport::run(&catalog, TheoremSelection::One(id));
    assert_eq!(report.sections[0].applicable_count(), 0);
    assert_eq!(report.exit_code(), EXIT_PASS);
    assert_eq!(
        report.warnings(),
        [format!("warning: {id}: no applicable entries")]
    );
}

#[test]
fn entry_round_trips_through_display() {
    let path = catalog_dir().join("phi8_32_p3.pc");
    let entry = CatalogEntry::read(&path).unwrap();
    let again = CatalogEntry::parse(&path, &entry.presentation.to_string()).unwrap();
    assert_eq!(again.presentation, entry.presentation);
}
