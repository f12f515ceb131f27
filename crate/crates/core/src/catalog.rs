//! Directories of presentation files with embedded expectations.
//!
//! Besides the presentation grammar, an entry may carry metadata lines,
//! which the presentation parser treats as comments:
//!
//! ```text
//! #@ provenance <free text>
//! #@ expect order|class|rank|center <integer>
//! ```
//!
//! Every `expect` line is checked against the realized group at load time.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{realize, FiniteGroup};
use crate::pcp::{parse_presentation, PcPresentation};
use crate::profile::GroupProfile;

/// File extension of presentation files.
pub const EXTENSION: &str = "pc";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExpectKey {
    Order,
    Class,
    Rank,
    Center,
}

impl ExpectKey {
    pub fn as_str(self) -> &'static str {
        match self {
            ExpectKey::Order => "order",
            ExpectKey::Class => "class",
            ExpectKey::Rank => "rank",
            ExpectKey::Center => "center",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "order" => ExpectKey::Order,
            "class" => ExpectKey::Class,
            "rank" => ExpectKey::Rank,
            "center" => ExpectKey::Center,
            _ => return None,
        })
    }

    fn measure(self, profile: &GroupProfile) -> u64 {
        (match self {
            ExpectKey::Order => profile.order(),
            ExpectKey::Class => profile.class(),
            ExpectKey::Rank => profile.rank(),
            ExpectKey::Center => profile.center().order(),
        }) as u64
    }
}

impl fmt::Display for ExpectKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A parsed, not yet realized, catalog file.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub path: PathBuf,
    pub presentation: PcPresentation,
    pub expectations: Vec<(ExpectKey, u64)>,
    pub provenance: Option<String>,
}

impl CatalogEntry {
    pub fn name(&self) -> &str {
        self.presentation.name()
    }

    pub fn parse(path: impl Into<PathBuf>, text: &str) -> Result<Self> {
        let presentation = parse_presentation(text)?;
        let mut expectations = Vec::new();
        let mut provenance = None;
        for (k, line) in text.lines().enumerate() {
            let Some(rest) = line.trim_start().strip_prefix("#@") else {
                continue;
            };
            let syntax = |message: String| Error::Syntax {
                line: k + 1,
                column: 1,
                message,
            };
            let mut words = rest.split_whitespace();
            match words.next() {
                Some("provenance") => {
                    provenance = Some(words.collect::<Vec<_>>().join(" "));
                }
                Some("expect") => {
                    let key = words.next().unwrap_or_default();
                    let key = ExpectKey::parse(key)
                        .ok_or_else(|| syntax(format!("unknown expectation `{key}`")))?;
                    let value = words
                        .next()
                        .and_then(|v| v.parse::<u64>().ok())
                        .ok_or_else(|| syntax(format!("expectation `{key}` needs an integer")))?;
                    if words.next().is_some() {
                        return Err(syntax("trailing text after expectation".into()));
                    }
                    expectations.push((key, value));
                }
                other => {
                    return Err(syntax(format!(
                        "unknown metadata directive `{}`",
                        other.unwrap_or_default()
                    )))
                }
            }
        }
        Ok(Self {
            path: path.into(),
            presentation,
            expectations,
            provenance,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path.display(), e))?;
        Self::parse(path, &text)
    }

    /// Realizes the presentation and checks every expectation.
    pub fn load(self) -> Result<LoadedEntry> {
        let group = realize(&self.presentation)?;
        let profile = GroupProfile::new(group)?;
        for &(key, expected) in &self.expectations {
            let found = key.measure(&profile);
            if found != expected {
                return Err(Error::ExpectationFailed {
                    name: self.name().to_string(),
                    key: key.to_string(),
                    expected: expected.to_string(),
                    found: found.to_string(),
                });
            }
        }
        debug_assert_eq!(profile.group().order(), self.presentation.order());
        Ok(LoadedEntry {
            entry: self,
            profile,
        })
    }
}

#[derive(Debug)]
pub struct LoadedEntry {
    pub entry: CatalogEntry,
    pub profile: GroupProfile,
}

impl LoadedEntry {
    pub fn name(&self) -> &str {
        self.entry.name()
    }
}

/// A file that failed to parse, realize, or meet its expectations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryError {
    pub path: PathBuf,
    pub error: Error,
}

impl fmt::Display for EntryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let file = self.path.file_name().unwrap_or(self.path.as_os_str());
        write!(f, "{}: {}", file.to_string_lossy(), self.error)
    }
}

#[derive(Debug, Default)]
pub struct Catalog {
    /// Sorted by group name, then path.
    pub entries: Vec<LoadedEntry>,
    /// Sorted by path.
    pub errors: Vec<EntryError>,
    /// Names of `p = 5` entries left out, sorted.
    pub skipped: Vec<String>,
}

impl Catalog {
    pub fn profiles(&self) -> Vec<&GroupProfile> {
        self.entries.iter().map(|e| &e.profile).collect()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct LoadOptions {
    pub include_p5: bool,
}

/// Presentation files in `dir`, sorted by path.
pub fn catalog_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let read = fs::read_dir(dir).map_err(|e| Error::io(dir.display(), e))?;
    let mut files = Vec::new();
    for entry in read {
        let path = entry.map_err(|e| Error::io(dir.display(), e))?.path();
        if path.is_file() && path.extension().is_some_and(|x| x == EXTENSION) {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Loads every presentation file in `dir`. Per-file failures are collected
/// in [`Catalog::errors`]; only an unreadable directory is an error.
/// Entries are realized in parallel on the current rayon pool.
pub fn load_catalog(dir: &Path, options: LoadOptions) -> Result<Catalog> {
    let files = catalog_files(dir)?;
    let parsed: Vec<(PathBuf, Result<CatalogEntry>)> = files
        .into_iter()
        .map(|path| {
            let entry = CatalogEntry::read(&path);
            (path, entry)
        })
        .collect();

    let mut catalog = Catalog::default();
    let mut pending = Vec::new();
    for (path, entry) in parsed {
        match entry {
            Ok(e) if e.presentation.prime() == 5 && !options.include_p5 => {
                catalog.skipped.push(e.name().to_string());
            }
            Ok(e) => pending.push(e),
            Err(error) => catalog.errors.push(EntryError { path, error }),
        }
    }

    let loaded: Vec<(PathBuf, Result<LoadedEntry>)> = pending
        .into_par_iter()
        .map(|e| (e.path.clone(), e.load()))
        .collect();
    for (path, result) in loaded {
        match result {
            Ok(entry) => catalog.entries.push(entry),
            Err(error) => catalog.errors.push(EntryError { path, error }),
        }
    }

    catalog
        .entries
        .sort_by(|a, b| (a.name(), &a.entry.path).cmp(&(b.name(), &b.entry.path)));
    catalog.errors.sort_by(|a, b| a.path.cmp(&b.path));
    catalog.skipped.sort();
    Ok(catalog)
}
