//! Committed sequence fixtures and verification of computed families
//! against them, including the two conjectured sequence identifications.
//!
//! Fixture files live in a directory as `<id>.seq`: `#` comment lines,
//! `id:` / `offset:` / `description:` headers, then decimal values separated
//! by commas or whitespace, possibly across several lines. Fixtures are
//! repository data; nothing is ever fetched.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::numbers::{gen_stirling_row, Natural};

/// A committed prefix of a catalogued integer sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFixture {
    pub id: String,
    pub description: String,
    /// Index of the first committed value.
    pub offset: i64,
    pub values: Vec<Natural>,
}

impl SequenceFixture {
    /// Value at the absolute sequence index, honouring the offset.
    pub fn value_at(&self, index: i64) -> Option<&Natural> {
        let pos = index.checked_sub(self.offset)?;
        if pos < 0 {
            return None;
        }
        self.values.get(pos as usize)
    }
}

/// All fixtures loaded from one directory, keyed by id.
#[derive(Debug, Clone, Default)]
pub struct FixtureSet {
    fixtures: BTreeMap<String, SequenceFixture>,
}

impl FixtureSet {
    pub fn get(&self, id: &str) -> Result<&SequenceFixture> {
        self.fixtures
            .get(id)
            .ok_or_else(|| Error::MissingFixture(id.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &SequenceFixture> {
        self.fixtures.values()
    }

    pub fn len(&self) -> usize {
        self.fixtures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fixtures.is_empty()
    }
}

/// Loads every `*.seq` file in the directory; malformed files fail with the
/// offending file and line.
pub fn load_fixtures(dir: &Path) -> Result<FixtureSet> {
    let entries = fs::read_dir(dir).map_err(|e| Error::FixtureDir(dir.to_path_buf(), e))?;
    let mut files: Vec<_> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "seq"))
        .collect();
    files.sort();
    let mut set = FixtureSet::default();
    for file in files {
        let fixture = parse_fixture(&file)?;
        if set.fixtures.contains_key(&fixture.id) {
            return Err(Error::DuplicateFixture(fixture.id));
        }
        set.fixtures.insert(fixture.id.clone(), fixture);
    }
    Ok(set)
}

fn parse_fixture(file: &Path) -> Result<SequenceFixture> {
    let err = |line: usize, msg: String| Error::FixtureParse {
        file: file.to_path_buf(),
        line,
        msg,
    };
    let text = fs::read_to_string(file)
        .map_err(|e| Error::FixtureDir(file.to_path_buf(), e))?;
    let mut id = None;
    let mut offset = None;
    let mut description = String::new();
    let mut values: Vec<Natural> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("id:") {
            id = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("offset:") {
            offset = Some(
                rest.trim()
                    .parse::<i64>()
                    .map_err(|e| err(lineno, format!("bad offset: {e}")))?,
            );
        } else if let Some(rest) = line.strip_prefix("description:") {
            description = rest.trim().to_string();
        } else {
            for token in line.split(|c: char| c == ',' || c.is_whitespace()) {
                if token.is_empty() {
                    continue;
                }
                let v = token
                    .parse::<BigUint>()
                    .map_err(|_| err(lineno, format!("non-numeric token {token:?}")))?;
                values.push(v);
            }
        }
    }
    let id = id.ok_or_else(|| err(last_line, "missing id: header".into()))?;
    if id.is_empty() {
        return Err(err(last_line, "empty id".into()));
    }
    let offset = offset.ok_or_else(|| err(last_line, "missing offset: header".into()))?;
    if values.is_empty() {
        return Err(err(last_line, "fixture holds no values".into()));
    }
    Ok(SequenceFixture {
        id,
        description,
        offset,
        values,
    })
}

/// First point of disagreement between a fixture prefix and computed terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// 0-based position within the compared prefix.
    pub index: usize,
    pub fixture: Natural,
    pub computed: Natural,
}

/// Outcome of comparing a computed prefix term-by-term against a fixture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceCheck {
    pub id: String,
    /// Number of leading terms compared (the shorter of the two lengths).
    pub compared: usize,
    pub mismatch: Option<Mismatch>,
}

impl SequenceCheck {
    pub fn is_match(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares the leading min(len) terms of fixture and computed values.
pub fn check_sequence(fixture: &SequenceFixture, computed: &[Natural]) -> SequenceCheck {
    let compared = fixture.values.len().min(computed.len());
    let mismatch = (0..compared)
        .find(|&i| fixture.values[i] != computed[i])
        .map(|i| Mismatch {
            index: i,
            fixture: fixture.values[i].clone(),
            computed: computed[i].clone(),
        });
    SequenceCheck {
        id: fixture.id.clone(),
        compared,
        mismatch,
    }
}

/// One compared term of a conjectured identification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureTerm {
    pub n: u32,
    pub computed: Natural,
    pub expected: Natural,
    pub agrees: bool,
}

/// Per-term report for one conjectured sequence identification; a hypothesis
/// check over the fixture prefix, not a proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    /// Rank r of the family S_{r,1}.
    pub r: u32,
    pub fixture_id: String,
    pub terms: Vec<ConjectureTerm>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.terms.iter().all(|t| t.agrees)
    }
}

/// Checks the conjectured identifications S_{3,1}(n,1) = fixture A001147(n)
/// and S_{4,1}(n,1) = fixture A007559(n) for n = 1..=n_max (clipped to the
/// committed prefix length).
pub fn verify_conjectures(n_max: u32, fixtures: &FixtureSet) -> Result<Vec<ConjectureReport>> {
    assert!(n_max >= 1, "n_max must be positive");
    let mut reports = Vec::new();
    for (r, id) in [(3, "A001147"), (4, "A007559")] {
        let fixture = fixtures.get(id)?;
        let mut terms = Vec::new();
        for n in 1..=n_max {
            let Some(expected) = fixture.value_at(i64::from(n)) else {
                break; // past the committed prefix
            };
            let row = gen_stirling_row(r, 1, n)?;
            let computed = row[&1].clone();
            terms.push(ConjectureTerm {
                n,
                agrees: &computed == expected,
                expected: expected.clone(),
                computed,
            });
        }
        reports.push(ConjectureReport {
            r,
            fixture_id: id.to_string(),
            terms,
        });
    }
    Ok(reports)
}
