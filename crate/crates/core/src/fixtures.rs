//! `word,expected_i` fixture files.

use std::path::Path;

use serde::Serialize;

use crate::error::FixtureError;
use crate::intersect::Intersector;
use crate::word::ArcWord;

/// The checked-in low-lying examples.
pub const LOW_LYING_EXAMPLES: &str = include_str!("../data/low_lying_examples.csv");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureRow {
    pub word: ArcWord,
    pub expected_i: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureResult {
    pub word: ArcWord,
    pub expected_i: u64,
    pub computed_i: u64,
}

impl FixtureResult {
    pub fn passed(&self) -> bool {
        self.expected_i == self.computed_i
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureReport {
    pub total: usize,
    pub passed: usize,
    pub failures: Vec<FixtureResult>,
}

impl FixtureReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Skips blank lines, `#` comments and a `word,expected_i` header.
pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureRow>, FixtureError> {
    let mut rows = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line == "word,expected_i" {
            continue;
        }
        let err = |reason: String| FixtureError::Format { line: k + 1, reason };
        let (word, value) = line
            .split_once(',')
            .ok_or_else(|| err("expected word,expected_i".into()))?;
        let word = word.trim().parse().map_err(|e| err(format!("{e}")))?;
        let expected_i = value
            .trim()
            .parse()
            .map_err(|_| err(format!("bad value {value:?}")))?;
        rows.push(FixtureRow { word, expected_i });
    }
    Ok(rows)
}

pub fn load_fixtures(path: &Path) -> Result<Vec<FixtureRow>, FixtureError> {
    parse_fixtures(&std::fs::read_to_string(path)?)
}

pub fn verify_fixtures(rows: &[FixtureRow]) -> FixtureReport {
    let mut counter = Intersector::new();
    let failures: Vec<FixtureResult> = rows
        .iter()
        .map(|r| FixtureResult {
            word: r.word.clone(),
            expected_i: r.expected_i,
            computed_i: counter.count(&r.word),
        })
        .filter(|r| !r.passed())
        .collect();
    FixtureReport {
        total: rows.len(),
        passed: rows.len() - failures.len(),
        failures,
    }
}
