//! Regeneration of the decidable pair tables from chord interleaving, and
//! comparison against the checked-in transcription.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::planar::{classify_decidable, segment_labels, PairClass, Segment};

/// `w_i w_j CLASS` per line, rows as printed.
pub const DECIDABLE_PAIRS: &str = include_str!("../data/decidable_pairs.txt");

pub type LabelPair = (String, String);

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PairTables {
    pub intersecting: BTreeSet<LabelPair>,
    pub nonintersecting: BTreeSet<LabelPair>,
}

impl PairTables {
    /// Adds `(b, a)` for every `(a, b)`.
    pub fn swap_closure(&self) -> PairTables {
        let close = |s: &BTreeSet<LabelPair>| {
            s.iter()
                .flat_map(|(a, b)| [(a.clone(), b.clone()), (b.clone(), a.clone())])
                .collect()
        };
        PairTables {
            intersecting: close(&self.intersecting),
            nonintersecting: close(&self.nonintersecting),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub pair: LabelPair,
    pub expected: Option<PairClass>,
    pub computed: Option<PairClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub intersecting: usize,
    pub nonintersecting: usize,
    pub mismatches: Vec<Mismatch>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Parses the embedded transcription. Panics only if the checked-in file is corrupt.
pub fn embedded_tables() -> PairTables {
    parse_tables(DECIDABLE_PAIRS).expect("embedded table file is well formed")
}

pub fn parse_tables(text: &str) -> Result<PairTables, String> {
    let mut t = PairTables::default();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        let [a, b, class] = f[..] else {
            return Err(format!("line {}: expected three fields", n + 1));
        };
        let pair = (a.to_string(), b.to_string());
        match class {
            "INTERSECTING" => t.intersecting.insert(pair),
            "NONINTERSECTING" => t.nonintersecting.insert(pair),
            other => return Err(format!("line {}: unknown class {other}", n + 1)),
        };
    }
    Ok(t)
}

/// Classifies every ordered pair of occurring labels.
pub fn regenerate_tables() -> PairTables {
    let labels = segment_labels();
    let mut t = PairTables::default();
    for a in &labels {
        let sa = Segment::from_label(a, 0).expect("label from segment_labels");
        for b in &labels {
            let sb = Segment::from_label(b, 0).expect("label from segment_labels");
            let pair = (a.clone(), b.clone());
            match classify_decidable(&sa, &sb) {
                PairClass::Intersecting => t.intersecting.insert(pair),
                PairClass::NonIntersecting => t.nonintersecting.insert(pair),
                PairClass::Undecidable => false,
            };
        }
    }
    t
}

/// Compares the regenerated tables with the transcription.
///
/// The printed rows list some pairs in one direction only, so both sides
/// are compared after closing under argument swap.
pub fn verify_tables() -> TableReport {
    let expected = embedded_tables().swap_closure();
    let computed = regenerate_tables();
    let class_of = |t: &PairTables, p: &LabelPair| {
        if t.intersecting.contains(p) {
            Some(PairClass::Intersecting)
        } else if t.nonintersecting.contains(p) {
            Some(PairClass::NonIntersecting)
        } else {
            None
        }
    };
    let all: BTreeSet<&LabelPair> = expected
        .intersecting
        .iter()
        .chain(&expected.nonintersecting)
        .chain(&computed.intersecting)
        .chain(&computed.nonintersecting)
        .collect();
    let mut mismatches = Vec::new();
    for p in all {
        let (e, c) = (class_of(&expected, p), class_of(&computed, p));
        let conflicting = expected.intersecting.contains(p) && expected.nonintersecting.contains(p);
        if e != c || conflicting {
            mismatches.push(Mismatch {
                pair: p.clone(),
                expected: e,
                computed: c,
            });
        }
    }
    TableReport {
        intersecting: computed.intersecting.len(),
        nonintersecting: computed.nonintersecting.len(),
        mismatches,
    }
}
