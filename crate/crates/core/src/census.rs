//! Exhaustive enumeration of valid words and self-intersection statistics.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::CensusError;
use crate::family::{family_word, FamilyId};
use crate::intersect::{self_intersection, Intersector};
use crate::word::{ArcWord, Puncture, Seam};

/// Minimum and maximum per word length, as printed (lengths 2 to 16).
pub const CENSUS_REFERENCE: &str = include_str!("../data/census_reference.csv");

/// `(word_length, min, max)` rows of [`CENSUS_REFERENCE`].
pub fn census_reference() -> Vec<(usize, u64, u64)> {
    CENSUS_REFERENCE
        .lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let f: Vec<u64> = l.split(',').map(|x| x.trim().parse().unwrap()).collect();
            (f[0] as usize, f[1], f[2])
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub word_length: usize,
    pub word_count: u64,
    pub min_i: u64,
    pub max_i: u64,
    pub histogram: BTreeMap<u64, u64>,
}

impl CensusReport {
    /// `i,count` rows in ascending `i`.
    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("i,count\n");
        for (i, c) in &self.histogram {
            out.push_str(&format!("{i},{c}\n"));
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct CensusOptions {
    /// Worker threads; 0 means the rayon default.
    pub parallelism: usize,
    pub budget: Option<Duration>,
}

fn seam_ok(prev: Option<Seam>, start: Puncture, s: Seam) -> bool {
    match prev {
        None => !start.forbids(s),
        Some(p) => p != s.inverse(),
    }
}

fn two_letter_words() -> Vec<ArcWord> {
    let mut out = Vec::new();
    for a in Puncture::ALL {
        for b in Puncture::ALL {
            if let Ok(w) = ArcWord::new(a, Vec::new(), b) {
                out.push(w);
            }
        }
    }
    out
}

/// Every valid word of the given total length, in lexicographic order
/// over `1 < 2 < 3 < A < B < a < b`.
pub fn enumerate_words(word_length: usize) -> WordIter {
    WordIter::new(word_length)
}

pub struct WordIter {
    len: usize,
    start: usize,
    seams: Vec<Seam>,
    end: usize,
    done: bool,
    two: Option<std::vec::IntoIter<ArcWord>>,
}

impl WordIter {
    fn new(word_length: usize) -> Self {
        let mut it = WordIter {
            len: word_length.saturating_sub(2),
            start: 0,
            seams: Vec::new(),
            end: 0,
            done: word_length < 2,
            two: None,
        };
        if word_length == 2 {
            it.two = Some(two_letter_words().into_iter());
        } else if !it.done {
            it.done = !it.first_seams_from(0);
        }
        it
    }

    /// Fills positions `k..` with the smallest valid letters.
    fn fill_from(&mut self, k: usize) {
        let start = Puncture::ALL[self.start];
        self.seams.truncate(k);
        while self.seams.len() < self.len {
            let prev = self.seams.last().copied();
            let s = Seam::ENUMERATION_ORDER
                .into_iter()
                .find(|&s| seam_ok(prev, start, s))
                .expect("three letters always remain");
            self.seams.push(s);
        }
    }

    fn first_seams_from(&mut self, start: usize) -> bool {
        if start >= 3 {
            return false;
        }
        self.start = start;
        self.fill_from(0);
        self.end = 0;
        true
    }

    /// Next reduced seam sequence for the current start, if any.
    fn advance_seams(&mut self) -> bool {
        let start = Puncture::ALL[self.start];
        let rank = |s: Seam| Seam::ENUMERATION_ORDER.iter().position(|&x| x == s).unwrap();
        for k in (0..self.len).rev() {
            let prev = k.checked_sub(1).map(|p| self.seams[p]);
            let next = Seam::ENUMERATION_ORDER[rank(self.seams[k]) + 1..]
                .iter()
                .copied()
                .find(|&s| seam_ok(prev, start, s));
            if let Some(s) = next {
                self.seams[k] = s;
                self.fill_from(k + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for WordIter {
    type Item = ArcWord;

    fn next(&mut self) -> Option<ArcWord> {
        if let Some(two) = &mut self.two {
            return two.next();
        }
        while !self.done {
            if self.end == 3 {
                self.end = 0;
                if !self.advance_seams() && !self.first_seams_from(self.start + 1) {
                    self.done = true;
                }
                continue;
            }
            let end = Puncture::ALL[self.end];
            self.end += 1;
            let last = *self.seams.last().expect("len >= 1");
            if !end.forbids(last) {
                return Some(ArcWord::new_unchecked(
                    Puncture::ALL[self.start],
                    self.seams.clone(),
                    end,
                ));
            }
        }
        None
    }
}

struct Task {
    start: Puncture,
    prefix: Vec<Seam>,
}

fn tasks(seam_len: usize) -> Vec<Task> {
    let depth = seam_len.min(3);
    let mut out = Vec::new();
    for start in Puncture::ALL {
        let mut stack = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == depth {
                out.push(Task {
                    start,
                    prefix,
                });
                continue;
            }
            for s in Seam::ENUMERATION_ORDER.into_iter().rev() {
                if seam_ok(prefix.last().copied(), start, s) {
                    let mut p = prefix.clone();
                    p.push(s);
                    stack.push(p);
                }
            }
        }
    }
    out
}

struct Tally {
    histogram: Vec<u64>,
    visited: u64,
}

struct Worker<'a> {
    counter: Intersector,
    tally: Tally,
    deadline: Option<Instant>,
    expired: &'a AtomicBool,
}

impl Worker<'_> {
    fn dfs(&mut self, start: Puncture, seams: &mut Vec<Seam>, len: usize) {
        if seams.len() == len {
            let last = *seams.last().expect("len >= 1");
            for end in Puncture::ALL {
                if !end.forbids(last) {
                    let i = self.counter.count_parts(start, seams, end, None) as usize;
                    if i >= self.tally.histogram.len() {
                        self.tally.histogram.resize(i + 1, 0);
                    }
                    self.tally.histogram[i] += 1;
                }
            }
            self.tally.visited += 1;
            if self.tally.visited.is_multiple_of(4096) {
                if let Some(d) = self.deadline {
                    if Instant::now() > d {
                        self.expired.store(true, Ordering::Relaxed);
                    }
                }
            }
            return;
        }
        if self.expired.load(Ordering::Relaxed) {
            return;
        }
        for s in Seam::ENUMERATION_ORDER {
            if seam_ok(seams.last().copied(), start, s) {
                seams.push(s);
                self.dfs(start, seams, len);
                seams.pop();
            }
        }
    }
}

fn merge(mut a: Tally, b: Tally) -> Tally {
    if a.histogram.len() < b.histogram.len() {
        a.histogram.resize(b.histogram.len(), 0);
    }
    for (x, y) in a.histogram.iter_mut().zip(&b.histogram) {
        *x += y;
    }
    a.visited += b.visited;
    a
}

pub fn census(word_length: usize, parallelism: usize) -> Result<CensusReport, CensusError> {
    census_with(
        word_length,
        &CensusOptions {
            parallelism,
            budget: None,
        },
    )
}

/// Runs the census, fanning out over seam prefixes. The report does not
/// depend on the number of workers.
pub fn census_with(word_length: usize, opts: &CensusOptions) -> Result<CensusReport, CensusError> {
    if word_length < 2 {
        return Err(CensusError::TooShort(word_length));
    }
    let deadline = opts.budget.map(|b| Instant::now() + b);
    let expired = AtomicBool::new(false);
    let tally = if word_length == 2 {
        let mut histogram = Vec::new();
        for w in two_letter_words() {
            let i = self_intersection(&w) as usize;
            if i >= histogram.len() {
                histogram.resize(i + 1, 0);
            }
            histogram[i] += 1;
        }
        Tally {
            histogram,
            visited: 0,
        }
    } else {
        let len = word_length - 2;
        let work = tasks(len);
        let run = || {
            work.par_iter()
                .map(|t| {
                    let mut worker = Worker {
                        counter: Intersector::new(),
                        tally: Tally {
                            histogram: Vec::new(),
                            visited: 0,
                        },
                        deadline,
                        expired: &expired,
                    };
                    if let Some(d) = deadline {
                        if Instant::now() > d {
                            expired.store(true, Ordering::Relaxed);
                        }
                    }
                    if !expired.load(Ordering::Relaxed) {
                        let mut seams = t.prefix.clone();
                        worker.dfs(t.start, &mut seams, len);
                    }
                    worker.tally
                })
                .reduce(
                    || Tally {
                        histogram: Vec::new(),
                        visited: 0,
                    },
                    merge,
                )
        };
        let mut builder = rayon::ThreadPoolBuilder::new();
        if opts.parallelism > 0 {
            builder = builder.num_threads(opts.parallelism);
        }
        match builder.build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        }
    };
    if expired.load(Ordering::Relaxed) {
        return Err(CensusError::BudgetExceeded);
    }
    let histogram: BTreeMap<u64, u64> = tally
        .histogram
        .iter()
        .enumerate()
        .filter(|(_, c)| **c > 0)
        .map(|(i, c)| (i as u64, *c))
        .collect();
    Ok(CensusReport {
        word_length,
        word_count: histogram.values().sum(),
        min_i: *histogram.keys().next().unwrap_or(&0),
        max_i: *histogram.keys().next_back().unwrap_or(&0),
        histogram,
    })
}

/// The expected maximum: `L^2/4 + L` for even `L`, `(L^2 - 1)/4 + L` for odd.
pub fn conjectured_max(word_length: usize) -> u64 {
    let l = word_length.saturating_sub(2) as u64;
    l * l / 4 + l
}

/// The family word of the given length expected to attain the maximum.
pub fn conjectured_maximizer(word_length: usize) -> ArcWord {
    let l = word_length.saturating_sub(2) as u32;
    let (id, n) = if l.is_multiple_of(2) {
        (FamilyId::F2, l / 2)
    } else {
        (FamilyId::F4, (l - 1) / 2)
    };
    family_word(id, n, None).expect("F2 and F4 accept every n")
}

/// True iff the census maximum matches the formula and the family word
/// of that length attains it.
pub fn check_conjectured_max(word_length: usize, parallelism: usize) -> Result<bool, CensusError> {
    let report = census(word_length, parallelism)?;
    let expected = conjectured_max(word_length);
    let witness = conjectured_maximizer(word_length);
    Ok(report.max_i == expected
        && witness.word_length() == word_length
        && self_intersection(&witness) == expected)
}
