//! Self-intersection numbers by chain resolution over segment pairs.
//!
//! Pairs of segments are visited in lexicographic order. A decidable pair
//! is settled by chord interleaving. An undecidable pair is extended
//! forwards and backwards along both strands while they run along the same
//! edge; the two ends of that chain decide whether the lifts cross.

use std::fmt;

use serde::Serialize;

use crate::error::{ChainError, SideError};
use crate::planar::{
    classify_positions, corner_item, segments, BoundaryItem, PairClass, Segment,
};
use crate::word::{ArcWord, Puncture, Seam};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Polarity {
    /// Both strands end on the shared edge.
    Into,
    /// Both strands start on the shared edge.
    OutOf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Left,
    Right,
}

#[inline]
fn side_positions(shared: u8, polarity: Polarity, i: u8, j: u8) -> Side {
    let pi = i.wrapping_sub(shared) & 7;
    let pj = j.wrapping_sub(shared) & 7;
    let left = match polarity {
        Polarity::OutOf => pj > pi,
        Polarity::Into => pj < pi,
    };
    if left {
        Side::Left
    } else {
        Side::Right
    }
}

/// Which side strand `j` leaves strand `i` on, where both strands share the
/// edge `shared` and then separate towards `item_i` and `item_j`.
pub fn side_at_divergence(
    shared: BoundaryItem,
    polarity: Polarity,
    item_i: BoundaryItem,
    item_j: BoundaryItem,
) -> Result<Side, SideError> {
    if !shared.is_edge() {
        return Err(SideError::NotAnEdge);
    }
    if item_i == item_j {
        return Err(SideError::SameItem);
    }
    if item_i == shared || item_j == shared {
        return Err(SideError::SharedItem);
    }
    Ok(side_positions(
        shared.position(),
        polarity,
        item_i.position(),
        item_j.position(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ChainMode {
    Parallel,
    AntiParallel,
    Singleton,
}

/// One resolved chain. Pairs are 1-based `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainResult {
    /// From the backward end to the forward end.
    pub members: Vec<(usize, usize)>,
    pub mode: ChainMode,
    pub crossing: bool,
    pub terminal: (usize, usize),
}

impl ChainResult {
    pub fn decision(&self) -> u64 {
        self.crossing as u64
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    pub chains: u64,
    /// Forward and backward extension steps, summed over all chains.
    pub steps: u64,
}

struct Walk {
    mode: ChainMode,
    crossing: bool,
    terminal: (usize, usize),
    steps: u64,
}

#[inline]
fn norm(p: usize, q: usize) -> (usize, usize) {
    if p <= q {
        (p, q)
    } else {
        (q, p)
    }
}

/// Resolves the chain through the 0-based pair `(i, j)`, reporting every
/// traversed pair to `visit`.
#[inline]
fn walk(
    from: &[u8],
    to: &[u8],
    i: usize,
    j: usize,
    mut visit: impl FnMut(usize, usize),
) -> Result<Walk, ChainError> {
    let n = from.len();
    let class = classify_positions(from[i], to[i], from[j], to[j]);
    if class != PairClass::Undecidable {
        visit(i, j);
        return Ok(Walk {
            mode: ChainMode::Singleton,
            crossing: class == PairClass::Intersecting,
            terminal: (i, j),
            steps: 0,
        });
    }
    let anti = !(from[i] == from[j] || to[i] == to[j]);
    // strand 2 read backwards in anti-parallel mode
    let head2 = |q: usize| if anti { from[q] } else { to[q] };
    let tail2 = |q: usize| if anti { to[q] } else { from[q] };
    let step = |q: usize, fwd: bool| -> Option<usize> {
        if fwd != anti {
            (q + 1 < n).then_some(q + 1)
        } else {
            q.checked_sub(1)
        }
    };
    let mut steps = 0;
    visit(i, j);

    let (mut p, mut q) = (i, j);
    loop {
        let (e1, e2) = (to[p], head2(q));
        if e1 != e2 || e1 % 2 != 0 {
            break;
        }
        p += 1;
        q = step(q, true).ok_or(ChainError::AlignmentOverrun)?;
        if p >= n {
            return Err(ChainError::AlignmentOverrun);
        }
        steps += 1;
        visit(p, q);
    }
    let terminal = (p, q);
    let (e1, e2) = (to[p], head2(q));
    let forward = (e1 != e2).then(|| side_positions(from[p], Polarity::OutOf, e1, e2));

    let (mut p, mut q) = (i, j);
    loop {
        let (e1, e2) = (from[p], tail2(q));
        if e1 != e2 || e1 % 2 != 0 {
            break;
        }
        p = p.checked_sub(1).ok_or(ChainError::AlignmentOverrun)?;
        q = step(q, false).ok_or(ChainError::AlignmentOverrun)?;
        steps += 1;
        visit(p, q);
    }
    let (e1, e2) = (from[p], tail2(q));
    let backward = (e1 != e2).then(|| side_positions(to[p], Polarity::Into, e1, e2));

    let crossing = matches!((forward, backward), (Some(f), Some(b)) if f != b);
    Ok(Walk {
        mode: if anti {
            ChainMode::AntiParallel
        } else {
            ChainMode::Parallel
        },
        crossing,
        terminal,
        steps,
    })
}

fn positions_of(segs: &[Segment]) -> (Vec<u8>, Vec<u8>) {
    segs.iter()
        .map(|s| (s.from.position(), s.to.position()))
        .unzip()
}

/// Resolves the chain through the 1-based pair `(i, j)`.
pub fn resolve_chain(segs: &[Segment], i: usize, j: usize) -> Result<ChainResult, ChainError> {
    if i == 0 || i >= j || j > segs.len() {
        return Err(ChainError::BadPair { i, j });
    }
    let (from, to) = positions_of(segs);
    let mut raw = Vec::new();
    let w = walk(&from, &to, i - 1, j - 1, |p, q| raw.push((p, q)))?;
    Ok(chain_result(raw, &w))
}

fn chain_result(mut raw: Vec<(usize, usize)>, w: &Walk) -> ChainResult {
    // visit order is seed, forward steps, backward steps
    let fwd_len = raw
        .iter()
        .position(|&p| p == w.terminal)
        .map_or(raw.len(), |k| k + 1);
    let mut ordered: Vec<(usize, usize)> = raw.split_off(fwd_len);
    ordered.reverse();
    ordered.extend(raw);
    let members = ordered
        .into_iter()
        .filter(|(p, q)| p != q)
        .map(|(p, q)| {
            let (a, b) = norm(p, q);
            (a + 1, b + 1)
        })
        .collect();
    let (a, b) = norm(w.terminal.0, w.terminal.1);
    ChainResult {
        members,
        mode: w.mode,
        crossing: w.crossing,
        terminal: (a + 1, b + 1),
    }
}

/// Reusable buffers for counting many words.
#[derive(Default)]
pub struct Intersector {
    from: Vec<u8>,
    to: Vec<u8>,
    claimed: Vec<bool>,
}

impl Intersector {
    pub fn new() -> Self {
        Self::default()
    }

    fn load(&mut self, start: Puncture, seams: &[Seam], end: Puncture) {
        self.from.clear();
        self.to.clear();
        let Some((&first, &last)) = seams.first().zip(seams.last()) else {
            return;
        };
        self.from.push(corner_item(start, first).position());
        self.to.push(BoundaryItem::edge(first).position());
        for pair in seams.windows(2) {
            self.from.push(BoundaryItem::edge(pair[0].inverse()).position());
            self.to.push(BoundaryItem::edge(pair[1]).position());
        }
        let entry = last.inverse();
        self.from.push(BoundaryItem::edge(entry).position());
        self.to.push(corner_item(end, entry).position());
    }

    /// Counts for a seam sequence the caller knows to form a valid word.
    pub fn count_parts(
        &mut self,
        start: Puncture,
        seams: &[Seam],
        end: Puncture,
        stats: Option<&mut RunStats>,
    ) -> u64 {
        self.load(start, seams, end);
        let n = self.from.len();
        if n < 2 {
            return 0;
        }
        self.claimed.clear();
        self.claimed.resize(n * n, false);
        let (from, to, claimed) = (&self.from, &self.to, &mut self.claimed);
        let mut total = 0;
        let mut local = RunStats::default();
        for i in 0..n {
            for j in i + 1..n {
                if claimed[i * n + j] {
                    continue;
                }
                let w = walk(from, to, i, j, |p, q| {
                    let (a, b) = norm(p, q);
                    claimed[a * n + b] = true;
                })
                .expect("valid words never overrun");
                total += w.crossing as u64;
                local.chains += 1;
                local.steps += w.steps;
            }
        }
        if let Some(s) = stats {
            s.chains += local.chains;
            s.steps += local.steps;
        }
        total
    }

    pub fn count(&mut self, w: &ArcWord) -> u64 {
        self.count_parts(w.start(), w.seams(), w.end(), None)
    }
}

pub fn self_intersection(w: &ArcWord) -> u64 {
    Intersector::new().count(w)
}

pub fn self_intersection_with_stats(w: &ArcWord) -> (u64, RunStats) {
    let mut stats = RunStats::default();
    let i = Intersector::new().count_parts(w.start(), w.seams(), w.end(), Some(&mut stats));
    (i, stats)
}

/// All chains of a word, in the order the main loop meets them.
pub fn chains(w: &ArcWord) -> Vec<ChainResult> {
    let segs = segments(w);
    let n = segs.len();
    if n < 2 {
        return Vec::new();
    }
    let (from, to) = positions_of(&segs);
    let mut claimed = vec![false; n * n];
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if claimed[i * n + j] {
                continue;
            }
            let mut raw = Vec::new();
            let w = walk(&from, &to, i, j, |p, q| raw.push((p, q)))
                .expect("valid words never overrun");
            for &(p, q) in &raw {
                let (a, b) = norm(p, q);
                claimed[a * n + b] = true;
            }
            out.push(chain_result(raw, &w));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CellState {
    Unvisited,
    ChainMember,
    CountedHere,
    Zero,
}

impl CellState {
    pub fn symbol(self) -> &'static str {
        match self {
            CellState::Unvisited => "?",
            CellState::ChainMember => "X",
            CellState::CountedHere => "1",
            CellState::Zero => "0",
        }
    }
}

/// Per-pair record of one run, printable as a triangular grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairGrid {
    pub labels: Vec<String>,
    cells: Vec<CellState>,
}

impl PairGrid {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// State of the 1-based pair `(i, j)`, `i < j`.
    pub fn cell(&self, i: usize, j: usize) -> CellState {
        assert!(0 < i && i < j && j <= self.size(), "pair ({i}, {j}) out of range");
        self.cells[(i - 1) * self.size() + (j - 1)]
    }

    pub fn counted(&self) -> u64 {
        self.cells
            .iter()
            .filter(|c| **c == CellState::CountedHere)
            .count() as u64
    }

    /// Rows of cell symbols above the diagonal, row `i` listing `j = i+1..`.
    pub fn rows(&self) -> Vec<Vec<&'static str>> {
        let n = self.size();
        (1..n)
            .map(|i| (i + 1..=n).map(|j| self.cell(i, j).symbol()).collect())
            .collect()
    }
}

impl fmt::Display for PairGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size();
        let heads: Vec<String> = self
            .labels
            .iter()
            .enumerate()
            .map(|(k, l)| format!("w{}={}", k + 1, l))
            .collect();
        let width = heads.iter().map(String::len).max().unwrap_or(0);
        write!(f, "{:width$}", "")?;
        for h in &heads {
            write!(f, " {h:>width$}")?;
        }
        writeln!(f)?;
        for (i, h) in heads.iter().enumerate() {
            write!(f, "{h:>width$}")?;
            for j in 0..n {
                let s = if j > i { self.cell(i + 1, j + 1).symbol() } else { "" };
                write!(f, " {s:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Runs the count and records what happened at each pair.
///
/// Every member of a chain is marked `X`; the forward end of the chain is
/// then overwritten with `1` or `0` according to the decision.
pub fn trace(w: &ArcWord) -> PairGrid {
    let segs = segments(w);
    let n = segs.len();
    let mut cells = vec![CellState::Unvisited; n * n];
    for c in chains(w) {
        for &(i, j) in &c.members {
            cells[(i - 1) * n + (j - 1)] = CellState::ChainMember;
        }
        let (i, j) = c.terminal;
        cells[(i - 1) * n + (j - 1)] = if c.crossing {
            CellState::CountedHere
        } else {
            CellState::Zero
        };
    }
    PairGrid {
        labels: segs.iter().map(Segment::label).collect(),
        cells,
    }
}
