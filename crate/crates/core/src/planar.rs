//! The fundamental domain: its boundary cycle, the segments a word cuts
//! into, and the decidable pair classification.

use std::fmt;

use serde::Serialize;

use crate::word::{ArcWord, Puncture, Seam};

/// A position on the boundary of the fundamental domain.
///
/// Discriminants are positions in the counterclockwise cycle
/// `a 1 A 3 b 2 B 3`. Edges sit at even positions, corners at odd ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[repr(u8)]
pub enum BoundaryItem {
    EdgeA = 0,
    V1 = 1,
    EdgeAInv = 2,
    /// Corner 3 between `A` and `b`.
    V3Alpha = 3,
    EdgeB = 4,
    V2 = 5,
    EdgeBInv = 6,
    /// Corner 3 between `B` and `a`.
    V3Beta = 7,
}

pub const CYCLE_LEN: u8 = 8;

const BY_POSITION: [BoundaryItem; 8] = [
    BoundaryItem::EdgeA,
    BoundaryItem::V1,
    BoundaryItem::EdgeAInv,
    BoundaryItem::V3Alpha,
    BoundaryItem::EdgeB,
    BoundaryItem::V2,
    BoundaryItem::EdgeBInv,
    BoundaryItem::V3Beta,
];

/// The boundary cycle, starting at edge `a`.
pub fn boundary_cycle() -> [BoundaryItem; 8] {
    BY_POSITION
}

impl BoundaryItem {
    pub fn position(self) -> u8 {
        self as u8
    }

    pub fn from_position(p: u8) -> BoundaryItem {
        BY_POSITION[(p % CYCLE_LEN) as usize]
    }

    pub fn successor(self) -> BoundaryItem {
        BoundaryItem::from_position(self.position() + 1)
    }

    pub fn is_edge(self) -> bool {
        self.position().is_multiple_of(2)
    }

    pub fn edge(s: Seam) -> BoundaryItem {
        match s {
            Seam::A => BoundaryItem::EdgeA,
            Seam::AInv => BoundaryItem::EdgeAInv,
            Seam::B => BoundaryItem::EdgeB,
            Seam::BInv => BoundaryItem::EdgeBInv,
        }
    }

    pub fn as_seam(self) -> Option<Seam> {
        match self {
            BoundaryItem::EdgeA => Some(Seam::A),
            BoundaryItem::EdgeAInv => Some(Seam::AInv),
            BoundaryItem::EdgeB => Some(Seam::B),
            BoundaryItem::EdgeBInv => Some(Seam::BInv),
            _ => None,
        }
    }

    /// The character used in segment labels: the seam letter or puncture digit.
    pub fn label_char(self) -> char {
        match self {
            BoundaryItem::V1 => '1',
            BoundaryItem::V2 => '2',
            BoundaryItem::V3Alpha | BoundaryItem::V3Beta => '3',
            e => e.as_seam().map(Seam::as_char).unwrap_or('?'),
        }
    }
}

impl fmt::Display for BoundaryItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundaryItem::V1 => "V1",
            BoundaryItem::V2 => "V2",
            BoundaryItem::V3Alpha => "V3a",
            BoundaryItem::V3Beta => "V3b",
            BoundaryItem::EdgeA => "a",
            BoundaryItem::EdgeAInv => "A",
            BoundaryItem::EdgeB => "b",
            BoundaryItem::EdgeBInv => "B",
        };
        f.write_str(s)
    }
}

/// The copy of corner 3 that is not adjacent to edge `e`.
pub fn corner3_item(e: Seam) -> BoundaryItem {
    match e {
        Seam::A | Seam::BInv => BoundaryItem::V3Alpha,
        Seam::AInv | Seam::B => BoundaryItem::V3Beta,
    }
}

/// The corner where a segment touching edge `e` meets puncture `n`.
pub fn corner_item(n: Puncture, e: Seam) -> BoundaryItem {
    match n {
        Puncture::One => BoundaryItem::V1,
        Puncture::Two => BoundaryItem::V2,
        Puncture::Three => corner3_item(e),
    }
}

/// One crossing of the fundamental domain by a lift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Segment {
    pub from: BoundaryItem,
    pub to: BoundaryItem,
    /// 1-based position along the word.
    pub index: usize,
}

impl Segment {
    /// Two-character label such as `bA` or `1B`.
    pub fn label(&self) -> String {
        let mut s = String::with_capacity(2);
        s.push(self.from.label_char());
        s.push(self.to.label_char());
        s
    }

    /// Inverse of [`Segment::label`], for labels that occur in valid words.
    pub fn from_label(label: &str, index: usize) -> Option<Segment> {
        let mut chars = label.chars();
        let (x, y) = (chars.next()?, chars.next()?);
        if chars.next().is_some() {
            return None;
        }
        let (from, to) = match (Seam::from_char(x), Seam::from_char(y)) {
            (Some(f), Some(t)) if f != t => (BoundaryItem::edge(f), BoundaryItem::edge(t)),
            (None, Some(t)) => {
                let n = Puncture::from_char(x)?;
                if n.forbids(t) {
                    return None;
                }
                (corner_item(n, t), BoundaryItem::edge(t))
            }
            (Some(f), None) => {
                let n = Puncture::from_char(y)?;
                if n.forbids(f) {
                    return None;
                }
                (BoundaryItem::edge(f), corner_item(n, f))
            }
            _ => return None,
        };
        Some(Segment { from, to, index })
    }
}

/// Cuts a word into its `L + 1` segments.
pub fn segments(w: &ArcWord) -> Vec<Segment> {
    let xs = w.seams();
    let (n1, n2) = (w.start(), w.end());
    let Some((&first, &last)) = xs.first().zip(xs.last()) else {
        let corner = |n: Puncture, three: BoundaryItem| match n {
            Puncture::Three => three,
            _ => corner_item(n, Seam::A),
        };
        return vec![Segment {
            from: corner(n1, BoundaryItem::V3Alpha),
            to: corner(n2, BoundaryItem::V3Beta),
            index: 1,
        }];
    };
    let mut out = Vec::with_capacity(xs.len() + 1);
    out.push(Segment {
        from: corner_item(n1, first),
        to: BoundaryItem::edge(first),
        index: 1,
    });
    for (t, pair) in xs.windows(2).enumerate() {
        out.push(Segment {
            from: BoundaryItem::edge(pair[0].inverse()),
            to: BoundaryItem::edge(pair[1]),
            index: t + 2,
        });
    }
    let entry = last.inverse();
    out.push(Segment {
        from: BoundaryItem::edge(entry),
        to: corner_item(n2, entry),
        index: xs.len() + 1,
    });
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PairClass {
    Intersecting,
    NonIntersecting,
    Undecidable,
}

/// True if `x` lies strictly inside the counterclockwise arc from `a` to `b`.
#[inline]
pub(crate) fn strictly_inside(a: u8, b: u8, x: u8) -> bool {
    let d = x.wrapping_sub(a) & 7;
    d != 0 && d < (b.wrapping_sub(a) & 7)
}

/// Classification on raw cycle positions.
#[inline]
pub(crate) fn classify_positions(sf: u8, st: u8, tf: u8, tt: u8) -> PairClass {
    let shares = |x: u8| x == tf || x == tt;
    if (sf.is_multiple_of(2) && shares(sf)) || (st.is_multiple_of(2) && shares(st)) {
        return PairClass::Undecidable;
    }
    if shares(sf) || shares(st) {
        return PairClass::NonIntersecting;
    }
    if strictly_inside(sf, st, tf) != strictly_inside(sf, st, tt) {
        PairClass::Intersecting
    } else {
        PairClass::NonIntersecting
    }
}

pub fn classify_decidable(s: &Segment, t: &Segment) -> PairClass {
    classify_positions(
        s.from.position(),
        s.to.position(),
        t.from.position(),
        t.to.position(),
    )
}

/// Every two-letter label that occurs in some valid word.
pub fn segment_labels() -> Vec<String> {
    let alphabet = ['1', '2', '3', 'A', 'B', 'a', 'b'];
    let mut out = Vec::new();
    for x in alphabet {
        for y in alphabet {
            let label: String = [x, y].iter().collect();
            if Segment::from_label(&label, 0).is_some() {
                out.push(label);
            }
        }
    }
    out
}
