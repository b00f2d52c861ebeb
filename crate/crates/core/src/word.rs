//! Arc words on the pair of pants.
//!
//! An arc is written `n1 x1 ... xL n2`: two puncture digits around a reduced
//! sequence of seam crossings. `a`/`A` cross the seam joining punctures 1 and
//! 3, `b`/`B` the seam joining 2 and 3.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::WordError;

/// One of the three punctures (cuffs).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Puncture {
    One,
    Two,
    Three,
}

impl Puncture {
    pub const ALL: [Puncture; 3] = [Puncture::One, Puncture::Two, Puncture::Three];

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '1' => Some(Puncture::One),
            '2' => Some(Puncture::Two),
            '3' => Some(Puncture::Three),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Puncture::One => '1',
            Puncture::Two => '2',
            Puncture::Three => '3',
        }
    }

    /// Swaps punctures 1 and 2.
    pub fn relabel(self) -> Self {
        match self {
            Puncture::One => Puncture::Two,
            Puncture::Two => Puncture::One,
            Puncture::Three => Puncture::Three,
        }
    }

    /// True if an arc at this puncture may not start or end by crossing `s`.
    ///
    /// Puncture 1 lies on seam `a`, puncture 2 on seam `b`.
    pub fn forbids(self, s: Seam) -> bool {
        match self {
            Puncture::One => s.is_a_family(),
            Puncture::Two => !s.is_a_family(),
            Puncture::Three => false,
        }
    }
}

/// A seam crossing. Lower case is the positive direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Seam {
    /// `a`
    A,
    /// `A`
    AInv,
    /// `b`
    B,
    /// `B`
    BInv,
}

impl Seam {
    /// In the order used by the enumerator: `A < B < a < b`.
    pub const ENUMERATION_ORDER: [Seam; 4] = [Seam::AInv, Seam::BInv, Seam::A, Seam::B];

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a' => Some(Seam::A),
            'A' => Some(Seam::AInv),
            'b' => Some(Seam::B),
            'B' => Some(Seam::BInv),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Seam::A => 'a',
            Seam::AInv => 'A',
            Seam::B => 'b',
            Seam::BInv => 'B',
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            Seam::A => Seam::AInv,
            Seam::AInv => Seam::A,
            Seam::B => Seam::BInv,
            Seam::BInv => Seam::B,
        }
    }

    /// Swaps the two seams, keeping the direction.
    pub fn relabel(self) -> Self {
        match self {
            Seam::A => Seam::B,
            Seam::AInv => Seam::BInv,
            Seam::B => Seam::A,
            Seam::BInv => Seam::AInv,
        }
    }

    pub fn is_a_family(self) -> bool {
        matches!(self, Seam::A | Seam::AInv)
    }

    pub fn is_capital(self) -> bool {
        matches!(self, Seam::AInv | Seam::BInv)
    }

    pub fn to_lower(self) -> Self {
        match self {
            Seam::AInv => Seam::A,
            Seam::BInv => Seam::B,
            s => s,
        }
    }
}

/// A single symbol of the word alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Puncture(Puncture),
    Seam(Seam),
}

impl Letter {
    pub fn from_char(c: char) -> Option<Self> {
        Puncture::from_char(c)
            .map(Letter::Puncture)
            .or_else(|| Seam::from_char(c).map(Letter::Seam))
    }

    /// Inverse letter; punctures are fixed.
    pub fn inverse(self) -> Self {
        match self {
            Letter::Seam(s) => Letter::Seam(s.inverse()),
            p => p,
        }
    }
}

/// Number of `a`/`A` and `b`/`B` letters in a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SeamCounts {
    pub alpha: usize,
    pub beta: usize,
}

/// A validated arc word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcWord {
    start: Puncture,
    seams: Vec<Seam>,
    end: Puncture,
}

impl ArcWord {
    pub fn new(start: Puncture, seams: Vec<Seam>, end: Puncture) -> Result<Self, WordError> {
        validate(start, &seams, end)?;
        Ok(ArcWord { start, seams, end })
    }

    /// Builds a word the caller has already checked.
    pub(crate) fn new_unchecked(start: Puncture, seams: Vec<Seam>, end: Puncture) -> Self {
        debug_assert!(validate(start, &seams, end).is_ok());
        ArcWord { start, seams, end }
    }

    pub fn parse(text: &str) -> Result<Self, WordError> {
        parse_word(text)
    }

    pub fn start(&self) -> Puncture {
        self.start
    }

    pub fn end(&self) -> Puncture {
        self.end
    }

    pub fn seams(&self) -> &[Seam] {
        &self.seams
    }

    /// Number of seam letters, `L`.
    pub fn seam_len(&self) -> usize {
        self.seams.len()
    }

    /// Total number of letters, `L + 2`.
    pub fn word_length(&self) -> usize {
        self.seams.len() + 2
    }

    /// The same arc traversed backwards.
    pub fn inverse(&self) -> Self {
        ArcWord {
            start: self.end,
            seams: self.seams.iter().rev().map(|s| s.inverse()).collect(),
            end: self.start,
        }
    }

    /// Image under the symmetry `a <-> b`, `A <-> B`, `1 <-> 2`.
    pub fn relabel(&self) -> Self {
        ArcWord {
            start: self.start.relabel(),
            seams: self.seams.iter().map(|s| s.relabel()).collect(),
            end: self.end.relabel(),
        }
    }

    pub fn seam_counts(&self) -> SeamCounts {
        let alpha = self.seams.iter().filter(|s| s.is_a_family()).count();
        SeamCounts {
            alpha,
            beta: self.seams.len() - alpha,
        }
    }

    /// No seam letter occurs together with its inverse.
    pub fn is_positive(&self) -> bool {
        let has = |s: Seam| self.seams.contains(&s);
        !(has(Seam::A) && has(Seam::AInv)) && !(has(Seam::B) && has(Seam::BInv))
    }

    /// All seam letters are lower case.
    pub fn is_lower_case(&self) -> bool {
        self.seams.iter().all(|s| !s.is_capital())
    }
}

impl fmt::Display for ArcWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::with_capacity(self.word_length());
        out.push(self.start.as_char());
        out.extend(self.seams.iter().map(|s| s.as_char()));
        out.push(self.end.as_char());
        f.write_str(&out)
    }
}

impl FromStr for ArcWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl Serialize for ArcWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses the textual form, e.g. `1BABA2`.
///
/// Errors report the earliest offending character (0-based).
pub fn parse_word(text: &str) -> Result<ArcWord, WordError> {
    let mut letters = Vec::with_capacity(text.len());
    for (position, c) in text.chars().enumerate() {
        match Letter::from_char(c) {
            Some(l) => letters.push(l),
            None => return Err(WordError::MalformedToken { position, found: c }),
        }
    }
    if letters.len() < 2 {
        return Err(WordError::BadShape {
            position: letters.len(),
        });
    }
    let last = letters.len() - 1;
    let mut seams = Vec::with_capacity(letters.len() - 2);
    let mut start = None;
    let mut end = None;
    for (position, l) in letters.iter().enumerate() {
        match (*l, position == 0 || position == last) {
            (Letter::Puncture(p), true) => {
                if position == 0 {
                    start = Some(p);
                } else {
                    end = Some(p);
                }
            }
            (Letter::Seam(s), false) => seams.push(s),
            _ => return Err(WordError::BadShape { position }),
        }
    }
    // both set: the loop rejects anything else
    let (start, end) = (start.unwrap(), end.unwrap());
    validate(start, &seams, end)?;
    Ok(ArcWord { start, seams, end })
}

/// Positions in errors are character offsets: seam `x_i` sits at offset `i`.
fn validate(start: Puncture, seams: &[Seam], end: Puncture) -> Result<(), WordError> {
    let Some((&first, &last)) = seams.first().zip(seams.last()) else {
        if start == end && start != Puncture::Three {
            return Err(WordError::ForbiddenPair { position: 0 });
        }
        return Ok(());
    };
    if start.forbids(first) {
        return Err(WordError::EndpointClash { position: 1 });
    }
    for (i, pair) in seams.windows(2).enumerate() {
        if pair[0] == pair[1].inverse() {
            return Err(WordError::NonReduced { position: i + 1 });
        }
    }
    if end.forbids(last) {
        return Err(WordError::EndpointClash {
            position: seams.len(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ArcWord {
        s.parse().unwrap()
    }

    #[test]
    fn parses_worked_example() {
        let word = w("1BABA2");
        assert_eq!(word.start(), Puncture::One);
        assert_eq!(
            word.seams(),
            &[Seam::BInv, Seam::AInv, Seam::BInv, Seam::AInv]
        );
        assert_eq!(word.end(), Puncture::Two);
        assert_eq!(word.to_string(), "1BABA2");
    }

    #[test]
    fn grammar_errors() {
        assert_eq!(
            parse_word("11"),
            Err(WordError::ForbiddenPair { position: 0 })
        );
        assert_eq!(
            parse_word("22"),
            Err(WordError::ForbiddenPair { position: 0 })
        );
        assert_eq!(
            parse_word("1a2"),
            Err(WordError::EndpointClash { position: 1 })
        );
        assert_eq!(
            parse_word("1bB3"),
            Err(WordError::NonReduced { position: 1 })
        );
        assert_eq!(
            parse_word("1bx3"),
            Err(WordError::MalformedToken {
                position: 2,
                found: 'x'
            })
        );
        assert_eq!(parse_word("b1"), Err(WordError::BadShape { position: 0 }));
        assert_eq!(parse_word("1b2b"), Err(WordError::BadShape { position: 2 }));
        assert_eq!(parse_word("1"), Err(WordError::BadShape { position: 1 }));
        assert_eq!(parse_word(""), Err(WordError::BadShape { position: 0 }));
        assert_eq!(
            parse_word("3ab1"),
            Ok(w("3ab1")),
        );
        assert_eq!(
            parse_word("3bA1"),
            Err(WordError::EndpointClash { position: 2 })
        );
    }

    #[test]
    fn earliest_error_wins() {
        // malformed character beats shape problems elsewhere
        assert!(matches!(
            parse_word("a?"),
            Err(WordError::MalformedToken { position: 1, .. })
        ));
        // endpoint clash at x1 is reported before the later non-reduced pair
        assert_eq!(
            parse_word("1abB3"),
            Err(WordError::EndpointClash { position: 1 })
        );
        assert_eq!(
            parse_word("3abBa1"),
            Err(WordError::NonReduced { position: 2 })
        );
    }

    #[test]
    fn lengths() {
        assert_eq!(w("1BABA2").word_length(), 6);
        assert_eq!(w("12").word_length(), 2);
        assert_eq!(w("3aB1").word_length(), 4);
    }

    #[test]
    fn inverse_and_relabel() {
        assert_eq!(w("1BABA2").inverse(), w("2abab1"));
        assert_eq!(w("12").inverse(), w("21"));
        assert_eq!(w("3aB1").inverse(), w("1bA3"));
        assert_eq!(w("1BABA2").relabel(), w("2ABAB1"));
        assert_eq!(w("33").relabel(), w("33"));
        assert_eq!(w("1b1").relabel(), w("2a2"));
    }

    #[test]
    fn counts_and_positivity() {
        assert_eq!(w("1BABA2").seam_counts(), SeamCounts { alpha: 2, beta: 2 });
        assert_eq!(w("12").seam_counts(), SeamCounts { alpha: 0, beta: 0 });
        assert_eq!(w("1bAbAbA3").seam_counts(), SeamCounts { alpha: 3, beta: 3 });
        assert!(w("1bab3").is_positive());
        assert!(w("1BABA2").is_positive());
        assert!(!w("1Bab3").is_positive());
        assert!(w("1bAb3").is_positive());
        assert!(!w("1bAb3").is_lower_case());
    }
}
