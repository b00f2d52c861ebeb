//! The five families covering every natural number except 2 and 7, and a
//! witness word for each target value.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Roots;
use rayon::prelude::*;
use serde::Serialize;

use super::cf::{family_cf, ContinuedFraction};
use crate::error::LowLyingError;
use crate::family::{family_predicted_i, family_word, FamilyId};
use crate::intersect::Intersector;
use crate::word::ArcWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CoverSet {
    A1,
    A2,
    A3,
    A4,
    A5,
}

impl CoverSet {
    pub const ALL: [CoverSet; 5] = [
        CoverSet::A1,
        CoverSet::A2,
        CoverSet::A3,
        CoverSet::A4,
        CoverSet::A5,
    ];

    /// The family whose values make up this set.
    pub fn family(self) -> FamilyId {
        match self {
            CoverSet::A1 => FamilyId::Z1,
            CoverSet::A2 => FamilyId::Z2,
            CoverSet::A3 => FamilyId::Z3,
            CoverSet::A4 => FamilyId::Z4,
            CoverSet::A5 => FamilyId::Z5,
        }
    }
}

impl fmt::Display for CoverSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for CoverSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CoverSet::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown set {s:?}"))
    }
}

/// Parameters realising a member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub n: u32,
    pub m: Option<u32>,
}

fn window(x: u64) -> impl Iterator<Item = u64> {
    let r = x.sqrt();
    r.saturating_sub(2)..=r + 1
}

pub fn set_membership(set: CoverSet, value: u64) -> Option<Membership> {
    match set {
        CoverSet::A1 => {
            // s = m+n+1, value = s^2 + s - 1 + m with 1 <= m <= s-1
            window(value).find_map(|s| {
                let m = value.checked_sub(s * s + s)?.checked_add(1)?;
                (s >= 2 && (1..s).contains(&m)).then(|| Membership {
                    n: (s - m - 1) as u32,
                    m: Some(m as u32),
                })
            })
        }
        CoverSet::A2 => {
            // t = m+n, value = t^2 + 3t - m with 1 <= m <= t
            window(value).find_map(|t| {
                let m = (t * t + 3 * t).checked_sub(value)?;
                (t >= 1 && (1..=t).contains(&m)).then(|| Membership {
                    n: (t - m) as u32,
                    m: Some(m as u32),
                })
            })
        }
        CoverSet::A3 => {
            let r = (value + 2).sqrt();
            (r >= 4 && r * r == value + 2).then(|| Membership {
                n: (r - 4) as u32,
                m: None,
            })
        }
        CoverSet::A4 => window(value)
            .find(|&n| n * (n + 3) == value)
            .map(|n| Membership {
                n: n as u32,
                m: None,
            }),
        CoverSet::A5 => {
            let v = value.checked_sub(1)?;
            window(v).find(|&n| n * (n + 3) == v).map(|n| Membership {
                n: n as u32,
                m: None,
            })
        }
    }
}

/// Family and parameters of the witness for `target`.
pub fn decompose_params(target: u64) -> (FamilyId, u32, Option<u32>) {
    use FamilyId::*;
    match target {
        2 => return (C2, 0, None),
        7 => return (C7, 0, None),
        0 => return (Z4, 0, None),
        4 => return (Z4, 1, None),
        10 => return (Z4, 2, None),
        1 => return (Z5, 0, None),
        5 => return (Z5, 1, None),
        11 => return (Z5, 2, None),
        3 => return (Z2, 0, Some(1)),
        8 => return (Z2, 0, Some(2)),
        9 => return (Z2, 1, Some(1)),
        6 => return (Z1, 0, Some(1)),
        _ => {}
    }
    let j = (target as i64).sqrt();
    // j^2 - j <= target <= j^2 + j - 1
    let j = if target as i64 > j * j + j - 1 { j + 1 } else { j };
    let i0 = target as i64 - j * j;
    let u = |x: i64| x as u32;
    if i0 <= -3 {
        (Z1, u(-i0 - 3), Some(u(j + i0 + 1)))
    } else if i0 == -2 {
        (Z3, u(j - 4), None)
    } else if i0 <= j - 3 {
        (Z2, u(i0 + 1), Some(u(j - i0 - 2)))
    } else if i0 == j - 2 {
        (Z4, u(j - 1), None)
    } else {
        (Z5, u(j - 1), None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverWitness {
    pub target: u64,
    pub family: FamilyId,
    pub n: u32,
    pub m: Option<u32>,
    pub word: ArcWord,
    pub cf: ContinuedFraction,
}

impl CoverWitness {
    pub fn max_quotient(&self) -> u32 {
        self.cf.max_partial_quotient()
    }
}

pub fn decompose(target: u64) -> CoverWitness {
    let (family, n, m) = decompose_params(target);
    CoverWitness {
        target,
        family,
        n,
        m,
        word: family_word(family, n, m).expect("decompose yields admissible parameters"),
        cf: family_cf(family, n, m).expect("low-lying families carry a continued fraction"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub max_n: u64,
    pub covered: u64,
    pub exceptional: Vec<u64>,
    pub identities_checked: Vec<String>,
}

fn defining_values(set: CoverSet, max: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let bound = max.sqrt() + 2;
    for n in 0..=bound {
        for m in 1..=bound {
            let v = match set {
                CoverSet::A1 => (m + n + 1).pow(2) + 2 * m + n,
                CoverSet::A2 => (m + n).pow(2) + 2 * m + 3 * n,
                CoverSet::A3 if m == 1 => (n + 4).pow(2) - 2,
                CoverSet::A4 if m == 1 => n * (n + 3),
                CoverSet::A5 if m == 1 => n * (n + 3) + 1,
                _ => continue,
            };
            if v <= max {
                out.insert(v);
            }
        }
    }
    out
}

/// The rewritten form and the interval form of each set.
fn rewritten_values(set: CoverSet, max: u64) -> (BTreeSet<u64>, BTreeSet<u64>) {
    let mut rewritten = BTreeSet::new();
    let bound = max.sqrt() as i64 + 2;
    for n in 0..=bound {
        for m in 1..=bound {
            let v = match set {
                CoverSet::A1 => (m + n + 2).pow(2) - (n + 3),
                CoverSet::A2 => (m + n + 1).pow(2) + (n - 1),
                CoverSet::A3 if m == 1 => (n + 4).pow(2) - 2,
                CoverSet::A4 if m == 1 => (n + 1).pow(2) + (n + 1) - 2,
                CoverSet::A5 if m == 1 => (n + 1).pow(2) + (n + 1) - 1,
                _ => continue,
            };
            if (0..=max as i64).contains(&v) {
                rewritten.insert(v as u64);
            }
        }
    }
    let extra: &[u64] = match set {
        CoverSet::A1 => &[6],
        CoverSet::A2 => &[3, 8, 9],
        CoverSet::A3 => &[],
        CoverSet::A4 => &[0, 4, 10],
        CoverSet::A5 => &[1, 5, 11],
    };
    let mut intervals: BTreeSet<u64> = extra.iter().copied().filter(|&v| v <= max).collect();
    for j in 4..=bound {
        // offsets i with j^2 + i in the set
        let range = match set {
            CoverSet::A1 => -j..=-3,
            CoverSet::A2 => -1..=j - 3,
            CoverSet::A3 => -2..=-2,
            CoverSet::A4 => j - 2..=j - 2,
            CoverSet::A5 => j - 1..=j - 1,
        };
        for i in range {
            let v = j * j + i;
            if (0..=max as i64).contains(&v) {
                intervals.insert(v as u64);
            }
        }
    }
    (rewritten, intervals)
}

/// Checks that every value up to `max_n` is covered and that the witness
/// family predicts it, and that the rewritten descriptions of each set
/// agree with its definition on the same range.
pub fn cover_check(max_n: u64) -> Result<CoverReport, LowLyingError> {
    let mut exceptional = Vec::new();
    for v in 0..=max_n {
        let in_set = CoverSet::ALL
            .iter()
            .any(|&s| set_membership(s, v).is_some());
        if !in_set {
            if v == 2 || v == 7 {
                exceptional.push(v);
            } else {
                return Err(LowLyingError::CoverGap(v));
            }
        }
        let (f, n, m) = decompose_params(v);
        if family_predicted_i(f, n, m) != Ok(v) {
            return Err(LowLyingError::CoverGap(v));
        }
    }
    let mut identities_checked = Vec::new();
    for set in CoverSet::ALL {
        let defined = defining_values(set, max_n);
        let (rewritten, intervals) = rewritten_values(set, max_n);
        for (form, values) in [("rewritten", &rewritten), ("intervals", &intervals)] {
            if let Some(&n) = defined.symmetric_difference(values).next() {
                return Err(LowLyingError::IdentityMismatch {
                    set: format!("{set} ({form})"),
                    n,
                });
            }
        }
        for &v in &defined {
            if set_membership(set, v).is_none() {
                return Err(LowLyingError::IdentityMismatch {
                    set: format!("{set} (membership)"),
                    n: v,
                });
            }
        }
        identities_checked.push(set.to_string());
    }
    Ok(CoverReport {
        max_n,
        covered: max_n + 1 - exceptional.len() as u64,
        exceptional,
        identities_checked,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    #[serde(rename = "N")]
    pub target: u64,
    pub family: FamilyId,
    pub n: u32,
    pub m: Option<u32>,
    pub word: ArcWord,
    pub i_computed: u64,
    pub cf: ContinuedFraction,
    pub max_quotient: u32,
}

/// Builds the witness and counts its self-intersections.
pub fn witness(target: u64) -> WitnessCheck {
    let w = decompose(target);
    let i_computed = Intersector::new().count(&w.word);
    WitnessCheck {
        target,
        family: w.family,
        n: w.n,
        m: w.m,
        i_computed,
        max_quotient: w.max_quotient(),
        word: w.word,
        cf: w.cf,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub max_n: u64,
    pub checked: u64,
    pub max_quotient: u32,
    pub longest_word: usize,
}

/// Counts the witness for every value up to `max_n`.
pub fn spectrum_check(max_n: u64) -> Result<SpectrumReport, LowLyingError> {
    let checks: Vec<WitnessCheck> = (0..=max_n).into_par_iter().map(witness).collect();
    let mut max_quotient = 0;
    let mut longest_word = 0;
    for c in &checks {
        if c.i_computed != c.target {
            return Err(LowLyingError::SpectrumMismatch {
                n: c.target,
                word: c.word.to_string(),
                expected: c.target,
                got: c.i_computed,
            });
        }
        if c.max_quotient > 2 {
            return Err(LowLyingError::QuotientTooLarge {
                n: c.target,
                max_quotient: c.max_quotient,
            });
        }
        max_quotient = max_quotient.max(c.max_quotient);
        longest_word = longest_word.max(c.word.word_length());
    }
    Ok(SpectrumReport {
        max_n,
        checked: checks.len() as u64,
        max_quotient,
        longest_word,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_examples() {
        let w = decompose(2);
        assert_eq!((w.family, w.word.to_string()), (FamilyId::C2, "1bA2".into()));
        let w = decompose(14);
        assert_eq!((w.family, w.n), (FamilyId::Z3, 0));
        assert_eq!(w.word.to_string(), "1bABAbabA3");
        let w = decompose(50);
        assert_eq!((w.family, w.n, w.m), (FamilyId::Z2, 2, Some(4)));
        assert_eq!(w.word.to_string(), "1bAbAbaabaabaabaa2");
        let w = decompose(0);
        assert_eq!((w.family, w.word.to_string()), (FamilyId::Z4, "1b1".into()));
    }

    #[test]
    fn membership_examples() {
        assert_eq!(
            set_membership(CoverSet::A4, 10),
            Some(Membership { n: 2, m: None })
        );
        assert_eq!(
            set_membership(CoverSet::A1, 6),
            Some(Membership { n: 0, m: Some(1) })
        );
        assert_eq!(set_membership(CoverSet::A3, 2), None);
        for s in CoverSet::ALL {
            assert_eq!(set_membership(s, 2), None);
            assert_eq!(set_membership(s, 7), None);
        }
    }

    #[test]
    fn membership_parameters_reproduce_value() {
        for v in 0..2000 {
            for s in CoverSet::ALL {
                if let Some(p) = set_membership(s, v) {
                    assert_eq!(family_predicted_i(s.family(), p.n, p.m), Ok(v), "{s} {v}");
                }
            }
        }
    }

    #[test]
    fn small_covers() {
        let r = cover_check(100).unwrap();
        assert_eq!(r.exceptional, vec![2, 7]);
        assert_eq!(r.identities_checked.len(), 5);
        assert!(cover_check(0).is_ok());
        assert!(cover_check(89).is_ok());
    }

    #[test]
    fn witness_report() {
        let w = witness(14);
        assert_eq!(w.i_computed, 14);
        assert_eq!(w.max_quotient, 2);
        let json = serde_json::to_string(&w).unwrap();
        assert!(json.starts_with("{\"N\":14,\"family\":\"Z3\""), "{json}");
    }

    #[test]
    fn small_spectrum() {
        let r = spectrum_check(60).unwrap();
        assert_eq!(r.checked, 61);
        assert_eq!(r.max_quotient, 2);
    }
}
