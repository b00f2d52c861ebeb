//! Finite continued fractions `[a1, ..., ak] = 1/(a1 + 1/(a2 + ...))`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{CfError, FamilyError};
use crate::family::FamilyId;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    quotients: Vec<u32>,
}

impl ContinuedFraction {
    pub fn new(quotients: Vec<u32>) -> Result<Self, CfError> {
        if quotients.is_empty() {
            return Err(CfError::Empty);
        }
        if let Some(index) = quotients.iter().position(|&q| q == 0) {
            return Err(CfError::ZeroQuotient { index });
        }
        Ok(ContinuedFraction { quotients })
    }

    pub fn quotients(&self) -> &[u32] {
        &self.quotients
    }

    pub fn max_partial_quotient(&self) -> u32 {
        self.quotients.iter().copied().max().unwrap_or(0)
    }

    pub fn eval(&self) -> Fraction {
        cf_eval(self)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.quotients.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for ContinuedFraction {
    type Err = CfError;

    /// Accepts `2,1,1` with optional surrounding brackets.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let quotients = inner
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| CfError::Parse(p.trim().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        ContinuedFraction::new(quotients)
    }
}

impl Serialize for ContinuedFraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.quotients.serialize(serializer)
    }
}

pub fn max_partial_quotient(cf: &ContinuedFraction) -> u32 {
    cf.max_partial_quotient()
}

/// A fraction `b/d` in lowest terms with `d > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    numerator: BigUint,
    denominator: BigUint,
}

impl Fraction {
    pub fn new(numerator: BigUint, denominator: BigUint) -> Option<Self> {
        if denominator.is_zero() {
            return None;
        }
        let g = numerator.gcd(&denominator);
        Some(Fraction {
            numerator: numerator / &g,
            denominator: denominator / g,
        })
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    /// The expansion of `b/d` in `(0, 1]`, ending in a quotient of at least 2
    /// unless the value is 1.
    pub fn to_cf(&self) -> Option<ContinuedFraction> {
        if self.numerator.is_zero() || self.numerator > self.denominator {
            return None;
        }
        let (mut b, mut d) = (self.numerator.clone(), self.denominator.clone());
        let mut out = Vec::new();
        while !b.is_zero() {
            let (q, r) = d.div_rem(&b);
            out.push(u32::try_from(q).ok()?);
            d = b;
            b = r;
        }
        ContinuedFraction::new(out).ok()
    }

    /// Membership in `R_A`: `0 < b < d` and some expansion has every
    /// quotient at most `a`.
    pub fn in_r(&self, a: u32) -> bool {
        if self.numerator.is_zero() || self.numerator >= self.denominator {
            return false;
        }
        let Some(cf) = self.to_cf() else {
            return false;
        };
        let q = cf.quotients();
        let (last, init) = q.split_last().expect("nonempty");
        // [.., k] equals [.., k-1, 1]
        let head = init.iter().copied().max().unwrap_or(0);
        head <= a && *last - 1 <= a
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Exact value, evaluated from the innermost quotient outwards.
pub fn cf_eval(cf: &ContinuedFraction) -> Fraction {
    let mut num = BigUint::zero();
    let mut den = BigUint::one();
    for &a in cf.quotients().iter().rev() {
        let next_den = &den * a + &num;
        num = den;
        den = next_den;
    }
    // consecutive convergent terms are coprime already
    Fraction {
        numerator: num,
        denominator: den,
    }
}

fn twos(k: usize) -> impl Iterator<Item = u32> {
    std::iter::repeat_n(2, k)
}

/// The continued fraction attached to a low-lying family member.
pub fn family_cf(id: FamilyId, n: u32, m: Option<u32>) -> Result<ContinuedFraction, FamilyError> {
    if matches!(id, FamilyId::F1 | FamilyId::F2 | FamilyId::F3 | FamilyId::F4) {
        return Err(FamilyError::Unsupported(id.name().to_string()));
    }
    let m = id.check_params(n, m)? as usize;
    let n = n as usize;
    let q: Vec<u32> = match id {
        FamilyId::Z1 => twos(2 * n)
            .chain([1, 2, 1, 1])
            .chain(twos(2 * m - 1))
            .chain([1])
            .collect(),
        FamilyId::Z2 => twos(2 * n)
            .chain([1, 1])
            .chain(twos(2 * m - 1))
            .chain([1])
            .collect(),
        FamilyId::Z3 => [2, 1, 2, 1, 1, 2, 1]
            .into_iter()
            .chain(twos(2 * n + 1))
            .chain([1])
            .collect(),
        FamilyId::Z4 => twos(2 * n).chain([1, 1]).collect(),
        FamilyId::Z5 => twos(2 * n).chain([1, 1, 1]).collect(),
        FamilyId::C2 => vec![2, 1, 1],
        FamilyId::C7 => vec![2, 2, 1, 1, 1, 1],
        _ => unreachable!("handled above"),
    };
    Ok(ContinuedFraction::new(q).expect("templates have positive quotients"))
}
