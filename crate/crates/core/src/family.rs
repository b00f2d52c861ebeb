//! Parametrised word families with closed-form self-intersection numbers.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::FamilyError;
use crate::word::ArcWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    F1,
    F2,
    F3,
    F4,
    Z1,
    Z2,
    Z3,
    Z4,
    Z5,
    C2,
    C7,
}

impl FamilyId {
    pub const ALL: [FamilyId; 11] = [
        FamilyId::F1,
        FamilyId::F2,
        FamilyId::F3,
        FamilyId::F4,
        FamilyId::Z1,
        FamilyId::Z2,
        FamilyId::Z3,
        FamilyId::Z4,
        FamilyId::Z5,
        FamilyId::C2,
        FamilyId::C7,
    ];

    /// Families used for the low-lying witnesses.
    pub const LOW_LYING: [FamilyId; 7] = [
        FamilyId::Z1,
        FamilyId::Z2,
        FamilyId::Z3,
        FamilyId::Z4,
        FamilyId::Z5,
        FamilyId::C2,
        FamilyId::C7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::F1 => "F1",
            FamilyId::F2 => "F2",
            FamilyId::F3 => "F3",
            FamilyId::F4 => "F4",
            FamilyId::Z1 => "Z1",
            FamilyId::Z2 => "Z2",
            FamilyId::Z3 => "Z3",
            FamilyId::Z4 => "Z4",
            FamilyId::Z5 => "Z5",
            FamilyId::C2 => "C2",
            FamilyId::C7 => "C7",
        }
    }

    pub fn template(self) -> &'static str {
        match self {
            FamilyId::F1 => "1(BA)^n2",
            FamilyId::F2 => "1(bA)^n3",
            FamilyId::F3 => "1(BA)^nB1",
            FamilyId::F4 => "3(bA)^nb3",
            FamilyId::Z1 => "1(bA)^nbab(ABA)^m2",
            FamilyId::Z2 => "1(bA)^n(baa)^m2",
            FamilyId::Z3 => "1bABAbabA(bA)^n3",
            FamilyId::Z4 => "1(bA)^nb1",
            FamilyId::Z5 => "1(bA)^nba2",
            FamilyId::C2 => "1bA2",
            FamilyId::C7 => "1bAba3",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            FamilyId::F1 | FamilyId::F3 => "n",
            FamilyId::F2 => "n^2+2n",
            FamilyId::F4 => "n^2+3n+1",
            FamilyId::Z1 => "(m+n+1)^2+2m+n",
            FamilyId::Z2 => "(m+n)^2+2m+3n",
            FamilyId::Z3 => "(n+4)^2-2",
            FamilyId::Z4 => "n(n+3)",
            FamilyId::Z5 => "n(n+3)+1",
            FamilyId::C2 => "2",
            FamilyId::C7 => "7",
        }
    }

    pub fn takes_m(self) -> bool {
        matches!(self, FamilyId::Z1 | FamilyId::Z2)
    }

    pub fn takes_n(self) -> bool {
        !matches!(self, FamilyId::C2 | FamilyId::C7)
    }

    fn bad(self, reason: &str) -> FamilyError {
        FamilyError::BadParams {
            family: self.name().to_string(),
            reason: reason.to_string(),
        }
    }

    /// Checks the parameters and returns `m` (1 when absent and unused).
    pub fn check_params(self, n: u32, m: Option<u32>) -> Result<u32, FamilyError> {
        if !self.takes_n() && n != 0 {
            return Err(self.bad("this family has no parameters; use n = 0"));
        }
        match (self.takes_m(), m) {
            (true, Some(m)) if m >= 1 => Ok(m),
            (true, Some(_)) => Err(self.bad("m must be at least 1")),
            (true, None) => Err(self.bad("m is required")),
            (false, Some(_)) => Err(self.bad("this family takes no m")),
            (false, None) => Ok(0),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Expands the template into its text form.
pub fn family_text(id: FamilyId, n: u32, m: Option<u32>) -> Result<String, FamilyError> {
    let m = id.check_params(n, m)? as usize;
    let n = n as usize;
    Ok(match id {
        FamilyId::F1 => format!("1{}2", "BA".repeat(n)),
        FamilyId::F2 => format!("1{}3", "bA".repeat(n)),
        FamilyId::F3 => format!("1{}B1", "BA".repeat(n)),
        FamilyId::F4 => format!("3{}b3", "bA".repeat(n)),
        FamilyId::Z1 => format!("1{}bab{}2", "bA".repeat(n), "ABA".repeat(m)),
        FamilyId::Z2 => format!("1{}{}2", "bA".repeat(n), "baa".repeat(m)),
        FamilyId::Z3 => format!("1bABAbabA{}3", "bA".repeat(n)),
        FamilyId::Z4 => format!("1{}b1", "bA".repeat(n)),
        FamilyId::Z5 => format!("1{}ba2", "bA".repeat(n)),
        FamilyId::C2 => "1bA2".to_string(),
        FamilyId::C7 => "1bAba3".to_string(),
    })
}

pub fn family_word(id: FamilyId, n: u32, m: Option<u32>) -> Result<ArcWord, FamilyError> {
    let text = family_text(id, n, m)?;
    Ok(text
        .parse()
        .expect("family templates expand to valid words"))
}

pub fn family_predicted_i(id: FamilyId, n: u32, m: Option<u32>) -> Result<u64, FamilyError> {
    let m = id.check_params(n, m)? as u64;
    let n = n as u64;
    Ok(match id {
        FamilyId::F1 | FamilyId::F3 => n,
        FamilyId::F2 => n * n + 2 * n,
        FamilyId::F4 => n * n + 3 * n + 1,
        FamilyId::Z1 => (m + n + 1).pow(2) + 2 * m + n,
        FamilyId::Z2 => (m + n).pow(2) + 2 * m + 3 * n,
        FamilyId::Z3 => (n + 4).pow(2) - 2,
        FamilyId::Z4 => n * (n + 3),
        FamilyId::Z5 => n * (n + 3) + 1,
        FamilyId::C2 => 2,
        FamilyId::C7 => 7,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersect::self_intersection;

    #[test]
    fn templates() {
        assert_eq!(family_text(FamilyId::F1, 2, None).unwrap(), "1BABA2");
        assert_eq!(family_text(FamilyId::Z2, 0, Some(1)).unwrap(), "1baa2");
        assert_eq!(family_text(FamilyId::Z3, 0, None).unwrap(), "1bABAbabA3");
        assert_eq!(family_text(FamilyId::Z4, 0, None).unwrap(), "1b1");
        assert_eq!(family_text(FamilyId::F2, 0, None).unwrap(), "13");
    }

    #[test]
    fn predictions() {
        assert_eq!(family_predicted_i(FamilyId::F2, 3, None), Ok(15));
        assert_eq!(family_predicted_i(FamilyId::Z1, 0, Some(1)), Ok(6));
        assert_eq!(family_predicted_i(FamilyId::Z4, 0, None), Ok(0));
        assert_eq!(family_predicted_i(FamilyId::Z3, 0, None), Ok(14));
    }

    #[test]
    fn bad_params() {
        assert!(family_word(FamilyId::Z1, 0, None).is_err());
        assert!(family_word(FamilyId::Z2, 0, Some(0)).is_err());
        assert!(family_word(FamilyId::F1, 0, Some(1)).is_err());
        assert!(family_word(FamilyId::C2, 1, None).is_err());
        assert!("Q9".parse::<FamilyId>().is_err());
        assert_eq!("z3".parse::<FamilyId>(), Ok(FamilyId::Z3));
    }

    #[test]
    fn every_family_word_is_valid() {
        for id in FamilyId::ALL {
            for n in 0..6 {
                if !id.takes_n() && n > 0 {
                    continue;
                }
                let m = id.takes_m().then_some(2);
                assert!(family_word(id, n, m).is_ok(), "{id} {n}");
            }
        }
    }

    #[test]
    fn printed_z3_template_gives_square() {
        // the alternative template 1bABabaBA(bA)^n3 lands on (n+4)^2, not (n+4)^2 - 2
        for n in 0..8usize {
            let w: ArcWord = format!("1bABabaBA{}3", "bA".repeat(n)).parse().unwrap();
            assert_eq!(self_intersection(&w), ((n + 4) * (n + 4)) as u64);
        }
    }
}
