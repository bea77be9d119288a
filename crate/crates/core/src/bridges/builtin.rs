use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::php::{FunctionFamily, PhpShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BuiltinFamilyId {
    WarmupFourTwoThree,
    NineFourSix,
    SevenFiveTen,
}

impl BuiltinFamilyId {
    pub const ALL: [BuiltinFamilyId; 3] = [
        BuiltinFamilyId::WarmupFourTwoThree,
        BuiltinFamilyId::NineFourSix,
        BuiltinFamilyId::SevenFiveTen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinFamilyId::WarmupFourTwoThree => "warmup-4-2-3",
            BuiltinFamilyId::NineFourSix => "nine-4-6",
            BuiltinFamilyId::SevenFiveTen => "seven-5-10",
        }
    }

    fn data(self) -> (usize, usize, &'static [&'static str]) {
        match self {
            BuiltinFamilyId::WarmupFourTwoThree => (4, 2, &["(01)(23)", "(02)(13)", "(03)(12)"]),
            BuiltinFamilyId::NineFourSix => (
                9,
                4,
                &[
                    "(012)(38)(46)(57)",
                    "(345)(18)(26)(07)",
                    "(678)(13)(24)(05)",
                    "(036)(15)(27)(48)",
                    "(147)(56)(23)(08)",
                    "(258)(16)(37)(04)",
                ],
            ),
            BuiltinFamilyId::SevenFiveTen => (
                7,
                5,
                &[
                    "(01)(45)(2)(3)(6)",
                    "(02)(16)(3)(4)(5)",
                    "(03)(12)(4)(5)(6)",
                    "(04)(13)(2)(5)(6)",
                    "(05)(14)(2)(3)(6)",
                    "(06)(15)(2)(3)(4)",
                    "(23)(46)(0)(1)(5)",
                    "(24)(36)(0)(1)(5)",
                    "(25)(34)(0)(1)(6)",
                    "(26)(35)(0)(1)(4)",
                ],
            ),
        }
    }
}

impl fmt::Display for BuiltinFamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinFamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown builtin family {s:?}")))
    }
}

/// A stored family, re-checked for disjointness on every load.
pub fn builtin_family(id: BuiltinFamilyId) -> Result<FunctionFamily> {
    let (m, n, rows) = id.data();
    let family = FunctionFamily::parse_fibers(PhpShape::new(m, n)?, rows)?;
    if let Err(v) = family.check_disjoint() {
        return Err(Error::Precondition(format!("builtin family {id} is corrupt: {v}")));
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::php::Pair;

    #[test]
    fn all_load() {
        let sizes: Vec<usize> = BuiltinFamilyId::ALL
            .iter()
            .map(|&id| builtin_family(id).unwrap().len())
            .collect();
        assert_eq!(sizes, [3, 6, 10]);
        assert_eq!("nine-4-6".parse::<BuiltinFamilyId>().unwrap(), BuiltinFamilyId::NineFourSix);
        assert!("ten-4-6".parse::<BuiltinFamilyId>().is_err());
    }

    #[test]
    fn seven_five_leaves_one_pair() {
        let fam = builtin_family(BuiltinFamilyId::SevenFiveTen).unwrap();
        assert_eq!(fam.solver_of(Pair::new(5, 6).unwrap()), None);
        let covered: usize = fam.solution_sets().iter().map(|s| s.len()).sum();
        assert_eq!(covered, 20);
    }

    #[test]
    fn nine_four_members_are_balanced() {
        let fam = builtin_family(BuiltinFamilyId::NineFourSix).unwrap();
        assert!(fam.solution_sets().iter().all(|s| s.len() == 6));
    }
}
