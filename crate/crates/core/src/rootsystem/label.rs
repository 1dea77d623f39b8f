use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Coord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

/// Cartan type of an irreducible crystallographic root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    family: Family,
    rank: usize,
}

impl TypeLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        // Bit sets hold at most 128 positive roots.
        let small_enough = match family {
            Family::A => rank * (rank + 1) / 2 <= 128,
            Family::B | Family::C => rank * rank <= 128,
            Family::D => rank * (rank - 1) <= 128,
            _ => true,
        };
        if ok && small_enough {
            Ok(TypeLabel { family, rank })
        } else {
            Err(Error::InadmissibleType { family: family.letter(), rank })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Closed-form number of positive roots.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Squared-length weights `d_i = (α_i, α_i) / 2` and the Dynkin bonds.
    ///
    /// Numbering: `A`, `B`, `C`, `D`, `E` and `G` follow Bourbaki. `F4` uses
    /// the reversed Bourbaki order, so `α1`, `α2` are short, `α3`, `α4` are
    /// long and the highest root is `2432`. `D4` has `α2` as branch node.
    pub(crate) fn diagram(self) -> (Vec<Coord>, Vec<(usize, usize)>) {
        let n = self.rank;
        let path = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A => (vec![1; n], path(n)),
            Family::B => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                (d, path(n))
            }
            Family::C => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                (d, path(n))
            }
            Family::D => {
                let mut e = path(n - 1);
                e.push((n - 3, n - 1));
                (vec![1; n], e)
            }
            Family::E => {
                let mut e = vec![(0, 2), (2, 3), (3, 4), (1, 3)];
                e.extend((4..n - 1).map(|i| (i, i + 1)));
                (vec![1; n], e)
            }
            Family::F => (vec![1, 1, 2, 2], path(4)),
            Family::G => (vec![1, 3], path(2)),
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    /// Parses labels such as `D4`, `e6` or `B_3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::BadTypeLabel(s.to_string()))?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| Error::BadTypeLabel(s.to_string()))?;
        TypeLabel::new(family, rank)
    }
}

impl Serialize for TypeLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TypeLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
