use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Finite Coxeter families handled by the crate.
///
/// Type C is accepted on input and served by B (same Coxeter system).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    F4,
    H3,
    H4,
    I2,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::F4 => "F4",
            Family::H3 => "H3",
            Family::H4 => "H4",
            Family::I2 => "I2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" | "C" => Ok(Family::B),
            "F4" | "F" => Ok(Family::F4),
            "H3" => Ok(Family::H3),
            "H4" => Ok(Family::H4),
            "I2" | "I" => Ok(Family::I2),
            "D" | "E" | "E6" | "E7" | "E8" => Err(Error::Unsupported(format!(
                "type {} is not supported. In types D_n (n >= 4) and E6, E7, E8 there are \
                 non-fully-commutative x with pi(b_x) != 0, so the fully commutative truncation \
                 of the Kazhdan-Lusztig basis does not give the Temperley-Lieb quotient \
                 (and the projection property is open in type E)",
                s.trim()
            ))),
            other => Err(Error::Unsupported(format!("unknown Coxeter family '{}'", other))),
        }
    }
}

/// A Coxeter family and rank together with its Coxeter matrix.
///
/// Generators are numbered `0..rank` along the standard linear ordering of
/// the diagram: `A_n` is a path with `m = 3`, `B_n` has `m(0,1) = 4`, `F4`
/// has `m(1,2) = 4`, `H3`/`H4` have `m(0,1) = 5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterPresentation {
    family: Family,
    rank: usize,
    matrix: Vec<Vec<u32>>,
}

impl CoxeterPresentation {
    /// `rank` is ignored for F4/H3/H4 when it is zero and must otherwise match.
    /// For `I2` use [`CoxeterPresentation::dihedral`].
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let rank = match family {
            Family::F4 | Family::H4 => fixed_rank(family, rank, 4)?,
            Family::H3 => fixed_rank(family, rank, 3)?,
            Family::I2 => return Err(Error::InvalidArgument("I2 needs m; use CoxeterPresentation::dihedral".into())),
            Family::A | Family::B => {
                if rank == 0 {
                    return Err(Error::InvalidArgument(format!("{} needs rank >= 1", family)));
                }
                rank
            }
        };
        let matrix = (0..rank).map(|i| (0..rank).map(|j| Self::entry(family, i, j, 0)).collect()).collect();
        Ok(Self { family, rank, matrix })
    }

    /// The dihedral group `I2(m)`, `m >= 3`.
    pub fn dihedral(m: u32) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidArgument(format!("I2(m) needs m >= 3, got {}", m)));
        }
        Ok(Self { family: Family::I2, rank: 2, matrix: vec![vec![1, m], vec![m, 1]] })
    }

    /// Parses family/rank/m the way the command line does.
    pub fn from_parts(family: Family, rank: Option<usize>, m: Option<u32>) -> Result<Self> {
        match family {
            Family::I2 => {
                let m = m.ok_or_else(|| Error::InvalidArgument("I2 needs --m".into()))?;
                if let Some(r) = rank {
                    if r != 2 {
                        return Err(Error::InvalidArgument(format!("I2 has rank 2, got {}", r)));
                    }
                }
                Self::dihedral(m)
            }
            _ => Self::new(family, rank.unwrap_or(0)),
        }
    }

    fn entry(family: Family, i: usize, j: usize, _m: u32) -> u32 {
        if i == j {
            return 1;
        }
        let (lo, hi) = (i.min(j), i.max(j));
        if hi != lo + 1 {
            return 2;
        }
        match (family, lo) {
            (Family::B, 0) => 4,
            (Family::F4, 1) => 4,
            (Family::H3 | Family::H4, 0) => 5,
            _ => 3,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `m(s, t)`, with `m(s, s) = 1`.
    pub fn m(&self, s: usize, t: usize) -> u32 {
        self.matrix[s][t]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    /// Only meaningful for `I2`.
    pub fn dihedral_m(&self) -> Option<u32> {
        (self.family == Family::I2).then(|| self.matrix[0][1])
    }

    /// The classical group order.
    pub fn order(&self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::A => (1..=n + 1).product(),
            Family::B => (1u64 << n) * (1..=n).product::<u64>(),
            Family::F4 => 1152,
            Family::H3 => 120,
            Family::H4 => 14400,
            Family::I2 => 2 * self.matrix[0][1] as u64,
        }
    }

    /// Short label such as `A3`, `B2`, `H3`, `I2(7)`.
    pub fn label(&self) -> String {
        match self.family {
            Family::A | Family::B => format!("{}{}", self.family, self.rank),
            Family::I2 => format!("I2({})", self.matrix[0][1]),
            f => f.to_string(),
        }
    }

    /// Family token used in file headers: the family name, with `(m)`
    /// appended for dihedral groups.
    pub fn family_token(&self) -> String {
        match self.family {
            Family::I2 => format!("I2({})", self.matrix[0][1]),
            f => f.to_string(),
        }
    }
}

fn fixed_rank(family: Family, rank: usize, expected: usize) -> Result<usize> {
    if rank == 0 || rank == expected {
        Ok(expected)
    } else {
        Err(Error::InvalidArgument(format!("{} has rank {}, got {}", family, expected, rank)))
    }
}

impl fmt::Display for CoxeterPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_orders() {
        assert_eq!(CoxeterPresentation::new(Family::A, 2).unwrap().order(), 6);
        assert_eq!(CoxeterPresentation::new(Family::A, 5).unwrap().order(), 720);
        assert_eq!(CoxeterPresentation::new(Family::B, 3).unwrap().order(), 48);
        assert_eq!(CoxeterPresentation::new(Family::F4, 4).unwrap().order(), 1152);
        assert_eq!(CoxeterPresentation::new(Family::H4, 0).unwrap().order(), 14400);
        assert_eq!(CoxeterPresentation::dihedral(7).unwrap().order(), 14);
    }

    #[test]
    fn matrices_are_symmetric_with_unit_diagonal() {
        for p in [
            CoxeterPresentation::new(Family::B, 4).unwrap(),
            CoxeterPresentation::new(Family::F4, 4).unwrap(),
            CoxeterPresentation::new(Family::H4, 4).unwrap(),
        ] {
            for s in 0..p.rank() {
                assert_eq!(p.m(s, s), 1);
                for t in 0..p.rank() {
                    assert_eq!(p.m(s, t), p.m(t, s));
                    if s != t {
                        assert!(p.m(s, t) >= 2);
                    }
                }
            }
        }
        let f4 = CoxeterPresentation::new(Family::F4, 4).unwrap();
        assert_eq!((f4.m(0, 1), f4.m(1, 2), f4.m(2, 3), f4.m(0, 3)), (3, 4, 3, 2));
    }

    #[test]
    fn type_c_aliases_b_and_d_is_rejected() {
        assert_eq!("C".parse::<Family>().unwrap(), Family::B);
        let err = "D".parse::<Family>().unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
        assert!(err.to_string().contains("pi(b_x) != 0"));
        assert!("E7".parse::<Family>().is_err());
        assert!("X".parse::<Family>().is_err());
    }

    #[test]
    fn bad_ranks() {
        assert!(CoxeterPresentation::new(Family::H3, 4).is_err());
        assert!(CoxeterPresentation::new(Family::A, 0).is_err());
        assert!(CoxeterPresentation::dihedral(2).is_err());
    }
}
