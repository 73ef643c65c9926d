//! Finite simple Lie algebras: classification data, explicit root systems and
//! integrable highest weights.
//!
//! The invariant form is normalized once so that long roots have norm 2; every
//! level and every inner product elsewhere in the crate is measured against it.

mod roots;
mod weights;

pub use roots::RootSystem;
pub use weights::{integrable_weights, weight_system, Weight, WeightSpace, WeightSystem};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Largest rank accepted anywhere in the crate.
pub const MAX_RANK: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("{family}{rank} is not a valid simple type")]
    InvalidType { family: Family, rank: u32 },
    #[error("rank {0} exceeds the supported maximum of 24")]
    RankTooLarge(u32),
    #[error("cannot parse simple type {0:?}")]
    Parse(String),
    #[error("weight {0:?} has the wrong length or is not dominant")]
    NotDominant(Vec<i64>),
    #[error("weight of level {level} is not integrable at level {k}")]
    NotIntegrable { level: i64, k: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A simple type `X_n`. Construction validates the family/rank pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleLieType {
    family: Family,
    rank: u32,
}

/// The five classical integers attached to a simple type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlgebraInfo {
    pub dim: u64,
    pub rank: u32,
    pub coxeter: u64,
    pub dual_coxeter: u64,
    pub lacing: u64,
}

impl SimpleLieType {
    pub fn new(family: Family, rank: u32) -> Result<Self, LieError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(LieError::InvalidType { family, rank });
        }
        if rank > MAX_RANK {
            return Err(LieError::RankTooLarge(rank));
        }
        Ok(SimpleLieType { family, rank })
    }

    pub fn a(n: u32) -> Self {
        Self::new(Family::A, n).expect("valid A type")
    }
    pub fn b(n: u32) -> Self {
        Self::new(Family::B, n).expect("valid B type")
    }
    pub fn c(n: u32) -> Self {
        Self::new(Family::C, n).expect("valid C type")
    }
    pub fn d(n: u32) -> Self {
        Self::new(Family::D, n).expect("valid D type")
    }
    pub fn e(n: u32) -> Self {
        Self::new(Family::E, n).expect("valid E type")
    }
    pub fn f4() -> Self {
        SimpleLieType { family: Family::F, rank: 4 }
    }
    pub fn g2() -> Self {
        SimpleLieType { family: Family::G, rank: 2 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Every valid simple type of rank at most `max_rank`, in canonical order.
    pub fn all_up_to_rank(max_rank: u32) -> Vec<SimpleLieType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            for rank in 1..=max_rank.min(MAX_RANK) {
                if let Ok(t) = SimpleLieType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn info(&self) -> AlgebraInfo {
        let n = self.rank as u64;
        let (dim, coxeter, dual_coxeter, lacing) = match self.family {
            Family::A => (n * (n + 2), n + 1, n + 1, 1),
            Family::B => (n * (2 * n + 1), 2 * n, 2 * n - 1, 2),
            Family::C => (n * (2 * n + 1), 2 * n, n + 1, 2),
            Family::D => (n * (2 * n - 1), 2 * n - 2, 2 * n - 2, 1),
            Family::E => match n {
                6 => (78, 12, 12, 1),
                7 => (133, 18, 18, 1),
                _ => (248, 30, 30, 1),
            },
            Family::F => (52, 12, 9, 2),
            Family::G => (14, 6, 4, 3),
        };
        AlgebraInfo { dim, rank: self.rank, coxeter, dual_coxeter, lacing }
    }

    pub fn dim(&self) -> u64 {
        self.info().dim
    }

    pub fn dual_coxeter(&self) -> u64 {
        self.info().dual_coxeter
    }

    /// Order of the Weyl group.
    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |m: u128| (1..=m).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}

/// Free-function form of [`SimpleLieType::info`].
pub fn algebra_info(t: SimpleLieType) -> AlgebraInfo {
    t.info()
}

impl fmt::Display for SimpleLieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleLieType {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(LieError::Parse(s.to_string())),
        };
        let rank: u32 = chars.as_str().parse().map_err(|_| LieError::Parse(s.to_string()))?;
        SimpleLieType::new(family, rank)
    }
}

impl Serialize for SimpleLieType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A simple type together with a positive integer level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LevelledAlgebra {
    pub ty: SimpleLieType,
    pub level: u32,
}

impl LevelledAlgebra {
    pub fn new(ty: SimpleLieType, level: u32) -> Option<Self> {
        (level >= 1).then_some(LevelledAlgebra { ty, level })
    }
}

impl fmt::Display for LevelledAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.ty, self.level)
    }
}
