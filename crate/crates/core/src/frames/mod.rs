//! Frame shapes `∏ n^{m_n}`: the characteristic polynomial `∏ (xⁿ − 1)^{m_n}`
//! of an element of `Co₀` on `ℂΛ`.
//!
//! Computation happens on the cyclotomic form `∏ Φ_d^{a_d}` with
//! `a_d = Σ_{d|n} m_n`; Möbius inversion `m_n = Σ_{n|d} μ(d/n) a_d` goes back.

mod table;

pub use table::{class_table, ClassRow, ClassTable};

use crate::arith::{divisors, euler_phi, gcd_u64, lcm_u64, moebius};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FrameError {
    #[error("cannot parse frame shape {0:?}")]
    Parse(String),
    #[error("degree {0} is not 24")]
    Degree(i64),
    #[error("negative cyclotomic multiplicity a_{d} = {a}")]
    NegativeCyclotomic { d: u64, a: i64 },
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("no class in the table has frame shape {0}")]
    NotFound(String),
    #[error("unknown class name {0:?}")]
    UnknownClass(String),
}

/// A valid frame shape: degree 24 and non-negative cyclotomic multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrameShape {
    m: BTreeMap<u64, i64>,
}

/// `∏ Φ_d^{a_d}` of degree 24.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycloMultiset {
    a: BTreeMap<u64, u64>,
}

impl FrameShape {
    pub fn new(m: impl IntoIterator<Item = (u64, i64)>) -> Result<Self, FrameError> {
        let mut map = BTreeMap::new();
        for (n, e) in m {
            if n == 0 {
                return Err(FrameError::Parse("cycle length 0".into()));
            }
            *map.entry(n).or_insert(0) += e;
        }
        map.retain(|_, e| *e != 0);
        let f = FrameShape { m: map };
        let deg: i64 = f.m.iter().map(|(&n, &e)| n as i64 * e).sum();
        if deg != 24 {
            return Err(FrameError::Degree(deg));
        }
        f.cyclotomic_exponents()?;
        Ok(f)
    }

    pub fn identity() -> Self {
        FrameShape { m: BTreeMap::from([(1, 24)]) }
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.m
    }

    pub fn exponent(&self, n: u64) -> i64 {
        self.m.get(&n).copied().unwrap_or(0)
    }

    fn cyclotomic_exponents(&self) -> Result<BTreeMap<u64, u64>, FrameError> {
        let mut a = BTreeMap::new();
        for &n in self.m.keys() {
            for d in divisors(n) {
                a.entry(d).or_insert(0);
            }
        }
        let mut out = BTreeMap::new();
        for &d in a.keys() {
            let ad: i64 = self.m.iter().filter(|(&n, _)| n % d == 0).map(|(_, &e)| e).sum();
            if ad < 0 {
                return Err(FrameError::NegativeCyclotomic { d, a: ad });
            }
            if ad > 0 {
                out.insert(d, ad as u64);
            }
        }
        Ok(out)
    }
}

impl CycloMultiset {
    pub fn new(a: impl IntoIterator<Item = (u64, u64)>) -> Result<Self, FrameError> {
        let mut map = BTreeMap::new();
        for (d, e) in a {
            *map.entry(d).or_insert(0) += e;
        }
        map.retain(|_, e| *e != 0);
        let deg: u64 = map.iter().map(|(&d, &e)| euler_phi(d) * e).sum();
        if deg != 24 {
            return Err(FrameError::Degree(deg as i64));
        }
        Ok(CycloMultiset { a: map })
    }

    pub fn multiplicities(&self) -> &BTreeMap<u64, u64> {
        &self.a
    }

    pub fn multiplicity(&self, d: u64) -> u64 {
        self.a.get(&d).copied().unwrap_or(0)
    }

    /// `lcm{d : a_d > 0}`
    pub fn order(&self) -> u64 {
        self.a.keys().fold(1, |acc, &d| lcm_u64(acc, d))
    }
}

pub fn to_cyclotomic(f: &FrameShape) -> CycloMultiset {
    CycloMultiset { a: f.cyclotomic_exponents().expect("validated at construction") }
}

pub fn from_cyclotomic(c: &CycloMultiset) -> Result<FrameShape, FrameError> {
    let top = c.order();
    let mut m = BTreeMap::new();
    for n in divisors(top) {
        let e: i64 = c.a.iter().filter(|(&d, _)| d % n == 0).map(|(&d, &a)| moebius(d / n) * a as i64).sum();
        if e != 0 {
            m.insert(n, e);
        }
    }
    FrameShape::new(m)
}

/// `dim ℂΛ^g = Σ m_n`
pub fn fixed_dim(f: &FrameShape) -> i64 {
    f.m.values().sum()
}

/// `χ(g) = m₁` for the degree-24 character.
pub fn trace(f: &FrameShape) -> i64 {
    f.exponent(1)
}

/// Multiplicity of the eigenvalue `e^{2πi/R}`: `Σ_h m_{hR}`.
pub fn eig_mult(f: &FrameShape, r: u64) -> i64 {
    f.m.iter().filter(|(&n, _)| n % r == 0).map(|(_, &e)| e).sum()
}

pub fn order(f: &FrameShape) -> u64 {
    to_cyclotomic(f).order()
}

/// The frame shape of `g^k`: a primitive `d`-th root of unity goes to a
/// primitive `d/gcd(d,k)`-th one.
pub fn power(f: &FrameShape, k: u64) -> Result<FrameShape, FrameError> {
    if k == 0 {
        return Err(FrameError::ZeroPower);
    }
    let mut a = BTreeMap::new();
    for (&d, &ad) in &to_cyclotomic(f).a {
        let d2 = d / gcd_u64(d, k);
        *a.entry(d2).or_insert(0) += ad * euler_phi(d) / euler_phi(d2);
    }
    from_cyclotomic(&CycloMultiset::new(a)?)
}

/// Class names with this frame shape; two names only for `1 23`.
pub fn classify_shape(f: &FrameShape) -> Result<Vec<&'static str>, FrameError> {
    let names: Vec<&'static str> = class_table().rows().iter().filter(|r| &r.shape == f).map(|r| r.name).collect();
    if names.is_empty() {
        return Err(FrameError::NotFound(f.to_string()));
    }
    Ok(names)
}

impl fmt::Display for FrameShape {
    /// `1^8 4^8 / 2^8`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |pos: bool| -> Vec<String> {
            self.m.iter().filter(|(_, &e)| (e > 0) == pos).map(|(n, e)| format!("{n}^{}", e.abs())).collect()
        };
        write!(f, "{}", part(true).join(" "))?;
        let den = part(false);
        if !den.is_empty() {
            write!(f, " / {}", den.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for FrameShape {
    type Err = FrameError;

    /// Accepts `1^8 2^8`, `2^16/1^8`, `1^8 4^8 / 2^8` and bare `1 23`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || FrameError::Parse(s.to_string());
        let mut halves = s.split('/');
        let num = halves.next().ok_or_else(err)?;
        let den = halves.next().unwrap_or("");
        if halves.next().is_some() || num.trim().is_empty() {
            return Err(err());
        }
        let mut m = Vec::new();
        for (text, sign) in [(num, 1), (den, -1)] {
            for tok in text.split_whitespace() {
                let (n, e) = match tok.split_once('^') {
                    Some((n, e)) => (n, e),
                    None => (tok, "1"),
                };
                let n: u64 = n.parse().map_err(|_| err())?;
                let e: i64 = e.parse().map_err(|_| err())?;
                if n == 0 || e <= 0 {
                    return Err(err());
                }
                m.push((n, sign * e));
            }
        }
        FrameShape::new(m)
    }
}

impl serde::Serialize for FrameShape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(s: &str) -> FrameShape {
        s.parse().unwrap()
    }

    fn cyc(pairs: &[(u64, u64)]) -> CycloMultiset {
        CycloMultiset::new(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn cyclotomic_conversion() {
        assert_eq!(to_cyclotomic(&fs("1^8 2^8")), cyc(&[(1, 16), (2, 8)]));
        assert_eq!(to_cyclotomic(&fs("2^16/1^8")), cyc(&[(1, 8), (2, 16)]));
        assert_eq!(to_cyclotomic(&fs("1^24")), cyc(&[(1, 24)]));
        assert_eq!(from_cyclotomic(&cyc(&[(1, 8), (2, 16)])).unwrap(), fs("2^16 / 1^8"));
    }

    #[test]
    fn fixed_dimension_and_trace() {
        assert_eq!((fixed_dim(&fs("1^8 2^8")), trace(&fs("1^8 2^8"))), (16, 8));
        assert_eq!((fixed_dim(&fs("2^16/1^8")), trace(&fs("2^16/1^8"))), (8, -8));
        assert_eq!((fixed_dim(&FrameShape::identity()), trace(&FrameShape::identity())), (24, 24));
    }

    #[test]
    fn eigenvalue_multiplicities() {
        assert_eq!(eig_mult(&fs("1^2 3^2 4^2 12^2 / 2^2 6^2"), 6), 0);
        assert_eq!(eig_mult(&fs("1^4 2^1 6^5 / 3^4"), 3), 1);
        let f = fs("1^8 4^8 / 2^8");
        assert_eq!(eig_mult(&f, 1), fixed_dim(&f));
    }

    #[test]
    fn powers() {
        assert_eq!(power(&fs("1^8 4^8/2^8"), 2).unwrap(), fs("2^16/1^8"));
        assert_eq!(power(&fs("1^5 3^1 6^4/2^4"), 2).unwrap(), fs("3^9/1^3"));
        let f = fs("1^2 3^2 4^2 12^2/2^2 6^2");
        assert_eq!(power(&f, 1).unwrap(), f);
        assert_eq!(power(&f, 6).unwrap(), fs("2^16/1^8"));
        assert_eq!(power(&f, 0), Err(FrameError::ZeroPower));
    }

    #[test]
    fn invalid_shapes() {
        assert_eq!("1^8 2^8 / 2^8".parse::<FrameShape>(), Err(FrameError::Degree(8)));
        assert!(matches!("1^24 / 1^1 23^1 / 2".parse::<FrameShape>(), Err(FrameError::Parse(_))));
        // degree 24 but (x²−1)^{-12}(x^{24}−1)^... style negatives
        assert!(matches!("24^2 / 2^12".parse::<FrameShape>(), Err(FrameError::NegativeCyclotomic { .. })));
        assert!("a^2".parse::<FrameShape>().is_err());
        assert!(CycloMultiset::new([(3, 5)]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let f = fs("2^16/1^8");
        assert_eq!(f.to_string(), "2^16 / 1^8");
        assert_eq!(fs("1 23").to_string(), "1^1 23^1");
        assert_eq!(fs(&f.to_string()), f);
    }

    #[test]
    fn classification() {
        assert_eq!(classify_shape(&fs("1^8 2^8")).unwrap(), ["2A"]);
        assert_eq!(classify_shape(&fs("1 23")).unwrap(), ["23A", "23B"]);
        assert_eq!(classify_shape(&fs("3^9/1^3")).unwrap(), ["3C"]);
        assert_eq!(classify_shape(&fs("2^12")).unwrap(), ["2C"]);
        assert!(matches!(classify_shape(&fs("24^1")), Err(FrameError::NotFound(_))));
    }
}
