//! Constraint engine for semisimple weight-one Lie algebras of holomorphic
//! c = 24 VOAs, organized around the W-element `α = Σ ρ_j / h∨_j`.
//!
//! With `⟨α,α⟩ = 2K₀/N₀`, `(K₀,N₀) = 1`, the strange formula forces
//! `dim V₁ / (dim V₁ − 24) = K₀/N₀` and `k_j / h∨_j = (K₀ − N₀)/N₀`.

mod cases;
mod noone;

pub use cases::{case_inequality_report, CaseReport, InequalityLine};
pub use noone::{mod8_obstruction, prop_noone_search, NoOneReport, NoOneTriple};

use crate::arith::{is_composite, lcm_u64, Q, Z};
use crate::lie::{LevelledAlgebra, SimpleLieType, MAX_RANK};
use num_integer::Integer;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("a candidate needs at least one component")]
    Empty,
    #[error("total rank {0} exceeds 24")]
    RankTooLarge(u32),
    #[error("dim V1 = {0} is below 24")]
    DimensionBelow24(u64),
    #[error("dim V1 = 24: the Leech boundary, where ⟨α,α⟩ is undefined")]
    LeechBoundary,
    #[error("cannot parse candidate {0:?}")]
    Parse(String),
    #[error("{0} is not one of the four composite (N0, K0) cases")]
    UnknownCase(String),
}

/// A semisimple `V₁ = ⊕ 𝒢_{j,k_j}`, stored as a sorted multiset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Candidate {
    components: Vec<LevelledAlgebra>,
}

impl Candidate {
    pub fn new(mut components: Vec<LevelledAlgebra>) -> Result<Self, ClassifyError> {
        if components.is_empty() {
            return Err(ClassifyError::Empty);
        }
        components.sort();
        let c = Candidate { components };
        if c.rank() > MAX_RANK {
            return Err(ClassifyError::RankTooLarge(c.rank()));
        }
        if c.dim() < 24 {
            return Err(ClassifyError::DimensionBelow24(c.dim()));
        }
        Ok(c)
    }

    pub fn components(&self) -> &[LevelledAlgebra] {
        &self.components
    }

    pub fn rank(&self) -> u32 {
        self.components.iter().map(|c| c.ty.rank()).sum()
    }

    pub fn dim(&self) -> u64 {
        self.components.iter().map(|c| c.ty.dim()).sum()
    }
}

fn write_multiset<T: PartialEq + fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    let mut i = 0;
    let mut first = true;
    while i < items.len() {
        let m = items[i..].iter().take_while(|x| **x == items[i]).count();
        if !first {
            f.write_str("+")?;
        }
        first = false;
        if m == 1 {
            write!(f, "{}", items[i])?;
        } else {
            write!(f, "{}^{}", items[i], m)?;
        }
        i += m;
    }
    Ok(())
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_multiset(f, &self.components)
    }
}

impl FromStr for Candidate {
    type Err = ClassifyError;

    /// Accepts `E8,2+B8,1` and `C8,1+F4,1^2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ClassifyError::Parse(s.to_string());
        let mut components = Vec::new();
        for part in s.split('+') {
            let part = part.trim();
            let (body, mult) = match part.split_once('^') {
                Some((b, m)) => (b, m.parse::<usize>().map_err(|_| err())?),
                None => (part, 1),
            };
            let (ty, level) = body.split_once(',').ok_or_else(err)?;
            let ty: SimpleLieType = ty.parse().map_err(|_| err())?;
            let level: u32 = level.trim().parse().map_err(|_| err())?;
            let a = LevelledAlgebra::new(ty, level).ok_or_else(err)?;
            if mult == 0 || mult > 24 {
                return Err(err());
            }
            components.extend(std::iter::repeat_n(a, mult));
        }
        Candidate::new(components)
    }
}

impl Serialize for Candidate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A failed constraint of the W-element system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "constraint")]
pub enum Violation {
    /// `h∨_j / k_j` differs from `(dim V₁ − 24)/24`
    LevelRatio { component: String },
    K0NotGreaterThanN0,
    DifferenceNotDividing24,
    N0NotDividingDualCoxeter { component: String },
    DifferenceNotDividingLevel { component: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct WReport {
    pub candidate: Candidate,
    pub dim: u64,
    pub rank: u32,
    /// `(dim V₁ − 24)/24`, the common value `h∨_j/k_j` must take
    #[serde(serialize_with = "crate::report::ser_q")]
    pub ratio: Q,
    #[serde(serialize_with = "crate::report::ser_q_vec")]
    pub component_ratios: Vec<Q>,
    /// `2 dim V₁ / (dim V₁ − 24)`
    #[serde(serialize_with = "crate::report::ser_q")]
    pub alpha_norm: Q,
    /// `Σ k_j dim 𝒢_j / (12 h∨_j)` from the supplied levels
    #[serde(serialize_with = "crate::report::ser_q")]
    pub alpha_norm_from_levels: Q,
    pub k0: u64,
    pub n0: u64,
    /// `lcm(r_j h∨_j)`, which divides the order `N` of `exp(2πiα(0))`
    pub t: u64,
    /// `lcm(r_j h∨_j / N₀)` when every quotient is integral
    pub a: Option<u64>,
    /// `T / N₀`: `R = N/N₀` is a multiple of this
    #[serde(serialize_with = "crate::report::ser_q")]
    pub min_r: Q,
    pub admissible: bool,
    pub violations: Vec<Violation>,
}

/// `K₀/N₀ = dim/(dim − 24)` in lowest terms.
fn k0_n0(dim: u64) -> (u64, u64) {
    let g = dim.gcd(&(dim - 24));
    (dim / g, (dim - 24) / g)
}

pub fn w_report(c: &Candidate) -> Result<WReport, ClassifyError> {
    let dim = c.dim();
    if dim == 24 {
        return Err(ClassifyError::LeechBoundary);
    }
    let (k0, n0) = k0_n0(dim);
    let ratio = Q::new(Z::from(dim - 24), Z::from(24));
    let alpha_norm = Q::new(Z::from(2 * dim), Z::from(dim - 24));
    let mut violations = Vec::new();
    let mut component_ratios = Vec::new();
    let mut from_levels = Q::from_integer(Z::from(0));
    let mut t = 1;
    let mut a = Some(1u64);
    for comp in c.components() {
        let info = comp.ty.info();
        let k = comp.level as u64;
        let r = Q::new(Z::from(info.dual_coxeter), Z::from(k));
        if r != ratio {
            violations.push(Violation::LevelRatio { component: comp.to_string() });
        }
        component_ratios.push(r);
        from_levels += Q::new(Z::from(k * info.dim), Z::from(12 * info.dual_coxeter));
        t = lcm_u64(t, info.lacing * info.dual_coxeter);
        let rh = info.lacing * info.dual_coxeter;
        a = a.and_then(|acc| (rh % n0 == 0).then(|| lcm_u64(acc, rh / n0)));
    }
    if k0 <= n0 {
        violations.push(Violation::K0NotGreaterThanN0);
    }
    if k0 > n0 && 24 % (k0 - n0) != 0 {
        violations.push(Violation::DifferenceNotDividing24);
    }
    for comp in c.components() {
        if comp.ty.dual_coxeter() % n0 != 0 {
            violations.push(Violation::N0NotDividingDualCoxeter { component: comp.to_string() });
        }
        if k0 > n0 && (comp.level as u64) % (k0 - n0) != 0 {
            violations.push(Violation::DifferenceNotDividingLevel { component: comp.to_string() });
        }
    }
    Ok(WReport {
        candidate: c.clone(),
        dim,
        rank: c.rank(),
        ratio,
        component_ratios,
        alpha_norm,
        alpha_norm_from_levels: from_levels,
        k0,
        n0,
        t,
        a,
        min_r: Q::new(Z::from(t), Z::from(n0)),
        admissible: violations.is_empty(),
        violations,
    })
}

/// Extra hypotheses on the order `N = R·N₀` of `exp(2πiα(0))`, which the
/// candidate alone does not determine.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Hypotheses {
    pub r: Option<u64>,
    pub r_prime: bool,
}

/// Checks hypotheses against a report; returns the failed ones as messages.
pub fn check_hypotheses(w: &WReport, h: &Hypotheses) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(r) = h.r {
        if (r * w.n0) % w.t != 0 {
            out.push(format!("R = {r} is not a multiple of T/N0 = {}", crate::arith::format_rational(&w.min_r)));
        }
        if let Some(a) = w.a {
            if r % a != 0 {
                out.push(format!("A = {a} does not divide R = {r}"));
            }
        }
        if h.r_prime && !crate::arith::is_prime(r) {
            out.push(format!("R = {r} is not prime"));
        }
    }
    out
}

/// A multiset of simple types together with the W-element data it forces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeReport {
    pub types: Vec<SimpleLieType>,
    pub dim: u64,
    pub rank: u32,
    #[serde(serialize_with = "crate::report::ser_q")]
    pub alpha_norm: Q,
    pub k0: u64,
    pub n0: u64,
    /// `k_j = 24 h∨_j / (dim − 24)` when all are integers
    pub levels: Option<Vec<u32>>,
}

impl TypeReport {
    pub fn new(mut types: Vec<SimpleLieType>) -> Result<Self, ClassifyError> {
        types.sort();
        let dim: u64 = types.iter().map(|t| t.dim()).sum();
        match dim.cmp(&24) {
            std::cmp::Ordering::Less => return Err(ClassifyError::DimensionBelow24(dim)),
            std::cmp::Ordering::Equal => return Err(ClassifyError::LeechBoundary),
            _ => {}
        }
        let (k0, n0) = k0_n0(dim);
        let levels = types
            .iter()
            .map(|t| {
                let num = 24 * t.dual_coxeter();
                (num % (dim - 24) == 0).then(|| (num / (dim - 24)) as u32)
            })
            .collect();
        Ok(TypeReport {
            rank: types.iter().map(|t| t.rank()).sum(),
            alpha_norm: Q::new(Z::from(2 * dim), Z::from(dim - 24)),
            types,
            dim,
            k0,
            n0,
            levels,
        })
    }

    /// The candidate with the forced levels, if they are integral.
    pub fn candidate(&self) -> Option<Candidate> {
        let levels = self.levels.as_ref()?;
        let comps = self.types.iter().zip(levels).map(|(&t, &k)| LevelledAlgebra::new(t, k)).collect::<Option<Vec<_>>>()?;
        Candidate::new(comps).ok()
    }
}

impl fmt::Display for TypeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.candidate() {
            Some(c) => write!(f, "{c}"),
            None => write_multiset(f, &self.types),
        }
    }
}

/// Filters for [`enumerate_candidates`]. With everything off only `dim V₁ > 24` is imposed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// every derived level `24 h∨_j/(dim − 24)` is a positive integer,
    /// equivalently `N₀ | h∨_j` and `(K₀ − N₀) | k_j`
    pub integral_levels: bool,
    /// `N₀` and `K₀` are both composite
    pub composite: bool,
}

impl EnumerationOptions {
    pub fn all() -> Self {
        EnumerationOptions { integral_levels: true, composite: true }
    }

    fn accepts(&self, r: &TypeReport) -> bool {
        (!self.integral_levels || r.levels.is_some()) && (!self.composite || (is_composite(r.n0) && is_composite(r.k0)))
    }
}

/// Exhaustive search over multisets of simple types of total rank `rank`
/// (there are about 1.2 million at rank 24). Sorted by dimension, then types.
pub fn enumerate_candidates(rank: u32, opts: EnumerationOptions) -> Vec<TypeReport> {
    let types = SimpleLieType::all_up_to_rank(rank.min(MAX_RANK));
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(types: &[SimpleLieType], start: usize, left: u32, cur: &mut Vec<SimpleLieType>, opts: &EnumerationOptions, out: &mut Vec<TypeReport>) {
        if left == 0 {
            let dim: u64 = cur.iter().map(|t| t.dim()).sum();
            if dim > 24 {
                let r = TypeReport::new(cur.clone()).expect("dim > 24");
                if opts.accepts(&r) {
                    out.push(r);
                }
            }
            return;
        }
        for i in start..types.len() {
            if types[i].rank() <= left {
                cur.push(types[i]);
                rec(types, i, left - types[i].rank(), cur, opts, out);
                cur.pop();
            }
        }
    }
    if rank == 0 || rank > MAX_RANK {
        return out;
    }
    rec(&types, 0, rank, &mut cur, &opts, &mut out);
    out.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.types.cmp(&b.types)));
    out
}

/// Simple types of rank at most `max_rank` whose dual Coxeter number is divisible by `n0`.
pub fn components_with_n0(n0: u64, max_rank: u32) -> Vec<SimpleLieType> {
    SimpleLieType::all_up_to_rank(max_rank).into_iter().filter(|t| t.dual_coxeter() % n0 == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qf};
    use crate::lie::SimpleLieType as T;

    fn cand(s: &str) -> Candidate {
        s.parse().unwrap()
    }

    #[test]
    fn reports_for_small_examples() {
        let d4 = w_report(&cand("D4,36")).unwrap();
        assert_eq!(d4.alpha_norm, q(14));
        assert!(d4.admissible, "{:?}", d4.violations);
        assert_eq!(d4.alpha_norm_from_levels, q(14));

        let f4 = w_report(&cand("F4,6")).unwrap();
        assert_eq!(f4.alpha_norm, qf(26, 7));
        assert_eq!(f4.n0, 7);
        assert!(!f4.admissible);

        let e8b8 = w_report(&cand("E8,2+B8,1")).unwrap();
        assert_eq!(e8b8.dim, 384);
        assert_eq!(e8b8.alpha_norm, qf(32, 15));
        assert_eq!(e8b8.k0 - e8b8.n0, 1);
        assert!(e8b8.admissible);
    }

    #[test]
    fn leech_boundary_is_an_error() {
        // A4 has dimension 24
        let c = Candidate::new(vec![LevelledAlgebra::new(T::a(4), 1).unwrap()]).unwrap();
        assert_eq!(w_report(&c).unwrap_err(), ClassifyError::LeechBoundary);
        assert!(Candidate::new(vec![]).is_err());
        assert!(matches!("A1,1".parse::<Candidate>(), Err(ClassifyError::DimensionBelow24(3))));
    }

    #[test]
    fn minimal_r_for_rank_four() {
        let want = [("B4", q(14)), ("C4", q(10)), ("D4", q(6)), ("F4", qf(18, 7)), ("G2", q(12))];
        for (name, r) in want {
            let t: SimpleLieType = name.parse().unwrap();
            let comps = if name == "G2" { vec![t, t] } else { vec![t] };
            let tr = TypeReport::new(comps.clone()).unwrap();
            let level = tr.levels.as_ref().map_or(1, |l| l[0]);
            let c = Candidate::new(comps.iter().map(|&t| LevelledAlgebra::new(t, level).unwrap()).collect()).unwrap();
            assert_eq!(w_report(&c).unwrap().min_r, r, "{name}");
        }
    }

    #[test]
    fn candidate_text_round_trip() {
        let c = cand("F4,1^2+C8,1");
        assert_eq!(c.to_string(), "C8,1+F4,1^2");
        assert_eq!(cand(&c.to_string()), c);
        assert!("X3,1".parse::<Candidate>().is_err());
        assert!("A3".parse::<Candidate>().is_err());
    }

    #[test]
    fn hypotheses() {
        let w = w_report(&cand("E8,2+B8,1")).unwrap();
        assert_eq!(w.min_r, q(2));
        assert!(check_hypotheses(&w, &Hypotheses { r: Some(2), r_prime: true }).is_empty());
        assert_eq!(check_hypotheses(&w, &Hypotheses { r: Some(3), r_prime: false }).len(), 2);
    }
}

#[cfg(test)]
mod enumeration_tests {
    use super::*;
    use crate::arith::{q, qf};
    use crate::lie::SimpleLieType as T;

    fn names(v: &[TypeReport]) -> Vec<String> {
        v.iter().map(|r| r.to_string()).collect()
    }

    #[test]
    fn rank_four() {
        let all = enumerate_candidates(4, EnumerationOptions::default());
        let got: Vec<(String, Q)> = all.iter().map(|r| (write_types(&r.types), r.alpha_norm.clone())).collect();
        let want = [("B4", q(6)), ("C4", q(6)), ("D4", q(14)), ("F4", qf(26, 7)), ("G2^2", q(14))];
        let mut got = got;
        got.sort();
        assert_eq!(got, want.iter().map(|(n, a)| (n.to_string(), a.clone())).collect::<Vec<_>>());
        assert!(enumerate_candidates(4, EnumerationOptions::all()).is_empty());
    }

    fn write_types(t: &[SimpleLieType]) -> String {
        struct W<'a>(&'a [SimpleLieType]);
        impl fmt::Display for W<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_multiset(f, self.0)
            }
        }
        W(t).to_string()
    }

    #[test]
    fn composite_sweep() {
        let mut found = Vec::new();
        for rank in [4, 6, 8, 10, 12, 16] {
            found.extend(enumerate_candidates(rank, EnumerationOptions::all()));
        }
        let mut got = names(&found);
        got.sort();
        assert_eq!(got, vec!["A7,1+D9,2", "B5,1+E7,2+F4,1", "B8,1+E8,2", "C8,1+F4,1^2"]);
        for r in &found {
            let w = w_report(&r.candidate().unwrap()).unwrap();
            assert!(w.admissible);
            assert_eq!(w.k0 - w.n0, 1);
            assert_eq!(w.alpha_norm_from_levels, w.alpha_norm);
            assert_eq!(w.min_r, q(2));
        }
    }

    #[test]
    fn filters_are_monotone() {
        for rank in 1..=9 {
            let base = enumerate_candidates(rank, EnumerationOptions::default());
            let lv = enumerate_candidates(rank, EnumerationOptions { integral_levels: true, composite: false });
            let cm = enumerate_candidates(rank, EnumerationOptions { integral_levels: false, composite: true });
            let both = enumerate_candidates(rank, EnumerationOptions::all());
            for sub in [&lv, &cm] {
                assert!(sub.iter().all(|r| base.contains(r)));
            }
            assert!(both.iter().all(|r| lv.contains(r) && cm.contains(r)));
            for r in &lv {
                let w = w_report(&r.candidate().unwrap()).unwrap();
                assert!(w.admissible, "{r}: {:?}", w.violations);
                assert_eq!(w.alpha_norm_from_levels, w.alpha_norm);
                for c in w.candidate.components() {
                    assert_eq!(c.ty.dual_coxeter() % w.n0, 0);
                    assert_eq!(c.level as u64 % (w.k0 - w.n0), 0);
                }
            }
        }
    }

    #[test]
    fn components_for_n0_eight() {
        let got: Vec<String> = components_with_n0(8, 16).iter().map(|t| t.to_string()).collect();
        assert_eq!(got, ["A7", "A15", "C7", "C15", "D5", "D9", "D13"]);
        let dim = 216;
        assert_eq!(k0_n0(dim), (9, 8));
    }

    #[test]
    fn d12_alone_gives_n0_twenty_one() {
        let r = TypeReport::new(vec![T::d(12)]).unwrap();
        assert_eq!(r.dim, 276);
        assert_eq!(r.alpha_norm, qf(46, 21));
        assert_eq!((r.k0, r.n0), (23, 21));
        assert!(r.levels.is_none());
    }

    #[test]
    fn case_reports() {
        for (name, n0) in [("A7,1+D9,2", 8), ("C8,1+F4,1^2", 9), ("B5,1+E7,2+F4,1", 9), ("B8,1+E8,2", 15)] {
            let r = case_inequality_report(&name.parse().unwrap()).unwrap();
            assert_eq!(r.n0, n0);
            assert!(r.contradiction, "{name}");
            assert!(r.lines.iter().filter(|l| l.fact).all(|l| l.holds));
        }
        let r15 = case_inequality_report(&"B8,1+E8,2".parse().unwrap()).unwrap();
        let s: Vec<u64> = r15.projections.iter().map(|p| p.0).collect();
        assert_eq!(s, [6, 10, 12, 18, 20, 24]);
        // q = 1 survives the first bound and is killed by the j-refinement
        assert!(r15.lines.iter().any(|l| l.branch == "q=1" && !l.fact && l.holds));
        let r9 = case_inequality_report(&"C8,1+F4,1^2".parse().unwrap()).unwrap();
        assert_eq!(r9.projections.iter().map(|p| p.0).collect::<Vec<_>>(), [6, 12, 15]);
        let q1 = r9.lines.iter().find(|l| l.branch == "q=1" && !l.fact).unwrap();
        assert_eq!((q1.lhs.clone(), q1.rhs.clone()), (qf(20, 9), qf(48, 9)));
        assert!(matches!(case_inequality_report(&"D4,36".parse().unwrap()), Err(ClassifyError::UnknownCase(_))));
    }
}
