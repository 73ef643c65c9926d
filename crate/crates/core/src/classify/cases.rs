//! The four composite rank-16 candidates, all with `K₀ − N₀ = 1` and `R = 2`.
//! Each forces the orbifold `Ṽ` to be a Niemeier lattice VOA whose simple
//! roots pair positively with `α`; lower bounds on those pairings then push
//! `⟨α,α⟩` above its required value.
//!
//! A root `x = (s/2K₀)α + x'` of `Ṽ₁` comes from `P(m,n)` with
//! `s = −mK₀ + nN₀`, `(m,N₀) ≠ 1`, `(n,K₀) ≠ 1`, `N₀ ∤ m`, `K₀ ∤ n`, and
//! `s²/(2K₀N₀) ≤ 2`. Then `⟨x,α⟩ = s/N₀`.

use super::{w_report, Candidate, ClassifyError};
use crate::arith::{gcd_u64, is_composite, Q, Z};
use crate::lie::{SimpleLieType, WeightSpace};
use crate::niemeier::NiemeierName;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    fn eval(self, a: &Q, b: &Q) -> bool {
        match self {
            Relation::Eq => a == b,
            Relation::Gt => a > b,
            Relation::Ge => a >= b,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        }
    }
}

/// One evaluated inequality. A `fact` must hold unconditionally; a
/// requirement is what the existence of `V` would imply, and failing it is
/// the contradiction.
#[derive(Debug, Clone, Serialize)]
pub struct InequalityLine {
    pub branch: String,
    pub statement: String,
    #[serde(serialize_with = "crate::report::ser_q")]
    pub lhs: Q,
    pub relation: Relation,
    #[serde(serialize_with = "crate::report::ser_q")]
    pub rhs: Q,
    pub fact: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub candidate: Candidate,
    pub n0: u64,
    pub k0: u64,
    /// admissible positive `s`, with the pairing `⟨x,α⟩ = s/N₀`
    pub projections: Vec<(u64, String)>,
    pub lines: Vec<InequalityLine>,
    /// every fact holds and every leaf branch meets a failed requirement
    pub contradiction: bool,
}

fn qn(n: u64, d: u64) -> Q {
    Q::new(Z::from(n), Z::from(d))
}

/// Positive `s = −mK₀ + nN₀` allowed for roots, by direct search over `(m, n)`.
fn projections(n0: u64, k0: u64) -> Vec<u64> {
    let (n0i, k0i) = (n0 as i64, k0 as i64);
    let mut out = Vec::new();
    for m in -2 * n0i..=2 * n0i {
        if gcd_u64(m.unsigned_abs(), n0) == 1 || m % n0i == 0 {
            continue;
        }
        for n in -2 * k0i..=2 * k0i {
            if gcd_u64(n.unsigned_abs(), k0) == 1 || n % k0i == 0 {
                continue;
            }
            let s = -m * k0i + n * n0i;
            if s > 0 && (s * s) as u64 <= 4 * k0 * n0 {
                out.push(s as u64);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// `(ρ|ρ)` of `A_q^{24/q}`, from the Weyl vector itself.
fn a_q_weyl_norm(q: u32) -> Q {
    let ws = WeightSpace::new(SimpleLieType::a(q));
    let rho = ws.rho();
    ws.inner(&rho, &rho) * Q::from_integer(Z::from(24 / q))
}

struct Builder {
    lines: Vec<InequalityLine>,
}

impl Builder {
    fn push(&mut self, branch: &str, statement: String, lhs: Q, relation: Relation, rhs: Q, fact: bool) {
        let holds = relation.eval(&lhs, &rhs);
        self.lines.push(InequalityLine { branch: branch.to_string(), statement, lhs, relation, rhs, fact, holds });
    }
}

pub fn case_inequality_report(c: &Candidate) -> Result<CaseReport, ClassifyError> {
    let unknown = || ClassifyError::UnknownCase(c.to_string());
    let w = w_report(c).map_err(|_| unknown())?;
    if !w.admissible || w.rank != 16 || !is_composite(w.n0) || !is_composite(w.k0) || w.k0 - w.n0 != 1 {
        return Err(unknown());
    }
    let (n0, k0) = (w.n0, w.k0);
    let alpha = w.alpha_norm.clone();
    let ss = projections(n0, k0);
    let pairing = |s: u64| qn(s, n0);
    let mut b = Builder { lines: Vec::new() };
    b.push("", "<alpha,alpha> = 2K0/N0".into(), alpha.clone(), Relation::Eq, qn(2 * k0, n0), true);
    let c_min = pairing(ss[0]);
    let c2 = &c_min * &c_min;

    match n0 {
        8 => {
            b.push("", "min <x_i,alpha>".into(), c_min.clone(), Relation::Eq, qn(3, 4), true);
            // (ρ|ρ) = h∨ dim/12 with h∨ ≥ 2 and dim > 24 is strictly above 4
            let floor = qn(2 * 24, 12);
            let niemeier_min = NiemeierName::all().iter().map(|n| Q::from_integer(Z::from(2 * n.coxeter() * (n.coxeter() + 1)))).min().unwrap();
            b.push("", "min (rho|rho) over Niemeier lattices with roots > 2*24/12".into(), niemeier_min, Relation::Gt, floor.clone(), true);
            b.push("", "(9/16)*4".into(), &c2 * &floor, Relation::Eq, qn(9, 4), true);
            b.push("", "<alpha,alpha> > (3/4)^2 * 4".into(), alpha.clone(), Relation::Gt, &c2 * &floor, false);
        }
        9 | 15 => {
            let max = *ss.last().unwrap();
            // positive roots pair at least s_min with α and the highest root at most s_max,
            // so the height is at most s_max/s_min and the Coxeter number one more
            let height = max / ss[0];
            b.push("", "height of highest root <= s_max/s_min".into(), qn(max, ss[0]), Relation::Ge, qn(height, 1), true);
            let qs: Vec<u32> = (1..=height as u32).filter(|q| 24 % q == 0).collect();
            for &q in &qs {
                let branch = format!("q={q}");
                let bound = &c2 * a_q_weyl_norm(q);
                let den = if n0 == 9 { 9 } else { 25 };
                b.push(&branch, format!("c^2 (rho|rho) = 8(q+1)(q+2)/{den}"), bound.clone(), Relation::Eq, qn(8 * (q as u64 + 1) * (q as u64 + 2), den), true);
                b.push(&branch, format!("<alpha,alpha> >= c^2 (rho|rho) for A{q}^{}", 24 / q), alpha.clone(), Relation::Ge, bound, false);
            }
            if n0 == 15 {
                // A1^24: ρ = ½Σx_i, and ⟨α,α⟩ ≥ ⟨α,(2/5)ρ⟩ = (1/5)Σ⟨α,x_i⟩. The roots
                // split evenly between the two classes with 3 | s, j of each; the rest have 5 | s.
                let by3: Vec<u64> = ss.iter().copied().filter(|s| s % 3 == 0).collect();
                let by5: Vec<u64> = ss.iter().copied().filter(|s| s % 5 == 0).collect();
                let (p1, p2, p3) = (pairing(by3[0]), pairing(by3[1]), pairing(by5[0]));
                for j in 0..=12u64 {
                    let branch = format!("q=1, j={j}");
                    let jq = Q::from_integer(Z::from(j));
                    let sum = (&jq * &p1 + &jq * &p2 + Q::from_integer(Z::from(24 - 2 * j)) * &p3) / Q::from_integer(Z::from(5));
                    b.push(&branch, "bound = (240-2j)/75".into(), sum.clone(), Relation::Eq, qn(240 - 2 * j, 75), true);
                    b.push(&branch, "bound >= 216/75".into(), sum.clone(), Relation::Ge, qn(216, 75), true);
                    b.push(&branch, "<alpha,alpha> >= bound".into(), alpha.clone(), Relation::Ge, sum, false);
                }
            }
        }
        _ => return Err(unknown()),
    }

    // a leaf branch is refuted when a requirement on it, or on an enclosing
    // branch, fails; "q=1" encloses "q=1, j=3"
    let names: Vec<&str> = b.lines.iter().map(|l| l.branch.as_str()).collect();
    let leaves: Vec<&str> = names.iter().copied().filter(|n| !names.iter().any(|m| m.len() > n.len() && m.starts_with(n))).collect();
    let encloses = |outer: &str, leaf: &str| outer.is_empty() || leaf == outer || leaf.starts_with(&format!("{outer}, "));
    let refuted = |leaf: &str| b.lines.iter().any(|l| !l.fact && !l.holds && encloses(&l.branch, leaf));
    let facts_hold = b.lines.iter().filter(|l| l.fact).all(|l| l.holds);
    let contradiction = facts_hold && leaves.iter().all(|leaf| refuted(leaf));
    let projections = ss.iter().map(|&s| (s, crate::arith::format_rational(&pairing(s)))).collect();
    Ok(CaseReport { candidate: c.clone(), n0, k0, projections, lines: b.lines, contradiction })
}
