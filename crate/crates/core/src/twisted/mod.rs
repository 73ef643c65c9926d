//! Conformal weights in the module twisted by `exp(2πi α(0))` for the W-element
//! `α = Σ ρ_j/h∨_j`, and the grading shift on the sector `T^m`.

use crate::arith::{Q, Z};
use crate::classify::Candidate;
use crate::lie::{integrable_weights, weight_system, LevelledAlgebra, LieError, SimpleLieType, Weight, WeightSpace};
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TwistError {
    #[error("order N must be positive")]
    ZeroOrder,
    #[error("component {component}: {source}")]
    Lie { component: usize, source: LieError },
}

/// `N = |g|`, `⟨α,α⟩ = 2K/N`, sector `T^m`, `α(0)`-eigenvalue `s/N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistParams {
    pub n: u64,
    #[serde(serialize_with = "crate::report::ser_q")]
    pub k: Q,
    pub m: i64,
    #[serde(serialize_with = "crate::report::ser_q")]
    pub s: Q,
}

impl TwistParams {
    pub fn new(n: u64, k: Q, m: i64, s: Q) -> Result<Self, TwistError> {
        if n == 0 {
            return Err(TwistError::ZeroOrder);
        }
        Ok(TwistParams { n, k, m, s })
    }

    /// `Y^{T^m}(α,z) = Y(α,z) − m(2K/N) z⁻¹`: the shift of `α(0)`.
    pub fn alpha0_shift(&self) -> Q {
        -Q::from_integer(Z::from(2 * self.m)) * &self.k / Q::from_integer(Z::from(self.n))
    }

    /// `T¹` has an integral-weight sector exactly when `K` is an integer.
    pub fn has_integral_sector(&self) -> bool {
        self.k.is_integer()
    }
}

/// `L^{T^m}(0) − L(0) = −m(s − mK)/N`
pub fn grading_shift(p: &TwistParams) -> Q {
    let m = Q::from_integer(Z::from(p.m));
    -(&m * (&p.s - &m * &p.k)) / Q::from_integer(Z::from(p.n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedComponent {
    pub algebra: LevelledAlgebra,
    pub lambda: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentWeight {
    /// `(λ|2ρ+λ) / 2(k+h∨)`
    #[serde(serialize_with = "crate::report::ser_q")]
    pub casimir: Q,
    /// `(1/h∨) min{(−ρ|μ) : μ ∈ Π(λ)}`, from the weights of `V(λ)`
    #[serde(serialize_with = "crate::report::ser_q")]
    pub min_term: Q,
    /// `−(ρ|λ)/h∨`
    #[serde(serialize_with = "crate::report::ser_q")]
    pub min_term_expected: Q,
    /// `(ρ|μ)` over `Π(λ)` ranges exactly over `[−(ρ|λ), (ρ|λ)]`
    pub extremes_symmetric: bool,
    /// `k(ρ|ρ) / 2(h∨)²`
    #[serde(serialize_with = "crate::report::ser_q")]
    pub rho_term: Q,
    /// `[(h∨λ − kρ | h∨λ − kρ) + k h∨(ρ|ρ)] / 2(h∨)²(k+h∨)`
    #[serde(serialize_with = "crate::report::ser_q")]
    pub closed_form: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistedWeight {
    pub components: Vec<ComponentWeight>,
    #[serde(serialize_with = "crate::report::ser_q")]
    pub three_term: Q,
    #[serde(serialize_with = "crate::report::ser_q")]
    pub closed_form: Q,
    /// `Σ k h∨(ρ|ρ) / 2(h∨)²(k+h∨)`, attained iff every `h∨λ = kρ`
    #[serde(serialize_with = "crate::report::ser_q")]
    pub lower_bound: Q,
}

impl TwistedWeight {
    pub fn paths_agree(&self) -> bool {
        self.three_term == self.closed_form && self.components.iter().all(|c| c.min_term == c.min_term_expected && c.extremes_symmetric)
    }
}

fn qi(x: i64) -> Q {
    Q::from_integer(Z::from(x))
}

fn component_weight(c: &TwistedComponent, index: usize) -> Result<(ComponentWeight, Q), TwistError> {
    let lie = |source| TwistError::Lie { component: index, source };
    let ws = WeightSpace::new(c.algebra.ty);
    if !ws.is_dominant(&c.lambda) {
        return Err(lie(LieError::NotDominant(c.lambda.clone())));
    }
    let lv = ws.level(&c.lambda);
    if lv > c.algebra.level as i64 {
        return Err(lie(LieError::NotIntegrable { level: lv, k: c.algebra.level }));
    }
    let k = c.algebra.level as i64;
    let h = c.algebra.ty.dual_coxeter() as i64;
    let rho = ws.rho();
    let lam = &c.lambda;
    let two_rho_lam: Vec<i64> = rho.iter().zip(lam).map(|(r, l)| 2 * r + l).collect();
    let casimir = ws.inner(lam, &two_rho_lam) / qi(2 * (k + h));
    let sys = weight_system(c.algebra.ty, lam).map_err(lie)?;
    let (lo, hi) = sys.pairing_extremes(&rho);
    let rho_lam = ws.inner(&rho, lam);
    let extremes_symmetric = lo == -rho_lam.clone() && hi == rho_lam;
    // min(−ρ|μ) = −max(ρ|μ)
    let min_term = -hi / qi(h);
    let min_term_expected = -rho_lam / qi(h);
    let rr = ws.inner(&rho, &rho);
    let rho_term = qi(k) * &rr / qi(2 * h * h);
    let diff: Vec<i64> = lam.iter().zip(&rho).map(|(l, r)| h * l - k * r).collect();
    let closed_form = (ws.inner(&diff, &diff) + qi(k * h) * &rr) / qi(2 * h * h * (k + h));
    let bound = qi(k * h) * &rr / qi(2 * h * h * (k + h));
    Ok((ComponentWeight { casimir, min_term, min_term_expected, extremes_symmetric, rho_term, closed_form }, bound))
}

pub fn twisted_conformal_weight(input: &[TwistedComponent]) -> Result<TwistedWeight, TwistError> {
    let mut components = Vec::new();
    let (mut three, mut closed, mut bound) = (Q::zero(), Q::zero(), Q::zero());
    for (i, c) in input.iter().enumerate() {
        let (cw, b) = component_weight(c, i)?;
        three += &cw.casimir + &cw.min_term + &cw.rho_term;
        closed += &cw.closed_form;
        bound += b;
        components.push(cw);
    }
    Ok(TwistedWeight { components, three_term: three, closed_form: closed, lower_bound: bound })
}

/// `kρ/h∨` in Dynkin labels, when it is integral.
pub fn scaled_weyl_weight(a: LevelledAlgebra) -> Option<Weight> {
    let h = a.ty.dual_coxeter();
    (a.level as u64 % h == 0).then(|| vec![(a.level as u64 / h) as i64; a.ty.rank() as usize])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimizedWeight {
    #[serde(serialize_with = "crate::report::ser_q")]
    pub min: Q,
    /// every minimizing tuple `(λ_1, …, λ_t)`
    pub argmin: Vec<Vec<Weight>>,
}

/// Exhaustive minimum of the twisted conformal weight over all tuples of
/// integrable weights.
pub fn minimize_twisted_weight(components: &[LevelledAlgebra]) -> Result<MinimizedWeight, TwistError> {
    let choices: Vec<Vec<Weight>> = components.iter().map(|&a| integrable_weights(a)).collect();
    let mut best: Option<Q> = None;
    let mut argmin = Vec::new();
    let mut idx = vec![0usize; components.len()];
    // per-component values are cached; the tuple loop itself is exhaustive
    let mut values: Vec<Vec<Q>> = Vec::new();
    for (i, (a, ws)) in components.iter().zip(&choices).enumerate() {
        let mut v = Vec::new();
        for lambda in ws {
            let c = TwistedComponent { algebra: *a, lambda: lambda.clone() };
            v.push(component_weight(&c, i)?.0.closed_form);
        }
        values.push(v);
    }
    loop {
        let total: Q = idx.iter().enumerate().map(|(i, &j)| values[i][j].clone()).sum();
        let tuple = || idx.iter().enumerate().map(|(i, &j)| choices[i][j].clone()).collect::<Vec<_>>();
        match &best {
            Some(b) if total > *b => {}
            Some(b) if total == *b => argmin.push(tuple()),
            _ => {
                best = Some(total);
                argmin = vec![tuple()];
            }
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(MinimizedWeight { min: best.unwrap_or_else(Q::zero), argmin });
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// `−1 < (ρ/h∨|β) < 1` for every root `β`.
pub fn root_pairing_bounds_hold(t: SimpleLieType) -> bool {
    let ws = WeightSpace::new(t);
    let rho = ws.rho();
    let h = qi(t.dual_coxeter() as i64);
    ws.positive_roots().iter().all(|b| {
        let x = ws.inner(&rho, b) / &h;
        x > Q::zero() && x < Q::one()
    })
}

/// `(−N + kK)² − (N + (k−2)K)² = 4(k−1)K(K−N)`
pub fn norm_comparison_identity(k: i64, big_k: i64, n: i64) -> bool {
    let l = (-n + k * big_k).pow(2) - (n + (k - 2) * big_k).pow(2);
    l == 4 * (k - 1) * big_k * (big_k - n)
}

/// `Σ k(ρ|ρ)/2(h∨)² · h∨/(k+h∨)`, which is 1 for an admissible candidate.
pub fn candidate_weight_bound(c: &Candidate) -> Q {
    c.components()
        .iter()
        .map(|a| {
            let ws = WeightSpace::new(a.ty);
            let rho = ws.rho();
            let (k, h) = (a.level as i64, a.ty.dual_coxeter() as i64);
            qi(k) * ws.inner(&rho, &rho) / qi(2 * h * h) * qi(h) / qi(k + h)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qf};
    use crate::lie::SimpleLieType as T;

    fn la(t: SimpleLieType, k: u32) -> LevelledAlgebra {
        LevelledAlgebra::new(t, k).unwrap()
    }

    #[test]
    fn grading_shifts() {
        let p = |n, k, m, s| TwistParams::new(n, q(k), m, q(s)).unwrap();
        assert_eq!(grading_shift(&p(6, 9, 0, 5)), q(0));
        assert_eq!(grading_shift(&p(6, 9, 1, 9)), q(0));
        assert_eq!(grading_shift(&p(6, 9, 1, 3)), q(1));
        assert_eq!(p(6, 9, 1, 3).alpha0_shift(), q(-3));
        assert!(TwistParams::new(0, q(1), 1, q(1)).is_err());
        assert!(!TwistParams::new(2, qf(1, 2), 1, q(0)).unwrap().has_integral_sector());
    }

    #[test]
    fn a1_level_two() {
        let w = |l: i64| twisted_conformal_weight(&[TwistedComponent { algebra: la(T::a(1), 2), lambda: vec![l] }]).unwrap();
        assert_eq!(w(1).closed_form, qf(1, 16));
        assert_eq!(w(0).closed_form, qf(1, 8));
        assert!(w(0).paths_agree() && w(1).paths_agree());
        let m = minimize_twisted_weight(&[la(T::a(1), 2)]).unwrap();
        assert_eq!((m.min, m.argmin), (qf(1, 16), vec![vec![vec![1]]]));
    }

    #[test]
    fn argmin_is_scaled_weyl_vector() {
        let m = minimize_twisted_weight(&[la(T::a(2), 3)]).unwrap();
        assert_eq!(m.argmin, vec![vec![vec![1, 1]]]);
        assert_eq!(scaled_weyl_weight(la(T::a(2), 3)), Some(vec![1, 1]));
        // ρ/2 is not a weight: compare 0 and ϖ₁ directly
        let m = minimize_twisted_weight(&[la(T::a(1), 1)]).unwrap();
        let w0 = twisted_conformal_weight(&[TwistedComponent { algebra: la(T::a(1), 1), lambda: vec![0] }]).unwrap().closed_form;
        let w1 = twisted_conformal_weight(&[TwistedComponent { algebra: la(T::a(1), 1), lambda: vec![1] }]).unwrap().closed_form;
        assert_eq!(w0, w1);
        assert_eq!(m.min, w0);
        assert_eq!(m.argmin.len(), 2);
    }

    #[test]
    fn rejects_bad_weights() {
        let bad = TwistedComponent { algebra: la(T::a(1), 1), lambda: vec![2] };
        assert!(matches!(twisted_conformal_weight(&[bad]), Err(TwistError::Lie { .. })));
    }

    #[test]
    fn identities() {
        for t in SimpleLieType::all_up_to_rank(8) {
            assert!(root_pairing_bounds_hold(t), "{t}");
        }
        for k in -5..6 {
            for kk in -5..6 {
                for n in -5..6 {
                    assert!(norm_comparison_identity(k, kk, n));
                }
            }
        }
        let c: Candidate = "E8,2+B8,1".parse().unwrap();
        assert_eq!(candidate_weight_bound(&c), q(1));
    }
}
