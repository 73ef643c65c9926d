//! Weights in Dynkin-label coordinates: dominance, Weyl orbits, integrable
//! weights at a given level, and Freudenthal multiplicities.

use super::{LevelledAlgebra, LieError, RootSystem, SimpleLieType};
use crate::arith::{Q, Z};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

/// A weight given by its Dynkin labels `λ_i = ⟨λ, α_i^∨⟩`.
pub type Weight = Vec<i64>;

/// Precomputed integer data for weight computations of one simple type.
#[derive(Debug, Clone)]
pub struct WeightSpace {
    ty: SimpleLieType,
    cartan: Vec<Vec<i64>>,
    /// `denom · (ϖ_i|ϖ_j)`, integral
    fgram: Vec<Vec<i64>>,
    denom: i64,
    positive_roots: Vec<Weight>,
    positive_heights: Vec<i64>,
    positive_coeffs: Vec<Vec<i64>>,
    comarks: Vec<i64>,
}

impl WeightSpace {
    pub fn new(t: SimpleLieType) -> WeightSpace {
        Self::from_root_system(&RootSystem::new(t))
    }

    pub fn from_root_system(rs: &RootSystem) -> WeightSpace {
        let r = rs.rank();
        let fw = rs.fundamental_weights();
        let raw: Vec<Vec<Q>> = (0..r).map(|i| (0..r).map(|j| rs.form(&fw[i], &fw[j])).collect()).collect();
        let denom = raw.iter().flatten().fold(Z::one(), |acc, x| acc.lcm(x.denom()));
        let fgram = raw
            .iter()
            .map(|row| row.iter().map(|x| (x * Q::from_integer(denom.clone())).to_integer().to_i64().unwrap()).collect())
            .collect();
        let cartan = rs.cartan_matrix();
        let positive_coeffs: Vec<Vec<i64>> = rs.positive_root_coefficients().to_vec();
        let positive_roots = positive_coeffs
            .iter()
            .map(|c| (0..r).map(|j| (0..r).map(|k| c[k] * cartan[k][j]).sum()).collect())
            .collect();
        let positive_heights = positive_coeffs.iter().map(|c| c.iter().sum()).collect();
        WeightSpace {
            ty: rs.simple_type(),
            cartan,
            fgram,
            denom: denom.to_i64().unwrap(),
            positive_roots,
            positive_heights,
            positive_coeffs,
            comarks: rs.comarks(),
        }
    }

    pub fn simple_type(&self) -> SimpleLieType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    /// Positive roots in Dynkin-label coordinates.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn rho(&self) -> Weight {
        vec![1; self.rank()]
    }

    /// `denom · (a|b)`.
    fn inner_scaled(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            let row = &self.fgram[i];
            s += x * b.iter().zip(row).map(|(y, g)| y * g).sum::<i64>();
        }
        s
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        Q::new(Z::from(self.inner_scaled(a, b)), Z::from(self.denom))
    }

    pub fn level(&self, w: &[i64]) -> i64 {
        w.iter().zip(&self.comarks).map(|(a, b)| a * b).sum()
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        w.len() == self.rank() && w.iter().all(|&x| x >= 0)
    }

    fn reflect(&self, w: &mut [i64], i: usize) {
        let c = w[i];
        if c != 0 {
            for (x, a) in w.iter_mut().zip(&self.cartan[i]) {
                *x -= c * a;
            }
        }
    }

    pub fn dominant_conjugate(&self, w: &[i64]) -> Weight {
        let mut v = w.to_vec();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            self.reflect(&mut v, i);
        }
        v
    }

    pub fn antidominant_conjugate(&self, w: &[i64]) -> Weight {
        let mut v = w.to_vec();
        while let Some(i) = v.iter().position(|&x| x > 0) {
            self.reflect(&mut v, i);
        }
        v
    }

    /// Full Weyl orbit by breadth-first reflection. Only sensible for small orbits.
    pub fn orbit(&self, w: &[i64]) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.to_vec());
        queue.push_back(w.to_vec());
        let mut out = Vec::new();
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                if v[i] != 0 {
                    let mut u = v.clone();
                    self.reflect(&mut u, i);
                    if seen.insert(u.clone()) {
                        queue.push_back(u);
                    }
                }
            }
            out.push(v);
        }
        out
    }

    /// Order of the stabilizer of a dominant weight: the parabolic subgroup on the
    /// zero labels, computed from the height distribution of its positive roots.
    pub fn stabilizer_order(&self, dominant: &[i64]) -> u128 {
        let zero: Vec<bool> = dominant.iter().map(|&x| x == 0).collect();
        let mut by_height: BTreeMap<i64, u128> = BTreeMap::new();
        for (c, h) in self.positive_coeffs.iter().zip(&self.positive_heights) {
            if c.iter().zip(&zero).all(|(&ci, &z)| ci == 0 || z) {
                *by_height.entry(*h).or_default() += 1;
            }
        }
        let max_h = by_height.keys().next_back().copied().unwrap_or(0);
        let mut order: u128 = 1;
        for k in 1..=max_h {
            let nk = by_height.get(&k).copied().unwrap_or(0);
            let nk1 = by_height.get(&(k + 1)).copied().unwrap_or(0);
            for _ in 0..(nk - nk1) {
                order *= (k + 1) as u128;
            }
        }
        order
    }

    pub fn orbit_size(&self, dominant: &[i64]) -> u128 {
        self.ty.weyl_group_order() / self.stabilizer_order(dominant)
    }

    /// Weyl dimension formula `∏_{α>0} (λ+ρ|α)/(ρ|α)`.
    pub fn weyl_dimension(&self, lambda: &[i64]) -> Z {
        let lr: Weight = lambda.iter().map(|x| x + 1).collect();
        let rho = self.rho();
        let mut num = Z::one();
        let mut den = Z::one();
        for a in &self.positive_roots {
            num *= Z::from(self.inner_scaled(&lr, a));
            den *= Z::from(self.inner_scaled(&rho, a));
        }
        let (d, r) = num.div_rem(&den);
        assert!(r.is_zero());
        d
    }
}

/// All dominant weights λ with `Σ λ_i a_i^∨ ≤ k`, in lexicographic order.
pub fn integrable_weights(a: LevelledAlgebra) -> Vec<Weight> {
    let ws = WeightSpace::new(a.ty);
    integrable_weights_in(&ws, a.level as i64)
}

pub(crate) fn integrable_weights_in(ws: &WeightSpace, k: i64) -> Vec<Weight> {
    fn rec(comarks: &[i64], left: i64, cur: &mut Weight, out: &mut Vec<Weight>) {
        if cur.len() == comarks.len() {
            out.push(cur.clone());
            return;
        }
        let c = comarks[cur.len()];
        for x in 0..=left / c {
            cur.push(x);
            rec(comarks, left - x * c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(ws.comarks(), k, &mut Vec::new(), &mut out);
    out
}

/// The weights of the irreducible module `V(λ)`: dominant representatives with
/// Freudenthal multiplicities. Non-dominant weights are recovered from Weyl orbits.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    highest: Weight,
    /// dominant weights in order of increasing depth below the highest weight
    dominant: Vec<(Weight, u64)>,
    space: WeightSpace,
}

impl WeightSystem {
    pub fn highest_weight(&self) -> &[i64] {
        &self.highest
    }

    pub fn dominant_weights(&self) -> &[(Weight, u64)] {
        &self.dominant
    }

    pub fn space(&self) -> &WeightSpace {
        &self.space
    }

    pub fn multiplicity(&self, w: &[i64]) -> u64 {
        let d = self.space.dominant_conjugate(w);
        self.dominant.iter().find(|(v, _)| *v == d).map_or(0, |(_, m)| *m)
    }

    /// Total size of the multiset, `Σ m(μ)·|Wμ|` over dominant μ.
    pub fn dim(&self) -> u128 {
        self.dominant.iter().map(|(w, m)| *m as u128 * self.space.orbit_size(w)).sum()
    }

    /// Number of distinct weights.
    pub fn num_distinct(&self) -> u128 {
        self.dominant.iter().map(|(w, _)| self.space.orbit_size(w)).sum()
    }

    /// The full multiset as (weight, multiplicity), or `None` if it has more than `cap` distinct weights.
    pub fn expand(&self, cap: usize) -> Option<Vec<(Weight, u64)>> {
        if self.num_distinct() > cap as u128 {
            return None;
        }
        let mut out = Vec::new();
        for (w, m) in &self.dominant {
            out.extend(self.space.orbit(w).into_iter().map(|v| (v, *m)));
        }
        out.sort();
        Some(out)
    }

    /// Minimum and maximum of `(v|μ)` over all weights μ, for a dominant `v`.
    ///
    /// On each Weyl orbit the maximum sits at the dominant representative and the
    /// minimum at the antidominant one, found by explicit reflection.
    pub fn pairing_extremes(&self, v: &[i64]) -> (Q, Q) {
        assert!(self.space.is_dominant(v));
        let mut lo: Option<Q> = None;
        let mut hi: Option<Q> = None;
        for (w, _) in &self.dominant {
            let top = self.space.inner(v, w);
            let bottom = self.space.inner(v, &self.space.antidominant_conjugate(w));
            if hi.as_ref().is_none_or(|h| top > *h) {
                hi = Some(top);
            }
            if lo.as_ref().is_none_or(|l| bottom < *l) {
                lo = Some(bottom);
            }
        }
        (lo.unwrap(), hi.unwrap())
    }
}

/// Freudenthal's recursion over the dominant chamber.
pub fn weight_system(t: SimpleLieType, lambda: &[i64]) -> Result<WeightSystem, LieError> {
    weight_system_in(&WeightSpace::new(t), lambda)
}

pub(crate) fn weight_system_in(ws: &WeightSpace, lambda: &[i64]) -> Result<WeightSystem, LieError> {
    if !ws.is_dominant(lambda) {
        return Err(LieError::NotDominant(lambda.to_vec()));
    }
    // dominant weights below λ: chains of dominant weights differ by positive roots
    let mut depth: HashMap<Weight, i64> = HashMap::new();
    depth.insert(lambda.to_vec(), 0);
    let mut queue = VecDeque::from([lambda.to_vec()]);
    while let Some(mu) = queue.pop_front() {
        let d = depth[&mu];
        for (a, h) in ws.positive_roots.iter().zip(&ws.positive_heights) {
            let nu: Weight = mu.iter().zip(a).map(|(x, y)| x - y).collect();
            if nu.iter().all(|&x| x >= 0) && !depth.contains_key(&nu) {
                depth.insert(nu.clone(), d + h);
                queue.push_back(nu);
            }
        }
    }
    let mut order: Vec<(i64, Weight)> = depth.into_iter().map(|(w, d)| (d, w)).collect();
    order.sort();

    let lr: Weight = lambda.iter().map(|x| x + 1).collect();
    let lr_norm = ws.inner_scaled(&lr, &lr);
    let mut mult: HashMap<Weight, u64> = HashMap::new();
    let mut dominant = Vec::with_capacity(order.len());
    for (d, mu) in order {
        let m = if d == 0 {
            1
        } else {
            let mut num: i128 = 0;
            for a in &ws.positive_roots {
                let mut nu: Weight = mu.clone();
                loop {
                    for (x, y) in nu.iter_mut().zip(a) {
                        *x += y;
                    }
                    let dom = ws.dominant_conjugate(&nu);
                    let Some(&mn) = mult.get(&dom) else { break };
                    num += mn as i128 * ws.inner_scaled(&nu, a) as i128;
                }
            }
            let mr: Weight = mu.iter().map(|x| x + 1).collect();
            let den = (lr_norm - ws.inner_scaled(&mr, &mr)) as i128;
            assert!(den > 0);
            let num = 2 * num;
            assert_eq!(num % den, 0, "Freudenthal quotient must be integral");
            (num / den) as u64
        };
        if m > 0 {
            mult.insert(mu.clone(), m);
            dominant.push((mu, m));
        }
    }
    Ok(WeightSystem { highest: lambda.to_vec(), dominant, space: ws.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qf};
    use crate::lie::SimpleLieType as T;

    #[test]
    fn integrable_examples() {
        let a1 = integrable_weights(LevelledAlgebra::new(T::a(1), 2).unwrap());
        assert_eq!(a1, vec![vec![0], vec![1], vec![2]]);
        let a2 = integrable_weights(LevelledAlgebra::new(T::a(2), 1).unwrap());
        assert_eq!(a2, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        let g2 = integrable_weights(LevelledAlgebra::new(T::g2(), 1).unwrap());
        // short fundamental weight comes first in Bourbaki numbering
        assert_eq!(g2, vec![vec![0, 0], vec![1, 0]]);
    }

    #[test]
    fn a1_modules() {
        let v = weight_system(T::a(1), &[1]).unwrap();
        assert_eq!(v.expand(100).unwrap(), vec![(vec![-1], 1), (vec![1], 1)]);
        let adj = weight_system(T::a(1), &[2]).unwrap();
        assert_eq!(adj.expand(100).unwrap(), vec![(vec![-2], 1), (vec![0], 1), (vec![2], 1)]);
    }

    #[test]
    fn a2_adjoint() {
        let v = weight_system(T::a(2), &[1, 1]).unwrap();
        assert_eq!(v.dim(), 8);
        let all = v.expand(100).unwrap();
        assert_eq!(all.len(), 7);
        assert_eq!(v.multiplicity(&[0, 0]), 2);
        assert_eq!(all.iter().map(|(_, m)| m).sum::<u64>(), 8);
    }

    #[test]
    fn known_multiplicities() {
        // zero weight of the adjoint has multiplicity = rank
        for t in [T::b(3), T::c(3), T::d(4), T::g2(), T::f4(), T::e(6)] {
            let rs = RootSystem::new(t);
            let ws = WeightSpace::from_root_system(&rs);
            let theta_labels: Weight = {
                let c = rs.highest_root_coefficients();
                (0..ws.rank()).map(|j| (0..ws.rank()).map(|k| c[k] * ws.cartan()[k][j]).sum()).collect()
            };
            let adj = weight_system_in(&ws, &theta_labels).unwrap();
            assert_eq!(adj.dim(), t.dim() as u128, "{t}");
            assert_eq!(adj.multiplicity(&vec![0; ws.rank()]), t.rank() as u64, "{t}");
        }
    }

    #[test]
    fn dimension_matches_weyl_formula() {
        for t in T::all_up_to_rank(4) {
            let ws = WeightSpace::new(t);
            for lam in integrable_weights_in(&ws, 3) {
                let v = weight_system_in(&ws, &lam).unwrap();
                assert_eq!(Z::from(v.dim()), ws.weyl_dimension(&lam), "{t} {lam:?}");
            }
        }
    }

    #[test]
    fn stabilizers() {
        let ws = WeightSpace::new(T::a(2));
        assert_eq!(ws.stabilizer_order(&[0, 0]), 6);
        assert_eq!(ws.stabilizer_order(&[1, 0]), 2);
        assert_eq!(ws.stabilizer_order(&[1, 1]), 1);
        let e8 = WeightSpace::new(T::e(8));
        assert_eq!(e8.stabilizer_order(&[0; 8]), 696_729_600);
    }

    #[test]
    fn extremes_agree_with_brute_force() {
        for t in [T::a(2), T::b(2), T::g2(), T::a(3), T::c(3)] {
            let ws = WeightSpace::new(t);
            let rho = ws.rho();
            for lam in integrable_weights_in(&ws, 2) {
                let v = weight_system_in(&ws, &lam).unwrap();
                let all = v.expand(10_000).unwrap();
                let vals: Vec<Q> = all.iter().map(|(w, _)| ws.inner(&rho, w)).collect();
                let lo = vals.iter().min().unwrap().clone();
                let hi = vals.iter().max().unwrap().clone();
                assert_eq!(v.pairing_extremes(&rho), (lo.clone(), hi.clone()));
                assert_eq!(hi, ws.inner(&rho, &lam));
                assert_eq!(lo, -ws.inner(&rho, &lam));
            }
        }
    }

    #[test]
    fn inner_products() {
        let ws = WeightSpace::new(T::a(1));
        assert_eq!(ws.inner(&[1], &[1]), qf(1, 2));
        let ws = WeightSpace::new(T::a(2));
        assert_eq!(ws.inner(&[1, 1], &[1, 1]), q(2));
    }

    #[test]
    fn rejects_non_dominant() {
        assert!(weight_system(T::a(2), &[-1, 1]).is_err());
        assert!(weight_system(T::a(2), &[1]).is_err());
    }
}
