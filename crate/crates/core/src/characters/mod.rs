//! Multiplicities `⟨θ,χ⟩ = (1/|G|) Σ θ(g) χ(g⁻¹)` of linear characters `θ`
//! of rank-two abelian `G = ⟨τ⟩ × ⟨σ⟩ ≤ Co₀` in the 24-dimensional character
//! `χ`, evaluated exactly in `ℚ(ζ_R)`. `χ(g)` is read off the frame shape of
//! the class assigned to `g`.

mod data;

pub use data::{conway_row, ConwayRow, CONWAY_ROWS, DIM4_CENSUS};

use crate::arith::{format_rational, gcd_u64, lcm_u64, Q, Z};
use crate::frames::{class_table, classify_shape, order, power, trace, FrameShape};
use num_traits::Zero;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharacterError {
    #[error("assignment has {got} classes for a group of order {expected}")]
    IncompleteAssignment { expected: usize, got: usize },
    #[error("the identity must be 1A, got {0}")]
    IdentityNotTrivial(String),
    #[error("unknown class {0}")]
    UnknownClass(String),
    #[error("class {class} has order {class_order}, element {element:?} has order {element_order}")]
    OrderMismatch { element: (u32, u32), element_order: u64, class: String, class_order: u64 },
    #[error("({element:?})^{k} is {got}, but the power map of the class gives {want:?}")]
    PowerMismatch { element: (u32, u32), k: u64, got: String, want: Vec<String> },
    #[error("R = {r} does not divide the order {order} of τ")]
    BadCharacter { r: u64, order: u64 },
    #[error("expected ℤ2 × ℤ4 with |τ| = 4, |σ| = 2, got |τ| = {tau}, |σ| = {sigma}")]
    NotZ2Z4 { tau: u32, sigma: u32 },
    #[error("no Conway row {0}")]
    UnknownRow(u32),
}

/// Coefficients of `Φ_n`, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    // x^n − 1 divided by Φ_d for every proper divisor d
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in crate::arith::divisors(n).into_iter().filter(|&d| d < n) {
        p = divide_monic(&p, &cyclotomic_polynomial(d)).0;
    }
    p
}

/// Quotient and remainder for a monic divisor.
fn divide_monic(p: &[i64], d: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let mut r = p.to_vec();
    let dn = d.len() - 1;
    if r.len() <= dn {
        return (vec![0], r);
    }
    let mut q = vec![0i64; r.len() - dn];
    for i in (0..q.len()).rev() {
        let c = r[i + dn];
        q[i] = c;
        for (j, &dj) in d.iter().enumerate() {
            r[i + j] -= c * dj;
        }
    }
    r.truncate(dn);
    (q, r)
}

/// An element of `ℚ(ζ_R)` in the power basis `1, ζ, …, ζ^{φ(R)−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloValue {
    pub r: u64,
    pub coeffs: Vec<Q>,
}

impl CycloValue {
    /// `(1/den) Σ c_k ζ^k` reduced modulo `Φ_R`.
    fn from_powers(r: u64, c: &[i64], den: i64) -> Self {
        let (_, rem) = divide_monic(c, &cyclotomic_polynomial(r));
        let coeffs = rem.iter().map(|&x| Q::new(Z::from(x), Z::from(den))).collect();
        CycloValue { r, coeffs }
    }

    pub fn as_rational(&self) -> Option<Q> {
        self.coeffs.iter().skip(1).all(Zero::is_zero).then(|| self.coeffs.first().cloned().unwrap_or_else(Q::zero))
    }
}

impl fmt::Display for CycloValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format_rational(c),
                1 => format!("{}*z", format_rational(c)),
                _ => format!("{}*z^{k}", format_rational(c)),
            })
            .collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + "))?;
        if self.as_rational().is_none() {
            write!(f, " (z = e^(2 pi i/{}))", self.r)?;
        }
        Ok(())
    }
}

/// `G = ⟨τ⟩ × ⟨σ⟩` with a class name for every `τ^i σ^j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianSubgroup {
    pub tau_order: u32,
    pub sigma_order: u32,
    /// indexed by `i·|σ| + j`
    pub classes: Vec<&'static str>,
}

impl AbelianSubgroup {
    pub fn new(tau_order: u32, sigma_order: u32, classes: Vec<&str>) -> Result<Self, CharacterError> {
        let n = (tau_order * sigma_order) as usize;
        if classes.len() != n {
            return Err(CharacterError::IncompleteAssignment { expected: n, got: classes.len() });
        }
        let table = class_table();
        let classes = classes
            .into_iter()
            .map(|c| table.get(c).map(|r| r.name).map_err(|_| CharacterError::UnknownClass(c.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let g = AbelianSubgroup { tau_order, sigma_order, classes };
        if g.classes[0] != "1A" {
            return Err(CharacterError::IdentityNotTrivial(g.classes[0].to_string()));
        }
        for e in g.elements() {
            g.check_element(e, |_| true)?;
        }
        Ok(g)
    }

    /// Invariant factors `(a, b)`, `a | b`.
    pub fn invariant_factors(&self) -> (u32, u32) {
        let (x, y) = (self.tau_order as u64, self.sigma_order as u64);
        (gcd_u64(x, y) as u32, lcm_u64(x, y) as u32)
    }

    pub fn order(&self) -> usize {
        self.classes.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.tau_order).flat_map(move |i| (0..self.sigma_order).map(move |j| (i, j)))
    }

    fn index(&self, (i, j): (u32, u32)) -> usize {
        (i * self.sigma_order + j) as usize
    }

    pub fn class(&self, e: (u32, u32)) -> &'static str {
        self.classes[self.index(e)]
    }

    pub fn shape(&self, e: (u32, u32)) -> &'static FrameShape {
        &class_table().get(self.class(e)).expect("validated").shape
    }

    pub fn chi(&self, e: (u32, u32)) -> i64 {
        trace(self.shape(e))
    }

    pub fn pow(&self, (i, j): (u32, u32), k: u64) -> (u32, u32) {
        (((i as u64 * k) % self.tau_order as u64) as u32, ((j as u64 * k) % self.sigma_order as u64) as u32)
    }

    pub fn element_order(&self, (i, j): (u32, u32)) -> u64 {
        let (a, b) = (self.tau_order as u64, self.sigma_order as u64);
        lcm_u64(a / gcd_u64(i as u64, a), b / gcd_u64(j as u64, b))
    }

    pub fn inverse(&self, (i, j): (u32, u32)) -> (u32, u32) {
        ((self.tau_order - i) % self.tau_order, (self.sigma_order - j) % self.sigma_order)
    }

    /// Order and power-map consistency of `e` against every assigned element.
    fn check_element(&self, e: (u32, u32), assigned: impl Fn((u32, u32)) -> bool) -> Result<(), CharacterError> {
        let shape = self.shape(e);
        let (eo, co) = (self.element_order(e), order(shape));
        if eo != co {
            return Err(CharacterError::OrderMismatch { element: e, element_order: eo, class: self.class(e).into(), class_order: co });
        }
        for k in 2..eo {
            let p = self.pow(e, k);
            if !assigned(p) {
                continue;
            }
            let want = classify_shape(&power(shape, k).expect("table shapes have integral powers")).expect("table closed under powers");
            if !want.contains(&self.class(p)) {
                return Err(CharacterError::PowerMismatch {
                    element: e,
                    k,
                    got: self.class(p).into(),
                    want: want.iter().map(|s| s.to_string()).collect(),
                });
            }
        }
        Ok(())
    }
}

/// `θ(τ^i σ^j) = ζ_R^{e·i}`; trivial on `σ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinearCharacter {
    pub r: u64,
    pub exponent: u64,
}

impl LinearCharacter {
    pub fn new(r: u64) -> Self {
        LinearCharacter { r, exponent: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerProduct {
    pub value: CycloValue,
    pub group_order: usize,
    /// `|G|·⟨θ,χ⟩` when it is an integer
    pub scaled: Option<i64>,
}

pub fn inner_product(g: &AbelianSubgroup, theta: &LinearCharacter) -> Result<InnerProduct, CharacterError> {
    let r = theta.r.max(1);
    if g.tau_order as u64 % r != 0 {
        return Err(CharacterError::BadCharacter { r, order: g.tau_order as u64 });
    }
    let mut c = vec![0i64; r as usize];
    for e in g.elements() {
        let k = (e.0 as u64 * theta.exponent) % r;
        c[k as usize] += g.chi(g.inverse(e));
    }
    let n = g.order() as i64;
    let value = CycloValue::from_powers(r, &c, n);
    let scaled = CycloValue::from_powers(r, &c, 1).as_rational().and_then(|q| q.to_integer().try_into().ok());
    Ok(InnerProduct { value, group_order: g.order(), scaled })
}

/// Every assignment of the row's classes to `τ^i σ^j` (with `|τ| = b`,
/// `|σ| = a`) consistent with element orders and the power map.
pub fn assignments(row: &ConwayRow) -> Vec<AbelianSubgroup> {
    let (a, b) = row.structure;
    let shell = AbelianSubgroup { tau_order: b, sigma_order: a, classes: vec!["1A"; (a * b) as usize] };
    let mut remaining: Vec<(&'static str, usize)> = row.classes.to_vec();
    let mut out = Vec::new();
    let mut cur = shell;
    let mut filled = vec![false; cur.order()];
    fn rec(pos: usize, cur: &mut AbelianSubgroup, filled: &mut Vec<bool>, remaining: &mut Vec<(&'static str, usize)>, out: &mut Vec<AbelianSubgroup>) {
        if pos == cur.order() {
            out.push(cur.clone());
            return;
        }
        let e = ((pos as u32) / cur.sigma_order, (pos as u32) % cur.sigma_order);
        for idx in 0..remaining.len() {
            if remaining[idx].1 == 0 || (pos == 0) != (remaining[idx].0 == "1A") {
                continue;
            }
            cur.classes[pos] = remaining[idx].0;
            filled[pos] = true;
            let ok = {
                let f = &*filled;
                let c = &*cur;
                c.check_element(e, |p| f[c.index(p)]).is_ok() && c.elements().filter(|&h| f[c.index(h)] && h != e).all(|h| c.check_element(h, |p| f[c.index(p)]).is_ok())
            };
            if ok {
                remaining[idx].1 -= 1;
                rec(pos + 1, cur, filled, remaining, out);
                remaining[idx].1 += 1;
            }
            filled[pos] = false;
        }
    }
    rec(0, &mut cur, &mut filled, &mut remaining, &mut out);
    out
}

/// `8⟨θ,χ⟩ = 24 − χ(τ²) − χ(τ²σ) + χ(σ)` for `ℤ2 × ℤ4`, `R = 4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Z2Z4Reduction {
    pub chi_tau2: i64,
    pub chi_tau2_sigma: i64,
    pub chi_sigma: i64,
    pub value: i64,
    pub sigma_class: &'static str,
    /// the value is positive, as it must be whenever `σ ≠ −2A`
    pub positive: bool,
}

pub fn z2z4_value(chi_tau2: i64, chi_tau2_sigma: i64, chi_sigma: i64) -> i64 {
    24 - chi_tau2 - chi_tau2_sigma + chi_sigma
}

pub fn z2z4_formula(g: &AbelianSubgroup) -> Result<Z2Z4Reduction, CharacterError> {
    if (g.tau_order, g.sigma_order) != (4, 2) {
        return Err(CharacterError::NotZ2Z4 { tau: g.tau_order, sigma: g.sigma_order });
    }
    let (t2, t2s, s) = (g.chi((2, 0)), g.chi((2, 1)), g.chi((0, 1)));
    let value = z2z4_value(t2, t2s, s);
    Ok(Z2Z4Reduction { chi_tau2: t2, chi_tau2_sigma: t2s, chi_sigma: s, value, sigma_class: g.class((0, 1)), positive: value > 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), [-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), [1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), [1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), [1, 0, -1, 0, 1]);
    }

    #[test]
    fn trivial_group() {
        let g = AbelianSubgroup::new(1, 1, vec!["1A"]).unwrap();
        let ip = inner_product(&g, &LinearCharacter::new(1)).unwrap();
        assert_eq!(ip.value.as_rational(), Some(q(24)));
        assert_eq!(ip.scaled, Some(24));
    }

    #[test]
    fn z4_by_z4() {
        let row = conway_row(10).unwrap();
        let all = assignments(row);
        assert!(!all.is_empty());
        for g in &all {
            let ip = inner_product(g, &LinearCharacter::new(4)).unwrap();
            assert_eq!(ip.scaled, Some(16));
        }
    }

    #[test]
    fn z2_by_z6() {
        let all = assignments(conway_row(9).unwrap());
        assert!(!all.is_empty());
        for g in &all {
            assert_eq!((g.class((1, 0)), g.class((0, 1))), ("6E", "2A"));
            let ip = inner_product(g, &LinearCharacter { r: 6, exponent: 5 }).unwrap();
            assert_eq!(ip.scaled, Some(12));
        }
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(AbelianSubgroup::new(2, 1, vec!["1A"]), Err(CharacterError::IncompleteAssignment { .. })));
        assert!(matches!(AbelianSubgroup::new(2, 1, vec!["2A", "1A"]), Err(CharacterError::IdentityNotTrivial(_))));
        assert!(matches!(AbelianSubgroup::new(2, 1, vec!["1A", "3B"]), Err(CharacterError::OrderMismatch { .. })));
        // (4C)^2 is 2A, not 2C
        assert!(matches!(AbelianSubgroup::new(4, 1, vec!["1A", "4C", "2C", "4C"]), Err(CharacterError::PowerMismatch { .. })));
        let g = AbelianSubgroup::new(4, 1, vec!["1A", "4C", "2A", "4C"]).unwrap();
        assert!(matches!(inner_product(&g, &LinearCharacter::new(3)), Err(CharacterError::BadCharacter { .. })));
        assert!(z2z4_formula(&g).is_err());
    }

    #[test]
    fn every_row_and_assignment() {
        for row in CONWAY_ROWS {
            let all = assignments(row);
            assert!(!all.is_empty(), "row {}", row.id);
            for g in &all {
                assert_eq!(g.invariant_factors(), row.structure);
                // the trivial character counts the fixed subspace
                let fixed = inner_product(g, &LinearCharacter::new(1)).unwrap();
                assert_eq!(fixed.value.as_rational(), Some(q(row.dim as i64)), "row {}", row.id);
                for r in crate::arith::divisors(g.tau_order as u64) {
                    for e in (1..=r).filter(|&e| gcd_u64(e, r) == 1) {
                        let ip = inner_product(g, &LinearCharacter { r, exponent: e }).unwrap();
                        let v = ip.value.as_rational().expect("multiplicity is rational");
                        assert!(v.is_integer() && v >= q(0), "row {} R={r}: {}", row.id, ip.value);
                    }
                }
                for el in g.elements() {
                    assert_eq!(g.chi(el), g.chi(g.inverse(el)));
                }
                if g.tau_order == 4 && g.sigma_order == 2 {
                    let z = z2z4_formula(g).unwrap();
                    let ip = inner_product(g, &LinearCharacter::new(4)).unwrap();
                    assert_eq!(ip.scaled, Some(z.value));
                    if z.sigma_class != "-2A" {
                        assert!(z.positive, "row {}: {z:?}", row.id);
                    }
                }
            }
        }
        assert_eq!(DIM4_CENSUS.iter().map(|c| c.1).sum::<u32>(), 58);
        assert_eq!(CONWAY_ROWS.iter().filter(|r| r.dim == 6).map(|r| r.count).sum::<u32>(), 15);
        assert_eq!(CONWAY_ROWS.iter().filter(|r| r.dim == 8).map(|r| r.count).sum::<u32>(), 6);
    }

    #[test]
    fn substitution() {
        assert_eq!(z2z4_value(-8, -8, 8), 48);
    }
}
