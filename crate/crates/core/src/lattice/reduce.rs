//! Exact LLL reduction on a Gram matrix. Used only to precondition enumeration.

use super::{GramLattice, LatticeError};
use crate::arith::{round_q, Q, Z};
use crate::matrix::{identity_int, IntMatrix, RatMatrix};
use num_traits::Zero;

/// Gram–Schmidt data of a positive-definite Gram matrix: `Q(x) = Σ b_i (x_i + Σ_{j>i} μ_{ji} x_j)²`.
pub(crate) struct Gso {
    pub b: Vec<Q>,
    pub mu: Vec<Vec<Q>>,
}

pub(crate) fn gso(g: &RatMatrix) -> Result<Gso, LatticeError> {
    let n = g.len();
    let mut b: Vec<Q> = Vec::with_capacity(n);
    let mut mu = vec![vec![Q::zero(); n]; n];
    for k in 0..n {
        gso_row(g, &mut b, &mut mu, k);
        if b[k] <= Q::zero() {
            return Err(LatticeError::NotPositiveDefinite);
        }
    }
    Ok(Gso { b, mu })
}

fn gso_row(g: &RatMatrix, b: &mut Vec<Q>, mu: &mut [Vec<Q>], k: usize) {
    for j in 0..k {
        let mut s = g[k][j].clone();
        for i in 0..j {
            s -= &mu[j][i] * &mu[k][i] * &b[i];
        }
        mu[k][j] = s / &b[j];
    }
    let mut bk = g[k][k].clone();
    for i in 0..k {
        bk -= &mu[k][i] * &mu[k][i] * &b[i];
    }
    b.truncate(k);
    b.push(bk);
}

fn add_row(g: &mut RatMatrix, t: &mut IntMatrix, k: usize, j: usize, r: &Z) {
    // b_k ← b_k − r·b_j
    let n = g.len();
    let rq = Q::from_integer(r.clone());
    let two = Q::from_integer(Z::from(2));
    let gkk = &g[k][k] - &two * &rq * &g[k][j] + &rq * &rq * &g[j][j];
    for i in 0..n {
        if i != k {
            let v = &g[k][i] - &rq * &g[j][i];
            g[i][k] = v.clone();
            g[k][i] = v;
        }
    }
    g[k][k] = gkk;
    let tj = t[j].clone();
    for (x, y) in t[k].iter_mut().zip(&tj) {
        *x -= r * y;
    }
}

fn swap(g: &mut RatMatrix, t: &mut IntMatrix, k: usize) {
    g.swap(k, k - 1);
    for row in g.iter_mut() {
        row.swap(k, k - 1);
    }
    t.swap(k, k - 1);
}

/// LLL-reduces (δ = 3/4) a positive-definite lattice. Returns the reduced
/// lattice and the transformation `T` whose rows are the new basis vectors in
/// the old coordinates.
pub fn lll_reduce(l: &GramLattice) -> Result<(GramLattice, IntMatrix), LatticeError> {
    let n = l.rank();
    let mut g = l.gram().clone();
    let mut t = identity_int(n);
    if n == 0 {
        return Ok((l.clone(), t));
    }
    let delta = Q::new(Z::from(3), Z::from(4));
    let mut b: Vec<Q> = Vec::with_capacity(n);
    let mut mu = vec![vec![Q::zero(); n]; n];
    gso_row(&g, &mut b, &mut mu, 0);
    if b[0] <= Q::zero() {
        return Err(LatticeError::NotPositiveDefinite);
    }
    let mut k = 1;
    while k < n {
        gso_row(&g, &mut b, &mut mu, k);
        if b[k] <= Q::zero() {
            return Err(LatticeError::NotPositiveDefinite);
        }
        for j in (0..k).rev() {
            let r = round_q(&mu[k][j]);
            if !r.is_zero() {
                add_row(&mut g, &mut t, k, j, &r);
                let rq = Q::from_integer(r);
                for i in 0..j {
                    let v = &mu[k][i] - &rq * &mu[j][i];
                    mu[k][i] = v;
                }
                mu[k][j] -= rq;
            }
        }
        let lhs = b[k].clone();
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &b[k - 1];
        if lhs < rhs {
            swap(&mut g, &mut t, k);
            if k == 1 {
                gso_row(&g, &mut b, &mut mu, 0);
            } else {
                k -= 1;
            }
        } else {
            k += 1;
        }
    }
    debug_assert!(t.iter().all(|r| r.len() == n));
    Ok((GramLattice::new(g).expect("congruent Gram matrix stays symmetric"), t))
}
