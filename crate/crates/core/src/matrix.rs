//! Dense exact matrices over ℤ and ℚ.
//!
//! Sizes in this crate never exceed 26×26, so everything is plain row-major
//! `Vec<Vec<_>>` with naive coefficient growth control.

use crate::arith::{Q, Z};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<Z>>;
pub type RatMatrix = Vec<Vec<Q>>;

pub fn identity_int(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Z::one() } else { Z::zero() }).collect())
        .collect()
}

pub fn to_rat(m: &IntMatrix) -> RatMatrix {
    m.iter()
        .map(|row| row.iter().map(|x| Q::from_integer(x.clone())).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mul_int(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Z::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn mul_rat(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Q::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// `B · G · Bᵀ` for an integer basis matrix `B` (rows are vectors) and rational form `G`.
pub fn congruence(b: &IntMatrix, g: &RatMatrix) -> RatMatrix {
    let br = to_rat(b);
    let bg = mul_rat(&br, g);
    mul_rat(&bg, &transpose(&br))
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn det_int(m: &IntMatrix) -> Z {
    let n = m.len();
    if n == 0 {
        return Z::one();
    }
    let mut a = m.clone();
    let mut sign = Z::one();
    let mut prev = Z::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Z::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Determinant of a rational matrix via clearing denominators and Bareiss.
pub fn det_rat(m: &RatMatrix) -> Q {
    let n = m.len();
    if n == 0 {
        return Q::one();
    }
    let mut scale = Z::one();
    let mut int = Vec::with_capacity(n);
    for row in m {
        let l = row.iter().fold(Z::one(), |acc, x| acc.lcm(x.denom()));
        scale *= &l;
        int.push(row.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect());
    }
    Q::new(det_int(&int), scale)
}

/// Inverse of a square rational matrix, `None` when singular.
pub fn inverse_rat(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(piv, col);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..2 * n {
                    let t = &f * &a[col][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `x · B = v` for rational `x`, where the rows of `B` are linearly independent.
/// Returns `None` when `v` is not in the row space.
pub fn solve_left_rat(b: &RatMatrix, v: &[Q]) -> Option<Vec<Q>> {
    let rows = b.len();
    let cols = v.len();
    // Augmented system Bᵀ x = v, reduced column by column.
    let mut a: RatMatrix = (0..cols)
        .map(|j| {
            let mut r: Vec<Q> = (0..rows).map(|i| b[i][j].clone()).collect();
            r.push(v[j].clone());
            r
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for c in 0..rows {
        let Some(p) = (pivot_row..cols).find(|&i| !a[i][c].is_zero()) else {
            return None;
        };
        a.swap(p, pivot_row);
        let inv = a[pivot_row][c].recip();
        for x in a[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..cols {
            if i != pivot_row && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=rows {
                    let t = &f * &a[pivot_row][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|r| !r[rows].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); rows];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = a[r][rows].clone();
    }
    Some(x)
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `gens`.
/// Returns a basis (the non-zero HNF rows), upper triangular with positive pivots.
pub fn hnf_basis(gens: &IntMatrix) -> IntMatrix {
    let mut a: IntMatrix = gens.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    if a.is_empty() {
        return a;
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        // Euclid on column c among rows r..
        loop {
            let mut best: Option<usize> = None;
            for i in r..a.len() {
                if !a[i][c].is_zero() && best.is_none_or(|b| a[i][c].abs() < a[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            a.swap(r, b);
            let mut done = true;
            for i in r + 1..a.len() {
                if !a[i][c].is_zero() {
                    let f = a[i][c].div_floor(&a[r][c]);
                    let (head, tail) = a.split_at_mut(i);
                    let pr = &head[r];
                    for (x, y) in tail[0].iter_mut().zip(pr) {
                        *x -= &f * y;
                    }
                    if !tail[0][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let f = a[i][c].div_floor(&a[r][c]);
            if !f.is_zero() {
                let pr = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a.retain(|row| row.iter().any(|x| !x.is_zero()));
    a
}

/// Invariant factors (non-zero diagonal of the Smith normal form), in divisibility order.
pub fn smith_invariants(m: &IntMatrix) -> Vec<Z> {
    let mut a = m.clone();
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pick smallest non-zero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let f = a[i][t].div_floor(&a[t][t]);
                    let pr = a[t].clone();
                    for (x, y) in a[i].iter_mut().zip(&pr) {
                        *x -= &f * y;
                    }
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let f = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut() {
                        let y = row[t].clone();
                        row[j] -= &f * y;
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                // divisibility condition on the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
                match bad {
                    Some((i, _)) => {
                        let ri = a[i].clone();
                        for (x, y) in a[t].iter_mut().zip(&ri) {
                            *x += y;
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // move the smallest entry of row/column t into the pivot
            let mut best = (t, t);
            for i in t..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            }
            if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Unimodular `U` with `f · U = (g, 0, …, 0)`, `g = gcd(f) ≥ 0`, together with `U⁻¹`.
pub fn reduce_row_vector(f: &[Z]) -> (Z, IntMatrix, IntMatrix) {
    let n = f.len();
    let mut v = f.to_vec();
    let mut u = identity_int(n);
    let mut uinv = identity_int(n);
    // Column operation "col j += k · col i" on U is mirrored by "row i -= k · row j" on U⁻¹.
    let add_col = |u: &mut IntMatrix, uinv: &mut IntMatrix, v: &mut Vec<Z>, j: usize, i: usize, k: &Z| {
        for row in u.iter_mut() {
            let t = &row[i] * k;
            row[j] += t;
        }
        let rj = uinv[j].clone();
        for (x, y) in uinv[i].iter_mut().zip(&rj) {
            *x -= k * y;
        }
        let t = &v[i] * k;
        v[j] += t;
    };
    let swap_col = |u: &mut IntMatrix, uinv: &mut IntMatrix, v: &mut Vec<Z>, i: usize, j: usize| {
        for row in u.iter_mut() {
            row.swap(i, j);
        }
        uinv.swap(i, j);
        v.swap(i, j);
    };
    loop {
        let nz: Vec<usize> = (0..n).filter(|&i| !v[i].is_zero()).collect();
        if nz.len() <= 1 {
            break;
        }
        let p = *nz.iter().min_by_key(|&&i| v[i].abs()).unwrap();
        for &i in &nz {
            if i != p {
                let k = -v[i].div_floor(&v[p]);
                add_col(&mut u, &mut uinv, &mut v, i, p, &k);
            }
        }
    }
    if let Some(p) = (0..n).find(|&i| !v[i].is_zero()) {
        if p != 0 {
            swap_col(&mut u, &mut uinv, &mut v, 0, p);
        }
        if v[0].is_negative() {
            for row in u.iter_mut() {
                row[0] = -row[0].clone();
            }
            for x in uinv[0].iter_mut() {
                *x = -x.clone();
            }
            v[0] = -v[0].clone();
        }
    }
    (v[0].clone(), u, uinv)
}

/// Congruence diagonalization; returns `(positive, negative, zero)` counts of a symmetric matrix.
pub fn signature(m: &RatMatrix) -> (usize, usize, usize) {
    let n = m.len();
    let mut a = m.clone();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    for i in 0..n {
        if a[i][i].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(i, j);
                for row in a.iter_mut() {
                    row.swap(i, j);
                }
            } else if let Some(j) = (i + 1..n).find(|&j| !a[i][j].is_zero()) {
                // row_i += row_j, col_i += col_j
                let rj = a[j].clone();
                for (x, y) in a[i].iter_mut().zip(&rj) {
                    *x += y;
                }
                for row in a.iter_mut() {
                    let y = row[j].clone();
                    row[i] += y;
                }
            }
        }
        if a[i][i].is_zero() {
            zero += 1;
            continue;
        }
        if a[i][i].is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for r in i + 1..n {
            if !a[r][i].is_zero() {
                let f = &a[r][i] / &a[i][i];
                for c in i..n {
                    let t = &f * &a[i][c];
                    a[r][c] -= t;
                }
                for row in a.iter_mut().skip(i) {
                    let t = &f * &row[i];
                    row[r] -= t;
                }
            }
        }
    }
    (pos, neg, zero)
}
