//! Fincke–Pohst enumeration of short vectors with exact rational arithmetic.
//!
//! The basis is LLL-reduced first; the search tree is split on its top levels
//! and the subtrees are walked in parallel. Results are merged in tree order,
//! so the output does not depend on scheduling.

use super::reduce::{gso, lll_reduce};
use super::{normalize_sign, GramLattice, LatticeError};
use crate::arith::{Q, Z};
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Vectors `v` with `0 < ⟨v,v⟩ ≤ bound`, one representative per `±v` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortVectors {
    pub bound: Q,
    /// `(v, ⟨v,v⟩)` with `v` in the input coordinates, first non-zero entry
    /// positive, sorted by norm then coordinates
    pub vectors: Vec<(Vec<Z>, Q)>,
}

impl ShortVectors {
    /// Number of vectors, counting both signs.
    pub fn count(&self) -> u64 {
        2 * self.vectors.len() as u64
    }

    pub fn counts_by_norm(&self) -> BTreeMap<Q, u64> {
        let mut out = BTreeMap::new();
        for (_, n) in &self.vectors {
            *out.entry(n.clone()).or_insert(0) += 2;
        }
        out
    }
}

struct Tree {
    b: Vec<Q>,
    mu: Vec<Vec<Q>>,
    bound: Q,
}

#[derive(Clone)]
struct Node {
    level: usize,
    x: Vec<i64>,
    rem: Q,
    nonzero: bool,
}

impl Tree {
    fn n(&self) -> usize {
        self.b.len()
    }

    /// Integers `x` with `b_i (x + c)² ≤ rem`, where `c = Σ_{j>i} μ_{ji} x_j`.
    fn range(&self, node: &Node) -> (Q, Vec<i64>) {
        let i = node.level;
        let mut c = Q::zero();
        for j in i + 1..self.n() {
            if node.x[j] != 0 {
                c += &self.mu[j][i] * Q::from_integer(Z::from(node.x[j]));
            }
        }
        let t = &node.rem / &self.b[i];
        let y = -c.clone();
        let s = t.floor().to_integer().sqrt();
        let ok = |x: &Z| {
            let d = Q::from_integer(x.clone()) - &y;
            &d * &d <= t
        };
        let mut hi = y.floor().to_integer() + &s + 1;
        while !ok(&hi) && Q::from_integer(hi.clone()) > y {
            hi -= 1;
        }
        let mut lo = y.ceil().to_integer() - &s - 1;
        while !ok(&lo) && Q::from_integer(lo.clone()) < y {
            lo += 1;
        }
        let mut xs = Vec::new();
        if ok(&lo) && ok(&hi) {
            let lo = lo.to_i64().expect("coordinate fits in i64");
            let hi = hi.to_i64().expect("coordinate fits in i64");
            let lo = if node.nonzero { lo } else { lo.max(0) };
            xs.extend(lo..=hi);
        }
        (c, xs)
    }

    fn children(&self, node: &Node) -> Vec<Node> {
        let (c, xs) = self.range(node);
        let mut out = Vec::with_capacity(xs.len());
        for x in xs {
            let d = Q::from_integer(Z::from(x)) + &c;
            let rem = &node.rem - &self.b[node.level] * &d * &d;
            let mut nx = node.x.clone();
            nx[node.level] = x;
            out.push(Node { level: node.level, x: nx, rem, nonzero: node.nonzero || x != 0 });
        }
        out
    }

    fn walk(&self, node: Node, visit: &mut dyn FnMut(&[i64], Q)) {
        for child in self.children(&node) {
            if child.level == 0 {
                if child.nonzero {
                    visit(&child.x, &self.bound - &child.rem);
                }
            } else {
                let next = Node { level: child.level - 1, ..child };
                self.walk(next, visit);
            }
        }
    }

    /// Expands the top of the tree breadth-first into independent subtrees.
    fn frontier(&self, min_tasks: usize) -> (Vec<Node>, Vec<(Vec<i64>, Q)>) {
        let n = self.n();
        let mut layer = vec![Node { level: n - 1, x: vec![0; n], rem: self.bound.clone(), nonzero: false }];
        let mut finished = Vec::new();
        while layer.len() < min_tasks && layer[0].level > 0 {
            let mut next = Vec::new();
            for node in &layer {
                for child in self.children(node) {
                    next.push(Node { level: child.level - 1, ..child });
                }
            }
            if next.is_empty() {
                return (next, finished);
            }
            layer = next;
        }
        if layer[0].level == 0 {
            for node in layer.drain(..) {
                for child in self.children(&node) {
                    if child.nonzero {
                        finished.push((child.x, &self.bound - &child.rem));
                    }
                }
            }
        }
        (layer, finished)
    }

    fn collect(&self) -> Vec<(Vec<i64>, Q)> {
        let (tasks, mut found) = self.frontier(64);
        let parts: Vec<Vec<(Vec<i64>, Q)>> = tasks
            .into_par_iter()
            .map(|node| {
                let mut acc = Vec::new();
                self.walk(node, &mut |x, norm| acc.push((x.to_vec(), norm)));
                acc
            })
            .collect();
        found.extend(parts.into_iter().flatten());
        found
    }

    fn count(&self) -> BTreeMap<Q, u64> {
        let (tasks, found) = self.frontier(64);
        let mut total: BTreeMap<Q, u64> = BTreeMap::new();
        for (_, norm) in found {
            *total.entry(norm).or_insert(0) += 2;
        }
        let parts: Vec<BTreeMap<Q, u64>> = tasks
            .into_par_iter()
            .map(|node| {
                let mut acc: BTreeMap<Q, u64> = BTreeMap::new();
                self.walk(node, &mut |_, norm| *acc.entry(norm).or_insert(0) += 2);
                acc
            })
            .collect();
        for part in parts {
            for (k, v) in part {
                *total.entry(k).or_insert(0) += v;
            }
        }
        total
    }
}

fn prepare(l: &GramLattice, bound: &Q) -> Result<Option<(Tree, crate::matrix::IntMatrix)>, LatticeError> {
    if l.rank() == 0 || !bound.is_positive() {
        if !l.is_positive_definite() {
            return Err(LatticeError::NotPositiveDefinite);
        }
        return Ok(None);
    }
    let (red, t) = lll_reduce(l)?;
    let g = gso(red.gram())?;
    Ok(Some((Tree { b: g.b, mu: g.mu, bound: bound.clone() }, t)))
}

/// All vectors with `0 < ⟨v,v⟩ ≤ bound`, up to sign.
pub fn short_vectors(l: &GramLattice, bound: &Q) -> Result<ShortVectors, LatticeError> {
    let Some((tree, t)) = prepare(l, bound)? else {
        return Ok(ShortVectors { bound: bound.clone(), vectors: Vec::new() });
    };
    let n = l.rank();
    let mut vectors: Vec<(Vec<Z>, Q)> = tree
        .collect()
        .into_iter()
        .map(|(x, norm)| {
            let mut v = vec![Z::zero(); n];
            for (xi, row) in x.iter().zip(&t) {
                if *xi != 0 {
                    for (vj, tj) in v.iter_mut().zip(row) {
                        *vj += tj * *xi;
                    }
                }
            }
            normalize_sign(&mut v);
            (v, norm)
        })
        .collect();
    vectors.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(ShortVectors { bound: bound.clone(), vectors })
}

/// Counts of vectors (both signs) by norm, for norms in `(0, bound]`.
pub fn theta_counts(l: &GramLattice, bound: &Q) -> Result<BTreeMap<Q, u64>, LatticeError> {
    match prepare(l, bound)? {
        None => Ok(BTreeMap::new()),
        Some((tree, _)) => Ok(tree.count()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, z};
    use crate::lattice::root_lattice;
    use crate::lie::SimpleLieType as T;

    #[test]
    fn rank_one() {
        let l = GramLattice::from_i64(&[vec![2]]).unwrap();
        let sv = short_vectors(&l, &q(2)).unwrap();
        assert_eq!(sv.count(), 2);
        assert_eq!(sv.vectors, vec![(vec![z(1)], q(2))]);
        assert_eq!(short_vectors(&l, &q(8)).unwrap().count(), 4);
    }

    #[test]
    fn root_counts() {
        for (t, roots) in [(T::a(2), 6), (T::d(4), 24), (T::e(6), 72), (T::e(8), 240)] {
            let l = root_lattice(t);
            assert_eq!(short_vectors(&l, &q(2)).unwrap().count(), roots, "{t}");
            assert_eq!(theta_counts(&l, &q(2)).unwrap()[&q(2)], roots);
        }
    }

    #[test]
    fn e8_second_shell() {
        // 2160 vectors of norm 4 in E8
        let c = theta_counts(&root_lattice(T::e(8)), &q(4)).unwrap();
        assert_eq!(c[&q(4)], 2160);
    }

    #[test]
    fn vectors_have_claimed_norms() {
        let l = root_lattice(T::d(5));
        let sv = short_vectors(&l, &q(4)).unwrap();
        for (v, n) in &sv.vectors {
            assert_eq!(&l.norm(v), n);
        }
    }

    #[test]
    fn indefinite_rejected() {
        let h = GramLattice::hyperbolic_plane();
        assert_eq!(short_vectors(&h, &q(2)), Err(LatticeError::NotPositiveDefinite));
    }
}
