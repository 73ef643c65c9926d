use super::{Family, SimpleLieType};
use crate::arith::{dot, q, qf, Q};
use crate::matrix::{inverse_rat, RatMatrix};
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::{HashMap, VecDeque};

/// An explicit root system in rational coordinates.
///
/// The bilinear form is `(x|y) = scale · x·y`, with `scale` chosen so that
/// long roots have norm 2. Simple roots follow the Bourbaki numbering.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: SimpleLieType,
    ambient_dim: usize,
    scale: Q,
    simple_roots: Vec<Vec<Q>>,
    fundamental_weights: Vec<Vec<Q>>,
    /// positive roots as ambient vectors, sorted by height then lexicographically on coefficients
    positive_roots: Vec<Vec<Q>>,
    /// coefficients of each positive root in the simple-root basis
    positive_coeffs: Vec<Vec<i64>>,
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = q(1);
    v
}

fn combo(n: usize, terms: &[(usize, i64)]) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    for &(i, c) in terms {
        v[i] += q(c);
    }
    v
}

fn simple_roots_of(t: SimpleLieType) -> (usize, Q, Vec<Vec<Q>>) {
    let n = t.rank() as usize;
    let diff = |dim: usize, i: usize| combo(dim, &[(i, 1), (i + 1, -1)]);
    match t.family() {
        Family::A => (n + 1, q(1), (0..n).map(|i| diff(n + 1, i)).collect()),
        Family::B => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i)).collect();
            s.push(unit(n, n - 1));
            (n, q(1), s)
        }
        Family::C => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i)).collect();
            s.push(combo(n, &[(n - 1, 2)]));
            (n, qf(1, 2), s)
        }
        Family::D => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i)).collect();
            s.push(combo(n, &[(n - 2, 1), (n - 1, 1)]));
            (n, q(1), s)
        }
        Family::E => {
            let half = qf(1, 2);
            let a1: Vec<Q> = [1, -1, -1, -1, -1, -1, -1, 1].iter().map(|&c| &half * q(c)).collect();
            let mut s = vec![a1, combo(8, &[(0, 1), (1, 1)])];
            for i in 0..6 {
                s.push(combo(8, &[(i + 1, 1), (i, -1)]));
            }
            s.truncate(n);
            (8, q(1), s)
        }
        Family::F => {
            let half = qf(1, 2);
            let a4: Vec<Q> = [1, -1, -1, -1].iter().map(|&c| &half * q(c)).collect();
            (4, q(1), vec![diff(4, 1), diff(4, 2), unit(4, 3), a4])
        }
        Family::G => (3, qf(1, 3), vec![combo(3, &[(0, 1), (1, -1)]), combo(3, &[(0, -2), (1, 1), (2, 1)])]),
    }
}

impl RootSystem {
    pub fn new(t: SimpleLieType) -> RootSystem {
        let (ambient_dim, scale, simple) = simple_roots_of(t);
        let r = simple.len();
        let form = |a: &[Q], b: &[Q]| &scale * dot(a, b);

        // all roots = Weyl orbit of the simple roots, in doubled ambient coordinates
        // (every coordinate is a half-integer), carrying simple-root coefficients along
        let doubled: Vec<Vec<i64>> = simple
            .iter()
            .map(|a| {
                a.iter()
                    .map(|x| {
                        let y = x * q(2);
                        assert!(y.is_integer(), "ambient coordinates are half-integers");
                        y.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();
        let idot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
        let norms: Vec<i64> = doubled.iter().map(|a| idot(a, a)).collect();
        let unit = |i: usize| -> Vec<i64> { (0..r).map(|j| i64::from(i == j)).collect() };
        let mut seen: HashMap<Vec<i64>, Vec<i64>> = doubled.iter().cloned().zip((0..r).map(unit)).collect();
        let mut queue: VecDeque<Vec<i64>> = doubled.iter().cloned().collect();
        while let Some(v) = queue.pop_front() {
            let coeffs = seen[&v].clone();
            for (i, a) in doubled.iter().enumerate() {
                let num = 2 * idot(&v, a);
                debug_assert_eq!(num % norms[i], 0, "Cartan integers");
                let c = num / norms[i];
                if c == 0 {
                    continue;
                }
                let w: Vec<i64> = v.iter().zip(a).map(|(x, y)| x - c * y).collect();
                if !seen.contains_key(&w) {
                    let mut wc = coeffs.clone();
                    wc[i] -= c;
                    seen.insert(w.clone(), wc);
                    queue.push_back(w);
                }
            }
        }

        let mut positives: Vec<(Vec<i64>, Vec<Q>)> = Vec::new();
        for (v, coeffs) in seen {
            if coeffs.iter().all(|&x| x >= 0) {
                positives.push((coeffs, v.iter().map(|&x| qf(x, 2)).collect()));
            } else {
                assert!(coeffs.iter().all(|&x| x <= 0), "roots are positive or negative");
            }
        }
        positives.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| a.0.cmp(&b.0))
        });

        // fundamental weights: (ϖ_i | α_j^∨) = δ_ij, ϖ_i in the span of the simple roots
        let cartan: RatMatrix = (0..r)
            .map(|i| (0..r).map(|j| q(2) * form(&simple[i], &simple[j]) / form(&simple[j], &simple[j])).collect())
            .collect();
        let inv = inverse_rat(&cartan).expect("Cartan matrix is invertible");
        let fundamental_weights = (0..r)
            .map(|i| {
                let mut w = vec![Q::zero(); ambient_dim];
                for (k, alpha) in simple.iter().enumerate() {
                    for (x, y) in w.iter_mut().zip(alpha) {
                        *x += &inv[i][k] * y;
                    }
                }
                w
            })
            .collect();

        let (positive_coeffs, positive_roots) = positives.into_iter().unzip();
        RootSystem { ty: t, ambient_dim, scale, simple_roots: simple, fundamental_weights, positive_roots, positive_coeffs }
    }

    pub fn simple_type(&self) -> SimpleLieType {
        self.ty
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// Scale factor of the form relative to the standard dot product.
    pub fn scale(&self) -> &Q {
        &self.scale
    }

    pub fn form(&self, a: &[Q], b: &[Q]) -> Q {
        &self.scale * dot(a, b)
    }

    pub fn simple_roots(&self) -> &[Vec<Q>] {
        &self.simple_roots
    }

    pub fn fundamental_weights(&self) -> &[Vec<Q>] {
        &self.fundamental_weights
    }

    pub fn positive_roots(&self) -> &[Vec<Q>] {
        &self.positive_roots
    }

    /// Simple-root coefficients of the positive roots, in the order of [`Self::positive_roots`].
    pub fn positive_root_coefficients(&self) -> &[Vec<i64>] {
        &self.positive_coeffs
    }

    /// All roots: positives followed by their negatives.
    pub fn roots(&self) -> Vec<Vec<Q>> {
        let mut out = self.positive_roots.clone();
        out.extend(self.positive_roots.iter().map(|v| v.iter().map(|x| -x).collect()));
        out
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive_roots.len()
    }

    /// Half the sum of the positive roots.
    pub fn weyl_vector(&self) -> Vec<Q> {
        let mut rho = vec![Q::zero(); self.ambient_dim];
        for r in &self.positive_roots {
            for (x, y) in rho.iter_mut().zip(r) {
                *x += y;
            }
        }
        rho.iter().map(|x| x / q(2)).collect()
    }

    /// Sum of the fundamental weights; equal to [`Self::weyl_vector`].
    pub fn weyl_vector_from_weights(&self) -> Vec<Q> {
        let mut rho = vec![Q::zero(); self.ambient_dim];
        for w in &self.fundamental_weights {
            for (x, y) in rho.iter_mut().zip(w) {
                *x += y;
            }
        }
        rho
    }

    /// The highest root θ (unique positive root of maximal height).
    pub fn highest_root(&self) -> &[Q] {
        self.positive_roots.last().expect("non-empty root system")
    }

    pub fn highest_root_coefficients(&self) -> &[i64] {
        self.positive_coeffs.last().expect("non-empty root system")
    }

    /// `A_ij = ⟨α_i, α_j^∨⟩ = 2(α_i|α_j)/(α_j|α_j)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let s = &self.simple_roots;
        (0..s.len())
            .map(|i| {
                (0..s.len())
                    .map(|j| {
                        let v = q(2) * self.form(&s[i], &s[j]) / self.form(&s[j], &s[j]);
                        v.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect()
    }

    /// Comarks `a_i^∨ = (ϖ_i | θ)`; a dominant weight's level is `Σ λ_i a_i^∨`.
    pub fn comarks(&self) -> Vec<i64> {
        let theta = self.highest_root();
        self.fundamental_weights
            .iter()
            .map(|w| {
                let v = self.form(w, theta);
                assert!(v.is_integer() && !v.is_negative());
                v.to_integer().to_i64().unwrap()
            })
            .collect()
    }

    /// Whether a root is long (norm 2).
    pub fn is_long(&self, v: &[Q]) -> bool {
        self.form(v, v) == q(2)
    }
}
