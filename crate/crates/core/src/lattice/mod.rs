//! Quadratic lattices given by exact rational Gram matrices.

mod enumerate;
mod io;
mod reduce;

pub use enumerate::{short_vectors, theta_counts, ShortVectors};
pub use io::{read_lattice, write_lattice, LatticeFile};
pub use reduce::lll_reduce;

use crate::arith::{Q, Z};
use crate::matrix::{self, IntMatrix, RatMatrix};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("Gram matrix is not square")]
    NotSquare,
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix is singular")]
    Singular,
    #[error("lattice is not integral")]
    NotIntegral,
    #[error("lattice is not positive definite")]
    NotPositiveDefinite,
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector is not isotropic (norm {0})")]
    NotIsotropic(String),
    #[error("vector is not primitive (content {0})")]
    NotPrimitive(String),
    #[error("vector lies in the radical of the form")]
    Degenerate,
    #[error("expected rank {expected}, got {got}")]
    WrongRank { expected: usize, got: usize },
    #[error("malformed lattice file: {0}")]
    Parse(String),
}

/// A lattice `ℤ^n` with the bilinear form given by `gram`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramLattice {
    gram: RatMatrix,
}

/// Invariant factors of `L*/L`, trivial factors dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantGroup {
    pub invariants: Vec<Z>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> Z {
        self.invariants.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }
}

impl GramLattice {
    pub fn new(gram: RatMatrix) -> Result<Self, LatticeError> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(LatticeError::NotSquare);
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric);
                }
            }
        }
        Ok(GramLattice { gram })
    }

    pub fn from_int(gram: &IntMatrix) -> Result<Self, LatticeError> {
        Self::new(matrix::to_rat(gram))
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, LatticeError> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| Q::from_integer(Z::from(x))).collect()).collect())
    }

    /// The hyperbolic plane with Gram `[[0,-1],[-1,0]]`.
    pub fn hyperbolic_plane() -> Self {
        Self::from_i64(&[vec![0, -1], vec![-1, 0]]).unwrap()
    }

    pub fn zero() -> Self {
        GramLattice { gram: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn inner(&self, a: &[Z], b: &[Z]) -> Q {
        let mut s = Q::zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    s += &self.gram[i][j] * Q::from_integer(x * y);
                }
            }
        }
        s
    }

    pub fn norm(&self, v: &[Z]) -> Q {
        self.inner(v, v)
    }

    pub fn determinant(&self) -> Q {
        matrix::det_rat(&self.gram)
    }

    pub fn is_integral(&self) -> bool {
        self.gram.iter().flatten().all(|x| x.is_integer())
    }

    pub fn is_even(&self) -> bool {
        self.is_integral() && (0..self.rank()).all(|i| self.gram[i][i].numer().is_even())
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_integral() && self.determinant().abs().is_one()
    }

    /// `(p, q)`: numbers of positive and negative eigenvalues.
    pub fn signature(&self) -> (usize, usize) {
        let (p, q, _) = matrix::signature(&self.gram);
        (p, q)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature().0 == self.rank()
    }

    /// Integer Gram matrix, if the lattice is integral.
    pub fn int_gram(&self) -> Result<IntMatrix, LatticeError> {
        if !self.is_integral() {
            return Err(LatticeError::NotIntegral);
        }
        Ok(self.gram.iter().map(|r| r.iter().map(|x| x.numer().clone()).collect()).collect())
    }

    /// Gram matrix of the sublattice (or change of basis) spanned by the rows of `basis`.
    pub fn sublattice(&self, basis: &IntMatrix) -> GramLattice {
        GramLattice { gram: matrix::congruence(basis, &self.gram) }
    }

    /// Dual basis (rows of `G⁻¹` in the coordinates of this basis) and `L*/L`.
    pub fn dual_and_discriminant(&self) -> Result<(RatMatrix, DiscriminantGroup), LatticeError> {
        let g = self.int_gram()?;
        let inv = matrix::inverse_rat(&self.gram).ok_or(LatticeError::Singular)?;
        let invariants = matrix::smith_invariants(&g).into_iter().filter(|d| !d.is_one()).collect();
        Ok((inv, DiscriminantGroup { invariants }))
    }

    pub fn direct_sum(&self, other: &GramLattice) -> GramLattice {
        let (n, m) = (self.rank(), other.rank());
        let mut gram = vec![vec![Q::zero(); n + m]; n + m];
        for i in 0..n {
            gram[i][..n].clone_from_slice(&self.gram[i]);
        }
        for i in 0..m {
            gram[n + i][n..].clone_from_slice(&other.gram[i]);
        }
        GramLattice { gram }
    }

    /// `ρ^⊥ / ℤρ` for a primitive isotropic `ρ` of an integral lattice.
    ///
    /// Returns the quotient together with the representatives (rows, in the
    /// coordinates of `self`) of the chosen basis of the quotient.
    pub fn quotient_by_isotropic_with_basis(&self, rho: &[Z]) -> Result<(GramLattice, IntMatrix), LatticeError> {
        let n = self.rank();
        if rho.len() != n {
            return Err(LatticeError::DimensionMismatch { expected: n, got: rho.len() });
        }
        let g = self.int_gram()?;
        let content = rho.iter().fold(Z::zero(), |acc, x| acc.gcd(x));
        if !content.is_one() {
            return Err(LatticeError::NotPrimitive(content.to_string()));
        }
        let norm = self.norm(rho);
        if !norm.is_zero() {
            return Err(LatticeError::NotIsotropic(crate::arith::format_rational(&norm)));
        }
        // f_i = ⟨e_i, ρ⟩; the kernel of x ↦ x·f is ρ^⊥
        let f: Vec<Z> = g.iter().map(|row| row.iter().zip(rho).map(|(a, b)| a * b).sum()).collect();
        let (gcd, u, uinv) = matrix::reduce_row_vector(&f);
        if gcd.is_zero() {
            return Err(LatticeError::Degenerate);
        }
        let ut = matrix::transpose(&u);
        let kernel: IntMatrix = ut[1..].to_vec();
        // ρ = U·(U⁻¹ρ) and the first coordinate of U⁻¹ρ vanishes
        let coords: Vec<Z> = uinv.iter().map(|row| row.iter().zip(rho).map(|(a, b)| a * b).sum()).collect();
        debug_assert!(coords[0].is_zero());
        let c = &coords[1..];
        let (one, _v, vinv) = matrix::reduce_row_vector(c);
        debug_assert!(one.is_one());
        // rows of V⁻¹·K form a basis of ρ^⊥ whose first row is ρ
        let adapted = matrix::mul_int(&vinv, &kernel);
        debug_assert_eq!(adapted[0], rho.to_vec());
        let reps: IntMatrix = adapted[1..].to_vec();
        Ok((self.sublattice(&reps), reps))
    }

    pub fn quotient_by_isotropic(&self, rho: &[Z]) -> Result<GramLattice, LatticeError> {
        self.quotient_by_isotropic_with_basis(rho).map(|(l, _)| l)
    }

    /// Rank 24, even, unimodular and without norm-2 vectors. By Conway's
    /// uniqueness theorem this characterizes the Leech lattice.
    pub fn is_leech(&self) -> Result<bool, LatticeError> {
        if self.rank() != 24 {
            return Err(LatticeError::WrongRank { expected: 24, got: self.rank() });
        }
        if !self.is_positive_definite() {
            return Err(LatticeError::NotPositiveDefinite);
        }
        if !self.is_even() || !self.determinant().is_one() {
            return Ok(false);
        }
        Ok(theta_counts(self, &Q::from_integer(Z::from(2)))?.is_empty())
    }

    /// Number of vectors of norm exactly 2.
    pub fn root_count(&self) -> Result<u64, LatticeError> {
        let two = Q::from_integer(Z::from(2));
        Ok(theta_counts(self, &two)?.get(&two).copied().unwrap_or(0))
    }
}

pub fn determinant(l: &GramLattice) -> Q {
    l.determinant()
}

pub fn is_even(l: &GramLattice) -> bool {
    l.is_even()
}

pub fn is_unimodular(l: &GramLattice) -> bool {
    l.is_unimodular()
}

pub fn direct_sum(a: &GramLattice, b: &GramLattice) -> GramLattice {
    a.direct_sum(b)
}

pub fn quotient_by_isotropic(m: &GramLattice, rho: &[Z]) -> Result<GramLattice, LatticeError> {
    m.quotient_by_isotropic(rho)
}

pub fn is_leech(l: &GramLattice) -> Result<bool, LatticeError> {
    l.is_leech()
}

/// Gram matrix of a root lattice of the given simply-laced Cartan type.
pub fn root_lattice(t: crate::lie::SimpleLieType) -> GramLattice {
    let rs = crate::lie::RootSystem::new(t);
    let c = rs.cartan_matrix();
    // long roots have norm 2, so the Gram matrix is the symmetrized Cartan matrix
    let sr = rs.simple_roots();
    let gram = (0..c.len()).map(|i| (0..c.len()).map(|j| rs.form(&sr[i], &sr[j])).collect()).collect();
    GramLattice::new(gram).unwrap()
}

/// Sign-normalized integer vector: first non-zero coordinate positive.
pub(crate) fn normalize_sign(v: &mut [Z]) {
    if let Some(x) = v.iter().find(|x| !x.is_zero()) {
        if x.is_negative() {
            for y in v.iter_mut() {
                *y = -y.clone();
            }
        }
    }
}
