//! The 23 Niemeier lattices with roots, their Weyl vectors, and the Lorentzian
//! construction of the Leech lattice as `ρ^⊥/ℤρ` inside `E ⊕ Π_{1,1}`.
//!
//! Lattices live in the simple-root coordinates of their root sublattice; the
//! glue vectors are fundamental weights (see [`glue`]).

pub mod glue;
mod leech;

pub use leech::leech_lattice;

use crate::arith::{Q, Z};
use crate::lattice::{GramLattice, LatticeError};
use crate::lie::{Family, SimpleLieType};
use crate::matrix::{self, RatMatrix};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NiemeierError {
    #[error("cannot parse Niemeier name {0:?}")]
    Parse(String),
    #[error("{0} is not the root system of a Niemeier lattice")]
    NotAdmissible(String),
    #[error("glue data for {0} does not give an even unimodular lattice")]
    BadGlue(String),
    #[error("Weyl vector of {0} is not a lattice vector")]
    WeylNotInLattice(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A root system of total rank 24, stored as a canonically sorted multiset of components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NiemeierName {
    components: Vec<SimpleLieType>,
}

const NAMES: [&str; 23] = [
    "A1^24", "A2^12", "A3^8", "A4^6", "A5^4+D4", "D4^6", "A6^4", "A7^2+D5^2", "A8^3", "A9^2+D6", "D6^4",
    "A11+D7+E6", "E6^4", "A12^2", "D8^3", "A15+D9", "A17+E7", "D10+E7^2", "D12^2", "A24", "D16+E8", "E8^3", "D24",
];

impl NiemeierName {
    /// Canonicalizes and checks admissibility.
    pub fn new(mut components: Vec<SimpleLieType>) -> Result<Self, NiemeierError> {
        components.sort_by_key(|t| (t.family(), std::cmp::Reverse(t.rank())));
        let n = NiemeierName { components };
        if NAMES.contains(&n.to_string().as_str()) {
            Ok(n)
        } else {
            Err(NiemeierError::NotAdmissible(n.to_string()))
        }
    }

    /// The 23 names, ordered by Coxeter number.
    pub fn all() -> Vec<NiemeierName> {
        NAMES.iter().map(|s| s.parse().expect("table names parse")).collect()
    }

    pub fn components(&self) -> &[SimpleLieType] {
        &self.components
    }

    /// The common Coxeter number of the components.
    pub fn coxeter(&self) -> u64 {
        self.components[0].info().coxeter
    }
}

impl fmt::Display for NiemeierName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.components.len() {
            let t = self.components[i];
            let m = self.components[i..].iter().take_while(|&&u| u == t).count();
            parts.push(if m == 1 { t.to_string() } else { format!("{t}^{m}") });
            i += m;
        }
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for NiemeierName {
    type Err = NiemeierError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || NiemeierError::Parse(s.to_string());
        let mut components = Vec::new();
        for part in s.trim().split('+') {
            let (ty, mult) = match part.trim().split_once('^') {
                Some((t, m)) => (t, m.trim().parse::<usize>().map_err(|_| err())?),
                None => (part.trim(), 1),
            };
            let t: SimpleLieType = ty.parse().map_err(|_| err())?;
            if !t.is_simply_laced() || mult == 0 || mult > 24 {
                return Err(NiemeierError::NotAdmissible(s.to_string()));
            }
            components.extend(std::iter::repeat_n(t, mult));
        }
        NiemeierName::new(components)
    }
}

impl Serialize for NiemeierName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Index (0-based, Bourbaki order) of the fundamental weight representing a glue class.
fn class_weight_index(t: SimpleLieType, class: u32) -> Option<usize> {
    let n = t.rank() as usize;
    let c = class as usize;
    match (t.family(), c) {
        (_, 0) => None,
        (Family::A, c) if c <= n => Some(c - 1),
        (Family::D, 1) => Some(n - 1),
        (Family::D, 2) => Some(0),
        (Family::D, 3) => Some(n - 2),
        (Family::E, 1) if n == 6 => Some(0),
        (Family::E, 2) if n == 6 => Some(5),
        (Family::E, 1) if n == 7 => Some(6),
        _ => panic!("glue class {class} does not exist for {t}"),
    }
}

/// A Niemeier lattice with its embedding data.
#[derive(Debug, Clone)]
pub struct NiemeierLattice {
    pub name: NiemeierName,
    /// Gram matrix in the chosen lattice basis
    pub lattice: GramLattice,
    /// basis rows in simple-root coordinates
    pub basis: RatMatrix,
    /// block-diagonal Cartan matrix: the form on simple-root coordinates
    pub root_form: RatMatrix,
    /// `ρ̄` in simple-root coordinates
    pub weyl: Vec<Q>,
    /// `ρ̄` in the lattice basis
    pub weyl_coords: Vec<Z>,
}

impl NiemeierLattice {
    pub fn build(name: &NiemeierName) -> Result<Self, NiemeierError> {
        let comps = name.components();
        let mut offsets = Vec::new();
        let mut dim = 0;
        let mut cartans = Vec::new();
        for &t in comps {
            offsets.push(dim);
            dim += t.rank() as usize;
            cartans.push(crate::lattice::root_lattice(t).gram().clone());
        }
        let mut root_form = vec![vec![Q::zero(); dim]; dim];
        let mut weyl = vec![Q::zero(); dim];
        let mut inverses = Vec::new();
        for (k, c) in cartans.iter().enumerate() {
            let o = offsets[k];
            let inv = matrix::inverse_rat(c).expect("Cartan matrices are invertible");
            for i in 0..c.len() {
                for j in 0..c.len() {
                    root_form[o + i][o + j] = c[i][j].clone();
                    // ρ = Σ ϖ_j; rows of C⁻¹ are the ϖ_j in root coordinates
                    weyl[o + j] += &inv[i][j];
                }
            }
            inverses.push(inv);
        }

        let mut gens: Vec<Vec<Q>> = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect();
        let code = glue::glue_generators(&name.to_string()).ok_or_else(|| NiemeierError::NotAdmissible(name.to_string()))?;
        for word in code {
            let mut v = vec![Q::zero(); dim];
            for (k, &class) in word.iter().enumerate() {
                if let Some(idx) = class_weight_index(comps[k], class) {
                    for (j, x) in inverses[k][idx].iter().enumerate() {
                        v[offsets[k] + j] = x.clone();
                    }
                }
            }
            gens.push(v);
        }
        let den = gens.iter().flatten().fold(Z::one(), |acc, x| acc.lcm(x.denom()));
        let dq = Q::from_integer(den.clone());
        let int_gens = gens.iter().map(|r| r.iter().map(|x| (x * &dq).to_integer()).collect()).collect();
        let basis: RatMatrix =
            matrix::hnf_basis(&int_gens).iter().map(|r| r.iter().map(|x| Q::new(x.clone(), den.clone())).collect()).collect();
        let lattice = GramLattice::new(matrix::mul_rat(&matrix::mul_rat(&basis, &root_form), &matrix::transpose(&basis)))?;
        if lattice.rank() != 24 || !lattice.is_even() || !lattice.determinant().is_one() {
            return Err(NiemeierError::BadGlue(name.to_string()));
        }
        let coords = matrix::solve_left_rat(&basis, &weyl).ok_or_else(|| NiemeierError::WeylNotInLattice(name.to_string()))?;
        if coords.iter().any(|x| !x.is_integer()) {
            return Err(NiemeierError::WeylNotInLattice(name.to_string()));
        }
        let weyl_coords = coords.iter().map(|x| x.to_integer()).collect();
        Ok(NiemeierLattice { name: name.clone(), lattice, basis, root_form, weyl, weyl_coords })
    }

    /// `⟨ρ̄, ρ̄⟩`, evaluated on simple-root coordinates.
    pub fn weyl_norm(&self) -> Q {
        ambient_inner(&self.root_form, &self.weyl, &self.weyl)
    }

    /// `⟨ρ̄, β⟩` for every simple root `β`.
    pub fn weyl_simple_pairings(&self) -> Vec<Q> {
        let n = self.weyl.len();
        (0..n)
            .map(|i| {
                let e: Vec<Q> = (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect();
                ambient_inner(&self.root_form, &self.weyl, &e)
            })
            .collect()
    }

    /// `E ⊕ Π_{1,1}` and the isotropic vector `ρ = (ρ̄, h, h+1)` in its basis.
    pub fn lorentzian(&self) -> (GramLattice, Vec<Z>) {
        let m = self.lattice.direct_sum(&GramLattice::hyperbolic_plane());
        let h = Z::from(self.name.coxeter());
        let mut rho = self.weyl_coords.clone();
        rho.push(h.clone());
        rho.push(h + 1);
        (m, rho)
    }

    pub fn hole_construction(&self) -> Result<GramLattice, NiemeierError> {
        let (m, rho) = self.lorentzian();
        Ok(m.quotient_by_isotropic(&rho)?)
    }
}

fn ambient_inner(form: &RatMatrix, a: &[Q], b: &[Q]) -> Q {
    let mut s = Q::zero();
    for (i, x) in a.iter().enumerate() {
        if !x.is_zero() {
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() && !form[i][j].is_zero() {
                    s += x * y * &form[i][j];
                }
            }
        }
    }
    s
}

pub fn build_niemeier(name: &NiemeierName) -> Result<GramLattice, NiemeierError> {
    Ok(NiemeierLattice::build(name)?.lattice)
}

/// `ρ̄` in simple-root coordinates of the root sublattice.
pub fn niemeier_weyl_vector(name: &NiemeierName) -> Result<Vec<Q>, NiemeierError> {
    Ok(NiemeierLattice::build(name)?.weyl)
}

pub fn hole_construction(name: &NiemeierName) -> Result<GramLattice, NiemeierError> {
    NiemeierLattice::build(name)?.hole_construction()
}

#[derive(Debug, Clone, Serialize)]
pub struct NiemeierReport {
    pub name: NiemeierName,
    pub h: u64,
    pub root_count: u64,
    #[serde(serialize_with = "crate::report::ser_q")]
    pub weyl_norm: Q,
    pub leech_certified: bool,
}

pub fn niemeier_report(name: &NiemeierName) -> Result<NiemeierReport, NiemeierError> {
    let e = NiemeierLattice::build(name)?;
    let root_count = e.lattice.root_count()?;
    let leech = e.hole_construction()?;
    Ok(NiemeierReport {
        name: name.clone(),
        h: name.coxeter(),
        root_count,
        weyl_norm: e.weyl_norm(),
        leech_certified: leech.is_leech()?,
    })
}

/// Reports for all 23 names, computed in parallel, in table order.
pub fn all_reports() -> Result<Vec<NiemeierReport>, NiemeierError> {
    NiemeierName::all().par_iter().map(niemeier_report).collect()
}
