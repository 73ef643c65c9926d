//! A fixed Leech lattice built from the Golay code, independent of the hole construction.
//!
//! `√8·Λ` is generated by `2c` for Golay codewords `c`, by `4(e_i ± e_j)` and by
//! `(−3, 1, …, 1)`.

use super::glue::golay_generators;
use crate::arith::{Q, Z};
use crate::lattice::GramLattice;
use crate::matrix::{hnf_basis, IntMatrix};

pub fn leech_lattice() -> GramLattice {
    let mut gens: IntMatrix = Vec::new();
    for c in golay_generators() {
        gens.push(c.iter().map(|&b| Z::from(2 * b)).collect());
    }
    for i in 0..24 {
        for j in i + 1..24 {
            for s in [1, -1] {
                let mut v = vec![Z::from(0); 24];
                v[i] = Z::from(4);
                v[j] = Z::from(4 * s);
                gens.push(v);
            }
        }
    }
    let mut odd = vec![Z::from(1); 24];
    odd[0] = Z::from(-3);
    gens.push(odd);
    let basis = hnf_basis(&gens);
    let eighth = Q::new(Z::from(1), Z::from(8));
    let gram = basis
        .iter()
        .map(|a| basis.iter().map(|b| Q::from_integer(a.iter().zip(b).map(|(x, y)| x * y).sum()) * &eighth).collect())
        .collect();
    GramLattice::new(gram).expect("symmetric by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golay_leech_is_leech() {
        let l = leech_lattice();
        assert_eq!(l.rank(), 24);
        assert!(l.is_even());
        assert_eq!(l.determinant(), Q::from_integer(Z::from(1)));
        assert!(l.is_leech().unwrap());
    }
}
