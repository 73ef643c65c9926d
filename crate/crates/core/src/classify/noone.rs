//! When every component is simply laced with `h∨_j = N₀` and `k_j = K₀ − N₀`,
//! `dim V₁ = (h+1)n` turns the strange formula into `kn(h+1) = 24(k+h)`.
//! Only `k = 1`, `n = 24` survives.

use crate::arith::gcd_u64;
use crate::lie::SimpleLieType;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NoOneTriple {
    pub k: u64,
    pub h: u64,
    pub n: u64,
    /// ranks of the simply-laced types with Coxeter number `h`
    pub component_ranks: Vec<u32>,
    /// `None` when the triple is realizable
    pub rejected_by: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NoOneReport {
    /// every solution of `kn(h+1) = 24(k+h)` with `k | 24`, `4 ≤ n ≤ 24`
    pub triples: Vec<NoOneTriple>,
    /// realizable solutions with `k ≥ 2` (expected empty)
    pub survivors: Vec<NoOneTriple>,
    /// Coxeter numbers `h` of the realizable `k = 1` solutions
    pub niemeier_coxeter_numbers: Vec<u64>,
}

/// For `k = 2t` the Coxeter number is odd, so every component is `A_{h−1}`
/// and `t·s(h−1)(h+1) = 12(2t+h)`; the left side is divisible by 8, the right
/// side is not. Returns true when that obstruction applies to `(k, h)`.
pub fn mod8_obstruction(k: u64, h: u64) -> bool {
    k % 2 == 0 && h % 2 == 1 && ((h - 1) * (h + 1)) % 8 == 0 && (12 * (k + h)) % 8 != 0
}

fn simply_laced_ranks(h: u64) -> Vec<u32> {
    SimpleLieType::all_up_to_rank(24)
        .into_iter()
        .filter(|t| t.is_simply_laced() && t.dual_coxeter() == h)
        .map(|t| t.rank())
        .collect()
}

/// Can `n` be written as a sum of the given ranks (with repetition)?
fn representable(n: u32, ranks: &[u32]) -> bool {
    let mut ok = vec![false; n as usize + 1];
    ok[0] = true;
    for m in 1..=n as usize {
        ok[m] = ranks.iter().any(|&r| r as usize <= m && ok[m - r as usize]);
    }
    ok[n as usize]
}

pub fn prop_noone_search() -> NoOneReport {
    // the largest Coxeter number of a simply-laced type of rank ≤ 24 is 46 (D24)
    let hs: Vec<u64> = (2..=46).filter(|&h| !simply_laced_ranks(h).is_empty()).collect();
    let mut triples = Vec::new();
    for k in (1..=24u64).filter(|k| 24 % k == 0) {
        for &h in &hs {
            for n in 4..=24u64 {
                if k * n * (h + 1) != 24 * (k + h) {
                    continue;
                }
                let ranks = simply_laced_ranks(h);
                let rejected_by = if gcd_u64(k, h) != 1 {
                    Some(format!("gcd(k, h) = {} ≠ 1", gcd_u64(k, h)))
                } else if mod8_obstruction(k, h) {
                    Some("mod 8: 8 | (h−1)(h+1) but 8 ∤ 12(k+h)".to_string())
                } else if !representable(n as u32, &ranks) {
                    Some(format!("no sum of ranks {ranks:?} equals {n}"))
                } else {
                    None
                };
                triples.push(NoOneTriple { k, h, n, component_ranks: ranks, rejected_by });
            }
        }
    }
    let survivors = triples.iter().filter(|t| t.k >= 2 && t.rejected_by.is_none()).cloned().collect();
    let niemeier_coxeter_numbers = triples.iter().filter(|t| t.k == 1 && t.rejected_by.is_none()).map(|t| t.h).collect();
    NoOneReport { triples, survivors, niemeier_coxeter_numbers }
}
