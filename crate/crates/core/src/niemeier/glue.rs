//! Glue codes of the 23 Niemeier lattices with roots, in the usual labelling of
//! discriminant classes:
//!
//! * `A_n`: class `i` is the fundamental weight `ϖ_i` (`0 ≤ i ≤ n`);
//! * `D_n`: `1` and `3` are the spinor classes `ϖ_n`, `ϖ_{n-1}`, `2` is the vector class `ϖ_1`;
//! * `E6`: `1 = ϖ_1`, `2 = ϖ_6`; `E7`: `1 = ϖ_7`; `E8` has no glue.
//!
//! Each entry lists generators of the code; components follow the canonical
//! order of [`super::NiemeierName`]. Cyclic families are expanded by [`cyclic`].

/// `prefix` followed by every cyclic shift of `word`, followed by `suffix`.
fn cyclic(prefix: &[u32], word: &[u32], suffix: &[u32]) -> Vec<Vec<u32>> {
    (0..word.len())
        .map(|s| {
            let mut g = prefix.to_vec();
            g.extend((0..word.len()).map(|i| word[(i + word.len() - s) % word.len()]));
            g.extend_from_slice(suffix);
            g
        })
        .collect()
}

/// Generator matrix rows of the extended binary Golay code: the shifts
/// `x^i g(x)`, `0 ≤ i < 12`, of `g = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1`,
/// extended by a parity bit.
pub fn golay_generators() -> Vec<Vec<u32>> {
    let g = [0usize, 2, 4, 5, 6, 10, 11];
    (0..12)
        .map(|s| {
            let mut w = vec![0u32; 24];
            for e in g {
                w[(e + s) % 23] = 1;
            }
            w[23] = w[..23].iter().sum::<u32>() % 2;
            w
        })
        .collect()
}

fn even_permutations_of_0123() -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for a in 0..4u32 {
        for b in 0..4u32 {
            for c in 0..4u32 {
                for d in 0..4u32 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
                    let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                    if distinct && inversions % 2 == 0 {
                        out.push(p.to_vec());
                    }
                }
            }
        }
    }
    out
}

/// Glue generators keyed by the canonical name.
pub fn glue_generators(name: &str) -> Option<Vec<Vec<u32>>> {
    let g = match name {
        "D24" => vec![vec![1]],
        "D16+E8" => vec![vec![1, 0]],
        "E8^3" => vec![],
        "A24" => vec![vec![5]],
        "D12^2" => vec![vec![1, 2], vec![2, 1]],
        "A17+E7" => vec![vec![3, 1]],
        "D10+E7^2" => vec![vec![1, 1, 0], vec![3, 0, 1]],
        "A15+D9" => vec![vec![2, 1]],
        "D8^3" => cyclic(&[], &[1, 2, 2], &[]),
        "A12^2" => vec![vec![1, 5]],
        "A11+D7+E6" => vec![vec![1, 1, 1]],
        "E6^4" => cyclic(&[1], &[0, 1, 2], &[]),
        "A9^2+D6" => vec![vec![2, 4, 0], vec![5, 0, 1], vec![0, 5, 3]],
        "D6^4" => even_permutations_of_0123(),
        "A8^3" => cyclic(&[], &[1, 1, 4], &[]),
        "A7^2+D5^2" => vec![vec![1, 1, 1, 2], vec![1, 7, 2, 1]],
        "D4^6" => {
            // the hexacode is F4-linear: close the additive generators under
            // multiplication by ω, which permutes the classes 1 → 2 → 3
            let mut g = vec![vec![1; 6]];
            g.extend(cyclic(&[0], &[0, 2, 3, 3, 2], &[]));
            let omega: Vec<Vec<u32>> = g.iter().map(|w| w.iter().map(|&c| if c == 0 { 0 } else { c % 3 + 1 }).collect()).collect();
            g.extend(omega);
            g
        }
        "A6^4" => cyclic(&[1], &[2, 1, 6], &[]),
        "A5^4+D4" => {
            let mut g = cyclic(&[2], &[0, 2, 4], &[0]);
            g.extend([vec![3, 3, 0, 0, 1], vec![3, 0, 3, 0, 2], vec![3, 0, 0, 3, 3]]);
            g
        }
        "A4^6" => cyclic(&[1], &[0, 1, 4, 4, 1], &[]),
        "A3^8" => cyclic(&[3], &[2, 0, 0, 1, 0, 1, 1], &[]),
        "A2^12" => cyclic(&[2], &[1, 1, 2, 1, 1, 1, 2, 2, 2, 1, 2], &[]),
        "A1^24" => golay_generators(),
        _ => return None,
    };
    Some(g)
}
