//! One line per acceptance criterion. Every comparison is exact (tolerance 0);
//! runtime budgets are checked against wall-clock time.
//!
//! `cargo test --test acceptance -- --deep` also enumerates the norm-4 shell
//! of two hole constructions.

use leech_core::arith::{format_rational, q, qf, Q, Z};
use leech_core::characters::{assignments, conway_row, inner_product, z2z4_formula, LinearCharacter, CONWAY_ROWS};
use leech_core::classify::{case_inequality_report, enumerate_candidates, EnumerationOptions};
use leech_core::frames::{class_table, classify_shape, eig_mult, fixed_dim, from_cyclotomic, power, to_cyclotomic, trace, FrameShape};
use leech_core::lattice::{root_lattice, theta_counts, GramLattice};
use leech_core::lie::{integrable_weights, LevelledAlgebra, RootSystem, SimpleLieType};
use leech_core::matrix::{identity_int, IntMatrix};
use leech_core::niemeier::{NiemeierLattice, NiemeierName};
use leech_core::twisted::{
    minimize_twisted_weight, norm_comparison_identity, root_pairing_bounds_hold, scaled_weyl_weight, twisted_conformal_weight, TwistedComponent,
};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::time::{Duration, Instant};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn strange_formula() -> Verdict {
    let types = SimpleLieType::all_up_to_rank(24);
    let bad: Vec<String> = types
        .par_iter()
        .filter_map(|&t| {
            let rs = RootSystem::new(t);
            let rho = rs.weyl_vector();
            let lhs = rs.form(&rho, &rho);
            let rhs = qf((t.dual_coxeter() * t.dim()) as i64, 12);
            (lhs != rhs).then(|| format!("{t}: {} != {}", format_rational(&lhs), format_rational(&rhs)))
        })
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} types, (rho|rho) = h*dim/12 exactly", types.len()))
}

fn hole_constructions(deep: bool) -> Verdict {
    let names = NiemeierName::all();
    ensure(names.len() == 23, || format!("{} root systems", names.len()))?;
    let bad: Vec<String> = names
        .par_iter()
        .filter_map(|name| {
            let check = || -> Result<(), String> {
                let e = NiemeierLattice::build(name).map_err(|e| e.to_string())?;
                let h = name.coxeter() as i64;
                ensure(e.weyl_norm() == q(2 * h * (h + 1)), || format!("Weyl norm {}", format_rational(&e.weyl_norm())))?;
                let l = e.hole_construction().map_err(|e| e.to_string())?;
                ensure(l.rank() == 24 && l.is_even(), || "not even of rank 24".into())?;
                ensure(l.determinant() == q(1), || format!("det {}", format_rational(&l.determinant())))?;
                let roots = theta_counts(&l, &q(2)).map_err(|e| e.to_string())?;
                ensure(roots.is_empty(), || format!("norm-2 vectors {roots:?}"))
            };
            check().err().map(|e| format!("{name}: {e}"))
        })
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    let mut detail = "23/23 even, det 1, no norm-2 vectors, Weyl norm 2h(h+1)".to_string();
    if deep {
        for n in ["A1^24", "D24"] {
            let l = NiemeierLattice::build(&n.parse().unwrap()).unwrap().hole_construction().unwrap();
            let c = theta_counts(&l, &q(4)).map_err(|e| e.to_string())?;
            let four = c.get(&q(4)).copied().unwrap_or(0);
            ensure(four == 196560, || format!("{n}: {four} norm-4 vectors"))?;
        }
        detail += "; norm-4 count 196560 for A1^24 and D24";
    } else {
        detail += "; norm-4 shell skipped (pass --deep)";
    }
    Ok(detail)
}

fn rank_four() -> Verdict {
    let mut got: Vec<(String, Q)> = enumerate_candidates(4, EnumerationOptions::default())
        .into_iter()
        .map(|t| (t.types.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("+"), t.alpha_norm))
        .collect();
    got.sort();
    let want = vec![("B4".into(), q(6)), ("C4".into(), q(6)), ("D4".into(), q(14)), ("F4".into(), qf(26, 7)), ("G2+G2".into(), q(14))];
    ensure(got == want, || format!("{got:?}"))?;
    Ok("{B4, C4, D4, F4, G2+G2} with <a,a> = 6, 6, 14, 26/7, 14".into())
}

fn composite_sweep() -> Verdict {
    let mut names = Vec::new();
    let mut refuted = 0;
    for r in [4, 6, 8, 10, 12, 16] {
        for t in enumerate_candidates(r, EnumerationOptions::all()) {
            let c = t.candidate().ok_or_else(|| format!("{t}: levels not integral"))?;
            let rep = case_inequality_report(&c).map_err(|e| e.to_string())?;
            ensure(rep.contradiction, || format!("{c}: no contradiction"))?;
            refuted += 1;
            names.push(c.to_string());
        }
    }
    names.sort();
    let want = ["A7,1+D9,2", "B5,1+E7,2+F4,1", "B8,1+E8,2", "C8,1+F4,1^2"];
    ensure(names == want, || format!("{names:?}"))?;
    Ok(format!("exactly {}, {refuted} case reports end in a contradiction", names.join(", ")))
}

fn shape(name: &str) -> FrameShape {
    class_table().get(name).unwrap().shape.clone()
}

fn frames() -> Verdict {
    let rows = class_table().rows();
    for r in rows {
        let degree: i64 = r.shape.exponents().iter().map(|(n, m)| *n as i64 * m).sum();
        ensure(degree == 24, || format!("{}: degree {degree}", r.name))?;
        let sum: i64 = r.shape.exponents().values().sum();
        ensure(fixed_dim(&r.shape) == sum && sum == r.fixed_dim, || format!("{}: fixed dim", r.name))?;
        // to_cyclotomic rejects negative multiplicities by construction; check the round trip too
        ensure(from_cyclotomic(&to_cyclotomic(&r.shape)).as_ref() == Ok(&r.shape), || format!("{}: cyclotomic", r.name))?;
    }
    let class_of = |f: &FrameShape| classify_shape(f).unwrap_or_default();
    ensure(class_of(&power(&shape("-4A"), 2).unwrap()) == ["-2A"], || "(-4A)^2".into())?;
    ensure(class_of(&power(&shape("-6D"), 2).unwrap()) == ["3C"], || "(-6D)^2".into())?;
    let p = power(&shape("-12E"), 6).unwrap();
    ensure(trace(&p) == -8 && class_of(&p) == ["-2A"], || format!("(-12E)^6 = {p}"))?;
    ensure(eig_mult(&shape("-12E"), 6) == 0, || "eig_mult(-12E, 6)".into())?;
    ensure(eig_mult(&shape("6C"), 3) == 1, || "eig_mult(6C, 3)".into())?;
    Ok(format!("{} rows valid; power maps and eigenvalue multiplicities match", rows.len()))
}

fn characters() -> Verdict {
    let mut z2z4 = 0;
    for row in CONWAY_ROWS {
        for g in assignments(row) {
            if (g.tau_order, g.sigma_order) != (4, 2) {
                continue;
            }
            let z = z2z4_formula(&g).map_err(|e| e.to_string())?;
            let direct = inner_product(&g, &LinearCharacter::new(4)).map_err(|e| e.to_string())?;
            ensure(direct.scaled == Some(z.value), || format!("row {}: {:?} vs {}", row.id, direct.scaled, z.value))?;
            if z.sigma_class != "-2A" {
                ensure(z.value > 0, || format!("row {}: 8<theta,chi> = {}", row.id, z.value))?;
                z2z4 += 1;
            }
        }
    }
    let all_equal = |id: u32, theta: LinearCharacter, want: i64| -> Result<usize, String> {
        let gs = assignments(conway_row(id).unwrap());
        ensure(!gs.is_empty(), || format!("row {id}: no assignment"))?;
        for g in &gs {
            let ip = inner_product(g, &theta).map_err(|e| e.to_string())?;
            ensure(ip.scaled == Some(want), || format!("row {id}: {}", ip.value))?;
        }
        Ok(gs.len())
    };
    let n16 = all_equal(10, LinearCharacter::new(4), 16)?;
    let n12 = all_equal(9, LinearCharacter { r: 6, exponent: 5 }, 12)?;
    Ok(format!("8<theta,chi> > 0 on {z2z4} assignments; 16<theta,chi> = 16 on {n16}; 12<theta,chi> = 12 on {n12}"))
}

fn twisted() -> Verdict {
    let types: Vec<SimpleLieType> = SimpleLieType::all_up_to_rank(8);
    let grid: Vec<(SimpleLieType, u32)> = types.iter().flat_map(|&t| (1..=4).map(move |k| (t, k))).collect();
    let counts: Vec<Result<(usize, usize), String>> = grid
        .par_iter()
        .map(|&(t, k)| {
            let a = LevelledAlgebra::new(t, k).unwrap();
            let ws = integrable_weights(a);
            for lambda in &ws {
                let w = twisted_conformal_weight(&[TwistedComponent { algebra: a, lambda: lambda.clone() }]).map_err(|e| e.to_string())?;
                ensure(w.paths_agree(), || format!("{a} {lambda:?}: {w:?}"))?;
            }
            let mut argmin_checks = 0;
            if let Some(target) = scaled_weyl_weight(a) {
                let m = minimize_twisted_weight(&[a]).map_err(|e| e.to_string())?;
                ensure(m.argmin == vec![vec![target.clone()]], || format!("{a}: argmin {:?}", m.argmin))?;
                argmin_checks = 1;
            }
            Ok((ws.len(), argmin_checks))
        })
        .collect();
    let (mut weights, mut argmins) = (0, 0);
    for c in counts {
        let (w, m) = c?;
        weights += w;
        argmins += m;
    }
    let bad: Vec<String> = types.iter().filter(|&&t| !root_pairing_bounds_hold(t)).map(|t| t.to_string()).collect();
    ensure(bad.is_empty(), || format!("root bounds fail for {bad:?}"))?;
    for k in -6..=6 {
        for big_k in -6..=6 {
            for n in -6..=6 {
                ensure(norm_comparison_identity(k, big_k, n), || format!("norm identity at {k} {big_k} {n}"))?;
            }
        }
    }
    Ok(format!(
        "{} (type, level) pairs, {weights} weights: both weight formulas and pairing extremes agree; root bounds on {} types; argmin = k*rho/h on {argmins}",
        grid.len(),
        types.len()
    ))
}

fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> IntMatrix {
    let mut u = identity_int(n);
    for _ in 0..3 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            u.swap(0, i);
            continue;
        }
        let c = Z::from(rng.gen_range(-2i64..=2));
        let row = u[j].clone();
        for (x, y) in u[i].iter_mut().zip(&row) {
            *x += &c * y;
        }
    }
    u
}

fn properties() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1eec);
    let rows = class_table().rows();
    for r in rows {
        ensure(from_cyclotomic(&to_cyclotomic(&r.shape)).as_ref() == Ok(&r.shape), || r.name.to_string())?;
    }
    for _ in 0..500 {
        let r = &rows[rng.gen_range(0..rows.len())];
        let (j, k) = (rng.gen_range(1..=30u64), rng.gen_range(1..=30u64));
        let lhs = power(&power(&r.shape, j).unwrap(), k).unwrap();
        let rhs = power(&r.shape, j * k).unwrap();
        ensure(lhs == rhs, || format!("{}: ({j})({k})", r.name))?;
    }
    for name in ["A2", "D4", "E8"] {
        let l = root_lattice(name.parse().unwrap());
        let bound = q(4);
        let base = theta_counts(&l, &bound).map_err(|e| e.to_string())?;
        for _ in 0..20 {
            let u = random_unimodular(l.rank(), &mut rng);
            let m = l.sublattice(&u);
            ensure(m.determinant() == l.determinant(), || format!("{name}: det changed"))?;
            ensure(theta_counts(&m, &bound).map_err(|e| e.to_string())? == base, || format!("{name}: counts changed"))?;
        }
    }
    let mut corpus: Vec<GramLattice> = SimpleLieType::all_up_to_rank(8).into_iter().filter(|t| t.is_simply_laced()).map(root_lattice).collect();
    for _ in 0..30 {
        let n = rng.gen_range(1..=5);
        let b: IntMatrix = (0..n).map(|_| (0..n).map(|_| Z::from(rng.gen_range(-3i64..=3))).collect()).collect();
        // B Bᵀ is a positive semidefinite integral Gram matrix; keep the nondegenerate ones
        let g: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| (&b[i][k] * &b[j][k]).try_into().unwrap_or(0i64)).sum()).collect())
            .collect();
        if let Ok(l) = GramLattice::from_i64(&g) {
            if !l.determinant().is_zero() {
                corpus.push(l);
            }
        }
    }
    for l in &corpus {
        let (_, disc) = l.dual_and_discriminant().map_err(|e| e.to_string())?;
        ensure(Q::from_integer(disc.order()) == l.determinant().abs(), || format!("order {} vs det {}", disc.order(), format_rational(&l.determinant())))?;
    }
    Ok(format!(
        "{} round trips; 500 power triples; 60 unimodular transforms; discriminant order = |det| on {} lattices",
        rows.len(),
        corpus.len()
    ))
}

fn main() {
    let deep = std::env::args().any(|a| a == "--deep");
    let criteria: Vec<(&str, u64, Box<dyn FnOnce() -> Verdict>)> = vec![
        ("strange formula", 10, Box::new(strange_formula)),
        ("hole constructions", if deep { 1800 } else { 60 }, Box::new(move || hole_constructions(deep))),
        ("rank-4 classification", 10, Box::new(rank_four)),
        ("composite sweep", 120, Box::new(composite_sweep)),
        ("frame shapes", 5, Box::new(frames)),
        ("character sums", 30, Box::new(characters)),
        ("twisted weights", 120, Box::new(twisted)),
        ("properties", 60, Box::new(properties)),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let mut v = f();
        let secs = t.elapsed();
        if v.is_ok() && secs > Duration::from_secs(budget) {
            v = Err(format!("took {:.1}s", secs.as_secs_f64()));
        }
        let (tag, detail) = match &v {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        failed += usize::from(v.is_err());
        println!("{tag} {} {name}: {detail} [{:.1}s of {budget}s, tolerance 0]", i + 1, secs.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
