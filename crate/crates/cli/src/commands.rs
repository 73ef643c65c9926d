use crate::output::{object, value};
use crate::{CharactersArgs, ClassifyArgs, FramesCmd, LatticeArgs, LieArgs, ShapeArg, TwistedCmd};
use leech_core::arith::{format_rational, parse_rational, Q};
use leech_core::characters::{assignments, conway_row, inner_product, z2z4_formula, LinearCharacter};
use leech_core::classify::{
    case_inequality_report, check_hypotheses, enumerate_candidates, prop_noone_search, w_report, Candidate, EnumerationOptions, Hypotheses,
};
use leech_core::frames::{class_table, classify_shape, eig_mult, fixed_dim, order, power, to_cyclotomic, trace, FrameShape};
use leech_core::lattice::{read_lattice, root_lattice, theta_counts, write_lattice, GramLattice};
use leech_core::lie::{integrable_weights, weight_system, LevelledAlgebra, SimpleLieType, WeightSpace};
use leech_core::niemeier::{all_reports, build_niemeier, hole_construction, leech_lattice, niemeier_report, NiemeierName};
use leech_core::twisted::{
    candidate_weight_bound, grading_shift, minimize_twisted_weight, twisted_conformal_weight, TwistParams, TwistedComponent,
};
use serde_json::{json, Value};

/// `(inputs, outputs)` or a domain error.
pub type Outcome = Result<(Value, Value), String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn q(x: &Q) -> Value {
    Value::String(format_rational(x))
}

fn parse_labels(s: &str) -> Result<Vec<i64>, String> {
    s.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad Dynkin label {x:?} in {s:?}"))).collect()
}

pub fn lie(a: &LieArgs) -> Outcome {
    let t: SimpleLieType = a.r#type.parse().map_err(err)?;
    let info = t.info();
    let ws = WeightSpace::new(t);
    let rho = ws.rho();
    let rho_norm = ws.inner(&rho, &rho);
    let strange = Q::from_integer((info.dual_coxeter * info.dim).into()) / Q::from_integer(12.into());
    let mut out = object([
        ("info", value(&info)),
        ("weyl_group_order", Value::String(t.weyl_group_order().to_string())),
        ("positive_roots", json!(ws.positive_roots().len())),
        ("rho", json!(rho)),
        ("rho_norm", q(&rho_norm)),
        ("strange_formula_rhs", q(&strange)),
        ("strange_formula_holds", json!(rho_norm == strange)),
    ]);
    if let Some(k) = a.level {
        let la = LevelledAlgebra::new(t, k).ok_or("level must be positive")?;
        let ws = integrable_weights(la);
        out["integrable_weights"] = json!({ "level": k, "count": ws.len(), "weights": ws });
    }
    if let Some(h) = &a.highest {
        let lambda = parse_labels(h)?;
        let sys = weight_system(t, &lambda).map_err(err)?;
        let dominant: Vec<Value> = sys.dominant_weights().iter().map(|(w, m)| json!({ "weight": w, "multiplicity": m })).collect();
        out["module"] = json!({
            "highest_weight": lambda,
            "dim": sys.dim().to_string(),
            "distinct_weights": sys.num_distinct().to_string(),
            "dominant_weights": dominant,
        });
    }
    Ok((json!({ "type": t.to_string(), "level": a.level, "highest": a.highest }), out))
}

fn load_lattice(a: &LatticeArgs) -> Result<(GramLattice, String), String> {
    if let Some(path) = &a.file {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok((read_lattice(&text).map_err(err)?, format!("file {}", path.display())));
    }
    if let Some(t) = &a.root {
        let mut l: Option<GramLattice> = None;
        for part in t.split('+') {
            let ty: SimpleLieType = part.parse().map_err(err)?;
            let r = root_lattice(ty);
            l = Some(match l {
                None => r,
                Some(x) => x.direct_sum(&r),
            });
        }
        return Ok((l.ok_or("empty root system")?, format!("root {t}")));
    }
    if let Some(n) = &a.niemeier {
        let name: NiemeierName = n.parse().map_err(err)?;
        return Ok((build_niemeier(&name).map_err(err)?, format!("niemeier {name}")));
    }
    if let Some(n) = &a.hole {
        let name: NiemeierName = n.parse().map_err(err)?;
        return Ok((hole_construction(&name).map_err(err)?, format!("hole {name}")));
    }
    if a.leech {
        return Ok((leech_lattice(), "leech".into()));
    }
    Err("no lattice source given".into())
}

pub fn lattice(a: &LatticeArgs, deep: bool) -> Outcome {
    let (l, source) = load_lattice(a)?;
    let bound = parse_rational(&a.bound).map_err(err)?;
    if bound > Q::from_integer(2.into()) && l.rank() >= 16 && !deep {
        return Err(format!("bound {} on a rank-{} lattice needs --deep", a.bound, l.rank()));
    }
    let (p, n) = l.signature();
    let mut out = object([
        ("rank", json!(l.rank())),
        ("determinant", q(&l.determinant())),
        ("integral", json!(l.is_integral())),
        ("even", json!(l.is_even())),
        ("unimodular", json!(l.is_unimodular())),
        ("signature", json!([p, n])),
    ]);
    if l.is_integral() {
        let (_, disc) = l.dual_and_discriminant().map_err(err)?;
        out["discriminant"] = json!({
            "invariants": disc.invariants.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "order": disc.order().to_string(),
        });
    }
    if l.is_positive_definite() {
        let counts = theta_counts(&l, &bound).map_err(err)?;
        let counts: serde_json::Map<String, Value> = counts.iter().map(|(k, v)| (format_rational(k), json!(v))).collect();
        out["theta"] = json!({ "bound": format_rational(&bound), "counts": counts });
    }
    if let Some(path) = &a.write {
        std::fs::write(path, write_lattice(&l)).map_err(|e| format!("{}: {e}", path.display()))?;
        out["written"] = json!(path.display().to_string());
    }
    Ok((json!({ "source": source, "bound": a.bound }), out))
}

pub fn niemeier(name: Option<&str>) -> Outcome {
    match name {
        Some(n) => {
            let name: NiemeierName = n.parse().map_err(err)?;
            Ok((json!({ "name": name.to_string() }), value(&niemeier_report(&name).map_err(err)?)))
        }
        None => Ok((json!({ "name": "all" }), value(&all_reports().map_err(err)?))),
    }
}

pub fn hole(n: &str, deep: bool) -> Outcome {
    let name: NiemeierName = n.parse().map_err(err)?;
    let mut out = value(&niemeier_report(&name).map_err(err)?);
    if deep {
        let l = hole_construction(&name).map_err(err)?;
        let four = Q::from_integer(4.into());
        let counts = theta_counts(&l, &four).map_err(err)?;
        out["norm4_count"] = json!(counts.get(&four).copied().unwrap_or(0));
    }
    Ok((json!({ "niemeier": name.to_string(), "deep": deep }), out))
}

pub fn classify(a: &ClassifyArgs) -> Outcome {
    if !a.rank.is_empty() {
        let opts = EnumerationOptions { integral_levels: a.integral_levels, composite: a.composite };
        let mut found = Vec::new();
        for &r in &a.rank {
            found.extend(enumerate_candidates(r, opts));
        }
        let names: Vec<String> = found.iter().map(|t| t.to_string()).collect();
        let inputs = json!({ "rank": a.rank, "composite": a.composite, "integral_levels": a.integral_levels });
        return Ok((inputs, json!({ "count": found.len(), "names": names, "candidates": found })));
    }
    if let Some(c) = &a.candidate {
        let c: Candidate = c.parse().map_err(err)?;
        let w = w_report(&c).map_err(err)?;
        let hyp = Hypotheses { r: a.r, r_prime: a.r_prime };
        let mut out = value(&w);
        out["hypothesis_failures"] = json!(check_hypotheses(&w, &hyp));
        if w.admissible {
            out["weight_bound"] = q(&candidate_weight_bound(&c));
        }
        return Ok((json!({ "candidate": c.to_string(), "r": a.r, "r_prime": a.r_prime }), out));
    }
    if let Some(c) = &a.cases {
        let c: Candidate = c.parse().map_err(err)?;
        let rep = case_inequality_report(&c).map_err(err)?;
        return Ok((json!({ "cases": c.to_string() }), value(&rep)));
    }
    Ok((json!({ "noone": true }), value(&prop_noone_search())))
}

fn shape(s: &ShapeArg) -> Result<FrameShape, String> {
    match s.shape.parse::<FrameShape>() {
        Ok(f) => Ok(f),
        Err(e) => class_table().get(s.shape.trim()).map(|r| r.shape.clone()).map_err(|_| err(e)),
    }
}

fn shape_summary(f: &FrameShape) -> Value {
    json!({
        "shape": f.to_string(),
        "order": order(f),
        "trace": trace(f),
        "fixed_dim": fixed_dim(f),
        "classes": classify_shape(f).unwrap_or_default(),
    })
}

pub fn frames(cmd: &FramesCmd) -> Outcome {
    match cmd {
        FramesCmd::Power { shape: s, k } => {
            let f = shape(s)?;
            let p = power(&f, *k).map_err(err)?;
            Ok((json!({ "shape": f.to_string(), "k": k }), json!({ "power": p.to_string(), "input": shape_summary(&f), "result": shape_summary(&p) })))
        }
        FramesCmd::Fixdim { shape: s } => {
            let f = shape(s)?;
            let cyc: serde_json::Map<String, Value> = to_cyclotomic(&f).multiplicities().iter().map(|(d, m)| (d.to_string(), json!(m))).collect();
            Ok((json!({ "shape": f.to_string() }), json!({ "fixed_dim": fixed_dim(&f), "cyclotomic": cyc })))
        }
        FramesCmd::Eigmult { shape: s, r } => {
            let f = shape(s)?;
            if *r == 0 {
                return Err("eigenvalue order must be positive".into());
            }
            Ok((json!({ "shape": f.to_string(), "r": r }), json!({ "multiplicity": eig_mult(&f, *r) })))
        }
        FramesCmd::Classify { shape: s } => {
            let f = shape(s)?;
            let classes = classify_shape(&f).map_err(err)?;
            Ok((json!({ "shape": f.to_string() }), json!({ "classes": classes, "summary": shape_summary(&f) })))
        }
        FramesCmd::Table => {
            let rows: Vec<Value> = class_table()
                .rows()
                .iter()
                .map(|r| json!({ "name": r.name, "shape": r.shape.to_string(), "fixed_dim": r.fixed_dim, "order": order(&r.shape), "trace": trace(&r.shape) }))
                .collect();
            Ok((json!({}), json!({ "count": rows.len(), "rows": rows })))
        }
    }
}

pub fn characters(a: &CharactersArgs) -> Outcome {
    let row = conway_row(a.row).ok_or_else(|| format!("no subgroup row {}", a.row))?;
    let r = a.r.unwrap_or(row.structure.1 as u64);
    let theta = LinearCharacter { r, exponent: a.exponent };
    let mut results = Vec::new();
    let mut scaled = Vec::new();
    for g in assignments(row) {
        let ip = inner_product(&g, &theta).map_err(err)?;
        let classes: serde_json::Map<String, Value> = g.elements().map(|(i, j)| (format!("t{i}s{j}"), json!(g.class((i, j))))).collect();
        let mut entry = json!({
            "classes": classes,
            "inner_product": ip.value.to_string(),
            "group_order": ip.group_order,
            "scaled": ip.scaled,
        });
        if (g.tau_order, g.sigma_order) == (4, 2) && r == 4 {
            entry["z2z4"] = value(&z2z4_formula(&g).map_err(err)?);
        }
        scaled.push(ip.scaled);
        results.push(entry);
    }
    let multiplicity_ok = scaled.iter().all(|s| s.is_some_and(|v| v >= 0));
    let positive = scaled.iter().all(|s| s.is_some_and(|v| v > 0));
    let out = json!({
        "row": { "id": row.id, "dim": row.dim, "structure": [row.structure.0, row.structure.1], "count": row.count },
        "assignments": results,
        "nonnegative_integer": multiplicity_ok,
        "positive": positive,
    });
    Ok((json!({ "row": a.row, "r": r, "exponent": a.exponent }), out))
}

/// `A2,3` or `A2,3:1,1` (Dynkin labels of `λ`; zero when omitted).
pub fn parse_component(s: &str) -> Result<(LevelledAlgebra, Option<Vec<i64>>), String> {
    let (alg, lambda) = match s.split_once(':') {
        Some((a, l)) => (a, Some(parse_labels(l)?)),
        None => (s, None),
    };
    let (ty, level) = alg.split_once(',').ok_or_else(|| format!("component {s:?} needs a level, as in A2,3"))?;
    let ty: SimpleLieType = ty.parse().map_err(err)?;
    let level: u32 = level.trim().parse().map_err(|_| format!("bad level in {s:?}"))?;
    let la = LevelledAlgebra::new(ty, level).ok_or_else(|| format!("level must be positive in {s:?}"))?;
    Ok((la, lambda))
}

pub fn twisted(cmd: &TwistedCmd) -> Outcome {
    match cmd {
        TwistedCmd::Weight { component } => {
            let mut comps = Vec::new();
            for c in component {
                let (algebra, lambda) = parse_component(c)?;
                let lambda = lambda.unwrap_or_else(|| vec![0; algebra.ty.rank() as usize]);
                comps.push(TwistedComponent { algebra, lambda });
            }
            let w = twisted_conformal_weight(&comps).map_err(err)?;
            let mut out = value(&w);
            out["paths_agree"] = json!(w.paths_agree());
            Ok((json!({ "component": component }), out))
        }
        TwistedCmd::Minimize { component } => {
            let mut algs = Vec::new();
            for c in component {
                let (a, lambda) = parse_component(c)?;
                if lambda.is_some() {
                    return Err(format!("minimize takes components without weights, got {c:?}"));
                }
                algs.push(a);
            }
            Ok((json!({ "component": component }), value(&minimize_twisted_weight(&algs).map_err(err)?)))
        }
        TwistedCmd::Shift { n, k, m, s } => {
            let p = TwistParams::new(*n, parse_rational(k).map_err(err)?, *m, parse_rational(s).map_err(err)?).map_err(err)?;
            let out = json!({
                "alpha0_shift": q(&p.alpha0_shift()),
                "grading_shift": q(&grading_shift(&p)),
                "integral_sector": p.has_integral_sector(),
            });
            Ok((value(&p), out))
        }
        TwistedCmd::Bound { candidate } => {
            let c: Candidate = candidate.parse().map_err(err)?;
            Ok((json!({ "candidate": c.to_string() }), json!({ "weight_bound": q(&candidate_weight_bound(&c)) })))
        }
    }
}
