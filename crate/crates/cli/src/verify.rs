//! `verify-all`: the printed tables recomputed and compared against literals.

use leech_core::arith::format_rational;
use leech_core::characters::{assignments, conway_row, inner_product, z2z4_formula, LinearCharacter, CONWAY_ROWS};
use leech_core::classify::{case_inequality_report, enumerate_candidates, EnumerationOptions};
use leech_core::frames::{class_table, classify_shape, eig_mult, power, trace, FrameShape};
use leech_core::niemeier::all_reports;
use serde_json::{json, Value};

struct Checks(Vec<Value>);

impl Checks {
    fn push(&mut self, name: &str, expected: impl ToString, got: impl ToString) {
        let (e, g) = (expected.to_string(), got.to_string());
        self.0.push(json!({ "check": name, "expected": e, "got": g, "pass": e == g }));
    }
}

fn class_power(name: &str, k: u64) -> String {
    let f = &class_table().get(name).expect("table class").shape;
    let p = power(f, k).expect("table powers are integral");
    classify_shape(&p).map(|c| c.join("|")).unwrap_or_else(|e| e.to_string())
}

fn shape(name: &str) -> FrameShape {
    class_table().get(name).expect("table class").shape.clone()
}

fn frames(c: &mut Checks) {
    c.push("frames: table rows", 71, class_table().rows().len());
    c.push("frames: (-4A)^2", "-2A", class_power("-4A", 2));
    c.push("frames: (-6D)^2", "3C", class_power("-6D", 2));
    let p = power(&shape("-12E"), 6).expect("integral");
    c.push("frames: trace (-12E)^6", -8, trace(&p));
    c.push("frames: eig_mult(-12E, 6)", 0, eig_mult(&shape("-12E"), 6));
    c.push("frames: eig_mult(6C, 3)", 1, eig_mult(&shape("6C"), 3));
}

fn holes(c: &mut Checks) {
    match all_reports() {
        Ok(reports) => {
            c.push("holes: count", 23, reports.len());
            for r in &reports {
                let h = r.h as i64;
                c.push(&format!("holes: {} certified", r.name), true, r.leech_certified);
                c.push(&format!("holes: {} weyl norm", r.name), 2 * h * (h + 1), format_rational(&r.weyl_norm));
                c.push(&format!("holes: {} roots", r.name), 24 * h, r.root_count);
            }
        }
        Err(e) => c.push("holes: construction", "ok", e),
    }
}

fn classify(c: &mut Checks) {
    let mut four: Vec<String> = enumerate_candidates(4, EnumerationOptions::default())
        .iter()
        .map(|t| format!("{}:{}", t.types.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("+"), format_rational(&t.alpha_norm)))
        .collect();
    four.sort();
    c.push("classify: rank 4", "B4:6 C4:6 D4:14 F4:26/7 G2+G2:14", four.join(" "));
    let mut sweep = Vec::new();
    for r in [4, 6, 8, 10, 12, 16] {
        sweep.extend(enumerate_candidates(r, EnumerationOptions::all()));
    }
    let mut names: Vec<String> = sweep.iter().filter_map(|t| t.candidate()).map(|c| c.to_string()).collect();
    names.sort();
    c.push("classify: composite sweep", "A7,1+D9,2 B5,1+E7,2+F4,1 B8,1+E8,2 C8,1+F4,1^2", names.join(" "));
    for t in &sweep {
        let Some(cand) = t.candidate() else { continue };
        let verdict = case_inequality_report(&cand).map(|r| r.contradiction.to_string()).unwrap_or_else(|e| e.to_string());
        c.push(&format!("classify: contradiction for {cand}"), true, verdict);
    }
}

fn characters(c: &mut Checks) {
    let mut ok = true;
    for row in CONWAY_ROWS {
        for g in assignments(row) {
            if (g.tau_order, g.sigma_order) == (4, 2) {
                let z = z2z4_formula(&g).expect("shape checked");
                ok &= z.sigma_class == "-2A" || z.positive;
            }
        }
    }
    c.push("characters: Z2xZ4 sums positive when sigma != -2A", true, ok);
    let sums = |id: u32, r: u64, exponent: u64| -> String {
        let row = conway_row(id).expect("row exists");
        let mut v: Vec<String> = assignments(row)
            .iter()
            .map(|g| inner_product(g, &LinearCharacter { r, exponent }).map(|ip| format!("{:?}", ip.scaled)).unwrap_or_else(|e| e.to_string()))
            .collect();
        v.dedup();
        v.join(",")
    };
    c.push("characters: Z4xZ4, R=4", "Some(16)", sums(10, 4, 1));
    c.push("characters: Z2xZ6, R=6", "Some(12)", sums(9, 6, 5));
}

pub fn verify_all() -> (bool, Value) {
    let mut c = Checks(Vec::new());
    frames(&mut c);
    classify(&mut c);
    characters(&mut c);
    holes(&mut c);
    let failed = c.0.iter().filter(|v| v["pass"] != json!(true)).count();
    (failed == 0, json!({ "checks": c.0, "failed": failed, "total": c.0.len() }))
}
