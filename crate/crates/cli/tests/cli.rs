use serde_json::Value;
use std::process::{Command, Output};

fn leech(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leech")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = leech(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn hole_a1_24_certifies() {
    let v = json(&["hole", "--niemeier", "A1^24"]);
    assert_eq!(v["outputs"]["leech_certified"], true);
    assert_eq!(v["outputs"]["weyl_norm"], "12");
    assert_eq!(v["command"][0], "hole");
}

#[test]
fn classify_rank_4_gives_five() {
    let v = json(&["classify", "--rank", "4"]);
    assert_eq!(v["outputs"]["count"], 5);
    let norms: Vec<&str> = v["outputs"]["candidates"].as_array().unwrap().iter().map(|c| c["alpha_norm"].as_str().unwrap()).collect();
    let mut sorted = norms.clone();
    sorted.sort();
    assert_eq!(sorted, ["14", "14", "26/7", "6", "6"]);
    let none = json(&["classify", "--rank", "4", "--composite"]);
    assert_eq!(none["outputs"]["count"], 0);
}

#[test]
fn frames_power_example() {
    let v = json(&["frames", "power", "--shape", "1^8 4^8 / 2^8", "--k", "2"]);
    assert_eq!(v["outputs"]["power"], "2^16 / 1^8");
    assert_eq!(v["outputs"]["result"]["classes"][0], "-2A");
    let by_name = json(&["frames", "eigmult", "--shape", "-12E", "--r", "6"]);
    assert_eq!(by_name["outputs"]["multiplicity"], 0);
}

#[test]
fn json_reparses_byte_identically() {
    let out = leech(&["classify", "--candidate", "E8,2+B8,1"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(again.as_bytes(), out.stdout.as_slice());
    assert_eq!(v["outputs"]["weight_bound"], "1");
}

#[test]
fn tsv_is_flat() {
    let out = leech(&["--format", "tsv", "twisted", "weight", "--component", "A1,2:1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.split('\t').count() == 2), "{text}");
    assert!(text.contains("outputs.paths_agree\ttrue"));
}

#[test]
fn exit_codes() {
    assert_eq!(leech(&["nonsense"]).status.code(), Some(64));
    assert_eq!(leech(&["classify", "--rank", "4", "--bogus"]).status.code(), Some(64));
    assert_eq!(leech(&["frames", "power"]).status.code(), Some(64));
    let bad = leech(&["frames", "fixdim", "--shape", "1^7"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty() && bad.stdout.is_empty());
    assert_eq!(leech(&["hole", "--niemeier", "A2^11"]).status.code(), Some(2));
    assert_eq!(leech(&["lattice", "--leech", "--bound", "4"]).status.code(), Some(2));
    assert_eq!(leech(&["--help"]).status.code(), Some(0));
}

#[test]
fn characters_z4_z4() {
    let v = json(&["characters", "--row", "10", "--r", "4"]);
    for a in v["outputs"]["assignments"].as_array().unwrap() {
        assert_eq!(a["scaled"], 16);
    }
    let v = json(&["characters", "--row", "9", "--r", "6", "--exponent", "5"]);
    assert!(v["outputs"]["assignments"].as_array().unwrap().iter().all(|a| a["scaled"] == 12));
}

#[test]
fn lattice_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("leech-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("e8.json");
    let p = path.to_str().unwrap();
    let a = json(&["lattice", "--root", "E8", "--write", p]);
    let b = json(&["lattice", "--file", p]);
    for key in ["rank", "determinant", "even", "unimodular", "theta"] {
        assert_eq!(a["outputs"][key], b["outputs"][key], "{key}");
    }
    assert_eq!(b["outputs"]["theta"]["counts"]["2"], 240);
    let d4 = json(&["lattice", "--root", "D4"]);
    assert_eq!(d4["outputs"]["discriminant"]["order"], "4");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn lie_strange_formula() {
    let v = json(&["lie", "--type", "E8", "--level", "2", "--highest", "0,0,0,0,0,0,0,1"]);
    assert_eq!(v["outputs"]["strange_formula_holds"], true);
    assert_eq!(v["outputs"]["rho_norm"], "620");
    assert_eq!(v["outputs"]["integrable_weights"]["count"], 3);
    assert_eq!(v["outputs"]["module"]["dim"], "248");
}

#[test]
fn verify_all_passes() {
    let v = json(&["verify-all"]);
    assert_eq!(v["outputs"]["failed"], 0);
    assert_eq!(v["outputs"]["total"], 85);
}
