use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_calogero"))
        .args(args)
        .env_remove("CALOGERO_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn rat(v: &Value) -> (i64, i64) {
    let s = v.as_str().unwrap();
    match s.split_once('/') {
        Some((a, b)) => (a.parse().unwrap(), b.parse().unwrap()),
        None => (s.parse().unwrap(), 1),
    }
}

#[test]
fn angular_spectrum_rows() {
    let v = json(&["spectrum", "--variant", "angular", "--n", "3", "--g", "1", "--max-level", "3"]);
    let levels = v["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 4);
    for l in levels {
        let q = 3 + l["m"].as_i64().unwrap();
        assert_eq!(rat(&l["q"]), (q, 1));
        let (num, den) = rat(&l["energy"]);
        assert_eq!(2 * num, den * q * (q + 1));
    }
    assert_eq!(levels[3]["degeneracy"], 2);
    assert!(v.get("omega").is_none());
}

#[test]
fn ground_row_only() {
    let v = json(&["spectrum", "--n", "4", "--g", "1/2", "--max-level", "0"]);
    let levels = v["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 1);
    assert_eq!(levels[0]["degeneracy"], 1);
}

#[test]
fn relative_angular_free_three_body() {
    let v = json(&["spectrum", "--variant", "relative-angular", "--n", "3", "--g", "0", "--max-level", "9"]);
    for l in v["levels"].as_array().unwrap() {
        for k in l["states"].as_array().unwrap() {
            let k3 = k[2].as_i64().unwrap();
            let (num, den) = rat(&l["energy"]);
            assert_eq!(2 * num, 9 * k3 * k3 * den);
        }
    }
}

#[test]
fn full_spectrum_shows_omega() {
    let v = json(&["spectrum", "--variant", "full", "--n", "2", "--g", "0", "--omega", "2", "--max-level", "1"]);
    assert_eq!(v["omega"], "2");
    // E = ω(n/2 + m)
    assert_eq!(v["levels"][0]["energy"], "2");
    assert_eq!(v["levels"][1]["energy"], "4");
}

#[test]
fn coxeter_spectrum() {
    let v = json(&["spectrum", "--root-system", "I2(5)", "--g", "1", "--max-level", "5"]);
    let ms: Vec<i64> = v["levels"].as_array().unwrap().iter().map(|l| l["m"].as_i64().unwrap()).collect();
    assert_eq!(ms, vec![0, 5]);
    assert_eq!(v["root_system"], "I2(5)");
}

#[test]
fn second_level_harmonic() {
    let v = json(&["eigenfunction", "--n", "3", "--g", "1", "--k", "2,0,0"]);
    assert_eq!(v["verified"], true);
    // r² − 3(Σx)², normalized
    assert_eq!(v["polynomial"], "1*x1^2 + 3*x1*x2 + 3*x1*x3 + 1*x2^2 + 3*x2*x3 + 1*x3^2");
    assert_eq!(v["q"], "5");
}

#[test]
fn ground_harmonic_is_one() {
    let v = json(&["eigenfunction", "--n", "4", "--g", "1/2", "--k", "0,0,0,0"]);
    assert_eq!(v["polynomial"], "1");
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["eigenfunction", "--n", "3", "--g", "1", "--k", "0,1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--g", "x/y"]).status.code(), Some(2));
    assert_eq!(run(&["eigenfunction", "--n", "3", "--g", "1/2", "--k", "1,0,0", "--variant", "full"]).status.code(), Some(2));
    assert_eq!(run(&["spin", "--m", "5", "--max-level", "4"]).status.code(), Some(2));
}

#[test]
fn verify_subset_and_determinism() {
    let args = ["verify", "--checks", "intertwining", "--n", "3", "--g", "2", "--format", "json"];
    let a = run(&args);
    assert!(a.status.success());
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["summary"][0]["check"], "intertwining");
    assert!(v["cells"][0].get("elapsed_ms").is_none());
}

#[test]
fn verify_timings_are_opt_in() {
    let v = json(&["verify", "--checks", "newton-two", "--n", "2,3", "--timings"]);
    assert!(v["elapsed_ms"].is_number());
    assert!(v["cells"][0]["elapsed_ms"].is_number());
}

#[test]
fn verify_degeneracy_table() {
    let out = run(&["verify", "--checks", "degeneracy", "--n", "5", "--m", "8", "--g", "1/2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("rank 8 = p_5(8) - p_5(6) = 8"));
}

#[test]
fn spin_levels() {
    let v = json(&["spin", "--n", "4", "--s", "3", "--m", "0"]);
    assert_eq!(v["levels"][0]["content"], "1*[4]");
    let v = json(&["spin", "--n", "4", "--s", "3", "--m", "1"]);
    assert_eq!(v["levels"][0]["content"], "1*[4] + 1*[3,1]");
    let v = json(&["spin", "--n", "3", "--s", "2", "--m", "2"]);
    let l = &v["levels"][0];
    let total: i64 = l["irreps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["multiplicity"].as_i64().unwrap() * t["dimension"].as_i64().unwrap())
        .sum();
    assert_eq!(l["dimension"].as_i64(), Some(total));
    assert_eq!(l["content"], "1*[3] + 2*[1]");
}

#[test]
fn roots_summary() {
    let v = json(&["roots", "--root-system", "B2", "--g", "1,2"]);
    assert_eq!(v["degrees"], serde_json::json!([2, 4]));
    assert_eq!(v["roots"].as_array().unwrap().len(), 4);
}

fn cache_files(dir: &Path) -> Vec<std::path::PathBuf> {
    std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).filter(|p| p.extension().is_some_and(|e| e == "json")).collect()
}

#[test]
fn cache_round_trip_and_reverification() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["eigenfunction", "--n", "3", "--g", "1", "--k", "0,0,1", "--format", "json", "--cache", d];
    let first = run(&args);
    assert!(first.status.success());
    let files = cache_files(dir.path());
    assert_eq!(files.len(), 1);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);

    // A tampered entry is caught and replaced.
    let body = std::fs::read_to_string(&files[0]).unwrap();
    let mut entry: Value = serde_json::from_str(&body).unwrap();
    entry["payload"]["harmonic"] = Value::String("1*x1^3".into());
    std::fs::write(&files[0], entry.to_string()).unwrap();
    let third = run(&args);
    assert_eq!(first.stdout, third.stdout);
    assert!(String::from_utf8_lossy(&third.stderr).contains("failed verification"));

    // Trusted entries are echoed without the check.
    std::fs::write(&files[0], entry.to_string()).unwrap();
    let mut trusted = args.to_vec();
    trusted.push("--trust-cache");
    let fourth = run(&trusted);
    let v: Value = serde_json::from_slice(&fourth.stdout).unwrap();
    assert_eq!(v["polynomial"], "1*x1^3");
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_calogero"))
        .args(["eigenfunction", "--n", "2", "--g", "1/2", "--k", "1,0"])
        .env("CALOGERO_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(cache_files(dir.path()).len(), 1);
}
