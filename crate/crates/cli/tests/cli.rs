use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hopfq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfq")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(0), "{}", stderr(o));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn int(v: &Value) -> i64 {
    match v {
        Value::String(s) => s.parse().unwrap(),
        other => other.as_i64().unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, v: &Value) -> String {
    let p = dir.path().join(name);
    fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn build_taft_matches_its_multiplication_table() {
    let v = json_of(&hopfq(&["build", "taft4"]));
    assert_eq!(v["kind"], "hopf_quasigroup");
    assert_eq!(v["dim"], 4);
    let mu = &v["maps"]["product"];
    // (a, b, product index, sign) over the basis 1, x, y, w.
    let products = [
        (1, 1, 0, 1),
        (1, 2, 3, 1),
        (1, 3, 2, 1),
        (2, 1, 3, -1),
        (3, 1, 2, -1),
        (2, 2, 0, 0),
        (2, 3, 0, 0),
        (3, 2, 0, 0),
        (3, 3, 0, 0),
    ];
    for (a, b, c, s) in products {
        for r in 0..4 {
            let want = if r == c { s } else { 0 };
            assert_eq!(int(&mu[r][a * 4 + b]), want, "{a}·{b}");
        }
    }
}

#[test]
fn build_chein_loop_and_verify_ip_loop() {
    let v = json_of(&hopfq(&["build", "m_s3_2"]));
    assert_eq!(v["kind"], "loop");
    assert_eq!(v["order"], 12);
    let o = hopfq(&["verify", "m_s3_2", "--level", "ip-loop"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn build_dcp_alias_has_dimension_48() {
    let v = json_of(&hopfq(&["build", "paper_dcp"]));
    assert_eq!(v["dim"], 48);
    assert_eq!(v["factors"], serde_json::json!([12, 4]));
    assert_eq!(v["convention"], "row-major-left-major-v1");
}

#[test]
fn verify_exit_codes() {
    let o = hopfq(&["verify", "paper_dcp", "--level", "quasigroup"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = hopfq(&["verify", "taft4", "--level", "antipode-props,bimonoid"]);
    assert_eq!(o.status.code(), Some(0));

    let dir = TempDir::new().unwrap();
    let mut v = json_of(&hopfq(&["build", "taft4"]));
    // λ(w) = −y becomes +y.
    v["maps"]["antipode"][2][3] = "1".into();
    let bad = write(&dir, "bad.json", &v);
    let json = dir.path().join("report.json");
    let o = hopfq(&["verify", &bad, "--level", "quasigroup", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("first failing axiom: [quasigroup/antipode]"), "{out}");
    let report: Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    let failed: Vec<&Value> = report["entries"].as_array().unwrap().iter().filter(|e| e["passed"] == false).collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|e| e["tier"] == "quasigroup/antipode"));
    assert!(failed[0]["witness"].is_object());
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let o = hopfq(&["build", "no_such_object"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown name"));

    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "{ not json").unwrap();
    let o = hopfq(&["verify", garbage.to_str().unwrap(), "--level", "quasigroup"]);
    assert_eq!(o.status.code(), Some(2));

    let mut v = json_of(&hopfq(&["build", "taft4"]));
    v["maps"]["coproduct"].as_array_mut().unwrap().pop();
    let short = write(&dir, "short.json", &v);
    let o = hopfq(&["verify", &short, "--level", "quasigroup"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("shape"));

    let o = hopfq(&["--field", "fp:9", "build", "taft4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn prime_field_build() {
    let v = json_of(&hopfq(&["--field", "fp:7", "build", "taft4"]));
    assert_eq!(v["field"]["p"], 7);
    assert_eq!(v["maps"]["antipode"][2][3], 6);
}

#[test]
fn table_reproduces_the_golden_file() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/golden/chein_taft_dcp_table.txt");
    let o = hopfq(&["table", "paper_dcp", "--basis-labels"]);
    assert_eq!(stdout(&o), fs::read_to_string(golden).unwrap());
    let out = stdout(&o);
    assert!(out.contains("| (−1)^β σᵢu^α•σⱼu^β ⊗ y |"));
    assert!(out.contains("| σᵢu^α•σⱼu^β ⊗ w\n"));
}

#[test]
fn table_of_taft_lists_products() {
    let out = stdout(&hopfq(&["table", "taft4", "--basis-labels"]));
    assert!(out.contains("y · x = −w\n"), "{out}");
    assert!(out.contains("y · y = 0\n"));
    assert!(out.contains("λ(w) = −y\n"));
    let plain = stdout(&hopfq(&["table", "taft4"]));
    assert!(plain.contains("e2 · e1 = −e3\n"));
}

#[test]
fn dual_twice_is_the_original_file() {
    let dir = TempDir::new().unwrap();
    let original = dir.path().join("taft.json");
    let once = dir.path().join("once.json");
    let twice = dir.path().join("twice.json");
    let p = |x: &Path| x.to_str().unwrap().to_string();
    assert!(hopfq(&["build", "taft4", "--out", &p(&original)]).status.success());
    assert!(hopfq(&["dual", &p(&original), "--out", &p(&once)]).status.success());
    assert!(hopfq(&["dual", &p(&once), "--out", &p(&twice)]).status.success());
    assert_eq!(fs::read_to_string(&original).unwrap(), fs::read_to_string(&twice).unwrap());
    let v: Value = serde_json::from_str(&fs::read_to_string(&once).unwrap()).unwrap();
    assert_eq!(v["kind"], "hopf_coquasigroup");
}

fn split_factorization(dir: &TempDir) -> [String; 3] {
    let o = hopfq(&["split", "chein_taft_factorization", "--dir", dir.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    ["x.json", "i_a.json", "i_h.json"].map(|n| dir.path().join(n).to_str().unwrap().to_string())
}

#[test]
fn factorize_recovers_the_actions() {
    let dir = TempDir::new().unwrap();
    let [x, i_a, i_h] = split_factorization(&dir);
    let json = dir.path().join("report.json");
    let o = hopfq(&["factorize", &x, &i_a, &i_h, "--json", json.to_str().unwrap()]);
    let mp = json_of(&o);
    assert_eq!(mp["kind"], "matched_pair");
    let (phi_a, phi_h) = (&mp["phi_a"], &mp["phi_h"]);
    // Columns are z ⊗ σᵢu^α with index z·12 + a.
    for z in 0..4 {
        for a in 0..12 {
            let col = z * 12 + a;
            let sign = if a < 6 { 1 } else { -1 };
            for r in 0..12 {
                let want = if r == a && z < 2 { 1 } else { 0 };
                assert_eq!(int(&phi_a[r][col]), want);
            }
            for r in 0..4 {
                let want = match z {
                    0 | 1 if r == z => 1,
                    2 | 3 if r == z => sign,
                    _ => 0,
                };
                assert_eq!(int(&phi_h[r][col]), want);
            }
        }
    }
    let report: Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    assert!(report["entries"].as_array().unwrap().iter().all(|e| e["passed"] == true));
}

#[test]
fn factorize_with_broken_inclusion_names_the_failed_axiom() {
    let dir = TempDir::new().unwrap();
    let [x, i_a, i_h] = split_factorization(&dir);
    // Precompose i_H with the Taft antipode: y ↦ w, w ↦ −y.
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&i_h).unwrap()).unwrap();
    let map = &mut v["map"];
    map[2][2] = "0".into();
    map[3][2] = "1".into();
    map[3][3] = "0".into();
    map[2][3] = "-1".into();
    let broken = write(&dir, "broken.json", &v);
    let o = hopfq(&["factorize", &x, &i_a, &broken]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("i_H is not a morphism: multiplicative"), "{err}");
    assert!(err.contains("halted at stage inclusions"));
    assert!(o.stdout.is_empty());
}

#[test]
fn list_includes_the_aliases() {
    let out = stdout(&hopfq(&["list"]));
    for name in ["s3", "z_n", "m_s3_2", "loop_algebra:<loop>", "taft4", "paper_matched_pair", "paper_dcp", "paper_dcp_dual"] {
        assert!(out.lines().any(|l| l == name), "{name}");
    }
}
