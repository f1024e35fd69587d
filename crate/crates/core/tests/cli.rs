use qspin::qarith::{canonicalize, qfact, qint};
use std::path::PathBuf;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["qspin"];
    full.extend_from_slice(args);
    let code = qspin::cli::run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn minus_theta_222() -> String {
    canonicalize(&-(&qint(4) * &qfact(3))).unwrap().to_string()
}

#[test]
fn eval_unknot() {
    let (code, out, _) = run(&["eval", &data("unknot.json")]);
    assert_eq!(code, 0);
    assert_eq!(out, "q^2 + 1 + q^-2\n");
}

#[test]
fn eval_theta_renormalized_and_raw() {
    let (code, out, _) = run(&["eval", &data("theta222.json"), "--renormalize"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), minus_theta_222());
    let (code, out, _) = run(&["eval", &data("theta222.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("NotIntegral:"), "{out}");
    assert!(out.contains(" / "), "{out}");
}

#[test]
fn eval_both_engines() {
    for f in ["unknot.json", "theta222.json", "crossed_tet.json"] {
        let (code, out, _) = run(&["eval", &data(f), "--renormalize", "--engine", "both"]);
        assert_eq!(code, 0, "{f}");
        assert!(out.ends_with("EQUAL\n"), "{out}");
        let (code, out, _) = run(&["eval", &data(f), "--engine", "both"]);
        assert_eq!(code, 0, "{f}");
        assert!(out.ends_with("EQUAL\n"), "{out}");
    }
}

#[test]
fn eval_shadow_file() {
    let (code, out, _) = run(&["eval", &data("theta222_shadow.json")]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), minus_theta_222());
    let (code, _, err) = run(&["eval", &data("theta222_shadow.json"), "--engine", "both"]);
    assert_eq!(code, 2);
    assert!(err.contains("shadow"));
}

#[test]
fn eval_json_mirrors_text() {
    let (_, text, _) = run(&["eval", &data("unknot.json")]);
    let (code, out, _) = run(&["eval", &data("unknot.json"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"]["text"].as_str().unwrap(), text.trim());
    assert_eq!(v["value"]["phase_m"], 0);
    assert_eq!(v["value"]["quarter_shift_n"], 0);
    assert_eq!(v["engine"], "sliced");
}

#[test]
fn parse_error_names_position() {
    let dir = std::env::temp_dir().join(format!("qspin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\n  \"slices\": [\n    [{\"kind\": \"cupp\", \"colors\": [1]}]\n  ]\n}\n").unwrap();
    let (code, _, err) = run(&["eval", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("bad.json") && err.contains("line 3"), "{err}");
    let missing = dir.join("missing.json");
    let (code, _, _) = run(&["eval", missing.to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn symbols() {
    let (code, out, _) = run(&["symbol", "theta", "2", "2", "2"]);
    assert_eq!((code, out.trim().to_string()), (0, minus_theta_222()));
    let tet = &(&qint(5) * &qfact(4)) - &(&qint(4) * &qfact(3));
    let (_, out, _) = run(&["symbol", "tet", "2", "2", "2", "2", "2", "2"]);
    assert_eq!(out.trim(), canonicalize(&tet).unwrap().to_string());
    let (code, out, _) = run(&["symbol", "theta", "1", "1", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0\nADMISSIBILITY: triple (1/2, 1/2, 1/2) is not admissible\n");
    let (code, out, _) = run(&["symbol", "unknot", "2"]);
    assert_eq!((code, out.as_str()), (0, "q^2 + 1 + q^-2\n"));
    let (code, _, _) = run(&["symbol", "tetx", "2", "2", "2", "2", "2", "2", "-1"]);
    assert_eq!(code, 0);
}

#[test]
fn symbol_arity_and_sign_checked() {
    assert_eq!(run(&["symbol", "theta", "1", "1"]).0, 2);
    assert_eq!(run(&["symbol", "tetx", "2", "2", "2", "2", "2", "2", "0"]).0, 2);
    assert_eq!(run(&["symbol", "unknot", "-2"]).0, 2);
}

#[test]
fn check_suites() {
    let (code, out, _) = run(&["check", "integrality", "--max", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("integrality (max 2): PASS"), "{out}");
    assert!(out.contains("theta(2,2,2)") && out.contains("m=0, n=0"));
    let (code, out, _) = run(&["check", "engine-equivalence", "--max", "2"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&["check", "r-vs-6j", "--max", "2"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&["check", "racah", "--max", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["name"], "racah");
}

#[test]
fn check_rejects_unknown_suite() {
    let (code, _, err) = run(&["check", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("nope"));
}

#[test]
fn output_is_stable() {
    let a = run(&["check", "divisibility", "--max", "2"]);
    let b = run(&["check", "divisibility", "--max", "2"]);
    assert_eq!(a, b);
}

#[test]
fn convert_writes_shadow() {
    let (code, out, _) = run(&["convert", &data("theta222.json")]);
    assert_eq!(code, 0);
    let p = qspin::shadow::ShadowPresentation::from_json(&out, "stdout").unwrap();
    let shipped = qspin::shadow::ShadowPresentation::load(std::path::Path::new(&data("theta222_shadow.json"))).unwrap();
    assert_eq!(p, shipped);
    let dir = std::env::temp_dir().join(format!("qspin-convert-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("ct.json");
    let (code, out, _) = run(&["convert", &data("crossed_tet.json"), "-o", target.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    let (code, out, _) = run(&["eval", target.to_str().unwrap()]);
    let (_, direct, _) = run(&["eval", &data("crossed_tet.json"), "--renormalize"]);
    assert_eq!(code, 0);
    assert_eq!(out, direct);
    assert_eq!(run(&["convert", &data("theta222_shadow.json")]).0, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("doubled"));
}
