//! End-to-end checks of the command-line interface: exit codes, the JSON
//! report schema, text round-trips, and determinism under a fixed seed.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biserial"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn classify_json_schema() {
    let out = run(&["--m", "3", "--N", "2", "--format", "json", "classify", "a0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["algebra", "input", "canonical", "locus", "ring", "ext1", "justification"] {
        assert!(v.get(key).is_some(), "missing {key} in {v}");
    }
    assert_eq!(v["ring"], "k[[t]]/(t^2)");
    assert_eq!(v["ext1"], 1);
    assert_eq!(v["canonical"], "a0");
}

#[test]
fn classify_simple_is_k() {
    let out = run(&["--m", "3", "--N", "1", "--format", "json", "classify", "e0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ring"], "k");
    assert_eq!(v["ext1"], 0);
    assert_eq!(v["locus"]["family"], "A_SIMPLE");
}

#[test]
fn classify_power_series_edge() {
    // Even m, the chain edge over an arrow carries k[[t]].
    let out = run(&["--m", "4", "--N", "2", "--format", "json", "classify", "a2 A2 a2 A1- a0"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ring"], "k[[t]]");
}

#[test]
fn validate_echoes_canonical_form() {
    let out = run(&["--m", "6", "--N", "1", "validate", "A5- a4 A3- a2 A1- a0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("valid"), "{text}");
    assert!(text.contains("a0- A1 a2- A3 a4- A5"), "{text}");
}

#[test]
fn invalid_word_fails_with_exit_one() {
    let out = run(&["--m", "3", "--N", "1", "validate", "a1 a0"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("forbidden"), "{err}");
}

#[test]
fn usage_error_exits_two() {
    let out = run(&["--m", "3", "--N", "1", "no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_parameters_rejected() {
    let out = run(&["--m", "2", "--N", "1", "enumerate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn roundtrip_over_enumeration() {
    // format(parse(s)) is canonical and parse(format(C)) is equivalent to C.
    let out = run(&["--m", "4", "--N", "2", "--max-len", "4", "--format", "json", "enumerate"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let strings = v["strings"].as_array().unwrap();
    assert!(!strings.is_empty());
    for s in strings {
        let text = s["string"].as_str().unwrap();
        let back = run(&["--m", "4", "--N", "2", "--format", "json", "validate", text]);
        let vb: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
        assert_eq!(vb["canonical"], *s.get("string").unwrap());
    }
}

#[test]
fn deterministic_output_under_seed() {
    let args = ["--m", "4", "--N", "2", "--seed", "7", "--format", "json", "omega", "a0"];
    let first = stdout(&run(&args));
    let second = stdout(&run(&args));
    assert_eq!(first, second);
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["witness_verified"], true);
}

#[test]
fn gfp_field_and_prime_flags() {
    let out = run(&[
        "--m", "3", "--N", "2", "--field", "gfp", "--prime", "32003", "--format", "json",
        "classify", "a0",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ring"], "k[[t]]/(t^2)");
    assert_eq!(v["algebra"]["field"], "gfp(32003)");
}

#[test]
fn orbit_walk_lists_shifts() {
    let out = run(&["--m", "3", "--N", "2", "--radius", "2", "--format", "json", "orbit", "a0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let orbit = v["orbit"].as_array().unwrap();
    assert_eq!(orbit.len(), 5);
    assert_eq!(orbit[0]["shift"], -2);
    assert_eq!(orbit[2]["string"], "a0");
}

#[test]
fn component_dot_output() {
    let out = run(&["--m", "3", "--N", "1", "--radius", "1", "--format", "dot", "component", "e0"]);
    let text = stdout(&out);
    assert!(text.starts_with("digraph mesh {"), "{text}");
    assert!(text.contains("hook"), "{text}");
    assert!(text.trim_end().ends_with('}'), "{text}");
}

#[test]
fn hom_between_strings() {
    let out = run(&["--m", "3", "--N", "2", "--format", "json", "hom", "a0 A0 a0", "a0 A0 a0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim"], 2);
    assert_eq!(v["oracle_dim"], 2);
}

#[test]
fn census_tubes_json() {
    let out = run(&["--m", "5", "--N", "2", "--format", "json", "census", "tubes"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let tubes = v["tubes"].as_array().unwrap();
    assert_eq!(tubes.len(), 2);
    for t in tubes {
        assert_eq!(t["tau_period"], 5);
        assert_eq!(t["qualifying_rows"], 2);
    }
}

#[test]
fn families_table_lists_builders() {
    let out = run(&["--m", "6", "--N", "2", "--format", "json", "families", "--i", "0", "--level", "1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let fams = v["families"].as_array().unwrap();
    let find = |name: &str| {
        fams.iter()
            .find(|f| f["family"] == name)
            .unwrap_or_else(|| panic!("{name} missing"))
            .clone()
    };
    assert_eq!(find("Z_PRIME")["string"], "A5- a4 A3- a2 A1- a0");
    assert_eq!(find("Z_DOUBLE_PRIME")["string"], "a5 A4- a3 A2- a1 A0-");
    assert_eq!(find("Z_LEVEL(1)")["length"], 8);
    assert_eq!(find("THETA(1)")["length"], 2);
    // Odd m rejects the level builders but still reports the rest.
    let out = run(&["--m", "5", "--N", "2", "--format", "json", "families", "--level", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let zl = v["families"]
        .as_array()
        .unwrap()
        .iter()
        .find(|f| f["family"] == "Z_LEVEL(1)")
        .unwrap()
        .clone();
    assert!(zl.get("error").is_some());
}

#[test]
fn stable_hom_and_ext_values() {
    let out = run(&["--m", "3", "--N", "2", "--format", "json", "stable-hom", "a0", "a0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["stable_hom_dim"], 1);
    let out = run(&["--m", "3", "--N", "2", "--format", "json", "ext", "a0", "a0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ext1_dim"], 1);
}

#[test]
fn component_locates_tube_row() {
    let out = run(&["--m", "3", "--N", "1", "--format", "json", "component", "a0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["locus"]["family"], "TUBE");
    assert_eq!(v["locus"]["orbit_index"], 0);
}

#[test]
fn census_component_json() {
    let out = run(&["--m", "4", "--N", "2", "--format", "json", "census", "a0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["locus"]["family"], "B_ARROW");
    assert_eq!(v["omega_orbits"], 2); // kappa_4
}

#[test]
fn classify_batch_returns_array() {
    let out = run(&["--m", "3", "--N", "2", "--format", "json", "classify", "a0", "e0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 2);
    assert_eq!(items[0]["ring"], "k[[t]]/(t^2)");
    assert_eq!(items[1]["ring"], "k");
}

#[test]
fn verify_quick_scale() {
    let out = run(&["--m", "3", "--N", "1", "--max-len", "4", "--format", "json", "verify"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 9);
}
