use std::fs;
use std::process::{Command, Output};

fn veldkamp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_veldkamp"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["magic-line", "--pivot", "9"][..],
        &["magic-line", "--pivot", "0"],
        &["magic-line"],
        &["magic-line", "--all", "--dot", "x.dot"],
        &["build-grassmannian", "--n", "10"],
        &["polar", "--what", "doily"],
        &["frobnicate"],
    ] {
        assert_eq!(veldkamp(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unsupported_ground_set_is_a_runtime_error() {
    let o = veldkamp(&["veldkamp", "--n", "5", "--census"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("G2(7)"));
}

#[test]
fn census_tables() {
    let o = veldkamp(&["veldkamp", "--n", "7", "--census"]);
    assert!(o.status.success());
    let out = stdout(&o);
    for row in [
        "α      abcd:efg",
        "three mutually non-collinear points             105",
        "total                                           651",
    ] {
        assert!(out.contains(row), "{row}\n{out}");
    }
}

#[test]
fn grassmannian_exports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("g.json");
    let dot = dir.path().join("g.dot");
    let o = veldkamp(&[
        "build-grassmannian",
        "--n",
        "5",
        "--json",
        json.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("linear (10_3) configuration, the Desargues configuration"));
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["points"].as_array().unwrap().len(), 10);
    assert_eq!(doc["lines"].as_array().unwrap().len(), 10);
    // triangular graph T(5): each pair meets six others
    assert_eq!(fs::read_to_string(dot).unwrap().matches(" -- ").count(), 30);
}

#[test]
fn hyperplane_export_with_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("h.json");
    let o = veldkamp(&["hyperplanes", "--n", "6", "--oracle", "--json", json.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("oracle: 31 hyperplanes, identical"));
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(doc["hyperplanes"].as_array().unwrap().len(), 31);
}

#[test]
fn polar_subcommands() {
    for (what, needle) in [
        ("symplectic", "SRG(63,30,13,15)"),
        ("quadric", "35 points, 105 lines"),
        ("grassmannian", "isomorphic to G2(7)"),
        ("heptad", "7 points, 21 connecting lines"),
    ] {
        let o = veldkamp(&["polar", "--n", "7", "--what", what]);
        assert!(o.status.success(), "{what}");
        assert!(stdout(&o).contains(needle), "{what}");
    }
}

#[test]
fn magic_line_exports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("m.json");
    let dot = dir.path().join("m.dot");
    let o = veldkamp(&[
        "magic-line",
        "--pivot",
        "7",
        "--json",
        json.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    let sectors = doc["magic_lines"][0]["sectors"].as_array().unwrap();
    let sizes: Vec<usize> = sectors.iter().map(|s| s["points"].as_array().unwrap().len()).collect();
    assert_eq!(sizes, [15, 12, 20, 16]);
    let dot = fs::read_to_string(dot).unwrap();
    assert!(dot.contains("\"123456:7\" [sector=cone, color=forestgreen, shape=doublecircle];"));
    assert_eq!(dot.matches("[sector=").count(), 63);

    let all = veldkamp(&["magic-line", "--all"]);
    assert!(all.status.success());
    assert_eq!(stdout(&all).matches("line of the Veldkamp space of W: ok").count(), 7);
}

#[test]
fn verify_all_small_ground_set() {
    let o = veldkamp(&["verify-all", "--n", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("all checks passed\n"));
}
