//! End-to-end tests of the `hopflift` binary: build → verify →
//! compare → render → export pipelines, the exit-code contract, and
//! byte determinism of every artifact.

use std::process::{Command, Output};

use tempfile::TempDir;

fn hopflift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopflift"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path_str(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

#[test]
fn build_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let out = path_str(&dir, "cell24.json");
    let built = hopflift(&["build", "cell24", "hopf", &out]);
    assert!(built.status.success(), "{built:?}");
    assert!(String::from_utf8_lossy(&built.stdout).contains("wrote 24 points"));

    let verified = hopflift(&["verify", &out]);
    assert!(verified.status.success(), "{verified:?}");
    let stdout = String::from_utf8_lossy(&verified.stdout);
    assert!(stdout.contains("nearest neighbors per point: 8"), "{stdout}");

    // determinism: building again produces identical bytes
    let out2 = path_str(&dir, "cell24_again.json");
    assert!(hopflift(&["build", "cell24", "hopf", &out2]).status.success());
    assert_eq!(
        std::fs::read(&out).unwrap(),
        std::fs::read(&out2).unwrap(),
        "canonical JSON must be byte-stable"
    );
}

#[test]
fn tampered_file_fails_verification_with_witness() {
    let dir = TempDir::new().unwrap();
    let out = path_str(&dir, "cell24.json");
    assert!(hopflift(&["build", "cell24", "hopf", &out]).status.success());

    // negate one coordinate of one point (and keep approx consistent
    // so the file still parses); the result collides with another
    // vertex, which verification must catch
    let mut file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let point = &mut file["points"][0];
    let coord = point["coords"][0].as_str().unwrap().to_owned();
    let negated = if let Some(rest) = coord.strip_prefix('-') {
        rest.to_owned()
    } else {
        format!("-{coord}")
    };
    point["coords"][0] = negated.into();
    let approx = point["approx"][0].as_f64().unwrap();
    point["approx"][0] = (-approx).into();
    std::fs::write(&out, serde_json::to_string_pretty(&file).unwrap()).unwrap();

    let verified = hopflift(&["verify", &out]);
    assert_eq!(verified.status.code(), Some(1), "{verified:?}");
    let stdout = String::from_utf8_lossy(&verified.stdout);
    assert!(stdout.contains("\"status\": \"fail\""), "{stdout}");
    assert!(stdout.contains("duplicate point"), "{stdout}");
}

#[test]
fn compare_matches_and_mismatches() {
    let dir = TempDir::new().unwrap();
    let hopf = path_str(&dir, "e8_hopf.json");
    let canon = path_str(&dir, "e8_canon.json");
    let cell24 = path_str(&dir, "cell24.json");
    assert!(hopflift(&["build", "e8", "hopf", &hopf]).status.success());
    assert!(hopflift(&["build", "e8", "canonical", &canon]).status.success());
    assert!(hopflift(&["build", "cell24", "hopf", &cell24]).status.success());

    let same = hopflift(&["compare", &hopf, &canon]);
    assert!(same.status.success(), "{same:?}");

    let diff = hopflift(&["compare", &cell24, &hopf]);
    assert_eq!(diff.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&diff.stdout).contains("point_count"));
}

#[test]
fn render_structure_and_determinism() {
    let dir = TempDir::new().unwrap();
    let json = path_str(&dir, "cell24.json");
    let svg_a = path_str(&dir, "a.svg");
    let svg_b = path_str(&dir, "b.svg");
    assert!(hopflift(&["build", "cell24", "hopf", &json]).status.success());
    assert!(hopflift(&["render", &json, &svg_a, "--frames", "15"]).status.success());
    assert!(hopflift(&["render", &json, &svg_b, "--frames", "15"]).status.success());
    let a = std::fs::read_to_string(&svg_a).unwrap();
    let b = std::fs::read_to_string(&svg_b).unwrap();
    assert_eq!(a, b, "SVG output must be byte-deterministic");
    assert_eq!(a.matches("<g id=\"frame-").count(), 15);
    assert_eq!(a.matches("<circle").count(), 15 * 24);

    // per-frame mode writes one document per frame
    let multi = path_str(&dir, "multi.svg");
    assert!(hopflift(&["render", &json, &multi, "--frames", "3", "--per-frame"])
        .status
        .success());
    for i in 0..3 {
        let frame = dir.path().join(format!("multi_frame_{i:03}.svg"));
        assert!(frame.exists(), "missing {frame:?}");
    }
}

#[test]
fn export_csv_round_trips_floats() {
    let dir = TempDir::new().unwrap();
    let json = path_str(&dir, "cell24.json");
    let csv = path_str(&dir, "cell24.csv");
    assert!(hopflift(&["build", "cell24", "hopf", &json]).status.success());
    assert!(hopflift(&["export", &json, &csv]).status.success());

    let content = std::fs::read_to_string(&csv).unwrap();
    let mut lines = content.lines();
    assert_eq!(lines.next().unwrap(), "x0,x1,x2,x3,fiber");
    let file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    for (row, record) in lines.zip(file["points"].as_array().unwrap()) {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells.len(), 5);
        for (cell, approx) in cells[..4].iter().zip(record["approx"].as_array().unwrap()) {
            let parsed: f64 = cell.parse().unwrap();
            assert!((parsed - approx.as_f64().unwrap()).abs() < 1e-15);
        }
    }
}

#[test]
fn experiment_reports_and_exit_codes() {
    let run = hopflift(&["experiment-e5", "--fiber-size", "4"]);
    assert!(run.status.success(), "{run:?}");
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(stdout.contains("points: 160"), "{stdout}");
    assert!(stdout.contains("max off-diagonal dot:"), "{stdout}");

    let bad = hopflift(&["experiment-e5", "--fiber-size", "3"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    let bad_target = hopflift(&["build", "leech", "hopf", "/tmp/x.json"]);
    assert_eq!(bad_target.status.code(), Some(2));
    let bad_method = hopflift(&["build", "e8", "float", "/tmp/x.json"]);
    assert_eq!(bad_method.status.code(), Some(2));
    let missing = hopflift(&["verify", "/nonexistent/file.json"]);
    assert_eq!(missing.status.code(), Some(2));
    let garbage_dir = TempDir::new().unwrap();
    let garbage = garbage_dir.path().join("garbage.json");
    std::fs::write(&garbage, "{not json").unwrap();
    let parsed = hopflift(&["verify", garbage.to_str().unwrap()]);
    assert_eq!(parsed.status.code(), Some(2));
}
