use std::path::Path;
use std::process::{Command, Output};

use cubmatch_cli::corpus::{fixture_dir, FIXTURE_DIR_ENV};
use serde_json::Value;

fn cubmatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubmatch")).args(args).output().unwrap()
}

fn cubmatch_with_fixtures(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubmatch"))
        .args(args)
        .env(FIXTURE_DIR_ENV, dir)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn complex_of_a_polyomino_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("block.txt");
    std::fs::write(&path, "####\n####\n").unwrap();
    let v = json(&cubmatch(&["complex", path.to_str().unwrap(), "--format", "json", "--betti"]));
    assert_eq!(v["f_vector"], serde_json::json!([5, 5, 1]));
    assert_eq!(v["euler_characteristic"], 1);
    assert_eq!(v["betti"], serde_json::json!([1]));

    let table = stdout(&cubmatch(&["complex", path.to_str().unwrap()]));
    assert!(table.contains("f-vector    (5, 5, 1)"), "{table}");
}

#[test]
fn complex_of_fixtures() {
    let v = json(&cubmatch(&["complex", "--fixture", "nested-squares", "--collapse", "--format", "json"]));
    assert_eq!(v["components"], 2);
    assert_eq!(v["euler_characteristic"], 2);
    assert_eq!(v["collapse"]["verdict"], "not_collapsible");

    let v = json(&cubmatch(&["complex", "--fixture", "prism", "--collapse", "--coords", "--format", "json"]));
    assert_eq!(v["f_vector"], serde_json::json!([4, 3]));
    assert_eq!(v["euler_characteristic"], 1);
    assert_eq!(v["collapse"]["verdict"], "collapsible");
    assert_eq!(v["cube_coordinates"].as_array().unwrap().len(), 4);
}

#[test]
fn invalid_input_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad_json = dir.path().join("bad.json");
    std::fs::write(&bad_json, "{\n  \"vertices\": [\n    {\"id\": 1, \"x\": 0,, }\n").unwrap();
    let out = cubmatch(&["complex", bad_json.to_str().unwrap()]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");

    let bad_poly = dir.path().join("bad.txt");
    std::fs::write(&bad_poly, "##\n#x\n").unwrap();
    let out = cubmatch(&["complex", bad_poly.to_str().unwrap()]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2, column 2"), "{err}");

    assert!(!cubmatch(&["complex", "--fixture", "no-such-thing"]).status.success());
}

#[test]
fn poly_examples() {
    let v = json(&cubmatch(&["poly", "F", "3", "--format", "json"]));
    assert_eq!(v["coefficients"], serde_json::json!([5, 5, 1]));
    assert_eq!(v["agrees"], true);

    let v = json(&cubmatch(&["poly", "A", "2", "1", "--format", "json"]));
    assert_eq!(v["text"], "1 + 2x - x^2 + 2x^3");
    assert_eq!(v["agrees"], true);

    let v = json(&cubmatch(&["poly", "P", "7", "--format", "json"]));
    assert_eq!(v["coefficients"], serde_json::json!([1, 7, 15, 10, 1]));
    assert_eq!(v["agrees"], true);

    let v = json(&cubmatch(&["poly", "P", "3", "--bump", "1", "--format", "json"]));
    assert_eq!(v["text"], "1 + 4x + 2x^2");

    let v = json(&cubmatch(&["poly", "closed", "5", "--format", "json"]));
    assert_eq!(v["coefficients"], serde_json::json!([1, 5, 6, 1]));

    let out = cubmatch(&["poly", "F", "3", "--bump", "5"]);
    assert!(!out.status.success());
}

#[test]
fn fixtures_list_and_dump() {
    let list = stdout(&cubmatch(&["fixtures", "list"]));
    for name in ["twin-squares", "prism", "ladder-8-bump-8", "random-19"] {
        assert!(list.lines().any(|l| l.starts_with(name)), "{name}");
    }
    let dumped = stdout(&cubmatch(&["fixtures", "dump", "prism"]));
    let on_disk = std::fs::read_to_string(fixture_dir().join("gallery/prism.json")).unwrap();
    assert_eq!(dumped, on_disk);
}

#[test]
fn verify_section_with_small_bounds() {
    let out = cubmatch(&["verify", "polynomials", "--max-d", "3", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["failed"], 0);
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    assert!(ids.iter().all(|id| id.starts_with("poly.")));
    assert!(!cubmatch(&["verify", "nonsense"]).status.success());
}

#[test]
fn verify_output_is_byte_stable() {
    let a = cubmatch(&["verify", "topology", "--format", "json", "--seed", "7"]);
    let b = cubmatch(&["verify", "topology", "--format", "json", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

fn copy_dir(from: &Path, to: &Path) {
    std::fs::create_dir_all(to).unwrap();
    for entry in std::fs::read_dir(from).unwrap() {
        let entry = entry.unwrap();
        let target = to.join(entry.file_name());
        if entry.file_type().unwrap().is_dir() {
            copy_dir(&entry.path(), &target);
        } else {
            std::fs::copy(entry.path(), target).unwrap();
        }
    }
}

#[test]
fn corrupted_fixture_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    copy_dir(&fixture_dir(), dir.path());
    let path = dir.path().join("gallery/twin-squares.json");
    let mut spec: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    spec["regions"] = serde_json::json!([]);
    std::fs::write(&path, spec.to_string()).unwrap();

    let out = cubmatch_with_fixtures(dir.path(), &["verify", "complex", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    let ids: Vec<&str> = failed.iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"complex.euler-relation"), "{ids:?}");
    for c in failed {
        assert_eq!(c["witness"]["fixture"], "twin-squares");
        assert_eq!(c["witness"]["graph"]["regions"], serde_json::json!([]));
    }
}
