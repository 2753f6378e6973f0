use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn walk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walk")).args(args).output().expect("spawn walk")
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests").join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn negative_steps_is_a_config_error() {
    let out = walk(&["run", "--steps", "-1"]);
    assert_eq!(code(&out), 2, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn bad_flags_exit_2() {
    for args in [
        &["run", "--steps", "3", "--lattice", "hexagonal"][..],
        &["run", "--steps", "3", "--theta", "w=0.1"],
        &["run", "--steps", "3", "--initial", "sideways"],
        &["run", "--steps", "3", "--origin-type", "p"],
        &["run", "--steps", "3", "--lattice", "kagome", "--origin-type", "r"],
        &["run", "--steps", "3", "--lattice", "square", "--ordering", "ZY"],
        &["run", "--steps", "3", "--lattice", "kagome", "--ordering", "ZYX"],
        &["run", "--steps", "3", "--lattice", "grover-square", "--theta", "0.1"],
        &["verify", "--check", "no-such-check"],
    ] {
        assert_eq!(code(&walk(args)), 2, "{args:?}");
    }
}

#[test]
fn stdout_csv_has_header_and_sorted_rows() {
    let out = walk(&["run", "--lattice", "square", "--steps", "1", "--initial", "plus-i"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "x,z,p");
    let sites: Vec<(&str, f64)> = rows[1..]
        .iter()
        .map(|r| {
            let (site, p) = r.rsplit_once(',').unwrap();
            (site, p.parse().unwrap())
        })
        .collect();
    assert_eq!(sites.iter().map(|s| s.0).collect::<Vec<_>>(), ["-1,-1", "-1,1", "1,-1", "1,1"]);
    assert!(sites.iter().all(|s| (s.1 - 0.25).abs() < 1e-15));
    let line = walk(&["run", "--lattice", "line", "--steps", "0"]);
    assert_eq!(String::from_utf8(line.stdout).unwrap(), "z,p\n0,1\n");
    let cubic = walk(&["run", "--lattice", "cubic", "--steps", "0"]);
    assert!(String::from_utf8(cubic.stdout).unwrap().starts_with("x,y,z,p\n"));
}

#[test]
fn csv_run_writes_manifest_with_checksum() {
    let dir = scratch("manifest");
    let out = dir.join("d.csv");
    let status =
        walk(&["run", "--lattice", "triangular", "--steps", "4", "--theta", "y=pi/4", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&status), 0, "{}", String::from_utf8_lossy(&status.stderr));
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("d.csv.manifest.json")).unwrap()).unwrap();
    let body = std::fs::read(&out).unwrap();
    let digest = manifest["outputs"][0]["sha256"].as_str().unwrap();
    assert_eq!(digest, manifest["distribution_sha256"].as_str().unwrap());
    assert_eq!(digest.len(), 64);
    assert_eq!(manifest["config"]["lattice"], "triangular");
    assert_eq!(manifest["config"]["steps"], 4);
    assert_eq!(manifest["config"]["thetas"]["y"], std::f64::consts::FRAC_PI_4);
    assert_eq!(manifest["config"]["ordering"], "ZYX");
    assert_eq!(manifest["config"]["initial"], "down");
    assert!(!body.is_empty());
}

#[test]
fn json_format_carries_manifest_inline() {
    let out = walk(&["run", "--lattice", "kagome", "--origin-type", "q", "--steps", "2", "--format", "json"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc = stdout_json(&out);
    assert_eq!(doc["manifest"]["config"]["origin_type"], "q");
    assert_eq!(doc["manifest"]["config"]["ordering"], "ZXY");
    assert_eq!(doc["columns"], serde_json::json!(["x", "y", "z", "p"]));
    let total: f64 = doc["rows"].as_array().unwrap().iter().map(|r| r[3].as_f64().unwrap()).sum();
    assert!((total - 1.0).abs() < 1e-12);
}

#[test]
fn oracle_check_runs_for_coinless_square_and_grover() {
    for args in [
        &["run", "--lattice", "square", "--steps", "6", "--initial", "plus-i", "--oracle-check", "--format", "json"][..],
        &["run", "--lattice", "grover-square", "--steps", "6", "--oracle-check", "--format", "json"],
    ] {
        let out = walk(args);
        assert_eq!(code(&out), 0, "{args:?}");
        let oracle = &stdout_json(&out)["manifest"]["oracle"];
        assert_eq!(oracle["passed"], true, "{args:?}");
    }
}

#[test]
fn compare_reports_distance() {
    let dir = scratch("compare");
    let a = dir.join("a.csv");
    let b = dir.join("b.csv");
    let c = dir.join("c.csv");
    let run = |path: &Path, extra: &[&str]| {
        let mut args = vec!["run", "--steps", "5", "--out", path.to_str().unwrap()];
        args.extend_from_slice(extra);
        assert_eq!(code(&walk(&args)), 0);
    };
    run(&a, &["--lattice", "square", "--initial", "plus-i"]);
    run(&b, &["--lattice", "grover-square"]);
    run(&c, &["--lattice", "square", "--theta", "0.4"]);
    let same = walk(&["compare", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(code(&same), 0);
    assert_eq!(stdout_json(&same)["match"], true);
    let differ = walk(&["compare", a.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!(code(&differ), 1);
    let missing = walk(&["compare", a.to_str().unwrap(), dir.join("nope.csv").to_str().unwrap()]);
    assert_eq!(code(&missing), 1);
}

#[test]
fn zero_degenerate_tolerance_still_skips_exact_degeneracies() {
    let out = walk(&["verify", "--check", "commutator-report", "--degenerate-tolerance", "0"]);
    assert_eq!(code(&out), 0);
    let report = stdout_json(&out);
    let skipped = report["checks"][0]["details"]["reports"][0]["skipped_degenerate"].as_u64().unwrap();
    assert!(skipped > 0);
}

#[test]
fn verify_groups_select_checks() {
    let out = walk(&["verify", "--hamiltonian-check"]);
    assert_eq!(code(&out), 0);
    let names: Vec<String> = stdout_json(&out)["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(names, ["hamiltonian", "eigenvalues", "commutator-report"]);
}
