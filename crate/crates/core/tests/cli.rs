use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn lefcon(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_lefcon")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn report(file: &str, args: &[&str]) -> (i32, Value) {
    let ws = fixture(file);
    let mut all = args.to_vec();
    all.extend(["--workspace", ws.as_str(), "--format", "json"]);
    let run = lefcon(&all);
    assert!(run.stderr.is_empty(), "{}", run.stderr);
    (run.code, serde_json::from_str(&run.stdout).unwrap())
}

#[test]
fn euler_on_sphere() {
    let (code, r) = report("sphere.lef", &["euler", "sphere"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["value"], 2);
    assert_eq!(r["outcome"], "computed");
}

#[test]
fn betti_numbers() {
    let (_, r) = report("torus.lef", &["betti", "torus7"]);
    assert_eq!(r["result"]["betti"], serde_json::json!([1, 2, 1]));
    let (_, r) = report("torus.lef", &["betti", "torus9"]);
    assert_eq!(r["result"]["betti"], serde_json::json!([1, 2, 1]));
}

#[test]
fn robot_arm_controllability() {
    let (code, r) = report(
        "robot_arm2.lef",
        &["controllability", "arm", "--from", "pt", "--max-steps", "2"],
    );
    assert_eq!(code, 0);
    let chain = &r["result"]["chain"];
    assert_eq!(chain["steps"], 2);
    assert_eq!(chain["degrees"], serde_json::json!([0, 1, 2]));
    assert_eq!(chain["start_class"]["degree"], 0);
    assert!(chain["inputs"].as_array().unwrap().iter().all(|v| v["degree"] == 1));
    assert_eq!(r["result"]["composed_map"]["onto"], true);
    let (code, r) = report(
        "robot_arm2.lef",
        &["controllability", "arm", "--from", "pt", "--max-steps", "1"],
    );
    assert_eq!(code, 1);
    assert_eq!(r["result"]["chain"], Value::Null);
}

#[test]
fn constant_sphere_equilibrium() {
    let (code, r) = report("sphere.lef", &["equilibrium", "constant", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["entries"][0]["value"]["coords"], serde_json::json!(["2/1"]));
    assert_eq!(r["result"]["oracle"]["status"], "confirmed");
    assert!(r["result"]["oracle"]["witness"]["simplex"].is_array());
    let (code, _) = report("torus.lef", &["equilibrium", "constant", "--oracle"]);
    assert_eq!(code, 1);
}

#[test]
fn doubling_system_commands() {
    let (code, r) = report("circles.lef", &["equilibrium", "doubling", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(
        r["result"]["entries"][0]["value"]["coords"],
        serde_json::json!(["-1/1"])
    );
    let (code, r) = report("circles.lef", &["sphere-check", "doubling"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["slice_degrees"], serde_json::json!(["2/1"]));
    let (code, _) = report("circles.lef", &["sphere-check", "constant"]);
    assert_eq!(code, 1);
}

#[test]
fn lefschetz_numbers() {
    let (code, r) = report(
        "circles.lef",
        &[
            "lefschetz-number",
            "hex_cover",
            "--refinement",
            "hex_collapse",
            "--oracle",
        ],
    );
    assert_eq!(code, 0);
    assert_eq!(r["result"]["value"], "-1/1");
    let (code, r) = report("circles.lef", &["lefschetz-number", "tri_rot", "--oracle"]);
    assert_eq!(code, 1);
    assert_eq!(r["result"]["value"], "0/1");
    assert_eq!(r["result"]["oracle"]["status"], "refuted");
    let (_, r) = report("sphere.lef", &["lefschetz-number", "sphere_id"]);
    assert_eq!(r["result"]["value"], "2/1");
    let (code, r) = report(
        "circles.lef",
        &["lefschetz-number", "hex_collapse", "--with", "hex_cover"],
    );
    assert_eq!(code, 0);
    assert_eq!(r["result"]["value"], "-1/1");
}

#[test]
fn coincidence_and_class() {
    let (code, r) = report("circles.lef", &["coincidence", "hex_collapse", "hex_cover", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["coincidence_number"], "-1/1");
    assert_eq!(r["result"]["oracle"]["status"], "confirmed");
    let (code, r) = report("sphere.lef", &["lefschetz-class", "sphere_id", "sphere_id"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["shift"], 0);
    assert_eq!(r["result"]["value"]["coords"], serde_json::json!(["2/1"]));
    let (code, r) = report(
        "sphere.lef",
        &["lefschetz-class", "sphere_id", "sphere_id", "--class", "0:1"],
    );
    assert_eq!(code, 1);
    assert_eq!(r["result"]["value"], Value::Null);
}

#[test]
fn degree_surjectivity_orient() {
    let (_, r) = report("circles.lef", &["degree", "hex_cover"]);
    assert_eq!(r["result"]["degree"], "2/1");
    let (code, r) = report("circles.lef", &["surjectivity", "hex_cover", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["oracle"]["status"], "confirmed");
    let (code, _) = report("circles.lef", &["surjectivity", "tri_const", "--oracle"]);
    assert_eq!(code, 1);
    let (code, r) = report("mobius.lef", &["orient", "mobius"]);
    assert_eq!(code, 1);
    assert_eq!(r["result"]["orientable"], false);
    let (code, r) = report("cylinder.lef", &["orient", "cylinder"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["duality_bijective"], true);
}

#[test]
fn removability_and_reachability() {
    let (code, r) = report(
        "sphere.lef",
        &["removability", "--F-homology", "1,0,0,0,1", "--n", "5", "--m", "4"],
    );
    assert_eq!(code, 1);
    assert_eq!(r["result"]["clauses"], serde_json::json!([]));
    let (code, r) = report(
        "circles.lef",
        &[
            "removability",
            "--F-homology",
            "1,0",
            "--n",
            "1",
            "--m",
            "0",
            "--local",
            "tri_const",
        ],
    );
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["result"]["local_matrix"], serde_json::json!([["0/1"]]));
    assert_eq!(r["result"]["clauses"], serde_json::json!(["a2"]));
    let (code, r) = report(
        "circles.lef",
        &[
            "removability",
            "--F-homology",
            "1,0",
            "--n",
            "1",
            "--m",
            "0",
            "--local",
            "tri_id",
        ],
    );
    assert_eq!(code, 1);
    assert_eq!(r["result"]["local_zero"], false);
    let (_, r) = report("robot_arm1.lef", &["reachability", "arm", "--steps", "1"]);
    assert_eq!(r["result"]["complete"], true);
    let (_, r) = report("circles.lef", &["reachability", "half_turn", "--steps", "3"]);
    assert_eq!(r["result"]["relation"]["0"], serde_json::json!(["0", "3"]));
}

#[test]
fn input_errors_exit_two() {
    let run = lefcon(&["euler", "nowhere", "--workspace", &fixture("sphere.lef")]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("nowhere"));
    let run = lefcon(&["euler", "sphere"]);
    assert_eq!(run.code, 2);
    let run = lefcon(&["frobnicate", "--workspace", &fixture("sphere.lef")]);
    assert_eq!(run.code, 2);
    let dir = std::env::temp_dir().join(format!("lefcon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.lef");
    std::fs::write(&bad, "complex x\n  vertices a\n  facet a b\nend\n").unwrap();
    let run = lefcon(&["euler", "x", "--workspace", bad.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("line 3, column 11"), "{}", run.stderr);
}

#[test]
fn reports_are_deterministic_and_canonical() {
    let ws = fixture("circles.lef");
    let args = [
        "coincidence",
        "hex_collapse",
        "hex_cover",
        "--oracle",
        "--workspace",
        ws.as_str(),
    ];
    let first = lefcon(&args);
    let second = lefcon(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(first.stdout.contains("\n\ncoincidence: certified\n"));
    let json_part = first.stdout.split("\n\n").next().unwrap();
    let value: Value = serde_json::from_str(json_part).unwrap();
    fn check(v: &Value) {
        match v {
            Value::String(s) if s.contains('/') && s.chars().next().is_some_and(|c| c == '-' || c.is_ascii_digit()) => {
                let q = lefcon::algebra::parse_rational(s).unwrap();
                assert_eq!(&lefcon::algebra::format_rational(&q), s);
            }
            Value::Array(a) => a.iter().for_each(check),
            Value::Object(o) => o.values().for_each(check),
            _ => {}
        }
    }
    check(&value);
}
