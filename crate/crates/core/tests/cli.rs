use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_matroid-betti"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn fixture_path(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn betti_on_g1_by_hochster() {
    let v = json(&run(&["betti", "--fixture", "g1", "--algorithm", "hochster"]));
    assert_eq!(v["schema"], "1");
    assert_eq!(v["rank"], 9);
    assert_eq!(v["n"], 14);
    assert_eq!(v["global"], serde_json::json!([393, 1459, 2187, 1652, 628, 96]));
    assert_eq!(v["coarse"]["5"]["14"], 96);
}

#[test]
fn weights_on_g2() {
    let v = json(&run(&["weights", "--fixture", "g2"]));
    assert_eq!(v["d"], serde_json::json!([3, 6, 9, 11, 14]));
}

#[test]
fn invert_recovers_two_triangles() {
    let v = json(&run(&["invert", "--betti", "9,12,4", "--loops", "0"]));
    assert_eq!(v["lengths"], serde_json::json!([3, 3]));
    assert_eq!(v["weights"], serde_json::json!([3, 6]));
}

#[test]
fn invert_with_loops() {
    // a triangle and a loop: (3, 2) with one trailing zero
    let v = json(&run(&["invert", "--betti", "3,2,0", "--loops", "1"]));
    assert_eq!(v["lengths"], serde_json::json!([1, 3]));
}

#[test]
fn fixture_files_match_bundled_fixtures() {
    for name in ["g1", "g2", "g3", "g4"] {
        let bundled = run(&["betti", "--fixture", name]);
        let from_json = run(&["betti", "--input", &fixture_path(&format!("{name}.json"))]);
        let from_edges = run(&["betti", "--input", &fixture_path(&format!("{name}.edges"))]);
        assert_eq!(json(&bundled), json(&from_json), "{name}");
        assert_eq!(json(&bundled), json(&from_edges), "{name}");
    }
}

#[test]
fn stdin_and_inline_inputs() {
    let doc = r#"{"type":"uniform","r":2,"n":4}"#;
    let a = json(&run_stdin(&["betti", "--input", "-"], doc));
    let b = json(&run(&["betti", "--input", doc]));
    assert_eq!(a, b);
    assert_eq!(a["global"], serde_json::json!([6, 8, 3]));
}

#[test]
fn fine_table_keys() {
    let v = json(&run(&["betti", "--input", r#"{"type":"uniform","r":1,"n":2}"#, "--algorithm", "hochster", "--fine"]));
    assert_eq!(v["fine"]["0"]["[0]"], 1);
    assert_eq!(v["fine"]["1"]["[0,1]"], 1);
}

#[test]
fn cactus_profile_and_graph() {
    let v = json(&run(&["cactus", "--profile", "3,4"]));
    assert_eq!(v["betti"]["global"], serde_json::json!([12, 17, 6]));
    assert_eq!(v["weights"], serde_json::json!([3, 7]));
    // two triangles sharing vertex 1, plus a bridge
    let g = r#"{"vertices":6,"edges":[[1,2],[2,3],[3,1],[1,4],[4,5],[5,1],[5,6]]}"#;
    let w = json(&run(&["cactus", "--input", g]));
    assert_eq!(w["profile"], serde_json::json!([3, 3]));
    assert_eq!(w["bridges"].as_array().unwrap().len(), 1);
}

#[test]
fn blocks_of_a_direct_sum() {
    let v = json(&run(&["blocks", "--input", r#"{"type":"multi_uniform","profile":[[1,2],[2,3]]}"#]));
    let blocks = v["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 2);
    assert_eq!(blocks[1]["elements"], serde_json::json!([2, 3, 4]));
}

#[test]
fn dual_d1_on_fixtures() {
    for name in ["g1", "g2"] {
        assert_eq!(json(&run(&["dual-d1", "--fixture", name, "--crosscheck"]))["d1"], 2);
    }
}

#[test]
fn crosscheck_passes_on_every_fixture() {
    for name in ["g1", "g2", "g3", "g4"] {
        for cmd in ["betti", "weights"] {
            let out = run(&[cmd, "--fixture", name, "--crosscheck"]);
            assert_eq!(out.status.code(), Some(0), "{cmd} {name}: {}", String::from_utf8_lossy(&out.stderr));
        }
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["betti", "--fixture", "g4", "--algorithm", "hochster", "--fine"];
    let first = run(&args).stdout;
    for _ in 0..3 {
        assert_eq!(run(&args).stdout, first);
    }
}

#[test]
fn verify_command_passes() {
    let out = run(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("16/16 checks passed"), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn exit_code_input_errors() {
    for args in [
        &["betti", "--input", "/no/such/file.json"][..],
        &["betti", "--input", "{not json"],
        &["betti", "--fixture", "g9"],
        &["betti", "--fixture", "g1", "--field", "4"],
        &["betti"],
        &["frobnicate"],
        &["invert", "--betti", "x,y"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn exit_code_contract_violations() {
    for args in [
        &["betti", "--fixture", "g1", "--algorithm", "cactus"][..],
        &["cactus", "--fixture", "g3"],
        &["invert", "--betti", "10,1,1"],
        &["invert", "--betti", "3,2,0", "--loops", "0"],
        &["betti", "--input", r#"{"type":"bases","n":4,"bases":[[0,1],[2,3]]}"#],
        &["dual-d1", "--input", r#"{"type":"uniform","r":0,"n":3}"#],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn exit_code_mismatch() {
    let out = run(&["betti", "--fixture", "g3", "--expect", "41,92,70,19"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("mismatch"));
    // the computed table is still printed
    assert_eq!(json_unchecked(&out)["global"], serde_json::json!([41, 92, 70, 18]));

    let out = run(&["weights", "--fixture", "g1", "--expect", "3,6,9,11,14"]);
    assert_eq!(out.status.code(), Some(3));
    let ok = run(&["weights", "--fixture", "g2", "--expect", "3,6,9,11,14"]);
    assert_eq!(ok.status.code(), Some(0));
}

fn json_unchecked(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn text_output() {
    let out = run(&["betti", "--input", r#"{"type":"uniform","r":2,"n":3}"#, "--output", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("0 <- S(-2)^3 <- S(-3)^2 <- 0"), "{text}");
}
