use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn sbk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbk")).args(args).output().expect("runs")
}

fn sbk_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sbk"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawns");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

#[test]
fn present_pure_punctured_lists_five_generators() {
    let out = sbk(&["present", "--family", "pure-punctured", "--n", "2", "--g", "1", "--p", "1"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    let gens: Vec<&str> = doc["generators"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(gens, ["A[1,3]", "A[2,3]", "A[1,4]", "A[2,4]", "A[3,4]"]);
}

#[test]
fn present_surface_group_has_one_relator() {
    let out = sbk(&["present", "--family", "braid-closed", "--n", "1", "--g", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["relators"].as_array().unwrap().len(), 1);
}

#[test]
fn invalid_parameters_exit_two_naming_the_constraint() {
    let out = sbk(&["present", "--family", "braid-closed-nonorientable", "--n", "2", "--g", "1"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("g >= 2"));
    assert_eq!(json(&out)["status"], "failed");
}

#[test]
fn unknown_flags_are_usage_errors() {
    assert_eq!(code(&sbk(&["present", "--family", "braid-closed", "--bogus"])), 2);
    assert_eq!(code(&sbk(&["present", "--family", "no-such-family", "--n", "2"])), 2);
    assert_eq!(code(&sbk(&["present", "--family", "braid-closed"])), 2);
}

#[test]
fn verify_symmetric_and_chi() {
    let out = sbk(&["verify", "--family", "braid-punctured", "--n", "3", "--g", "2", "--p", "2", "--target", "symmetric"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["overall"], true);
    let out = sbk(&["verify", "--family", "pure-closed", "--n", "3", "--g", "2", "--target", "chi"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["overall"], true);
}

#[test]
fn verify_rejects_inapplicable_targets() {
    let out = sbk(&["verify", "--family", "braid-punctured", "--n", "2", "--g", "1", "--target", "chi"]);
    assert_eq!(code(&out), 2);
    let out = sbk(&["verify", "--family", "braid-closed-nonorientable", "--n", "2", "--g", "2", "--target", "abelian-expected"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_names_a_corrupted_relator_from_stdin() {
    let doc = sbk(&["present", "--family", "braid-punctured", "--n", "2", "--g", "1", "--p", "1"]);
    let mut doc = json(&doc);
    let label = doc["relators"][0]["label"].as_str().unwrap().to_string();
    let word = doc["relators"][0]["word"].as_str().unwrap().to_string();
    doc["relators"][0]["word"] = Value::String(format!("{word} s1"));
    let out = sbk_stdin(&["verify", "--target", "symmetric"], &doc.to_string());
    assert_eq!(code(&out), 1);
    let report = json(&out);
    assert_eq!(report["overall"], false);
    let bad: Vec<&str> = report["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["trivial"] == false)
        .map(|r| r["label"].as_str().unwrap())
        .collect();
    assert_eq!(bad, [label.as_str()]);
    assert!(String::from_utf8_lossy(&out.stderr).contains(&label));
}

#[test]
fn verify_all_passes_the_grid() {
    let out = sbk(&["verify", "--all"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["overall"], true);
    assert!(v["checked"].as_u64().unwrap() > 200);
}

#[test]
fn abelianize_examples() {
    let out = sbk(&["abelianize", "--family", "braid-closed", "--n", "3", "--g", "1"]);
    assert_eq!(json(&out), serde_json::json!({ "rank": 2, "torsion": [2] }));
    let out = sbk(&["abelianize", "--family", "braid-closed", "--n", "3", "--g", "2", "--kill-sigma"]);
    assert_eq!(json(&out), serde_json::json!({ "rank": 4, "torsion": [] }));
}

#[test]
fn enumerate_b0_has_index_n() {
    let out = sbk(&["enumerate", "--family", "braid-punctured", "--n", "2", "--g", "1", "--p", "1", "--subgroup", "b0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["index"], 2);
}

#[test]
fn enumerate_csv_and_overflow() {
    let out = sbk(&["enumerate", "--family", "braid-punctured-sphere", "--n", "3", "--subgroup", "pure", "--csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("coset,generator,image"));
    // Six cosets, two σ's, each with its inverse.
    assert_eq!(text.lines().count(), 1 + 6 * 4);

    let out = Command::new(env!("CARGO_BIN_EXE_sbk"))
        .args(["enumerate", "--family", "braid-punctured-sphere", "--n", "3", "--subgroup", "pure"])
        .env("SBK_MAX_COSETS", "3")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["status"], "unknown");
}

#[test]
fn subgroup_output_pipes_into_abelianize() {
    let out = sbk(&["subgroup", "--family", "braid-punctured", "--n", "2", "--g", "1", "--p", "1", "--subgroup", "pure"]);
    assert_eq!(code(&out), 0);
    let doc = String::from_utf8(out.stdout).unwrap();
    let ab = sbk_stdin(&["abelianize"], &doc);
    assert_eq!(json(&ab), serde_json::json!({ "rank": 4, "torsion": [] }));
}

#[test]
fn prove_then_replay_through_a_file() {
    let out = sbk(&["prove", "--entry", "RC1-a, r=1, n=2, g=1, p=1"]);
    assert_eq!(code(&out), 0);
    let cert = json(&out);
    assert_eq!(cert["end"], "");
    assert!(!cert["moves"].as_array().unwrap().is_empty());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let out = sbk(&["replay", "--certificate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["replay"], true);

    let mut cut = cert.clone();
    cut["moves"].as_array_mut().unwrap().remove(0);
    let out = sbk_stdin(&["replay"], &cut.to_string());
    assert_ne!(code(&out), 0);

    let mut bad = cert;
    bad["moves"][0]["label"] = Value::String("(R99)".into());
    let out = sbk_stdin(&["replay"], &bad.to_string());
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("(R99)"));
}

#[test]
fn prove_verdicts_map_to_exit_codes() {
    let base = ["prove", "--family", "braid-punctured", "--n", "2", "--g", "1", "--p", "1"];
    let out = sbk(&[&base[..], &["--lhs", "a1 s1", "--rhs", "a1 s1"]].concat());
    assert_eq!(code(&out), 0);
    let out = sbk(&[&base[..], &["--lhs", "a1", "--rhs", "b1"]].concat());
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["verdict"], "refuted");
    let out = sbk(&[&base[..], &["--lhs", "a1^-1 s1^2 a1", "--rhs", "s1^-1 a1 s1^2 a1^-1 s1", "--max-nodes", "2"]].concat());
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["verdict"], "unknown");
}

#[test]
fn prove_corpus_meets_its_expectations() {
    let out = sbk(&["prove", "--corpus"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    for e in v["entries"].as_array().unwrap() {
        if e["expect"] == "certificate" {
            assert_eq!(e["replays"], true, "{}", e["name"]);
        }
    }
}

#[test]
fn expand_words_and_generators() {
    let out = sbk(&["expand", "--family", "pure-punctured", "--n", "2", "--g", "1", "--p", "1", "--word", "A[1,4]"]);
    assert_eq!(json(&out)["braid"], "s1 b1^-1 s1^-1");
    let out = sbk(&["expand", "--family", "pure-punctured", "--n", "2", "--g", "1", "--p", "1"]);
    let rows = json(&out)["generators"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[1]["braid"], "a1^-1");
    assert_eq!(rows[4]["braid"], "s1^2");
    let out = sbk(&["expand", "--family", "braid-punctured", "--n", "2", "--g", "1"]);
    assert_eq!(code(&out), 2);
}
