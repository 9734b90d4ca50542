use std::process::{Command, Output};

use frobtope_cli::{run, Command as Cmd, Format, RunConfig};
use serde_json::Value;

fn frobtope(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobtope"))
        .args(args)
        .output()
        .unwrap()
}

fn json_of(out: &Output) -> Value {
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn info_dihedral_3() {
    let v = json_of(&frobtope(&["info", "dihedral:3"]));
    assert_eq!(v["dim"], 4);
    assert_eq!(v["vertices"], 6);
    assert_eq!(v["facets"], "9");
    assert_eq!(v["is_regular"], false);
    assert_eq!(v["complement"], serde_json::json!([[1, 2, 3], [1, 3, 2]]));
}

#[test]
fn fvector_pq_7_3_2() {
    let v = json_of(&frobtope(&["fvector", "pq:7,3,2"]));
    let counts = v["fvector"].as_array().unwrap();
    assert_eq!(counts[1], "21");
    assert_eq!(counts[counts.len() - 2], "343");
    assert_eq!(counts.len(), 20);
}

#[test]
fn fvector_methods_agree() {
    let outputs: Vec<Value> = ["formula", "free-sum", "oracle"]
        .iter()
        .map(|m| json_of(&frobtope(&["fvector", "a4", "--method", m])))
        .collect();
    for v in &outputs[1..] {
        assert_eq!(v["fvector"], outputs[0]["fvector"]);
    }
    assert_eq!(
        frobtope(&["fvector", "a4", "--method", "guess"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_dihedral_5_passes() {
    let v = json_of(&frobtope(&["verify", "dihedral:5"]));
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 5);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_over_cap_exits_3() {
    let out = frobtope(&["verify", "pq:7,3,2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn generated_s3() {
    let v = json_of(&frobtope(&["info", "gens:3;2,3,1;2,1,3"]));
    assert_eq!(
        (v["n"].clone(), v["h"].clone(), v["order"].clone()),
        (3.into(), 2.into(), 6.into())
    );
}

#[test]
fn parse_errors_exit_1() {
    for args in [
        &["info", "dihedral:x"][..],
        &["info", "nope:3"],
        &["info", "pq:7,3,3"],
        &["faces", "dihedral:3"],
        &["frobnicate"],
    ] {
        assert_eq!(frobtope(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn json_is_deterministic() {
    for args in [
        &["info", "pq:13,3,3"][..],
        &["facets", "a4"],
        &["faces", "dihedral:5", "--dim", "2"],
        &["gram", "dihedral:3"],
        &["verify", "cyclic:4"],
    ] {
        assert_eq!(frobtope(args).stdout, frobtope(args).stdout, "{args:?}");
    }
}

#[test]
fn regular_groups_give_simplex_binomials() {
    let v = json_of(&frobtope(&["fvector", "cyclic:6"]));
    assert_eq!(
        v["fvector"],
        serde_json::json!(["1", "6", "15", "20", "15", "6", "1"])
    );
}

#[test]
fn facets_truncate_unless_all() {
    let v = json_of(&frobtope(&["facets", "pq:11,5,3"]));
    assert_eq!(v["total"], "161051");
    assert_eq!(v["listed"], 1000);
    assert_eq!(v["truncated"], true);
    let v = json_of(&frobtope(&["facets", "dihedral:7", "--all"]));
    assert_eq!(v["listed"], 49);
    assert_eq!(v["truncated"], false);
    assert_eq!(v["facets"][0]["dim"], 11);
}

#[test]
fn faces_count_and_listing() {
    let v = json_of(&frobtope(&["faces", "dihedral:3", "--dim", "2"]));
    assert_eq!(v["count"], "18");
    assert_eq!(v["faces"].as_array().unwrap().len(), 18);
    let v = json_of(&frobtope(&["faces", "dihedral:3", "--dim", "-1"]));
    assert_eq!(v["faces"], serde_json::json!([[]]));
    assert_eq!(
        frobtope(&["faces", "dihedral:3", "--dim", "9"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn gram_census_report() {
    let v = json_of(&frobtope(&["gram", "a4"]));
    assert_eq!(v["pattern_holds"], true);
    assert_eq!(v["census"]["diagonal"], 12);
    assert_eq!(v["census"]["same_coset"], 36);
    assert_eq!(v["census"]["cross_coset"], 96);
}

#[test]
fn output_file_and_text_format() {
    let dir = std::env::temp_dir().join(format!("frobtope-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("info.txt");
    let out = frobtope(&[
        "info",
        "dihedral:5",
        "--format",
        "text",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("dim 8, 10 vertices, 25 facets"), "{text}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn library_run_reports_verify_status() {
    let mut config = RunConfig::new("dihedral:3", Cmd::Verify);
    config.format = Format::Text;
    let report = run(&config).unwrap();
    assert!(report.success);
    assert_eq!(report.exit_code(), 0);
    let err = run(&RunConfig::new("dihedral:6", Cmd::Info)).unwrap_err();
    assert_eq!(err.exit_code(), 2);
}
