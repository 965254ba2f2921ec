use std::process::{Command, Output};

fn uas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uas"))
        .args(args)
        .env_remove("UAS_CACHE_DIR")
        .env_remove("UAS_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = uas(&all);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn truncation_dimensions() {
    let v = json(&["truncation", "--n", "5"]);
    assert_eq!(v["gamma"], 44);
    let dims: Vec<u64> = v["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![119, 119, 109, 89, 44]);
    assert_eq!(uas(&["truncation", "--n", "7"]).status.code(), Some(1));
}

#[test]
fn ideal_commands() {
    let v = json(&["ideal-dim", "--ideal", "T(3)+U(5)", "--window", "5"]);
    assert_eq!(v["quotient_gamma"], serde_json::json!([1, 0, 1, 0, 1]));
    let v = json(&["gen-degree", "--ideal", "U(3)"]);
    assert_eq!(v["gen_degree"]["degree"], 4);
    let v = json(&["character", "--ideal", "U(3)", "--n", "3", "--window", "3"]);
    assert_eq!(v["character"], serde_json::json!({"2,1": 1}));
}

#[test]
fn sequence_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.txt");
    std::fs::write(
        &path,
        "# the unique pair\n3: V[2,1]\n4: V[2^2]+V[2,1^2]+V[3,1]\n",
    )
    .unwrap();
    let spec = format!("GT2(4; {})", path.display());
    let v = json(&["ideal-dim", "--ideal", &spec, "--window", "5"]);
    assert_eq!(v["quotient_gamma"], serde_json::json!([1, 0, 1, 0, 1]));
}

#[test]
fn errors_exit_with_one() {
    let o = uas(&["ideal-dim", "--ideal", "U(4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 4"));
    assert_eq!(uas(&["verify", "nonsense"]).status.code(), Some(1));
    assert_eq!(
        uas(&["classify", "--gkdim", "4", "--pairs"]).status.code(),
        Some(1)
    );
}

#[test]
fn classification_and_catalogue() {
    let v = json(&["classify", "--gkdim", "3"]);
    assert_eq!(v["ideals"].as_array().unwrap().len(), 1);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grade4.csv");
    let o = uas(&[
        "codim-series",
        "--grade",
        "4",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().any(|r| &r[0] == "1 0 1 0 1" && &r[1] == "1/24"));
}

#[test]
fn pi_evaluation() {
    let v = json(&["pi", "--algebra", "builtin:grassmann:3", "--n", "3"]);
    assert_eq!(v["codim"], 4);
    assert_eq!(v["status"], "exact");
    let v = json(&[
        "pi",
        "--algebra",
        "builtin:field",
        "--n",
        "3",
        "--ideal",
        "elem:(1,2) - (2,1)",
    ]);
    assert_eq!(v["equal"], true);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("alg.json");
    std::fs::write(
        &path,
        r#"{"dim":2,"unit":[1,0],"mult":[[0,0,0,1],[0,1,1,1],[1,0,1,1]]}"#,
    )
    .unwrap();
    let v = json(&["pi", "--algebra", path.to_str().unwrap(), "--n", "3"]);
    assert_eq!(v["codim"], 1);
}

#[test]
fn verify_reports_are_deterministic() {
    let a = uas(&["verify", "generators"]);
    let b = uas(&["verify", "generators", "--threads", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let v = json(&["verify", "characters"]);
    assert_eq!(v["pass"], true);
    assert!(v.get("seconds").is_none());
    let schema = json(&["verify", "--schema"]);
    assert_eq!(schema["title"], "VerifyReport");
    let ids = json(&["verify", "--list"]);
    assert_eq!(ids.as_array().unwrap().len(), 9);
}

#[test]
fn config_files_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("uas.toml");
    std::fs::write(&path, "window = 3\n").unwrap();
    let cfg = path.to_str().unwrap();
    assert_eq!(
        uas(&["--config", cfg, "truncation", "--n", "4"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        uas(&["--config", cfg, "--window", "4", "truncation", "--n", "4"])
            .status
            .code(),
        Some(0)
    );
    std::fs::write(&path, "windw = 3\n").unwrap();
    assert_eq!(
        uas(&["--config", cfg, "truncation", "--n", "2"])
            .status
            .code(),
        Some(1)
    );
}
