use std::process::Command;

fn verify(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("run verify");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

#[test]
fn exit_codes() {
    let (code, out) = verify(&[
        "--ring", "ground", "--scalar", "f2", "--n", "4", "--check", "homology",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("computed=F2^6 predicted=F2^6"));
    let (code, _) = verify(&[
        "--ring", "ground", "--scalar", "f2", "--n", "5", "--check", "homology", "--budget", "10",
    ]);
    assert_eq!(code, 1);
    assert_eq!(
        verify(&["--ring", "int", "--scalar", "f2", "--n", "4"]).0,
        2
    );
    assert_eq!(
        verify(&["--ring", "ground", "--scalar", "f4", "--n", "4"]).0,
        2
    );
    assert_eq!(
        verify(&["--ring", "ground", "--scalar", "f2", "--n", "6"]).0,
        2
    );
    assert_eq!(
        verify(&["--ring", "ground", "--scalar", "f2", "--n", "4", "--check", "nothing"]).0,
        2
    );
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for jobs in ["1", "4", "4"] {
        let path = dir.path().join(format!("r{}.json", reports.len()));
        let p = path.to_str().unwrap();
        let (code, _) = verify(&[
            "--ring", "dual", "--scalar", "f2", "--n", "4", "--check", "all", "--out", p, "--jobs",
            jobs,
        ]);
        assert_eq!(code, 0);
        reports.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    assert_eq!(reports[1], reports[2]);
    let json: serde_json::Value = serde_json::from_slice(&reports[0]).unwrap();
    assert_eq!(json["entries"].as_array().unwrap().len(), 4);
}

#[test]
fn ring_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dual.json");
    std::fs::write(
        &path,
        r#"{"name": "dual-file", "scalar": "q", "dim": 2, "unit_index": 0,
            "structure": [[0,0,0,1],[0,1,1,1],[1,0,1,1]]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let (code, out) = verify(&[
        "--ring", p, "--scalar", "q", "--n", "3", "--check", "homology",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("HH1 = Q^1"));
    // scalar mismatch with the document
    assert_eq!(verify(&["--ring", p, "--scalar", "f2", "--n", "3"]).0, 2);
    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(verify(&["--ring", p, "--scalar", "q", "--n", "3"]).0, 2);
}
