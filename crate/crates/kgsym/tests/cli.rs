use std::process::{Command, Output};

fn kgsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kgsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = kgsym(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn dims_table() {
    let v = json(&["dims", "--max-order", "3"]);
    let rows: Vec<(String, String, String)> = v["result"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            let s = |k: &str| r[k].as_str().unwrap().to_string();
            (s("order"), s("dimension"), s("cumulative"))
        })
        .collect();
    let want: Vec<(String, String, String)> = [(0, 1, 1), (1, 3, 4), (2, 5, 9), (3, 7, 16)]
        .iter()
        .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
        .collect();
    assert_eq!(rows, want);
    assert_eq!(v["exact"], true);
}

#[test]
fn generating_current() {
    let v = json(&["current", "C2", "0", "0"]);
    let r = &v["result"];
    assert_eq!(r["t"], "-u[0]^2");
    assert_eq!(r["x"], "u[1]^2");
    assert_eq!(r["order"], "1");
    assert_eq!(r["divergence_free"], true);
}

#[test]
fn other_currents() {
    let v = json(&["current", "C0", "f"]);
    assert_eq!(v["result"]["t"], "f[0]*u[-1]");
    let v = json(&["current", "Ctilde", "Dx"]);
    assert_eq!(v["result"]["characteristic"], "2*u[1]");
    let v = json(&["current", "C1bar", "0", "0"]);
    assert_eq!(v["result"]["divergence_free"], true);
}

#[test]
fn variational_queries() {
    assert_eq!(json(&["variational", "J^3"])["result"]["variational"], true);
    assert_eq!(json(&["variational", "1"])["result"]["variational"], false);
    let rows = json(&["variational-basis", "--order", "3"]);
    let ops = rows["result"]["operators"].as_array().unwrap();
    assert_eq!(ops.len(), 7);
    assert!(ops.iter().all(|r| r["variational"] == true));
}

#[test]
fn operator_commands() {
    assert_eq!(
        json(&["commutator", "Dx*Dy - 1", "J^2*Dx"])["result"]["commutator"],
        "0"
    );
    let adj = json(&["adjoint", "(J + 1/2)*Dx"]);
    assert_eq!(adj["result"]["skew_adjoint"], false);
    assert_eq!(adj["result"]["self_adjoint"], true);
    let b = json(&["bracket", "-u[1]", "-x*u[1] + y*u[-1]"]);
    assert_eq!(b["result"]["bracket"], "-u[1]");
    assert_eq!(
        json(&["check-symmetry", "x*u[1] - y*u[-1]"])["result"]["is_symmetry"],
        true
    );
    assert_eq!(
        json(&["check-symmetry", "x*u[0]"])["result"]["is_symmetry"],
        false
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["adjoint", "J^-1"][..],
        &["adjoint", "Dz"],
        &["current", "C1", "2", "0"],
        &["current", "Ctilde", "1"],
        &["current", "C9", "0", "0"],
        &["dims"],
        &["frobnicate"],
    ] {
        let o = kgsym(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
    let o = kgsym(&["adjoint", "J^-1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("at 2"));
}

#[test]
fn verify_all_is_deterministic_and_reports_failure() {
    let a = kgsym(&["verify-all", "--max-order", "2"]);
    let b = kgsym(&["verify-all", "--max-order", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let all_passed = v["result"]["all_passed"].as_bool().unwrap();
    assert_eq!(a.status.code(), Some(if all_passed { 0 } else { 1 }));
    assert_eq!(v["result"]["checks"].as_array().unwrap().len(), 11);
}

#[test]
fn text_format_and_out_file() {
    let o = kgsym(&["--format", "text", "dims", "--max-order", "1"]);
    assert!(stdout(&o).contains("cumulative"));
    let path = std::env::temp_dir().join(format!("kgsym-out-{}.json", std::process::id()));
    let o = kgsym(&["dims", "--max-order", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(written.contains("\"kind\": \"dims\""));
}
