use std::process::{Command, Output};

fn qverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qverify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn list_prints_every_entry() {
    let o = qverify(&["list"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), include_str!("registry_manifest.txt").lines().count());
}

#[test]
fn verify_pass_exits_zero() {
    let o = qverify(&["verify", "--id", "eq-Es3", "--order", "30", "--json", "--no-timing"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["order"], "30/1");
}

#[test]
fn expected_pass_failure_exits_nonzero() {
    let o = qverify(&["verify", "--id", "thm3-zero", "--order", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first mismatch at q^(0)"));
}

#[test]
fn documented_failure_exits_zero() {
    let o = qverify(&["verify", "--id", "thm3-7O7+3O3-var-plus", "--order", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("FAIL"));
}

#[test]
fn unknown_id_is_a_usage_error() {
    let o = qverify(&["verify", "--id", "no-such-identity"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn expand_renders_terms() {
    let o = qverify(&["expand", "--expr", "poch(1, 1)", "--order", "6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("-1 * q^(1)"), "{text}");
    assert!(text.trim_end().ends_with("+ O(q^(6))"));
}

#[test]
fn parse_errors_carry_position() {
    let o = qverify(&["expand", "--expr", "f(-1,", "--order", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte"));
}

#[test]
fn cf_eval_and_numeric() {
    let o = qverify(&["cf-eval", "--name", "T1", "--q", "0.15", "--depth", "30"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("0.1"));
    let o = qverify(&["numeric", "--check", "prodsine", "--digits", "40"]);
    assert!(o.status.success());
}

#[test]
fn config_file_is_applied() {
    let dir = std::env::temp_dir().join(format!("qverify-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("qverify.toml");
    std::fs::write(&path, "[orders]\n\"eq-Es4\" = \"21/2\"\n").unwrap();
    let o = qverify(&["--config", path.to_str().unwrap(), "verify", "--id", "eq-Es4", "--json"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\"order\": \"21/2\""));
    std::fs::remove_dir_all(dir).unwrap();
}
