use std::process::{Command, Output};

fn data(name: &str) -> String {
    format!("{}/../core/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_kacforge"));
    c.args(args).env_remove("KACFORGE_SEED");
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn chebyshev_table_begins_with_the_expected_ratios() {
    let o = run(&["shadow", "chebyshev", "--N", "3", "--t", "2", "--cutoff", "10"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let values: Vec<&str> = out
        .lines()
        .skip_while(|l| !l.contains("values:"))
        .skip(1)
        .take(3)
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(values, ["1", "2/3", "3/8"]);
}

#[test]
fn validation_failures_exit_with_one() {
    let o = run(&["validate", &data("loop5.toml")], &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("associativity fails at"));
    let o = run(&["validate", &data("broken.toml")], &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 5"));
}

#[test]
fn tolerance_breaches_exit_with_two() {
    let cfg = std::env::temp_dir().join(format!("kacforge-tight-{}.toml", std::process::id()));
    std::fs::write(&cfg, "[config.tolerances]\nequality = 1e-300\n").unwrap();
    let o = run(&["--config", cfg.to_str().unwrap(), "irreps", "builtin:s3_z2_z3"], &[]);
    std::fs::remove_file(&cfg).ok();
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
}

#[test]
fn audit_only_reports_exit_with_zero() {
    let o = run(&["audit", &data("s3_z3_z2.toml")], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("AUDIT-DISAGREE"));
}

#[test]
fn environment_seed_overrides_the_default() {
    let o = run(&["--format", "json", "shadow", "sl2z"], &[("KACFORGE_SEED", "42")]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["seed"], "0x2a");
    let o = run(&["--seed", "7", "--format", "json", "shadow", "sl2z"], &[("KACFORGE_SEED", "42")]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["seed"], "0x7");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["crossed", "builtin:z2_inverting_z3", "--draws", "3"];
    let a = run(&args, &[]);
    let b = run(&args, &[]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
}
