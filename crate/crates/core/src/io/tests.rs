use super::*;
use crate::config::RunConfig;
use crate::error::Error;
use crate::groups::{is_isomorphic_small, FiniteGroup};
use std::path::PathBuf;

fn data(name: &str) -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data")).join(name)
}

fn arg(name: &str) -> String {
    data(name).display().to_string()
}

fn cfg() -> RunConfig {
    RunConfig::default()
}

#[test]
fn permutation_file_gives_s3() {
    let g = load_group(&data("s3.toml"), &cfg()).unwrap();
    assert_eq!(g.order(), 6);
    assert!(!g.is_abelian());
    assert_eq!(find_element(&g, "(2 3 1)").unwrap(), find_element(&g, "(1 2 3)").unwrap());
}

#[test]
fn matrix_file_gives_sl2_f3() {
    let g = load_group(&data("sl2_f3.toml"), &cfg()).unwrap();
    assert_eq!(g.order(), 24);
    assert_eq!(g.center().len(), 2);
    assert!(find_element(&g, "[[1, 1], [0, 1]]").is_ok());
}

#[test]
fn ambient_pair_file_has_both_actions() {
    let p = load_pair(&data("s4_s3_z4.toml"), &cfg()).unwrap();
    assert_eq!((p.pair.gamma().order(), p.pair.g().order()), (6, 4));
    assert!(!p.pair.is_alpha_trivial());
    assert!(!p.pair.is_beta_trivial());
    assert!(p.base.is_none());
}

#[test]
fn table_and_conjugation_pairs_load() {
    let t = load_pair(&data("z2_inverting_z3.toml"), &cfg()).unwrap().pair;
    assert!(t.is_beta_trivial());
    assert_eq!(t.alpha(1, 1), 2);
    let c = load_pair(&data("s3_conjugation_z3.toml"), &cfg()).unwrap().pair;
    assert_eq!((c.gamma().order(), c.g().order()), (3, 6));
    assert!(c.is_beta_trivial());
}

#[test]
fn non_associative_table_names_a_triple() {
    match load_group(&data("loop5.toml"), &cfg()) {
        Err(Error::ValidationError { invariant }) => {
            assert!(invariant.contains("associativity fails at ("), "{invariant}");
        }
        other => panic!("expected a validation error, got {other:?}"),
    }
}

#[test]
fn syntax_errors_carry_line_and_column() {
    match load_group(&data("broken.toml"), &cfg()) {
        Err(Error::ParseError { line, column, .. }) => {
            assert_eq!(line, 5);
            assert!(column >= 1);
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn line_column_counts_from_one() {
    assert_eq!(line_column("ab\ncd", 0), (1, 1));
    assert_eq!(line_column("ab\ncd", 4), (2, 2));
    assert_eq!(line_column("ab", 99), (1, 3));
}

#[test]
fn missing_file_is_an_io_error() {
    let err = load_group(&data("does_not_exist.toml"), &cfg()).unwrap_err();
    assert!(matches!(err, Error::Io { .. }));
    assert_eq!(exit_code_for(&err), 1);
}

#[test]
fn ring_files_load_and_validate() {
    let z2 = load_ring(&data("z2_ring.toml"), &cfg()).unwrap();
    assert_eq!(z2.fuse(1, 1).unwrap(), vec![(0, 1)]);
    let o3 = load_ring(&data("o3_ring.toml"), &cfg()).unwrap();
    assert!(o3.truncated);
    assert_eq!(o3.len(), 11);
    let dual = load_ring(&data("s3_dual_ring.toml"), &cfg()).unwrap();
    let mut dims = dual.dims.clone();
    dims.sort_by(f64::total_cmp);
    assert_eq!(dims, vec![1.0, 1.0, 2.0]);
    let err = load_ring(&data("bad_ring.toml"), &cfg()).unwrap_err();
    assert!(matches!(err, Error::ValidationError { .. }), "{err}");
}

#[test]
fn measure_files_load_exactly() {
    let m = load_measure(&data("s3_measure.toml"), &cfg()).unwrap();
    let g = &m.group;
    let w = |s: &str| m.measure.weight(find_element(g, s).unwrap()).to_string();
    assert_eq!(w("(1 2)"), "1/2");
    assert_eq!(w("(2 3)"), "1/4");
    assert_eq!(w("()"), "0");
    let err = load_measure(&data("bad_measure.toml"), &cfg()).unwrap_err();
    assert!(matches!(err, Error::ValidationError { .. }), "{err}");
}

#[test]
fn load_any_dispatches_on_the_top_level_table() {
    let kinds: Vec<&str> = ["s3.toml", "s3_z2_z3.toml", "z2_ring.toml", "s3_measure.toml"]
        .iter()
        .map(|f| load_any(&data(f), &cfg()).unwrap().kind())
        .collect();
    assert_eq!(kinds, ["group", "pair", "ring", "measure"]);
}

#[test]
fn deformation_recipe_gives_the_dihedral_group() {
    let p = load_pair(&data("lambda_deformed.toml"), &cfg()).unwrap();
    let base = p.base.as_ref().unwrap();
    assert!(base.g().is_abelian());
    assert_eq!(p.pair.g().order(), 14);
    assert!(is_isomorphic_small(p.pair.g(), &FiniteGroup::dihedral(7), &cfg().caps)
        .unwrap()
        .is_some());
    assert!(!p.pair.is_beta_trivial());
}

#[test]
fn invariants_command_reports_s3() {
    let r = run_pipeline(&Command::Invariants { pair: arg("s3_z2_z3.toml") }, &cfg()).unwrap();
    assert_eq!(r.find("invariants", "intrinsic group is Sp(G) x| Gamma^beta").unwrap().status, Status::Pass);
    assert_eq!(r.datum("invariants", "intrinsic group"), Some("S3"));
    assert_eq!(r.datum("invariants", "spectrum"), Some("Z/2"));
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn audit_command_flags_the_identified_candidates() {
    let r = run_pipeline(&Command::Audit { pair: arg("s3_z3_z2.toml") }, &cfg()).unwrap();
    let disagree: Vec<&Entry> = r.entries().filter(|e| e.status == Status::AuditDisagree).collect();
    assert!(!disagree.is_empty());
    assert!(disagree.iter().any(|e| e.witness.is_some()));
    assert_eq!(r.count(Status::Fail), 0);
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn chebyshev_shadow_table() {
    let cmd = Command::Shadow(Shadow::Chebyshev {
        n: 3,
        t: "2".into(),
        cutoff: 10,
        eps: Some("1/100".into()),
    });
    let r = run_pipeline(&cmd, &cfg()).unwrap();
    let values = r.datum("chebyshev", "values").unwrap();
    let firsts: Vec<&str> = values.lines().take(3).map(|l| l.split_whitespace().nth(1).unwrap()).collect();
    assert_eq!(firsts, ["1", "2/3", "3/8"]);
    assert!(r.passed());
}

#[test]
fn reports_are_deterministic() {
    let cmd = Command::Build {
        pair: arg("s3_z3_z2.toml"),
        dump: true,
    };
    let a = run_pipeline(&cmd, &cfg()).unwrap();
    let b = run_pipeline(&cmd, &cfg()).unwrap();
    assert_eq!(a.to_text(), b.to_text());
    assert_eq!(a.to_json(), b.to_json());
    let doc: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(doc["command"], "build");
    assert!(a.passed());
    assert!(a.datum("dump", "product").unwrap().lines().count() > 0);
}

#[test]
fn failures_map_to_exit_code_two() {
    let mut r = Report::new("test", 1, Vec::new());
    let mut s = Section::new("s");
    s.residual("tight", 1e-3, 1e-9);
    s.entry("claim", Status::AuditDisagree, "");
    r.push(s);
    assert_eq!(r.exit_code(), 2);
    assert!(r.to_text().contains("FAIL"));
    let e = Error::NonIntegral { value: 0.5, tol: 1e-6 };
    assert_eq!(exit_code_for(&e), 2);
    let v = Error::ValidationError { invariant: "x".into() };
    assert_eq!(exit_code_for(&v), 1);
}

#[test]
fn validate_accepts_every_sample_file() {
    let files = [
        "s3.toml",
        "s4.toml",
        "z2.toml",
        "sl2_f3.toml",
        "s3_z2_z3.toml",
        "s4_s3_z4.toml",
        "z2_inverting_z3.toml",
        "s3_conjugation_z3.toml",
        "z2_ring.toml",
        "o3_ring.toml",
        "s3_measure.toml",
        "s3_uniform.toml",
        "lambda_deformed.toml",
    ];
    let cmd = Command::Validate {
        files: files.iter().map(|f| arg(f)).collect(),
    };
    let r = run_pipeline(&cmd, &cfg()).unwrap();
    assert_eq!(r.count(Status::Pass), files.len());
}

#[test]
fn builtin_pairs_resolve() {
    for name in BUILTIN_PAIRS {
        assert!(load_pair_arg(&format!("builtin:{name}"), &cfg()).is_ok(), "{name}");
    }
    assert!(matches!(
        load_pair_arg("builtin:nope", &cfg()),
        Err(Error::ValidationError { .. })
    ));
}

#[test]
fn measure_shadows() {
    let tv = Command::Shadow(Shadow::Tv {
        mu: arg("s3_measure.toml"),
        nu: arg("s3_uniform.toml"),
    });
    let r = run_pipeline(&tv, &cfg()).unwrap();
    // |1/2-1/6| + 2|1/4-1/6| + 3/6 = 1/3 + 1/6 + 1/2
    assert_eq!(r.datum("tv", "tv distance"), Some("1"));
    let f = Command::Shadow(Shadow::MeasureFourier {
        measure: arg("s3_uniform.toml"),
    });
    let r = run_pipeline(&f, &cfg()).unwrap();
    let norms = r.datum("measure fourier", "block operator norms").unwrap();
    assert!(norms.lines().next().unwrap().ends_with("1.000e0"));
}

#[test]
fn config_files_override_defaults() {
    let c = load_config(&data("config.toml")).unwrap();
    assert_eq!(c.seed, 7);
    assert_eq!(c.tolerances.axiom, 1e-10);
    assert_eq!(c.tolerances.equality, RunConfig::default().tolerances.equality);
    assert_eq!(c.format, crate::config::OutputFormat::Json);
}
