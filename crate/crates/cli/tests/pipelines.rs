use std::process::Command;

use repdim_cli::{blocks, complexity, hecke, verify_auslander, verify_skew, verify_upper, FieldArg, GroupSpec, Options};
use repdim_core::{PrimeField, Rationals, SimpleExtension};

fn opts() -> Options {
    Options::default()
}

#[test]
fn auslander_for_all_supported_lines() {
    for ell in 2..=5 {
        let c = verify_auslander(Rationals, ell, opts()).unwrap();
        assert!(c.passed(), "{}", c.render_table());
    }
    assert!(verify_auslander(Rationals, 6, opts()).is_err());
    let c = verify_auslander(PrimeField::new(31).unwrap(), 3, opts()).unwrap();
    assert!(c.passed());
}

#[test]
fn skew_for_larger_lines() {
    let c = verify_skew(Rationals, 3, GroupSpec::Sign, opts()).unwrap();
    assert!(c.passed(), "{}", c.render_table());
    let c = verify_skew(Rationals, 2, GroupSpec::Trivial, opts()).unwrap();
    assert!(c.checks.iter().any(|x| x.name.starts_with("trivial action")));
    assert!(c.passed());
    let c = verify_skew(PrimeField::new(7).unwrap(), 2, GroupSpec::Sign, opts()).unwrap();
    assert!(c.passed());
}

#[test]
fn upper_bound_trivial_symmetric_group() {
    let c = verify_upper(Rationals, 2, 1, opts()).unwrap();
    assert!(c.passed());
    assert_eq!(c.quantities["gldim_End_induced"]["value"], 2);
}

#[test]
fn upper_bound_for_two_simples() {
    let c = verify_upper(Rationals, 3, 2, opts()).unwrap();
    assert!(c.passed(), "{}", c.render_table());
    assert_eq!(c.quantities["gldim_End_N_w"]["value"], 4);
    assert_eq!(c.quantities["dim_End_N_w"], 784);
}

#[test]
fn size_guards() {
    assert!(verify_upper(Rationals, 3, 3, opts()).is_err());
    assert!(verify_upper(Rationals, 2, 4, opts()).is_err());
    assert!(complexity(Rationals, 3, 3, 4, opts()).is_err());
    assert!(hecke(Rationals, 6, "-1", opts()).is_err());
}

#[test]
fn complexity_matches_weight() {
    for (ell, w) in [(3, 1), (4, 1), (5, 1), (2, 3), (3, 2)] {
        let c = complexity(Rationals, ell, w, 8, opts()).unwrap();
        assert!(c.passed(), "{}", c.render_table());
    }
}

#[test]
fn hecke_examples() {
    for n in 2..=3 {
        assert!(hecke(Rationals, n, "-1", opts()).unwrap().passed());
    }
    let k = SimpleExtension::cyclotomic(3).unwrap();
    let c = hecke(k, 3, "zeta", opts()).unwrap();
    assert!(c.passed());
    assert_eq!(c.quantities["report"]["algebra_blocks"], 1);
    assert!(hecke(Rationals, 3, "zeta", opts()).is_err());
    let c = hecke(PrimeField::new(31).unwrap(), 4, "5", opts()).unwrap();
    assert!(c.passed());
}

#[test]
fn block_parameter_validation() {
    assert!(blocks(FieldArg::Prime(7), 5, 4, opts()).is_err());
    assert!(blocks(FieldArg::Cyclotomic(3), 5, 4, opts()).is_err());
    assert!(blocks(FieldArg::Rationals, 5, 1, opts()).is_err());
    assert!(blocks(FieldArg::Prime(7), 5, 3, opts()).unwrap().passed());
}

#[test]
fn field_arguments_parse() {
    assert_eq!("Q".parse::<FieldArg>().unwrap(), FieldArg::Rationals);
    assert_eq!("Fp:7".parse::<FieldArg>().unwrap(), FieldArg::Prime(7));
    assert_eq!("cyclotomic:3".parse::<FieldArg>().unwrap(), FieldArg::Cyclotomic(3));
    assert!("R".parse::<FieldArg>().is_err());
    assert!("Fp:x".parse::<FieldArg>().is_err());
}

fn repdim() -> Command {
    Command::new(env!("CARGO_BIN_EXE_repdim"))
}

#[test]
fn binary_exit_codes_and_output() {
    let out = repdim().args(["blocks", "--n", "7", "--ell", "3"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "certificate-v1");
    assert_eq!(v["verdict"], "pass");

    let out = repdim().args(["verify-skew", "--ell", "2", "--field", "Fp:2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not invertible"));

    let dir = std::env::temp_dir().join(format!("repdim-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cert.txt");
    let out = repdim()
        .args(["hecke", "--n", "3", "--q", "-1", "--format", "table", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("verdict  PASS"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_is_reproducible_modulo_timings() {
    let run = || {
        let out = repdim().args(["verify-auslander", "--ell", "3", "--seed", "7"]).output().unwrap();
        let mut v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v.as_object_mut().unwrap().remove("timings_ms");
        v
    };
    assert_eq!(run(), run());
}
