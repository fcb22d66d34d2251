//! End-to-end runs of the binary against the shipped data files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wellpoised"))
}

fn data(name: &str) -> PathBuf {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.pop();
    p.pop();
    p.push("data");
    p.push(name);
    p
}

fn run(args: &[&str]) -> Output {
    let mut cmd = bin();
    for a in args {
        cmd.arg(a);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn embed_elliptic_matches_table() {
    let out = run(&[
        "embed",
        "--input",
        data("elliptic.divisor").to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("hilbert_basis=(8,10,15) (5,7,10) (3,4,6)"));
    assert!(text.contains("presentation=<X1^2*X3^10 - X2^6*X3^5 + X1^6>"));
    assert!(text.contains("hash=fnv64:"));
}

#[test]
fn lift_check_elliptic_exit_zero_and_verdicts() {
    let out = run(&[
        "lift-check",
        "--input",
        data("elliptic.divisor").to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(out.status.success(), "lift-check reports are data, not failures");
    let text = stdout(&out);
    assert!(text.contains("weight0.lifted=(26,17,10)"));
    assert!(text.contains("weight0.in_w=<X1^2*X3^10 - X2^6*X3^5>"));
    assert!(text.contains("weight0.degenerate=<X1^2*X3^5 - X2^6>"));
    assert!(text.contains("weight0.equal=false"));
    assert!(text.contains("weight1.lifted=(10,7,4)"));
    assert!(text.contains("weight1.equal=false"));
    assert!(text.contains("weight1.prime=false"));
    assert!(text.contains("weight2.lifted=(-46,-31,-18)"));
    assert!(text.contains("weight2.equal=true"));
    assert!(text.contains("weight2.prime=true"));
}

#[test]
fn embed_e8_exponent_pattern() {
    // the E8 arrangement as a divisor file: base t1 + t2 - 1 on the line
    let dir = std::env::temp_dir().join("wellpoised_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("e8.divisor");
    std::fs::write(
        &path,
        "variables t1 t2\ntail_cone\n 1\ncoefficients\n 6/5\n -1/2\n -2/3\nbase_ideal\n t1 + t2 - 1\n",
    )
    .unwrap();
    let out = run(&["embed", "--input", path.to_str().unwrap(), "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("presentation=<X3^5 - X2^3 - X1^2>"),
        "expected the x^2 + y^3 + z^5 pattern, got:\n{text}"
    );
}

#[test]
fn verify_wellpoised_e8() {
    let out = run(&[
        "verify-wellpoised",
        "--input",
        data("e8.arrangement").to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(out.status.success(), "all cones certify");
    let text = stdout(&out);
    assert!(text.contains("well_poised=true"));
    assert!(text.contains("cones=4"));
}

#[test]
fn admissable_negative_exit_one() {
    let out = run(&[
        "admissable",
        "--input",
        data("e8.arrangement").to_str().unwrap(),
        "--iset",
        "0,2",
    ]);
    assert_eq!(out.status.code(), Some(1), "negative verdict exits 1");
    let text = stdout(&out);
    assert!(text.contains("admissable: false"));
    assert!(text.contains("witness"));
}

#[test]
fn empty_file_exit_two() {
    let dir = std::env::temp_dir().join("wellpoised_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("empty.divisor");
    std::fs::write(&path, "").unwrap();
    let out = run(&["embed", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn byte_identical_reruns() {
    let input = data("elliptic.divisor");
    let args = [
        "lift-check",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "machine",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout, "deterministic output");
    // and with a parallel pool the merge stays ordered
    let c = run(&[
        "verify-wellpoised",
        "--input",
        data("e8.arrangement").to_str().unwrap(),
        "--format",
        "machine",
        "--parallel",
        "4",
    ]);
    let d = run(&[
        "verify-wellpoised",
        "--input",
        data("e8.arrangement").to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn veronese_and_segre_commands() {
    let out = run(&[
        "veronese",
        "--input",
        data("p1.presentation").to_str().unwrap(),
        "--degree",
        "3",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("y1^2 - y0*y2"));
    assert!(text.contains("y2^2 - y1*y3"));

    let out = run(&[
        "segre",
        "--input",
        data("p1.presentation").to_str().unwrap(),
        "--second",
        data("p1.presentation").to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("z01*z10 - z00*z11"));
}

#[test]
fn hypertoric_command() {
    let out = run(&[
        "hypertoric",
        "--input",
        data("hypertoric_a11.hypertoric").to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("moment_ideal=<x1*y1 - x2*y2>"));
    assert!(text.contains("recognized=true"));
    assert!(text.contains("well_poised=true"));
}

#[test]
fn quotient_command() {
    let out = run(&[
        "quotient",
        "--input",
        data("quadric_total_space.presentation").to_str().unwrap(),
        "--beta",
        "0",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("nontrivial_invariants=true"));
    assert!(text.contains("exponent=0"));
}

#[test]
fn generators_and_degenerate_commands() {
    let out = run(&[
        "generators",
        "--input",
        data("elliptic.divisor").to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("generator0.v=(45,60)"));
    assert!(text.contains("generator0.u=(90)"));

    let out = run(&[
        "degenerate",
        "--input",
        data("elliptic.divisor").to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("weight1.initial=<t1^2 + 1>"));
}

#[test]
fn value_semigroup_and_nok_cone_commands() {
    let out = run(&[
        "value-semigroup",
        "--input",
        data("e8.arrangement").to_str().unwrap(),
        "--iset",
        "0,2",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("complement=1"));
    assert!(text.contains("piece0.upper=sum_v <= floor(<u,(6/5)>) + floor(<u,(-2/3)>)"));
    assert!(text.contains("piece0.lower0=v0 >= -floor(<u,(-1/2)>)"));

    let out = run(&[
        "nok-cone",
        "--input",
        data("e8.arrangement").to_str().unwrap(),
        "--iset",
        "0,2",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ambient_dim=2"));
    assert!(text.contains("inequality"));

    let out = run(&[
        "cm-check",
        "--input",
        data("e8.arrangement").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "documented false negative exits 1");
    assert!(stdout(&out).contains("cm_sufficient: false"));
}

#[test]
fn lift_command_defaults_to_file_weights() {
    let out = run(&[
        "lift",
        "--input",
        data("elliptic.divisor").to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("weight2.lifted=(-46,-31,-18)"));
}

#[test]
fn grassmannian_pullback_is_well_poised_on_shipped_weights() {
    let out = run(&[
        "lift-check",
        "--input",
        data("gr24_pullback.divisor").to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("presentation=<X2*X3 - X1*X4 + X5*X6>"));
    for k in 0..3 {
        assert!(text.contains(&format!("weight{k}.equal=true")));
        assert!(text.contains(&format!("weight{k}.prime=true")));
    }
}

#[test]
fn weights_file_overrides_input_weights() {
    let dir = std::env::temp_dir().join("wellpoised_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let wpath = dir.join("one.weights");
    std::fs::write(&wpath, "# one ray\n-2 -3 0\n").unwrap();
    let out = run(&[
        "lift-check",
        "--input",
        data("elliptic.divisor").to_str().unwrap(),
        "--weights",
        wpath.to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("weight0.lifted=(-46,-31,-18)"));
    assert!(!text.contains("weight1."), "only the file weights run");
}
