use std::path::{Path, PathBuf};
use std::process::Command;

use proptest::prelude::*;
use rota_cli::catalog::{emit_fixture, NAMES};
use rota_cli::problem::{BimoduleKind, BimoduleSection, ProblemFile};
use rota_cli::{run_with, Report};
use rota_core::algebra::Bimodule;
use rota_core::rational::qi;
use rota_core::rmatrix::Wedge2;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn rota(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(std::iter::once("rota").chain(args.iter().copied()), &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn emit(dir: &TempDir, name: &str) -> PathBuf {
    let path = dir.path().join(format!("{name}.json"));
    let run = rota(&["emit", name, "--out", path.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.err);
    path
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn emitted_poly3_integration_is_an_o_operator() {
    let dir = TempDir::new().unwrap();
    let run = rota(&["check-op", s(&emit(&dir, "poly3_R"))]);
    assert_eq!(run.code, 0);
    assert!(run.out.contains("defect = 0"), "{}", run.out);
}

#[test]
fn derivative_fails_with_witness_at_x_x() {
    let dir = TempDir::new().unwrap();
    let run = rota(&["check-op", s(&emit(&dir, "poly3_D"))]);
    assert_eq!(run.code, 1);
    assert!(run.out.contains("witness (x, x): 1 vs 2"), "{}", run.out);
}

#[test]
fn degree_zero_cohomology_of_poly3() {
    let dir = TempDir::new().unwrap();
    let run = rota(&["cohomology", s(&emit(&dir, "poly3_R")), "--degree", "0"]);
    assert_eq!(run.code, 0);
    assert!(run.out.contains("dim H^0 = 3"), "{}", run.out);
}

#[test]
fn every_r_on_abelian2_is_an_r_matrix() {
    let dir = TempDir::new().unwrap();
    for c in [-3, 0, 1, 7] {
        let mut file = emit_fixture("abelian2").unwrap();
        let mut r = Wedge2::zero(2);
        r.set(0, 1, qi(c)).unwrap();
        file.r_matrix = Some(r);
        let path = write(&dir, "a.json", &file.to_json());
        assert_eq!(rota(&["rmatrix", "check", s(&path)]).code, 0, "r = {c}");
    }
}

#[test]
fn projection_is_left_averaging() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "proj2_averaging");
    assert_eq!(rota(&["check-op", s(&path), "--kind", "left-averaging"]).code, 0);
    assert_eq!(rota(&["check-op", s(&path), "--kind", "averaging"]).code, 0);
}

#[test]
fn rota_baxter_weight_is_respected() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "ut2");
    assert_eq!(rota(&["check-op", s(&path), "--kind", "rota-baxter"]).code, 0);
    // -id is a Rota-Baxter operator of weight 1.
    let mut file = emit_fixture("ut2").unwrap();
    file.operator.as_mut().unwrap().matrix = (0..3)
        .map(|i| (0..3).map(|j| qi(if i == j { -1 } else { 0 })).collect())
        .collect();
    let path = write(&dir, "neg.json", &file.to_json());
    assert_eq!(
        rota(&["check-op", s(&path), "--kind", "rota-baxter", "--weight", "1"]).code,
        0
    );
    assert_eq!(
        rota(&["check-op", s(&path), "--kind", "rota-baxter", "--weight", "0"]).code,
        1
    );
}

#[test]
fn path_without_extension_resolves() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "poly3_R");
    let bare = path.with_extension("");
    assert_eq!(rota(&["check-op", s(&bare)]).code, 0);
}

#[test]
fn ut2_workflow() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "ut2");
    let p = s(&path);
    assert_eq!(rota(&["validate", p]).code, 0);
    assert_eq!(rota(&["nijenhuis", p, "--element", "E12"]).code, 0);
    assert_eq!(rota(&["nijenhuis", p, "--element", "E11"]).code, 1);
    assert_eq!(rota(&["nijenhuis", p, "--element", "0,-1,0"]).code, 0);
    assert_eq!(rota(&["deform", "check", p]).code, 0);
    assert_eq!(rota(&["deform", "extend", p, "--order", "3"]).code, 0);
    assert_eq!(rota(&["deform", "equiv", p, "--element", "E12"]).code, 0);
    assert_eq!(rota(&["rmatrix", "check", p]).code, 0);
    assert_eq!(rota(&["rmatrix", "coproduct", p]).code, 0);
    assert_eq!(rota(&["rmatrix", "weak-morphism", p]).code, 0);
}

#[test]
fn inequivalent_deformations_fail() {
    let dir = TempDir::new().unwrap();
    let mut file = emit_fixture("ut2").unwrap();
    let zero = vec![vec![qi(0); 3]; 3];
    file.deformation_target.as_mut().unwrap().terms = vec![zero];
    let path = write(&dir, "u.json", &file.to_json());
    let run = rota(&["deform", "equiv", s(&path), "--element", "E12"]);
    assert_eq!(run.code, 1, "{}", run.out);
    assert!(run.out.contains("T1 - T2 = d_H(a): no"));
}

#[test]
fn broken_weak_morphism_fails() {
    let dir = TempDir::new().unwrap();
    let mut file = emit_fixture("ut2").unwrap();
    let psi = &mut file.morphism.as_mut().unwrap().psi;
    for row in psi.iter_mut() {
        for c in row.iter_mut() {
            *c *= &qi(2);
        }
    }
    let path = write(&dir, "w.json", &file.to_json());
    let run = rota(&["rmatrix", "weak-morphism", s(&path)]);
    assert_eq!(run.code, 1, "{}", run.out);
    assert!(run.out.contains("Tensor"));
}

#[test]
fn non_r_matrix_has_no_coproduct() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "dual2");
    let check = rota(&["rmatrix", "check", s(&path)]);
    assert_eq!(check.code, 1);
    assert!(check.out.contains("[[r,r]](1*, x*, x*) = -1"), "{}", check.out);
    assert_eq!(rota(&["rmatrix", "coproduct", s(&path)]).code, 1);
}

#[test]
fn seeded_extension_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "poly3_R");
    let a = rota(&["deform", "extend", s(&path), "--seed", "4", "--order", "2"]);
    let b = rota(&["deform", "extend", s(&path), "--seed", "4", "--order", "2"]);
    assert_eq!(a.code, 0, "{}", a.out);
    assert_eq!(a.out, b.out);
}

#[test]
fn explicit_bimodule_matches_adjoint() {
    let dir = TempDir::new().unwrap();
    let mut file = emit_fixture("poly3_R").unwrap();
    let alg = file.build().unwrap().algebra;
    let adj = Bimodule::adjoint(&alg);
    let mut section = BimoduleSection::of_kind(BimoduleKind::Explicit);
    section.dim = Some(3);
    for i in 0..3 {
        for u in 0..3 {
            for v in 0..3 {
                let l = adj.left_basis(i, u)[v].clone();
                if !l.is_zero() {
                    section.left.push((i, u, v, l));
                }
                let r = adj.right_basis(u, i)[v].clone();
                if !r.is_zero() {
                    section.right.push((u, i, v, r));
                }
            }
        }
    }
    file.bimodule = Some(section);
    assert_eq!(file.build().unwrap().bimodule, adj);
    let path = write(&dir, "e.json", &file.to_json());
    assert_eq!(rota(&["check-op", s(&path)]).code, 0);
}

#[test]
fn malformed_input_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let bad_json = write(
        &dir,
        "bad.json",
        "{\n  \"format_version\": 1,\n  \"algebra\": {\"dim\": 2,, }\n}",
    );
    let run = rota(&["validate", s(&bad_json)]);
    assert_eq!(run.code, 2);
    assert!(run.err.contains("line 3"), "{}", run.err);

    let unknown = write(
        &dir,
        "u.json",
        r#"{"format_version": 1, "algebra": {"dim": 1, "mu": [], "extra": 0}}"#,
    );
    let run = rota(&["validate", s(&unknown)]);
    assert_eq!(run.code, 2);
    assert!(run.err.contains("extra"), "{}", run.err);

    let bad_rational = write(
        &dir,
        "q.json",
        r#"{"format_version": 1, "algebra": {"dim": 1, "mu": [[0, 0, 0, "1/0"]]}}"#,
    );
    assert_eq!(rota(&["validate", s(&bad_rational)]).code, 2);

    let mut file = emit_fixture("poly3_R").unwrap();
    file.operator.as_mut().unwrap().matrix.pop();
    let run = rota(&["check-op", s(&write(&dir, "d.json", &file.to_json()))]);
    assert_eq!(run.code, 2);
    assert!(run.err.contains("section `operator`"), "{}", run.err);

    let mut file = emit_fixture("ut2").unwrap();
    file.r_matrix = Some(Wedge2::zero(2));
    let run = rota(&["rmatrix", "check", s(&write(&dir, "r.json", &file.to_json()))]);
    assert_eq!(run.code, 2);
    assert!(run.err.contains("section `r_matrix`"), "{}", run.err);

    let mut file = emit_fixture("poly3_R").unwrap();
    file.format_version = 9;
    assert_eq!(rota(&["validate", s(&write(&dir, "v.json", &file.to_json()))]).code, 2);

    assert_eq!(rota(&["validate", "/nonexistent/file.json"]).code, 2);
    assert_eq!(rota(&["emit", "nope"]).code, 2);
    assert_eq!(rota(&["frobnicate"]).code, 2);
    assert_eq!(rota(&["cohomology", s(&emit(&dir, "poly3_R")), "--degree", "99"]).code, 2);
    assert_eq!(rota(&["nijenhuis", s(&emit(&dir, "poly3_R")), "--element", "q"]).code, 2);
    assert_eq!(
        rota(&[
            "check-op",
            s(&emit(&dir, "poly3_R")),
            "--kind",
            "rota-baxter",
            "--weight",
            "w"
        ])
        .code,
        2
    );
}

#[test]
fn non_associative_algebra_is_a_validation_failure() {
    let dir = TempDir::new().unwrap();
    let mut file = emit_fixture("poly3_R").unwrap();
    // x2*x2 = 1 gives (x x2) x2 = 0 but x (x2 x2) = x.
    file.algebra.mu.push((2, 2, 0, qi(1)));
    let path = write(&dir, "n.json", &file.to_json());
    let run = rota(&["validate", s(&path)]);
    assert_eq!(run.code, 1, "{}", run.out);
    assert!(run.out.contains("witness ("), "{}", run.out);
    assert_eq!(rota(&["check-op", s(&path)]).code, 2);
}

#[test]
fn commands_needing_an_o_operator_fail_on_the_derivative() {
    let dir = TempDir::new().unwrap();
    let p = emit(&dir, "poly3_D");
    for args in [
        vec!["cohomology", s(&p), "--degree", "1"],
        vec!["nijenhuis", s(&p), "--element", "0,1,0"],
        vec!["deform", "extend", s(&p)],
    ] {
        let run = rota(&args);
        assert_eq!(run.code, 1, "{args:?}");
        assert!(run.out.contains("not an O-operator"));
    }
}

#[test]
fn fixtures_round_trip() {
    for name in NAMES {
        let file = emit_fixture(name).unwrap();
        assert_eq!(ProblemFile::parse(&file.to_json()).unwrap(), file, "{name}");
        file.build().unwrap().require_valid().unwrap();
    }
}

#[test]
fn shipped_fixtures_match_the_catalog() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    for name in NAMES {
        let text = std::fs::read_to_string(root.join(format!("{name}.json"))).unwrap();
        assert_eq!(text, emit_fixture(name).unwrap().to_json() + "\n", "{name}");
    }
}

#[test]
fn json_reports_round_trip() {
    let dir = TempDir::new().unwrap();
    let ut2 = emit(&dir, "ut2");
    let d = emit(&dir, "poly3_D");
    let cases: Vec<Vec<&str>> = vec![
        vec!["validate", s(&ut2)],
        vec!["check-op", s(&d)],
        vec!["cohomology", s(&ut2), "--degree", "1"],
        vec!["nijenhuis", s(&ut2), "--element", "E11"],
        vec!["deform", "check", s(&ut2)],
        vec!["deform", "extend", s(&ut2)],
        vec!["deform", "equiv", s(&ut2), "--element", "E12"],
        vec!["rmatrix", "check", s(&ut2)],
        vec!["rmatrix", "coproduct", s(&ut2)],
        vec!["rmatrix", "weak-morphism", s(&ut2)],
    ];
    for args in cases {
        let run = rota(&[&["--json"], args.as_slice()].concat());
        let report: Report = serde_json::from_str(&run.out).unwrap();
        assert_eq!(report.exit_code(), run.code, "{args:?}");
        let again: Report = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(again, report);
    }
}

#[test]
fn binary_exit_codes() {
    let dir = TempDir::new().unwrap();
    let bin = env!("CARGO_BIN_EXE_rota");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["check-op", s(&emit(&dir, "poly3_R"))]), Some(0));
    assert_eq!(code(&["check-op", s(&emit(&dir, "poly3_D"))]), Some(1));
    assert_eq!(code(&["check-op", "/nonexistent"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Corrupting a fixture never escapes the 0/1/2 exit-code contract.
    #[test]
    fn exit_codes_are_total(which in 0usize..NAMES.len(), pos in any::<prop::sample::Index>(), byte in 0u8..128, cmd in 0usize..4) {
        let dir = TempDir::new().unwrap();
        let mut text = emit_fixture(NAMES[which]).unwrap().to_json().into_bytes();
        let i = pos.index(text.len());
        text[i] = byte;
        let path = dir.path().join("f.json");
        std::fs::write(&path, &text).unwrap();
        let p = s(&path);
        let args: Vec<&str> = match cmd {
            0 => vec!["validate", p],
            1 => vec!["check-op", p],
            2 => vec!["cohomology", p, "--degree", "1"],
            _ => vec!["rmatrix", "check", p],
        };
        let code = rota(&args).code;
        prop_assert!((0..=2).contains(&code));
    }
}
