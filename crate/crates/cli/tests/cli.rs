use std::path::PathBuf;
use std::process::{Command, Output};

use toric_cobordism::coeff::LawKind;
use toric_cobordism::ordinary::{build_presentation, eliminate_base_cone, ReductionSystem};
use toric_cobordism_cli::fanfile::bundled;
use toric_cobordism_cli::parse::parse_polynomial;
use toric_cobordism_cli::report::{NormalFormReport, OrdinaryReport, PolyRecord};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric-cobordism"))
        .args(args)
        .env_remove("TORIC_FAN_LIBRARY")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("toric-cobordism-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn validate_bundled_fan() {
    let out = run(&["validate", "--fan", "p2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "valid, smooth, complete: yes, rays: 3, max cones: 3\n");
}

#[test]
fn validate_reports_violations() {
    let path = scratch("nonprimitive.json", r#"{"rank":2,"rays":[[2,0],[0,1],[-1,-1]],"max_cones":[[1,2],[2,3],[3,1]]}"#);
    let out = run(&["validate", "--fan", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("ray 1 not primitive"));

    let path = scratch("overlap.json", r#"{"rank":2,"rays":[[1,0],[0,1],[1,1]],"max_cones":[[1,2],[1,3]]}"#);
    let out = run(&["validate", "--fan", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("fan condition violated"));
}

#[test]
fn bad_input_exits_one() {
    assert_eq!(run(&["--bogus"]).status.code(), Some(1));
    assert_eq!(run(&["ordinary"]).status.code(), Some(1));
    assert_eq!(run(&["ordinary", "--fan", "no-such-fan"]).status.code(), Some(1));
    assert_eq!(run(&["nf", "--fan", "p2", "t9"]).status.code(), Some(1));
    assert_eq!(run(&["ordinary", "--fan", "p2", "--base-cone", "7"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn normal_forms() {
    let out = run(&["nf", "--fan", "p2", "t1*t2*t3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\n");
    let out = run(&["nf", "--fan", "p1", "--law", "additive", "t1 - t2"]);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn ordinary_ranks() {
    let out = run(&["ordinary", "--fan", "p3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for k in 0..=3 {
        assert!(text.contains(&format!("degree {k}: 1\n")), "{text}");
    }
    assert!(text.contains("total: 4"));
}

#[test]
fn chow_specialization() {
    let out = run(&["specialize", "chow", "--fan", "p2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for k in 0..=2 {
        assert!(text.contains(&format!("degree {k}: 1 (Z-rank 1, torsion none)")), "{text}");
    }
    let out = run(&["specialize", "ktheory", "--fan", "f1"]);
    assert!(stdout(&out).contains("total: 4"));
}

#[test]
fn equivariant_reports() {
    let out = run(&["equivariant", "--fan", "f1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("I_Delta = (t1*t3, t2*t4)"), "{text}");
    assert!(text.contains("Psi isomorphism in these degrees: yes"));
    for fan in ["p1", "a2"] {
        let out = run(&["equivariant", "--fan", fan, "--max-degree", "2"]);
        assert_eq!(out.status.code(), Some(0), "{fan}");
    }
    assert!(stdout(&run(&["equivariant", "--fan", "a2"])).contains("I_Delta = 0"));
}

#[test]
fn machine_output_round_trips() {
    let out = run(&["ordinary", "--fan", "f1", "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let report: OrdinaryReport = serde_json::from_slice(&out.stdout).unwrap();

    let fan = bundled("f1").unwrap().to_fan().unwrap();
    let pres = build_presentation(&fan, LawKind::UniversalRational, 3).unwrap();
    let template = pres.zero();
    for (record, original) in report.relations.iter().zip(pres.relations()) {
        assert_eq!(&record.poly.to_series(&template).unwrap(), original, "{}", record.label);
    }

    let base: usize = report.base_cone.split(' ').next().unwrap().parse().unwrap();
    let basis: Vec<_> = report.basis.iter().map(|r| r.to_series(&template).unwrap()).collect();
    let reloaded = ReductionSystem::from_generators(eliminate_base_cone(&pres, base - 1).unwrap(), &basis).unwrap();
    for text in ["t1^2", "t2*t3 + t4^2", "t1*t2 - 3*t3", "t2^2*t4"] {
        let x = parse_polynomial(text, &template).unwrap();
        let out = run(&["nf", "--fan", "f1", "--format", "machine", text]);
        let nf: NormalFormReport = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(PolyRecord::from_series(reloaded.normal_form(&x).unwrap().series()), nf.normal_form, "{text}");
    }
}

#[test]
fn library_directory_lookup() {
    let path = scratch("line.json", r#"{"name":"line","rank":1,"rays":[[1],[-1]],"max_cones":[[1],[2]]}"#);
    let dir = path.parent().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_toric-cobordism"))
        .args(["validate", "--fan", "line"])
        .env("TORIC_FAN_LIBRARY", dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "valid, smooth, complete: yes, rays: 2, max cones: 2\n");
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest", "--law", "universal", "--coeff-bound", "3"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains(": PASS")).count(), 10, "{text}");
}
