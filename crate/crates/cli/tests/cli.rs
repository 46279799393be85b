use std::path::PathBuf;
use std::process::{Command, Output};

fn hnfield(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hnfield"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hnfield-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn chi_f3_plane() {
    let o = hnfield(&["chi-fp", "--p", "3", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "chi = 3");
}

#[test]
fn chi_f2_plane_with_form() {
    let o = hnfield(&["chi-fp", "--p", "2", "--form", "1,1"]);
    assert_eq!(stdout(&o).trim(), "chi = 2");
}

#[test]
fn color_sqrt3_apex() {
    let o = hnfield(&["color", "--oracle", "sqrt3", "--point", "1/2; 1/2*sqrt(3)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn color_verbose_shows_steps() {
    let o = hnfield(&[
        "color",
        "--oracle",
        "q2",
        "--point",
        "7/4; 1/3",
        "--verbose",
    ]);
    let out = stdout(&o);
    assert!(out.contains("representative: 3/4; 0"), "{out}");
    assert!(out.contains("residue:"), "{out}");
}

#[test]
fn scan_primes_finds_83() {
    let o = hnfield(&[
        "scan-primes",
        "--mod4",
        "3",
        "--qr",
        "3,11",
        "--limit",
        "100",
    ]);
    assert_eq!(stdout(&o).trim(), "83");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        hnfield(&["color", "--oracle", "nope", "--point", "0; 0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hnfield(&["color", "--oracle", "sqrt3", "--point", "1/2; sqrt(5)"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hnfield(&["probe"]).status.code(), Some(2));
    assert_eq!(
        hnfield(&["scan-primes", "--mod4", "2", "--limit", "10"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn budgets_exit_3() {
    assert_eq!(
        hnfield(&["chi-fp", "--p", "5", "--d", "9"]).status.code(),
        Some(3)
    );
    let o = hnfield(&["chi-fp", "--p", "11", "--d", "2", "--node-budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("<= chi <="));
}

#[test]
fn points_file_with_comments() {
    let path = tmp("triangle.pts");
    std::fs::write(
        &path,
        "# unit triangle\n0; 0\n1; 0  # base\n\n1/2; 1/2*sqrt(3)\n",
    )
    .unwrap();
    let o = hnfield(&[
        "chi-points",
        "--field",
        "quad:3",
        "--points",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("chi = 3"));
}

#[test]
fn dimacs_round_trip() {
    let path = tmp("spindle.col");
    let o = hnfield(&[
        "export-dimacs",
        "--fixture",
        "moser_spindle",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("p edge 7 11"));
    let piped = stdout(&hnfield(&["export-dimacs", "--fixture", "moser_spindle"]));
    assert_eq!(piped, text);
    let probe = stdout(&hnfield(&["probe", "--dimacs", path.to_str().unwrap()]));
    assert!(probe.contains("\"m\": 11"), "{probe}");
}

#[test]
fn certificate_is_audited() {
    let cert = tmp("f5.json");
    let o = hnfield(&[
        "chi-fp",
        "--p",
        "5",
        "--d",
        "2",
        "--certificate",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = hnfield(&[
        "probe",
        "--fp",
        "5",
        "--d",
        "2",
        "--check-certificate",
        cert.to_str().unwrap(),
        "--rerun-unsat",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("certificate OK"));
    // the same certificate against another graph
    let o = hnfield(&[
        "probe",
        "--fp",
        "3",
        "--d",
        "2",
        "--check-certificate",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let a = hnfield(&["probe", "--fixture", "c9_sqrt7"]);
    let b = hnfield(&["probe", "--fixture", "c9_sqrt7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_paper_small_run() {
    let json = tmp("claims.json");
    let o = hnfield(&[
        "verify-paper",
        "--samples",
        "200",
        "--budget",
        "30",
        "--json",
        json.to_str().unwrap(),
    ]);
    let out = stdout(&o);
    assert!(out.contains("chi_f11_equals_5"), "{out}");
    // the verbatim two-coloring of the sqrt(2) quotient is improper
    assert!(out.contains("sqrt2_published_coloring"));
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v.as_array().map(Vec::len), Some(21));
}
