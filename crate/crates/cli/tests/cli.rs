use std::fs;
use std::process::{Command, Output};

const HEADER: &str = "ell,eta,t,rho,exact_logq_norm,ub_entropy,lb_entropy_max,ub_kappa_closed,\
ub_integral_gamma,ub_integral_kappa,lb_closed,lb_closed_env";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphere-bounds"))
        .args(args)
        .env("RUST_LOG", "info")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn column(csv: &str, name: &str) -> Vec<String> {
    let mut lines = csv.lines();
    let idx = lines
        .next()
        .unwrap()
        .split(',')
        .position(|h| h == name)
        .unwrap();
    lines
        .map(|l| l.split(',').nth(idx).unwrap().to_string())
        .collect()
}

#[test]
fn exact_small_instance() {
    let out = run(&["exact", "--q", "2", "--m", "2", "--eta", "2", "--ell", "2"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    assert_eq!(csv.lines().next().unwrap(), HEADER);
    let exact: Vec<f64> = column(&csv, "exact_logq_norm")
        .iter()
        .map(|c| c.parse().unwrap())
        .collect();
    let expected = [1.0f64, 18.0, 93.0, 108.0, 36.0];
    assert_eq!(exact.len(), 5);
    assert_eq!(exact[0], 0.0);
    for (got, e) in exact.iter().zip(expected) {
        assert!((got - e.log2() / 2.0).abs() < 1e-11);
    }
    assert!(column(&csv, "ub_entropy").iter().all(String::is_empty));
}

#[test]
fn exact_single_radius_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.csv");
    let out = run(&[
        "exact",
        "--q",
        "2",
        "--m",
        "2",
        "--eta",
        "2",
        "--ell",
        "2",
        "--t",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let csv = fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().count(), 2);
    assert!(csv.lines().nth(1).unwrap().starts_with("2,2,3,1.5,"));
}

#[test]
fn compare_rho_is_deterministic_and_sandwiched() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2)
        .map(|i| dir.path().join(format!("run{i}.csv")))
        .collect();
    for p in &paths {
        let out = run(&[
            "compare-rho",
            "--q",
            "2",
            "--m",
            "3",
            "--eta",
            "3",
            "--ell",
            "12",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let a = fs::read(&paths[0]).unwrap();
    assert_eq!(a, fs::read(&paths[1]).unwrap());
    let csv = String::from_utf8(a).unwrap();
    assert_eq!(csv.lines().count(), 1 + 37);
    let ub = column(&csv, "ub_entropy");
    assert!(ub[0].is_empty() && ub[36].is_empty());
    assert!(ub[1..36].iter().all(|c| !c.is_empty()));
}

#[test]
fn compare_rho_without_exact() {
    let out = run(&[
        "compare-rho",
        "--q",
        "3",
        "--m",
        "2",
        "--eta",
        "4",
        "--ell",
        "5",
        "--no-exact",
        "--epsilon",
        "0.2",
    ]);
    assert!(out.status.success());
    let csv = stdout(&out);
    assert!(column(&csv, "exact_logq_norm").iter().all(String::is_empty));
    assert!(column(&csv, "lb_closed").iter().all(|c| !c.is_empty()));
}

#[test]
fn compare_ell_reports_skipped_divisors() {
    let out = run(&[
        "compare-ell",
        "--q",
        "2",
        "--m",
        "3",
        "--n",
        "12",
        "--t",
        "7",
    ]);
    assert!(out.status.success());
    let ells = column(&stdout(&out), "ell");
    assert_eq!(ells, ["3", "4", "6", "12"]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("skipping ell=1"));
    assert!(stderr.contains("skipping ell=2"));
}

#[test]
fn literal_binomial_is_an_invariant_violation() {
    let out = run(&[
        "compare-rho",
        "--q",
        "2",
        "--m",
        "2",
        "--eta",
        "2",
        "--ell",
        "8",
        "--debug-literal-binomial",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("ell=8 t=2: exact_logq_norm"), "{stderr}");
    assert!(!stderr.contains("ell=8 t=1:"));
}

#[test]
fn selfcheck_passes_and_detects_literal_binomial() {
    let ok = run(&["selfcheck"]);
    assert!(ok.status.success());
    let report = stdout(&ok);
    assert_eq!(report.lines().count(), 7);
    assert!(report.lines().all(|l| l.starts_with("PASS")));

    let bad = run(&["selfcheck", "--debug-literal-binomial"]);
    assert_eq!(bad.status.code(), Some(2));
    let report = stdout(&bad);
    let failing: Vec<_> = report.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failing.len(), 1);
    assert!(failing[0].contains("sandwich") && failing[0].contains("t=2"));
}

#[test]
fn invalid_parameters_exit_one() {
    for args in [
        &["exact", "--q", "6", "--m", "2", "--eta", "2", "--ell", "2"][..],
        &["exact", "--q", "2", "--m", "0", "--eta", "2", "--ell", "2"],
        &[
            "exact", "--q", "2", "--m", "2", "--eta", "2", "--ell", "2", "--t-max", "5",
        ],
        &[
            "compare-rho",
            "--q",
            "2",
            "--m",
            "2",
            "--eta",
            "2",
            "--ell",
            "2",
            "--epsilon",
            "1.5",
        ],
        &["exact", "--q", "2"],
        &["no-such-command"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn oversized_exact_is_refused() {
    let out = run(&[
        "exact", "--q", "2", "--m", "64", "--eta", "64", "--ell", "4000",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limb products"));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("compare-rho"));
}
