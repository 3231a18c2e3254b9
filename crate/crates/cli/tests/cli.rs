use std::collections::BTreeSet;
use std::process::{Command, Output};

use chsh_spectra::operators::{build_sum_truncation, three_by_three_example, PairFamily};
use chsh_spectra::tridiag::tridiag_eigenvalues;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chsh-spectra"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines.map(|l| l.split(',').map(String::from).collect()).collect();
    (header, rows)
}

fn column(rows: &[Vec<String>], i: usize) -> Vec<f64> {
    rows.iter().map(|r| r[i].parse().unwrap()).collect()
}

#[test]
fn leading_block_spectrum_has_outliers_at_three_halves() {
    let (header, rows) =
        csv_rows(&stdout(&["spectrum", "--family", "eq3", "--omega", "pi/2", "--theta", "acos(-0.8)", "--n", "600"]));
    assert_eq!(header, ["index", "eigenvalue"]);
    assert_eq!(rows.len(), 600);
    let eig = column(&rows, 1);
    assert!((eig[0] + 1.5).abs() < 1e-8);
    assert!((eig[599] - 1.5).abs() < 1e-8);
}

#[test]
fn row_count_equals_order() {
    let (_, rows) = csv_rows(&stdout(&["spectrum", "--family", "constant", "--theta", "pi/2", "--n", "4"]));
    assert_eq!(rows.len(), 4);
    assert_eq!(rows.iter().map(|r| r[0].as_str()).collect::<Vec<_>>(), ["1", "2", "3", "4"]);
}

#[test]
fn general_file_reproduces_three_by_three_example() {
    let pair = three_by_three_example(0.01).unwrap();
    let fmt = |m: &chsh_spectra::tridiag::DenseSymmetricMatrix| {
        (0..3)
            .map(|i| (0..3).map(|j| format!("{:e}", m.get(i, j))).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.txt");
    std::fs::write(&path, format!("3\n{}\n\n{}\n", fmt(pair.a()), fmt(pair.b()))).unwrap();
    let (_, rows) = csv_rows(&stdout(&["spectrum", "--family", "general-file", "--input", path.to_str().unwrap()]));
    let eig = column(&rows, 1);
    for (got, want) in eig.iter().zip([-0.2, 0.2, 2.0]) {
        assert!((got - want).abs() < 1e-10, "{eig:?}");
    }
    let (header, rows) = csv_rows(&stdout(&["rho", "--family", "general-file", "--input", path.to_str().unwrap()]));
    assert_eq!(header, ["lambda_max", "rho_numeric", "rho_commutator"]);
    let rho: f64 = rows[0][1].parse().unwrap();
    assert!((rho - (0.04f64 * 3.96).sqrt()).abs() < 1e-10);
}

#[test]
fn figure_one_right_panel_preset() {
    let (header, rows) = csv_rows(&stdout(&["figure", "1", "--panel", "right"]));
    assert_eq!(header, ["theta", "index", "eigenvalue", "i_commutator_eig"]);
    assert_eq!(rows.len(), 31 * 600);
    let thetas: BTreeSet<String> = rows.iter().map(|r| r[0].clone()).collect();
    assert_eq!(thetas.len(), 31);
    assert!(thetas.contains("0.1") && thetas.contains("3.1"));
    let f = PairFamily::leading_block(std::f64::consts::FRAC_PI_2, 0.1).unwrap();
    let m = build_sum_truncation(&f, 600).unwrap();
    let first: Vec<f64> = column(&rows[..600], 2);
    for (a, b) in first.iter().zip(tridiag_eigenvalues(&m, m.default_tol()).values()) {
        assert!((a - b).abs() < 1e-13 * b.abs().max(1.0));
    }
    for r in &rows {
        let (lam, mu): (f64, f64) = (r[2].parse().unwrap(), r[3].parse().unwrap());
        assert!((mu * mu - lam * lam * (4.0 - lam * lam)).abs() < 1e-10);
        assert!(mu == 0.0 || (mu < 0.0) == (lam < 0.0));
    }
}

#[test]
fn figure_three_preset_uses_two_block_perturbation() {
    let (_, rows) = csv_rows(&stdout(&["figure", "3"]));
    assert_eq!(rows.len(), 31 * 100);
    let f = PairFamily::two_block_perturbation(3.1).unwrap();
    assert_eq!(f.omega.head(), [1.5, 2.0]);
    assert_eq!(f.theta.head(), [2.5]);
    let m = build_sum_truncation(&f, 100).unwrap();
    let last = column(&rows[30 * 100..], 2);
    for (a, b) in last.iter().zip(tridiag_eigenvalues(&m, m.default_tol()).values()) {
        assert!((a - b).abs() < 1e-13);
    }
}

#[test]
fn figure_two_and_four_shapes() {
    let (header, rows) = csv_rows(&stdout(&["figure", "2"]));
    assert_eq!(header, ["theta", "lambda_max", "rho_numeric", "rho_closed"]);
    assert_eq!(rows.len(), 31);
    let (_, rows) = csv_rows(&stdout(&["figure", "4", "--panel", "right"]));
    assert_eq!(rows.len(), 31 * 200);
}

#[test]
fn sweep_spectrum_mode_is_wide() {
    let (header, rows) = csv_rows(&stdout(&["sweep", "--family", "constant", "--theta", "0.5:0.5:1.5", "--n", "6"]));
    assert_eq!(header, ["theta", "eig_1", "eig_2", "eig_3", "eig_4", "eig_5", "eig_6"]);
    assert_eq!(rows.len(), 3);
}

#[test]
fn json_numbers_are_strings() {
    let text = stdout(&["rho", "--family", "constant", "--theta", "1", "--n", "100", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let row = &v["rows"][0];
    assert_eq!(row[0], "1");
    let rho: f64 = row[2].as_str().unwrap().parse().unwrap();
    assert!((rho - 2.0).abs() < 1e-12);
}

#[test]
fn output_is_deterministic() {
    let args =
        ["sweep", "--family", "two-constant", "--omega", "0.3", "--theta", "0.1:0.3:3.1", "--n", "40", "--mode", "rho"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn odd_order_is_raised_with_warning() {
    let out = run(&["spectrum", "--theta", "1", "--n", "7"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("n = 8"));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 9);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["sweep", "--theta", "2:0.1:1"][..],
        &["spectrum", "--theta", "1", "--format", "xml"],
        &["spectrum", "--family", "nope", "--theta", "1"],
        &["spectrum", "--theta", "4"],
        &["spectrum", "--theta", "1", "--n", "2"],
        &["spectrum", "--family", "two-constant", "--theta", "1"],
        &["figure", "5"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unwritable_output_exits_3() {
    let out = run(&["spectrum", "--theta", "1", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn validate_passes_and_reports_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["validate", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["pass"], true);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.len() >= 9);
    for c in checks {
        for key in ["name", "expected", "observed", "tolerance", "pass"] {
            assert!(c.get(key).is_some(), "{c}");
        }
    }
}

#[test]
fn perturbed_validate_fails() {
    let out = run(&["validate", "--perturb", "--trials", "20"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["pass"], false);
}
