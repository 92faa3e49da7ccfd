use std::io::Write;
use std::process::{Command, Output};

use binconv::expr::parse;
use serde_json::Value;

fn binconv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binconv")).args(args).output().expect("spawn binconv")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bprod_and_hprod_print_reduced_fractions() {
    let o = binconv(&["bprod", "fib", "pell"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(2*x^2 - 3*x^3) / (1 - 6*x + 7*x^2 + 6*x^3 - 9*x^4)");
    // termwise product of Fibonacci and Pell numbers, denominator from the power-sum table
    let o = binconv(&["hprod", "x/(1-x-x^2)", "x/(1-2x-x^2)", "--method", "symfun"]);
    assert_eq!(stdout(&o).trim(), "(x - x^3) / (1 - 2*x - 7*x^2 - 2*x^3 + x^4)");
}

#[test]
fn cross_check_runs_every_method() {
    let o = binconv(&["bprod", "trib", "trib", "--cross-check", "--json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["num"], serde_json::json!(["0", "0", "2", "-2", "-2", "-4"]));
    assert_eq!(v["den"], serde_json::json!(["1", "-4", "0", "2", "12", "-8", "-16"]));
}

#[test]
fn json_uses_rational_strings() {
    let o = binconv(&["--json", "eval", "geom(2/3) + 1/2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["num"], serde_json::json!(["3/2", "-1/3"]));
    assert_eq!(v["den"], serde_json::json!(["1", "-2/3"]));
}

#[test]
fn coefficients_feed_reconstruction() {
    let o = binconv(&["coeffs", "lucas obprod fib", "-n", "12"]);
    assert!(o.status.success());
    let first: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(first.len(), 12);
    // sum_k C(n,k) L_k F_(n-k) for n = 0..3, by hand
    assert_eq!(first[..4], ["0", "2", "4", "16"]);

    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# lucas obprod fib").unwrap();
    file.write_all(stdout(&o).as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();
    let back = binconv(&["reconstruct", "--coeffs", path, "--den-deg", "2", "--num-deg", "1"]);
    assert!(back.status.success(), "{}", String::from_utf8_lossy(&back.stderr));
    let direct = binconv(&["eval", "lucas obprod fib"]);
    assert_eq!(stdout(&back), stdout(&direct));

    let short = binconv(&["reconstruct", "--coeffs", path, "--den-deg", "1", "--num-deg", "1"]);
    assert_eq!(short.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&short.stderr).contains("degree bounds"));
}

#[test]
fn reconstruct_rejects_malformed_files() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "1\n1/0\n2").unwrap();
    let o = binconv(&["reconstruct", "--coeffs", file.path().to_str().unwrap(), "--den-deg", "1", "--num-deg", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:"));
}

#[test]
fn denominator_before_cancellation() {
    let o = binconv(&["denominator", "fib", "pell", "--kind", "binomial"]);
    assert_eq!(stdout(&o).trim(), "1 - 6*x + 7*x^2 + 6*x^3 - 9*x^4");
    let o = binconv(&["denominator", "fib", "pell", "--kind", "hadamard"]);
    assert_eq!(stdout(&o).trim(), "1 - 2*x - 7*x^2 - 2*x^3 + x^4");
}

#[test]
fn recurrence_of_perrin() {
    let o = binconv(&["recurrence", "perrin"]);
    assert_eq!(stdout(&o).trim(), "a(n) = a(n-2) + a(n-3) for n >= 3; a(0) = 3, a(1) = 0, a(2) = 2");
}

#[test]
fn exit_codes() {
    let o = binconv(&["eval", "x/(1-x"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("position 6") && err.contains(")"), "{err}");
    assert_eq!(binconv(&["eval", "1/x"]).status.code(), Some(1));
    assert_eq!(binconv(&["bprod", "fib", "1/(x-x)"]).status.code(), Some(1));
    assert_eq!(binconv(&["verify", "--only", "zz"]).status.code(), Some(1));
    assert_eq!(binconv(&["eval", "nosuch(1)"]).status.code(), Some(2));
}

#[test]
fn verify_selected_identities() {
    let o = binconv(&["verify", "--only", "f,l", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
    let ids: Vec<&str> = v["records"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["f", "l"]);
    let o = binconv(&["verify", "--only", "hadamard"]);
    let text = stdout(&o);
    assert!(text.contains("(j)") && text.contains("(k)") && !text.contains("(a)"));
}

#[test]
fn printed_expressions_reparse() {
    for src in ["1 - 2x - x^2", "-(x+1)^-2 ⊙ geom(-1/2)", "trib(1,-2,-7) ∗ fibsec(2, 1)", "x(1-x)/(2 - x)"] {
        let e = parse(src).unwrap();
        let o = binconv(&["eval", &e.to_string()]);
        assert_eq!(stdout(&o), stdout(&binconv(&["eval", src])), "{src}");
    }
}
