use std::path::PathBuf;
use std::process::{Command, Output};

const E11_D5: &str = "vars: 3\nx1^5\nx1^4 x2\nx1 x2^4\nx2^5\nx1^2 x2^3 x3\n";
const STAIRCASE: &str = "vars: 3\n2 -1 0 >= 0\n0 2 -1 >= 0\n";

fn write_temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("brodmann-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brodmann"))
        .args(args)
        .env_remove("BRODMANN_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn e11_profile_ends_stable_at_x1_x2() {
    let f = write_temp("e11.txt", E11_D5);
    let o = run(&["ass-profile", "--ideal", f.to_str().unwrap(), "--n-max", "6"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().filter(|l| !l.starts_with('#') && !l.starts_with("n\t")).collect();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[1], "1\t{x1,x2},{x1,x2,x3}\t2");
    for (n, row) in rows.iter().enumerate().skip(2) {
        assert_eq!(*row, format!("{n}\t{{x1,x2}}\t{}", n + 1));
    }
    assert!(out.contains("# observed_stable_at\t2\t(shifted 3)"));
}

#[test]
fn methods_and_jobs_do_not_change_output() {
    let f = write_temp("e11-both.txt", E11_D5);
    let p = f.to_str().unwrap();
    let base = stdout(&run(&["ass-profile", "--ideal", p, "--n-max", "5"]));
    let both = run(&["--jobs", "4", "ass-profile", "--ideal", p, "--n-max", "5", "--method", "both"]);
    assert!(both.status.success());
    assert_eq!(stdout(&both), base);
    let json: serde_json::Value =
        serde_json::from_slice(&run(&["--format", "json", "ass-profile", "--ideal", p, "--n-max", "5"]).stdout).unwrap();
    assert_eq!(json["observed_stable_at"], 2);
    assert_eq!(json["observed_stable_at_shifted"], 3);
}

#[test]
fn staircase_hilbert_basis_contains_1_2_4() {
    let f = write_temp("staircase.txt", STAIRCASE);
    let o = run(&["cone", "--system", f.to_str().unwrap(), "--hilbert", "--cap", "8"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "hilbert\t(1,2,4)"));
}

#[test]
fn bound_2_2_2() {
    let o = run(&["bound", "--r", "2", "--s", "2", "--d", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let b = out.lines().find(|l| l.starts_with("B\t")).unwrap();
    assert_eq!(b.split('\t').nth(2), Some("16777216"));
    let json: serde_json::Value =
        serde_json::from_slice(&run(&["--format", "json", "bound", "--r", "2", "--s", "2", "--d", "2"]).stdout).unwrap();
    assert_eq!(json["B"]["ceiling"], "16777216");
}

#[test]
fn reference_examples_pass() {
    let o = run(&["paper-examples"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn parse_errors_exit_2_with_location() {
    let f = write_temp("bad.txt", "vars: 3\nx1^2\nx4\n");
    let o = run(&["ass", "--ideal", f.to_str().unwrap(), "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(run(&["ass-profile"]).status.code(), Some(2));
}

#[test]
fn budget_errors_exit_3() {
    let f = write_temp("staircase-budget.txt", STAIRCASE);
    let o = Command::new(env!("CARGO_BIN_EXE_brodmann"))
        .args(["cone", "--system", f.to_str().unwrap(), "--hilbert"])
        .env("BRODMANN_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn emitted_system_parses_back() {
    let f = write_temp("e11-ed.txt", E11_D5);
    let o = run(&["build-system", "--ideal", f.to_str().unwrap(), "--mode", "ed2"]);
    assert!(o.status.success());
    let sys = write_temp("ed2.txt", &stdout(&o));
    let again = run(&["feasible", "--system", sys.to_str().unwrap(), "--fix", "z=0", "--box", "0"]);
    assert!(again.status.success());
    assert!(stdout(&again).starts_with("feasible\t(0,"));
}

#[test]
fn membership_feasibility() {
    let f = write_temp("e11-member.txt", E11_D5);
    let p = f.to_str().unwrap();
    let yes = stdout(&run(&["feasible", "--ideal", p, "--n", "2", "--monomial", "x1^6 x2^4"]));
    assert!(yes.starts_with("feasible\t"));
    let no = stdout(&run(&["feasible", "--ideal", p, "--n", "2", "--monomial", "x1^6 x2^3"]));
    assert!(no.starts_with("infeasible\t"));
}

#[test]
fn closure_and_a0_json() {
    let f = write_temp("e11-rr.txt", E11_D5);
    let p = f.to_str().unwrap();
    let rr: serde_json::Value =
        serde_json::from_slice(&run(&["--format", "json", "rr", "--ideal", p, "--n", "1"]).stdout).unwrap();
    assert_eq!(rr["certified"], true);
    assert!(rr["closure_generators"].as_array().unwrap().contains(&serde_json::json!([3, 2, 0])));
    let a0: serde_json::Value =
        serde_json::from_slice(&run(&["--format", "json", "a0", "--ideal", p, "--n-max", "4"]).stdout).unwrap();
    assert_eq!(a0["a0"], 1);
    assert_eq!(a0["per_degree_flags"], serde_json::json!([true, true, false, false]));
}
