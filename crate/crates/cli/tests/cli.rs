//! Integration tests driving the installed binary.

use std::process::Command;

fn fps() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fps"))
}

fn stdout_of(out: &std::process::Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_pentagonal_passes() {
    let out = fps()
        .args(["verify", "eptn", "--order", "60"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("PASS"));
}

#[test]
fn verify_unknown_identity_fails_cleanly() {
    let out = fps()
        .args(["verify", "no-such-id", "--order", "10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown identity"));
}

#[test]
fn eval_division_by_zero_exits_one() {
    let out = fps().args(["eval", "1/0", "--order", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("division") || err.contains("zero") || err.contains("1/0"), "{err}");
}

#[test]
fn eval_geometric_series() {
    let out = fps()
        .args(["eval", "1/(1-X)", "--order", "6"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out).trim(),
        "1 + X + X^2 + X^3 + X^4 + X^5 + O(X^6)"
    );
}

#[test]
fn eval_json_form() {
    let out = fps()
        .args(["eval", "exp(X)", "--order", "4", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(v["ring"], "rational");
    assert_eq!(v["precision"], 4);
    assert_eq!(v["coeffs"][2], "1/2");
}

#[test]
fn eval_over_residue_ring() {
    let out = fps()
        .args(["eval", "inv(1-X)", "--order", "4", "--ring", "mod:7"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("mod 7"), "{text}");

    let out = fps()
        .args(["eval", "exp(X)", "--order", "4", "--ring", "mod:7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("characteristic"));
}

#[test]
fn eval_over_gaussian_ring() {
    let out = fps()
        .args(["eval", "cos(X)", "--order", "3", "--ring", "gaussian"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("1+0i"));
}

#[test]
fn reverse_agrees_both_ways() {
    let out = fps()
        .args(["reverse", "X-X^3", "--order", "12", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(v["methods_agree"], true);
    assert_eq!(v["reverse"]["coeffs"][1], "1");
    assert_eq!(v["reverse"]["coeffs"][3], "1");
    // reverse of X - X^3 starts X + X^3 + 3X^5 + 12X^7
    assert_eq!(v["reverse"]["coeffs"][5], "3");
    assert_eq!(v["reverse"]["coeffs"][7], "12");
}

#[test]
fn table_bernoulli_renders_exact_rationals() {
    let out = fps()
        .args(["table", "bernoulli", "--max", "4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("n,value\n0,1\n1,-1/2\n2,1/6\n3,0\n4,-1/30\n"), "{text}");
}

#[test]
fn table_gl_classes_renders_polynomials() {
    let out = fps()
        .args(["table", "gl-classes", "--max", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("1,q - 1"), "{text}");
    assert!(text.contains("2,q^2 - 1"), "{text}");
    assert!(text.contains("3,q^3 - q"), "{text}");
}

#[test]
fn table_stirling_requires_param() {
    let out = fps()
        .args(["table", "stirling2", "--max", "6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = fps()
        .args(["table", "stirling2", "--max", "6", "--param", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    // S(3,2) = 3, S(4,2) = 7
    let text = stdout_of(&out);
    assert!(text.contains("3,3\n"), "{text}");
    assert!(text.contains("4,7\n"), "{text}");
}

#[test]
fn table_divisors_starts_at_one() {
    let out = fps()
        .args(["table", "divisors", "--max", "6"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("n,value\n1,1\n"), "{text}");
    assert!(text.ends_with("6,4\n"), "{text}");
}

#[test]
fn macmahon_subcommand_reads_matrix_file() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("fps-dixon-{}.json", std::process::id()));
    std::fs::write(&path, "[[0,1,-1],[-1,0,1],[1,-1,0]]").unwrap();
    let out = fps()
        .args([
            "macmahon",
            "--matrix",
            path.to_str().unwrap(),
            "--powers",
            "2,2,2",
            "--json",
        ])
        .output()
        .unwrap();
    std::fs::remove_file(&path).ok();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(v["lhs"], "-6");
    assert_eq!(v["equal"], true);
    assert_eq!(v["mac1_ok"], true);
}

#[test]
fn usage_errors_exit_two() {
    let out = fps().args(["eval", "1+X"]).output().unwrap(); // missing --order
    assert_eq!(out.status.code(), Some(2));
    let out = fps().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn order_guard_is_enforced() {
    let out = fps()
        .env("FPS_MAX_ORDER", "50")
        .args(["eval", "1+X", "--order", "100"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("FPS_MAX_ORDER"));
}

#[test]
fn verify_json_lines() {
    let out = fps()
        .args(["verify", "eptn", "--order", "40", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(v["id"], "eptn");
    assert_eq!(v["holds"], true);
}

#[test]
fn runs_are_deterministic() {
    let run = || {
        stdout_of(
            &fps()
                .args(["eval", "rev(X/(1-X))", "--order", "9"])
                .output()
                .unwrap(),
        )
    };
    let first = run();
    for _ in 0..3 {
        assert_eq!(run(), first);
    }
}
