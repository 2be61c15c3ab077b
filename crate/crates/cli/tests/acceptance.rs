//! Criterion 15: command-line end to end.

use std::process::Command;
use std::time::Instant;

fn fps() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fps"))
}

#[test]
fn criterion_15_cli_end_to_end() {
    let t = Instant::now();

    // `verify all --order 40` exits 0 with a PASS line per identity
    let out = fps()
        .args(["verify", "all", "--order", "40"])
        .output()
        .expect("spawn fps");
    assert!(
        out.status.success(),
        "verify all failed:\n{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.lines().count() >= 40);
    assert!(stdout.lines().all(|l| l.contains("PASS")));

    // `table partitions --max 7` ends with 7,15
    let out = fps()
        .args(["table", "partitions", "--max", "7"])
        .output()
        .expect("spawn fps");
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(stdout.lines().last().unwrap(), "7,15");

    // the deliberately corrupted registry fixture fails with a
    // first-mismatch index and exit code 1
    let out = fps()
        .args(["verify", "selftest-mismatch", "--order", "10"])
        .output()
        .expect("spawn fps");
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("FAIL"), "{stdout}");
    assert!(stdout.contains("index 1"), "{stdout}");

    println!(
        "PASS criterion 15: CLI end to end ({:.3}s)",
        t.elapsed().as_secs_f64()
    );
}
