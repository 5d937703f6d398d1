//! Every example runs to completion.

use std::process::Command;

fn run_example(name: &str, args: &[&str]) -> String {
    let o = Command::new(env!("CARGO"))
        .args(["run", "--offline", "-q", "--example", name, "--"])
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("cargo runs");
    assert!(o.status.success(), "{name}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

#[test]
fn examples_run() {
    assert!(run_example("quaternion_algebra", &[]).contains("Riesz residual vanishes: true"));
    assert!(run_example("basis_table", &["2", "5/2"]).contains("degree 2: 7 elements"));
    let closed = run_example("closed_forms", &[]);
    assert_eq!(closed.lines().filter(|l| l.contains("agrees") && l.ends_with("true")).count(), 6);
    assert_eq!(run_example("recurrences", &[]).matches(", 0 failed").count(), 7);
    let fourier = run_example("fourier_projection", &[]);
    assert!(fourier.contains("roundtrip exact: true") && fourier.contains("matches: true"));
    assert!(run_example("growth_bounds", &[]).contains("all pass: true"));
    assert_eq!(run_example("bound_sweep", &[]).matches(" 0 failed").count(), 5);
    assert!(!run_example("identity_suite", &["3"]).contains("FAIL"));
    assert!(run_example("special_functions", &[]).contains("U_-1(0.3) = +0.000000"));
}
