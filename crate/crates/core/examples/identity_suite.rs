//! Runs every exact identity suite at a chosen degree (default 5).

use riesz::checks::{run_suite, SuiteConfig};

fn main() {
    let max_degree = std::env::args().nth(1).map(|s| s.parse().expect("degree")).unwrap_or(5);
    let config = SuiteConfig {
        max_degree,
        points: 20,
        grid_nodes: 4_000,
        random_functions: 10,
        ..SuiteConfig::default()
    };
    let results = run_suite(&config);
    for r in &results {
        println!("{} {:<28} {}", if r.passed { "ok  " } else { "FAIL" }, r.id, r.detail);
    }
    if results.iter().any(|r| !r.passed) {
        std::process::exit(1);
    }
}
