//! Builds the orthogonal basis up to degree N (default 3) on the ball of
//! radius R (default 1) and prints each element with its exact norm.
//!
//!     cargo run --example basis_table -- 4 5/2

use riesz::basis::{basis_polynomial, degree_indices, normalize};
use riesz::scalar::parse_rational;

fn main() {
    let mut args = std::env::args().skip(1);
    let max_degree: u32 = args.next().map(|s| s.parse().expect("degree")).unwrap_or(3);
    let radius = parse_rational(&args.next().unwrap_or_else(|| "1".into())).expect("radius");

    for n in 0..=max_degree {
        let idx = degree_indices(n);
        println!("degree {n}: {} elements", idx.len());
        for i in idx {
            let e = normalize(i, &radius).expect("radius > 0");
            println!("  {i:<8} ‖·‖² = {:<24} {}", e.norm_sq.to_string(), basis_polynomial(i));
        }
    }
}
