//! The corpus sweep at reduced size, summarized per inequality.

use riesz::basis::BasisIndex;
use riesz::bounds::{check_coefficients, sweep, Inequality, SweepConfig};
use riesz::fourier::FourierCoefficients;
use riesz::scalar::rat_int;

fn main() {
    let config = SweepConfig {
        basis_degree: 4,
        random_count: 5,
        grid_nodes: 4_000,
        ..SweepConfig::default()
    };
    let reports = sweep(&config).expect("sweep");
    for inequality in Inequality::ALL {
        let rows: Vec<_> = reports.iter().filter(|r| r.inequality == inequality).collect();
        let ratio = |r: &&&riesz::bounds::BoundReport| r.lhs / r.rhs;
        let worst = rows
            .iter()
            .filter(|r| r.rhs > 0.0)
            .max_by(|a, b| ratio(a).total_cmp(&ratio(b)))
            .expect("nonempty");
        println!(
            "{:<22} {:>5} rows, {} failed, tightest: {} at r/R = {:.1} (lhs/rhs = {:.4})",
            inequality.id(),
            rows.len(),
            rows.iter().filter(|r| !r.pass).count(),
            worst.function,
            worst.r / worst.radius,
            worst.lhs / worst.rhs
        );
    }

    // below the corpus ratios the derivative bound's right side tends to 0
    // while the left side tends to |½D̄f(0)|; logged, not asserted
    for idx in [BasisIndex::x(1, 0), BasisIndex::x(1, 1), BasisIndex::y(2, 1)] {
        let mut c = FourierCoefficients::zeros(rat_int(1), idx.n);
        c.set_value(idx, 1.0).unwrap();
        let rows = check_coefficients(&idx.to_string(), &c, &[0.02, 0.05, 0.1], 10_000).unwrap();
        for r in rows.iter().filter(|r| r.inequality == Inequality::Derivative) {
            println!("derivative {:<6} r/R = {:.2}: lhs {:.4e}, rhs {:.4e}, margin {:+.4e}", r.function, r.r, r.lhs, r.rhs, r.margin);
        }
    }
}
