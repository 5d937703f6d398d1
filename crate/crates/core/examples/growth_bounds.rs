//! Evaluates every growth inequality for one series at several radii,
//! printing left side, right side and margin.

use riesz::basis::BasisIndex;
use riesz::bounds::{check_coefficients, reports_to_csv};
use riesz::fourier::FourierCoefficients;
use riesz::scalar::rat;

fn main() {
    let mut c = FourierCoefficients::zeros(rat(2, 1), 3);
    c.set_value(BasisIndex::x(0, 0), 0.5).unwrap();
    c.set_value(BasisIndex::x(1, 1), -1.0).unwrap();
    c.set_value(BasisIndex::y(2, 2), 0.25).unwrap();
    c.set_value(BasisIndex::x(3, 0), 0.1).unwrap();

    let reports = check_coefficients("example", &c, &[0.1, 0.3, 0.5, 0.7, 0.9], 10_000).expect("bounds");
    print!("{}", reports_to_csv(&reports));
    let worst = reports.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min);
    println!("smallest margin {worst:e}, all pass: {}", reports.iter().all(|r| r.pass));
}
