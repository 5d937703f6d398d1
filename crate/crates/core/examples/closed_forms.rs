//! Evaluates a basis element three ways — the exact polynomial, the
//! Legendre–Chebyshev closed form and the spherical-harmonic form — at a
//! rational point, where all three must agree exactly.

use riesz::basis::{closed_form_trig, pointwise_bound, spherical_harmonic_form_trig, BasisIndex};
use riesz::basis::basis_polynomial;
use riesz::scalar::rat;
use riesz::special::TrigPoint;

fn main() {
    // cos/sin from half-angle tangents 1/2 and −2/3 keep everything rational
    let p = TrigPoint::from_half_angle_tangents(rat(3, 4), rat(1, 2), rat(-2, 3)).expect("s1 ≥ 0");
    let x = p.to_cartesian();
    for idx in [BasisIndex::x(3, 0), BasisIndex::x(4, 2), BasisIndex::y(5, 6)] {
        let direct = basis_polynomial(idx).evaluate_reduced(&x).expect("A-valued");
        let closed = closed_form_trig(idx, &p);
        let harmonic = spherical_harmonic_form_trig(idx, &p);
        println!("{idx}");
        println!("  polynomial          {:?}", direct.to_f64());
        println!("  closed form agrees  {}", closed == direct);
        println!("  harmonic agrees     {}", harmonic == direct);
        println!(
            "  |value| = {:.6} ≤ bound {:.6}",
            direct.to_f64().norm(),
            pointwise_bound(idx, 0.75)
        );
    }
}
