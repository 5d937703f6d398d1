//! Projects a monogenic polynomial onto the basis, reconstructs it, and
//! shows Parseval and the split f = f(0) + g + h.

use riesz::basis::{basis_polynomial, BasisIndex};
use riesz::fourier::{decompose, project, pythagoras_terms};
use riesz::poly::inner_product_l2;
use riesz::scalar::rat;

fn main() {
    let radius = rat(3, 2);
    let f = &(&*basis_polynomial(BasisIndex::x(0, 0)) + &basis_polynomial(BasisIndex::y(2, 1)).scale(&rat(-2, 5)))
        + &basis_polynomial(BasisIndex::x(3, 4)).scale(&rat(1, 7));

    let c = project(&f, 4, &radius).expect("monogenic");
    for (idx, k) in c.iter().filter(|(_, k)| !k.is_zero()) {
        println!("{idx:<8} a = {:+.6}", k.value);
    }
    let back = c.synthesize_poly().expect("exact");
    println!("roundtrip exact: {}", back == f);

    let norm = inner_product_l2(&f, &f, &radius);
    let sum = c.sum_of_squares().expect("exact");
    println!("‖f‖² = {norm}, Σ a² = {sum}");

    let d = decompose(&c);
    let (f0, g, h) = pythagoras_terms(&d).expect("exact");
    println!("f(0) = {:?}", d.f0);
    println!("‖f(0)‖² + ‖g‖² + ‖h‖² = {f0} + {g} + {h}");
    println!("matches: {}", f0 + g + h == norm);
    println!("{}", serde_json::to_string_pretty(&c.to_json()).expect("json"));
}
