//! Quaternion arithmetic, the Riesz system and the Cauchy–Riemann operator
//! on a small hand-built polynomial.

use riesz::poly::{apply_d, hypercomplex_derivative, riesz_residual};
use riesz::{APoly, Quaternion, Rational, ScalarPoly};

fn main() {
    let e1 = Quaternion::<f64>::e1();
    let e2 = Quaternion::<f64>::e2();
    println!("e1 e2 = {:?}", &e1 * &e2);
    println!("e2 e1 = {:?}", &e2 * &e1);

    // f = x0 + x1 e1: a monogenic function of degree 1
    let x0 = ScalarPoly::var(0);
    let x1 = ScalarPoly::var(1);
    let f = APoly::reduced(x0, x1, ScalarPoly::zero());
    println!("f       = {f}");
    println!("D f     = {}", apply_d(&f));
    println!("½ D̄ f   = {}", hypercomplex_derivative(&f));
    let res = riesz_residual(&f).expect("A-valued");
    println!("Riesz residual vanishes: {}", res.is_zero());

    let third = Rational::new(1.into(), 3.into());
    println!("f(1/3, 1/3, 0) = {:?}", f.evaluate(&[third.clone(), third, Rational::from_integer(0.into())]));
}
