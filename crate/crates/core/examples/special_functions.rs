//! Ferrers functions, Chebyshev polynomials at negative indices, and the
//! spherical harmonics built from them.

use riesz::special::{assoc_legendre, chebyshev_t, chebyshev_u, spherical_u, spherical_v};

fn main() {
    let t = 0.3;
    for m in -1..=3 {
        println!("P_3^{m}({t}) = {:+.6}", assoc_legendre(3, m, t).expect("valid order"));
    }
    for k in -2..=3 {
        println!("T_{k}({t}) = {:+.6}   U_{k}({t}) = {:+.6}", chebyshev_t(k, t), chebyshev_u(k, t));
    }
    println!("U_4^2(π/3, π/5) = {:+.6}", spherical_u(4, 2, std::f64::consts::FRAC_PI_3, std::f64::consts::PI / 5.0));
    println!("V_4^2(π/3, π/5) = {:+.6}", spherical_v(4, 2, std::f64::consts::FRAC_PI_3, std::f64::consts::PI / 5.0));
}
