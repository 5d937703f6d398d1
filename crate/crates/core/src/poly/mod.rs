//! Exact multivariate polynomials in `(x0, x1, x2)` with quaternion
//! coefficients, the operators `D`, `D̄`, `Δ₃`, `grad`, and exact ball
//! integration.

mod apoly;
pub mod compiled;
pub mod integrate;
pub mod json;
mod monomial;
pub mod operators;
mod scalar_poly;

pub use apoly::{support, APoly, QPoly};
pub use compiled::CompiledPoly;
pub use integrate::{ball_integral_monomial, inner_product_l2, norm_sqr_l2};
pub use monomial::Monomial;
pub use operators::{
    apply_d, apply_dbar, grad, hypercomplex_derivative, laplacian, riesz_residual, RieszResidual,
};
pub use scalar_poly::{Poly, ScalarPoly};
