//! Differential operators on quaternion-valued polynomials.
//!
//! `D = ∂0 + e1 ∂1 + e2 ∂2` and `D̄ = ∂0 − e1 ∂1 − e2 ∂2` act from the left.

use crate::error::Result;
use crate::poly::{Poly, QPoly};
use crate::scalar::Scalar;

/// `e_i · f` for `i ∈ {1, 2}` without going through a general product.
fn left_unit<T: Scalar>(i: usize, f: &QPoly<T>) -> QPoly<T> {
    let [c0, c1, c2, c3] = f.components().clone();
    match i {
        1 => QPoly::from_components([-&c1, c0, -&c3, c2]),
        2 => QPoly::from_components([-&c2, c3, c0, -&c1]),
        _ => unreachable!("only e1 and e2 appear in D"),
    }
}

fn cauchy_riemann<T: Scalar>(f: &QPoly<T>, sign: i64) -> QPoly<T> {
    let vector = &left_unit(1, &f.partial(1)) + &left_unit(2, &f.partial(2));
    let vector = if sign < 0 { -&vector } else { vector };
    &f.partial(0) + &vector
}

/// Generalized Cauchy–Riemann operator `D f`; `f` is monogenic iff this is zero.
pub fn apply_d<T: Scalar>(f: &QPoly<T>) -> QPoly<T> {
    cauchy_riemann(f, 1)
}

/// Conjugate operator `D̄ f`.
pub fn apply_dbar<T: Scalar>(f: &QPoly<T>) -> QPoly<T> {
    cauchy_riemann(f, -1)
}

/// Hypercomplex derivative `½ D̄ f`. Meaningful for monogenic `f`; the
/// monogenicity precondition is not checked here.
pub fn hypercomplex_derivative<T: Scalar>(f: &QPoly<T>) -> QPoly<T> {
    apply_dbar(f).scale(&T::ratio(1, 2))
}

/// Componentwise Laplacian `Δ₃ f`.
pub fn laplacian<T: Scalar>(f: &QPoly<T>) -> QPoly<T> {
    QPoly::from_components(f.components().clone().map(|c| c.laplacian()))
}

/// `grad u = (∂0 u) + (∂1 u) e1 + (∂2 u) e2`, which equals `D u` for scalar `u`.
pub fn grad<T: Scalar>(u: &Poly<T>) -> QPoly<T> {
    QPoly::reduced(u.partial(0), u.partial(1), u.partial(2))
}

/// Residuals of the Riesz system `div f* = 0, rot f* = 0` for the field
/// `f* = ([f]0, −[f]1, −[f]2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RieszResidual<T> {
    /// `∂0 f0 − ∂1 f1 − ∂2 f2`
    pub div: Poly<T>,
    /// `∂1 f0 + ∂0 f1`
    pub rot01: Poly<T>,
    /// `∂2 f0 + ∂0 f2`
    pub rot02: Poly<T>,
    /// `∂1 f2 − ∂2 f1`
    pub rot12: Poly<T>,
}

impl<T: Scalar> RieszResidual<T> {
    pub fn is_zero(&self) -> bool {
        self.div.is_zero() && self.rot01.is_zero() && self.rot02.is_zero() && self.rot12.is_zero()
    }

    pub fn as_tuple(&self) -> (&Poly<T>, &Poly<T>, &Poly<T>, &Poly<T>) {
        (&self.div, &self.rot01, &self.rot02, &self.rot12)
    }
}

/// Rejects polynomials with an `e3` component.
pub fn riesz_residual<T: Scalar>(f: &QPoly<T>) -> Result<RieszResidual<T>> {
    f.ensure_a_valued()?;
    let [f0, f1, f2, _] = f.components();
    Ok(RieszResidual {
        div: &(&f0.partial(0) - &f1.partial(1)) - &f2.partial(2),
        rot01: &f0.partial(1) + &f1.partial(0),
        rot02: &f0.partial(2) + &f2.partial(0),
        rot12: &f2.partial(1) - &f1.partial(2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{APoly, ScalarPoly};
    use crate::scalar::{rat, rat_int, Rational};
    use proptest::prelude::*;

    fn x(i: usize) -> ScalarPoly {
        ScalarPoly::var(i)
    }

    fn half() -> Rational {
        rat(1, 2)
    }

    fn x1_dagger() -> APoly {
        APoly::reduced(x(0), x(1).scale(&half()), x(2).scale(&half()))
    }

    fn konst(c: Rational) -> ScalarPoly {
        ScalarPoly::constant(c)
    }

    #[test]
    fn d_examples() {
        assert_eq!(apply_d(&APoly::from_scalar(x(0))), APoly::from_scalar(konst(rat_int(1))));
        assert!(apply_d(&x1_dagger()).is_zero());
        assert_eq!(
            apply_d(&APoly::from_scalar(x(1))),
            APoly::reduced(ScalarPoly::zero(), konst(rat_int(1)), ScalarPoly::zero())
        );
    }

    #[test]
    fn dbar_examples() {
        assert_eq!(apply_dbar(&APoly::from_scalar(x(0))), APoly::from_scalar(konst(rat_int(1))));
        assert_eq!(
            apply_dbar(&APoly::from_scalar(x(1))),
            APoly::reduced(ScalarPoly::zero(), konst(rat_int(-1)), ScalarPoly::zero())
        );
        let h = &(&x(0) * &x(0)) - &(&(&x(1) * &x(1)) + &(&x(2) * &x(2))).scale(&half());
        let expected = APoly::reduced(x(0).scale(&rat_int(2)), x(1), x(2));
        assert_eq!(apply_dbar(&APoly::from_scalar(h)), expected);
    }

    #[test]
    fn hypercomplex_derivative_examples() {
        assert!(hypercomplex_derivative(&APoly::from_scalar(konst(half()))).is_zero());
        assert_eq!(
            hypercomplex_derivative(&x1_dagger()),
            APoly::from_scalar(konst(rat_int(1)))
        );
        let f = APoly::reduced(x(1), -&x(0), ScalarPoly::zero());
        assert_eq!(
            hypercomplex_derivative(&f),
            APoly::reduced(ScalarPoly::zero(), konst(rat_int(-1)), ScalarPoly::zero())
        );
    }

    #[test]
    fn laplacian_examples() {
        let harmonic = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        assert!(laplacian(&APoly::from_scalar(harmonic)).is_zero());
        assert_eq!(
            laplacian(&APoly::from_scalar(&x(0) * &x(0))),
            APoly::from_scalar(konst(rat_int(2)))
        );
    }

    #[test]
    fn grad_examples() {
        assert_eq!(grad(&x(0)), APoly::from_scalar(konst(rat_int(1))));
        assert_eq!(grad(&(&x(0) * &x(1))), APoly::reduced(x(1), x(0), ScalarPoly::zero()));
    }

    #[test]
    fn riesz_residual_examples() {
        assert!(riesz_residual(&x1_dagger()).unwrap().is_zero());
        let r = riesz_residual(&APoly::reduced(ScalarPoly::zero(), x(1), ScalarPoly::zero())).unwrap();
        assert_eq!(r.div, konst(rat_int(-1)));
        assert!(riesz_residual(&APoly::from_scalar(konst(rat_int(7)))).unwrap().is_zero());
        let e3 = APoly::from_components([
            ScalarPoly::zero(),
            ScalarPoly::zero(),
            ScalarPoly::zero(),
            x(0),
        ]);
        assert!(riesz_residual(&e3).is_err());
    }

    #[test]
    fn conj_exchanges_kernels() {
        // x1 - x0 e1 is monogenic; its conjugate is anti-monogenic
        let f = APoly::reduced(x(1), -&x(0), ScalarPoly::zero());
        assert!(apply_d(&f).is_zero());
        assert!(apply_dbar(&f.conj()).is_zero());
        assert!(!apply_dbar(&f).is_zero());
    }

    pub(crate) fn arb_poly(max_degree: u32) -> impl Strategy<Value = ScalarPoly> {
        prop::collection::vec(((0u32..=max_degree), (0u32..=max_degree), (0u32..=max_degree), -9i64..9, 1i64..4), 0..8)
            .prop_map(move |terms| {
                ScalarPoly::from_terms(terms.into_iter().filter(|t| t.0 + t.1 + t.2 <= max_degree).map(
                    |(a, b, c, n, d)| (crate::poly::Monomial::new(a, b, c), rat(n, d)),
                ))
            })
    }

    fn arb_apoly(max_degree: u32) -> impl Strategy<Value = APoly> {
        prop::array::uniform4(arb_poly(max_degree)).prop_map(APoly::from_components)
    }

    fn arb_reduced(max_degree: u32) -> impl Strategy<Value = APoly> {
        prop::array::uniform3(arb_poly(max_degree)).prop_map(|[a, b, c]| APoly::reduced(a, b, c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn laplacian_factorizes_cubic(f in arb_apoly(3)) {
            prop_assert_eq!(laplacian(&f), apply_d(&apply_dbar(&f)));
        }

        #[test]
        fn laplacian_factorizes_both_orders(f in arb_apoly(6)) {
            let lap = laplacian(&f);
            prop_assert_eq!(&lap, &apply_d(&apply_dbar(&f)));
            prop_assert_eq!(&lap, &apply_dbar(&apply_d(&f)));
        }

        #[test]
        fn residual_vanishes_iff_monogenic(f in arb_reduced(4)) {
            let r = riesz_residual(&f).unwrap();
            let df = apply_d(&f);
            prop_assert_eq!(r.is_zero(), df.is_zero());
            let [d0, d1, d2, d3] = df.components();
            prop_assert_eq!(&r.div, d0);
            prop_assert_eq!(&r.rot01, d1);
            prop_assert_eq!(&r.rot02, d2);
            prop_assert_eq!(&r.rot12, d3);
        }

        #[test]
        fn antimonogenic_iff_conjugate_monogenic(f in arb_reduced(3)) {
            prop_assert_eq!(apply_dbar(&f).is_zero(), apply_d(&f.conj()).is_zero());
        }
    }
}
