//! Independent evaluators of the basis: the explicit Legendre–Chebyshev form,
//! the representation through spherical harmonics `U^l_n`, `V^m_n`, and the
//! closed form of the hyperholomorphic constants.
//!
//! All are generic over [`Scalar`]: at rational trigonometric points they run
//! exactly and must agree with the exact polynomials to the last digit.

use crate::basis::{BasisIndex, Family};
use crate::error::{Error, Result};
use crate::quaternion::{Quaternion, ReducedQuaternion};
use crate::scalar::Scalar;
use crate::special::{
    assoc_legendre_trig, chebyshev_t, factorial_ratio, sin_times_chebyshev_u, spherical_u_trig,
    spherical_v_trig, SphericalPoint, TrigPoint,
};

fn power<T: Scalar>(base: &T, exponent: u32) -> T {
    (0..exponent).fold(T::one(), |acc, _| acc * base.clone())
}

fn int<T: Scalar>(v: u32) -> T {
    T::from_int(v as i64)
}

/// Legendre–Chebyshev closed form of `X_n^l` / `Y_n^m`.
pub fn closed_form_trig<T: Scalar>(idx: BasisIndex, p: &TrigPoint<T>) -> ReducedQuaternion<T> {
    let (n, l) = (idx.n, idx.m as i64);
    let leg = |i: i64| assoc_legendre_trig(n, i as i32, &p.cos1, &p.sin1);
    let t = |k: i64| chebyshev_t(k, p.cos2.clone());
    let su = |k: i64| sin_times_chebyshev_u(k, &p.cos2, &p.sin2);
    let k1: T = int(n + idx.m + 1);
    let k2: T = int((n + idx.m + 1) * (n + idx.m));
    let half = T::ratio(1, 2);
    let quarter = T::ratio(1, 4);
    let (lo, mid, hi) = (leg(l - 1), leg(l), leg(l + 1));
    let (a0, a1, a2) = match idx.family {
        Family::X => (
            half * k1 * mid * t(l),
            quarter.clone() * hi.clone() * t(l + 1) - quarter.clone() * k2.clone() * lo.clone() * t(l - 1),
            quarter.clone() * hi * su(l) + quarter * k2 * lo * su(l - 2),
        ),
        Family::Y => (
            half * k1 * mid * su(l - 1),
            quarter.clone() * hi.clone() * su(l) - quarter.clone() * k2.clone() * lo.clone() * su(l - 2),
            -(quarter.clone() * hi * t(l + 1)) - quarter * k2 * lo * t(l - 1),
        ),
    };
    ReducedQuaternion::new(a0, a1, a2).scale(&power(&p.r, n))
}

/// Representation through spherical harmonics with
/// `R^{m,±} = U^{m+1} ± (n+m+1)(n+m) U^{m−1}` and
/// `S^{m,±} = V^{m+1} ± (n+m+1)(n+m) V^{m−1}`.
pub fn spherical_harmonic_form_trig<T: Scalar>(idx: BasisIndex, p: &TrigPoint<T>) -> ReducedQuaternion<T> {
    let (n, m) = (idx.n, idx.m);
    let u = |k: u32| spherical_u_trig(n, k, p);
    let v = |k: u32| spherical_v_trig(n, k, p);
    let half = T::ratio(1, 2);
    let quarter = T::ratio(1, 4);
    let k1: T = int(n + m + 1);
    let value = if idx.family == Family::X && m == 0 {
        ReducedQuaternion::new(half.clone() * k1 * u(0), half.clone() * u(1), half * v(1))
    } else {
        let k2: T = int((n + m + 1) * (n + m));
        let r = |sign: T| u(m + 1) + sign * k2.clone() * u(m - 1);
        let s = |sign: T| v(m + 1) + sign * k2.clone() * v(m - 1);
        let (plus, minus) = (T::one(), -T::one());
        match idx.family {
            Family::X => ReducedQuaternion::new(
                half * k1 * u(m),
                quarter.clone() * r(minus),
                quarter * s(plus),
            ),
            Family::Y => ReducedQuaternion::new(
                half * k1 * v(m),
                quarter.clone() * s(minus),
                -(quarter * r(plus)),
            ),
        }
    };
    value.scale(&power(&p.r, n))
}

/// `−(e/2)(n+1)(2n+1)!! rⁿ (sin θ1)ⁿ (cos θ2 + e3 sin θ2)ⁿ`, evaluated in the
/// full algebra; `e = e1` for X, `e2` for Y.
pub fn hyperholomorphic_constant_trig<T: Scalar>(n: u32, family: Family, p: &TrigPoint<T>) -> Quaternion<T> {
    let w = Quaternion::new(p.cos2.clone(), T::zero(), T::zero(), p.sin2.clone()).powi(n);
    let radial = power(&(p.r.clone() * p.sin1.clone()), n);
    // (n+1)(2n+1)!!
    let scale = (0..=n).fold(int::<T>(n + 1), |acc, k| acc * int(2 * k + 1));
    let factor = -T::ratio(1, 2) * scale * radial;
    let unit: Quaternion<T> = match family {
        Family::X => Quaternion::e1(),
        Family::Y => Quaternion::e2(),
    };
    &unit.scale(&factor) * &w
}

/// Float closed form at a spherical point.
pub fn basis_closed_form_eval(idx: BasisIndex, p: &SphericalPoint) -> ReducedQuaternion<f64> {
    closed_form_trig(idx, &p.trig())
}

/// Float spherical-harmonic representation at a spherical point.
pub fn basis_via_spherical_harmonics(idx: BasisIndex, p: &SphericalPoint) -> ReducedQuaternion<f64> {
    spherical_harmonic_form_trig(idx, &p.trig())
}

/// The closed form of `X_n^{n+1}` / `Y_n^{n+1}`, checked to land in the
/// reduced quaternions.
pub fn hyperholomorphic_constant_closed_form(
    n: u32,
    family: Family,
    p: &SphericalPoint,
) -> Result<ReducedQuaternion<f64>> {
    let q = hyperholomorphic_constant_trig(n, family, &p.trig());
    if q.a3.abs() > 1e-12 * (1.0 + q.norm()) {
        return Err(Error::NotReduced);
    }
    Ok(ReducedQuaternion::new(q.a0, q.a1, q.a2))
}

/// Upper bound `½(n+1) √((n+1+m)!/(n+1−m)!) rⁿ` on `|X_n^m|`, `|Y_n^m|` at
/// radius `r`.
pub fn pointwise_bound(idx: BasisIndex, r: f64) -> f64 {
    let n = idx.n as u64;
    let m = idx.m as u64;
    let ratio = factorial_ratio(n + 1 + m, n + 1 - m);
    let ratio = num_traits::ToPrimitive::to_f64(&ratio).unwrap_or(f64::INFINITY);
    0.5 * (n + 1) as f64 * ratio.sqrt() * r.powi(idx.n as i32)
}
