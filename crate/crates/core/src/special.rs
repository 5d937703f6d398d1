//! Legendre, associated Legendre (Ferrers form, no Condon–Shortley phase)
//! and Chebyshev functions, the spherical harmonics `U^l_n`, `V^m_n`, and
//! related integer helpers.
//!
//! Evaluators are generic over [`Scalar`] and take the angle through its
//! cosine and sine, so they run in exact arithmetic at points with rational
//! trigonometric values as well as in `f64`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::scalar::{big_rat, Rational, Scalar};

/// A point `(r, θ1, θ2)` with `x0 = r cos θ1`, `x1 = r sin θ1 cos θ2`,
/// `x2 = r sin θ1 sin θ2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphericalPoint {
    pub r: f64,
    pub theta1: f64,
    pub theta2: f64,
}

impl SphericalPoint {
    pub fn new(r: f64, theta1: f64, theta2: f64) -> Self {
        SphericalPoint { r, theta1, theta2 }
    }

    pub fn to_cartesian(&self) -> [f64; 3] {
        let (s1, c1) = self.theta1.sin_cos();
        let (s2, c2) = self.theta2.sin_cos();
        [self.r * c1, self.r * s1 * c2, self.r * s1 * s2]
    }

    /// Inverse of [`to_cartesian`](Self::to_cartesian) with `θ1 ∈ [0, π]`
    /// and `θ2 ∈ (0, 2π]`.
    pub fn from_cartesian(x: [f64; 3]) -> Self {
        let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
        if r == 0.0 {
            return SphericalPoint::new(0.0, std::f64::consts::PI, 2.0 * std::f64::consts::PI);
        }
        let theta1 = (x[1].hypot(x[2])).atan2(x[0]);
        let mut theta2 = x[2].atan2(x[1]);
        if theta2 <= 0.0 {
            theta2 += 2.0 * std::f64::consts::PI;
        }
        SphericalPoint::new(r, theta1, theta2)
    }

    pub fn trig(&self) -> TrigPoint<f64> {
        let (s1, c1) = self.theta1.sin_cos();
        let (s2, c2) = self.theta2.sin_cos();
        TrigPoint {
            r: self.r,
            cos1: c1,
            sin1: s1,
            cos2: c2,
            sin2: s2,
        }
    }
}

/// A spherical point described by `r` and the cosines and sines of its two
/// angles. With rational entries this is an exact point on a rational sphere.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigPoint<T> {
    pub r: T,
    pub cos1: T,
    pub sin1: T,
    pub cos2: T,
    pub sin2: T,
}

impl<T: Scalar> TrigPoint<T> {
    pub fn to_cartesian(&self) -> [T; 3] {
        let rs = self.r.clone() * self.sin1.clone();
        [
            self.r.clone() * self.cos1.clone(),
            rs.clone() * self.cos2.clone(),
            rs * self.sin2.clone(),
        ]
    }

    pub fn to_f64(&self) -> TrigPoint<f64> {
        TrigPoint {
            r: self.r.to_f64(),
            cos1: self.cos1.to_f64(),
            sin1: self.sin1.to_f64(),
            cos2: self.cos2.to_f64(),
            sin2: self.sin2.to_f64(),
        }
    }
}

impl TrigPoint<Rational> {
    /// Rational point via the half-angle substitution
    /// `cos = (1 − s²)/(1 + s²)`, `sin = 2s/(1 + s²)`; `s1 ≥ 0` keeps
    /// `θ1` in `[0, π]`.
    pub fn from_half_angle_tangents(r: Rational, s1: Rational, s2: Rational) -> Result<Self> {
        if s1 < Rational::from_int(0) {
            return Err(Error::Domain("polar half-angle tangent must be ≥ 0".into()));
        }
        let cs = |s: &Rational| {
            let one = Rational::one();
            let den = &one + s * s;
            ((&one - s * s) / &den, (Rational::from_int(2) * s) / &den)
        };
        let (cos1, sin1) = cs(&s1);
        let (cos2, sin2) = cs(&s2);
        Ok(TrigPoint {
            r,
            cos1,
            sin1,
            cos2,
            sin2,
        })
    }
}

fn check_unit_interval(t: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(Error::Domain(format!("t = {t} outside [-1, 1]")))
    }
}

/// Legendre polynomial `P_n(t)` by the three-term recurrence.
pub fn legendre_p(n: u32, t: f64) -> Result<f64> {
    check_unit_interval(t)?;
    Ok(legendre_p_unchecked(n, t))
}

fn legendre_p_unchecked<T: Scalar>(n: u32, t: T) -> T {
    assoc_legendre_trig(n, 0, &t, &T::one())
}

/// Ferrers associated Legendre function `P^m_n(t) = (1−t²)^{m/2} dᵐ/dtᵐ P_n(t)`
/// without the `(−1)^m` phase. Returns 0 for `m ≥ n + 1`; for `m = −1` uses
/// `P^{−1}_n = −P^1_n / (n(n+1))` (and 0 at `n = 0`).
pub fn assoc_legendre(n: u32, m: i32, t: f64) -> Result<f64> {
    check_unit_interval(t)?;
    if m < -1 {
        return Err(Error::Range(format!("order m = {m} below -1")));
    }
    let s = (1.0 - t * t).max(0.0).sqrt();
    Ok(assoc_legendre_trig(n, m, &t, &s))
}

/// [`assoc_legendre`] at `t = cos θ` with `sin θ = s ≥ 0` supplied.
pub fn assoc_legendre_trig<T: Scalar>(n: u32, m: i32, t: &T, s: &T) -> T {
    if m == -1 {
        if n == 0 {
            return T::zero();
        }
        let p1 = assoc_legendre_trig(n, 1, t, s);
        let k = (n as i64) * (n as i64 + 1);
        return -(p1 / T::from_int(k));
    }
    let m = m as u32;
    if m > n {
        return T::zero();
    }
    // P^m_m = (2m−1)!! s^m
    let mut pmm = T::one();
    for k in 0..m {
        pmm = pmm * T::from_int(2 * k as i64 + 1) * s.clone();
    }
    if n == m {
        return pmm;
    }
    let mut prev = pmm;
    let mut cur = T::from_int(2 * m as i64 + 1) * t.clone() * prev.clone();
    for k in (m + 1)..n {
        // (k − m + 1) P^m_{k+1} = (2k + 1) t P^m_k − (k + m) P^m_{k−1}
        let next = (T::from_int(2 * k as i64 + 1) * t.clone() * cur.clone()
            - T::from_int((k + m) as i64) * prev)
            / T::from_int((k - m + 1) as i64);
        prev = cur;
        cur = next;
    }
    cur
}

/// Chebyshev polynomial of the first kind, extended by `T_{−l} = T_l`.
pub fn chebyshev_t<T: Scalar>(l: i64, t: T) -> T {
    let l = l.unsigned_abs();
    if l == 0 {
        return T::one();
    }
    let two_t = T::from_int(2) * t.clone();
    let (mut prev, mut cur) = (T::one(), t);
    for _ in 1..l {
        let next = two_t.clone() * cur.clone() - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Chebyshev polynomial of the second kind, extended to negative indices by
/// `U_{−k} = −U_{k−2}`, so `U_{−1} = 0` and `U_{−2} = −1`.
pub fn chebyshev_u<T: Scalar>(k: i64, t: T) -> T {
    if k < 0 {
        return if k == -1 { T::zero() } else { -chebyshev_u(-k - 2, t) };
    }
    let two_t = T::from_int(2) * t;
    let (mut prev, mut cur) = (T::one(), two_t.clone());
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = two_t.clone() * cur.clone() - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `sin φ · U_{k}(cos φ)`, which equals `sin((k+1)φ)`.
pub fn sin_times_chebyshev_u<T: Scalar>(k: i64, cos: &T, sin: &T) -> T {
    sin.clone() * chebyshev_u(k, cos.clone())
}

/// `U^l_n = P^l_n(cos θ1) T_l(cos θ2)`; zero for `l ≥ n + 1`.
pub fn spherical_u(n: u32, l: u32, theta1: f64, theta2: f64) -> f64 {
    spherical_u_trig(n, l, &SphericalPoint::new(1.0, theta1, theta2).trig())
}

/// `V^m_n = P^m_n(cos θ1) sin θ2 U_{m−1}(cos θ2)`; zero for `m ≥ n + 1` and `m = 0`.
pub fn spherical_v(n: u32, m: u32, theta1: f64, theta2: f64) -> f64 {
    spherical_v_trig(n, m, &SphericalPoint::new(1.0, theta1, theta2).trig())
}

pub fn spherical_u_trig<T: Scalar>(n: u32, l: u32, p: &TrigPoint<T>) -> T {
    if l > n {
        return T::zero();
    }
    assoc_legendre_trig(n, l as i32, &p.cos1, &p.sin1) * chebyshev_t(l as i64, p.cos2.clone())
}

pub fn spherical_v_trig<T: Scalar>(n: u32, m: u32, p: &TrigPoint<T>) -> T {
    if m > n || m == 0 {
        return T::zero();
    }
    assoc_legendre_trig(n, m as i32, &p.cos1, &p.sin1)
        * sin_times_chebyshev_u(m as i64 - 1, &p.cos2, &p.sin2)
}

/// `a! / b!` for `a ≥ b`.
pub fn factorial_ratio(a: u64, b: u64) -> BigInt {
    (b + 1..=a).fold(BigInt::one(), |acc, k| acc * k)
}

/// `k!!` for odd `k ≥ 1`.
pub fn double_factorial(k: u64) -> Result<BigInt> {
    if k == 0 || k.is_multiple_of(2) {
        return Err(Error::Domain(format!("double factorial needs an odd k ≥ 1, got {k}")));
    }
    Ok((1..=k).step_by(2).fold(BigInt::one(), |acc, j| acc * j))
}

/// Upper bound `(1/√2) √((n+m)!/(n−m)!)` on `max |P^m_n|` over `[−1, 1]`,
/// valid for `1 ≤ m ≤ n`.
pub fn legendre_bound(n: u32, m: u32) -> Result<f64> {
    if m < 1 || m > n {
        return Err(Error::Range(format!("legendre bound needs 1 ≤ m ≤ n, got n={n}, m={m}")));
    }
    let ratio = factorial_ratio((n + m) as u64, (n - m) as u64);
    Ok((ratio.to_f64().unwrap_or(f64::INFINITY) / 2.0).sqrt())
}

/// Exact power-basis coefficients of `P_n`, index `k` holding the `t^k` term:
/// `P_n(t) = 2^{−n} Σ_j (−1)^j C(n,j) C(2n−2j,n) t^{n−2j}`.
pub fn legendre_coefficients(n: u32) -> Vec<Rational> {
    let mut coeffs = vec![Rational::from_int(0); n as usize + 1];
    let scale = big_rat(num_traits::pow(BigInt::from(2), n as usize));
    for j in 0..=(n / 2) {
        let c = binomial(n as u64, j as u64) * binomial(2 * (n - j) as u64, n as u64);
        let c = if j % 2 == 1 { -c } else { c };
        coeffs[(n - 2 * j) as usize] = big_rat(c) / &scale;
    }
    coeffs
}

/// Coefficients of the `k`-th derivative of a power-basis polynomial.
pub fn differentiate_coefficients(coeffs: &[Rational], k: u32) -> Vec<Rational> {
    let mut out = coeffs.to_vec();
    for _ in 0..k {
        if out.len() <= 1 {
            return vec![];
        }
        out = out
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_int(i as i64))
            .collect();
    }
    out
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial_ratio(n, n - k) / factorial_ratio(k, 0)
}
