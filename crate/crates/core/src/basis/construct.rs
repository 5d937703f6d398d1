//! Exact construction: solid harmonics and `½D̄` applied to them.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::basis::{BasisIndex, Family};
use crate::error::{Error, Result};
use crate::poly::{hypercomplex_derivative, APoly, ScalarPoly};
use crate::quaternion::Quaternion;
use crate::scalar::{big_rat, Rational, Scalar};
use crate::special::{differentiate_coefficients, double_factorial, legendre_coefficients};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HarmonicKind {
    U,
    V,
}

/// `Re` and `Im` of `(x1 + i x2)^l`.
fn planar_power(l: u32) -> (ScalarPoly, ScalarPoly) {
    let (x1, x2) = (ScalarPoly::var(1), ScalarPoly::var(2));
    let mut re = ScalarPoly::constant(Rational::from_int(1));
    let mut im = ScalarPoly::zero();
    for _ in 0..l {
        let next_re = &(&re * &x1) - &(&im * &x2);
        let next_im = &(&re * &x2) + &(&im * &x1);
        re = next_re;
        im = next_im;
    }
    (re, im)
}

/// Cartesian form of `r^k U^l_k` (kind U) or `r^k V^l_k` (kind V): an exact,
/// homogeneous, harmonic polynomial of degree `k`.
///
/// With `t = x0/r`, `P^l_k(t) = (ρ/r)^l q(t)` where `q = d^l P_k`, so
/// `r^k P^l_k T_l = Re((x1+ix2)^l) Σ_j q_j x0^j (r²)^{(k−l−j)/2}`.
pub fn solid_harmonic(degree: u32, order: u32, kind: HarmonicKind) -> Result<ScalarPoly> {
    let valid = match kind {
        HarmonicKind::U => order <= degree,
        HarmonicKind::V => (1..=degree).contains(&order),
    };
    if !valid {
        return Err(Error::Range(format!("solid harmonic {kind:?} of degree {degree}, order {order}")));
    }
    let q = differentiate_coefficients(&legendre_coefficients(degree), order);
    let r2 = &(&ScalarPoly::var(0).pow(2) + &ScalarPoly::var(1).pow(2)) + &ScalarPoly::var(2).pow(2);
    let rest = degree - order;
    let mut radial = ScalarPoly::zero();
    for (j, c) in q.iter().enumerate() {
        let j = j as u32;
        if c == &Rational::from_int(0) || (rest - j) % 2 == 1 {
            continue;
        }
        let term = &ScalarPoly::var(0).pow(j) * &r2.pow((rest - j) / 2);
        radial = &radial + &term.scale(c);
    }
    let (re, im) = planar_power(order);
    Ok(match kind {
        HarmonicKind::U => &re * &radial,
        HarmonicKind::V => &im * &radial,
    })
}

type Cache = RwLock<HashMap<BasisIndex, Arc<APoly>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `X_n^m = ½D̄(r^{n+1} U^m_{n+1})`, `Y_n^m = ½D̄(r^{n+1} V^m_{n+1})`.
///
/// Results are memoized; concurrent callers may race to build the same entry,
/// but only the first insert is kept.
pub fn basis_polynomial(idx: BasisIndex) -> Arc<APoly> {
    if let Some(p) = cache().read().expect("basis cache poisoned").get(&idx) {
        return Arc::clone(p);
    }
    let built = Arc::new(build(idx));
    let mut guard = cache().write().expect("basis cache poisoned");
    Arc::clone(guard.entry(idx).or_insert(built))
}

fn build(idx: BasisIndex) -> APoly {
    let kind = match idx.family {
        Family::X => HarmonicKind::U,
        Family::Y => HarmonicKind::V,
    };
    let harmonic = solid_harmonic(idx.n + 1, idx.m, kind).expect("index ranges match harmonic ranges");
    hypercomplex_derivative(&APoly::from_scalar(harmonic))
}

/// Basis polynomial with the zero extensions used by the recurrences:
/// `X_n^m = Y_n^m = 0` for `m ≥ n + 2`, and `Y_n^0 = 0`.
pub fn basis_or_zero(n: u32, family: Family, m: u32) -> Arc<APoly> {
    match BasisIndex::new(n, family, m) {
        Ok(idx) => basis_polynomial(idx),
        Err(_) => Arc::new(APoly::zero()),
    }
}

/// `(n + 1)(2n + 1)!!`
pub fn hyperholomorphic_scale(n: u32) -> Rational {
    let df = double_factorial(2 * n as u64 + 1).expect("odd argument");
    big_rat(df) * Rational::from_int(n as i64 + 1)
}

/// `−(e/2)(n+1)(2n+1)!! (x1 + e3 x2)^n` with `e = e1` (X) or `e2` (Y), built in
/// the full quaternion algebra.
pub fn hyperholomorphic_constant_polynomial(n: u32, family: Family) -> APoly {
    let base = APoly::from_components([
        ScalarPoly::var(1),
        ScalarPoly::zero(),
        ScalarPoly::zero(),
        ScalarPoly::var(2),
    ]);
    let mut power = APoly::constant(Quaternion::one());
    for _ in 0..n {
        power = &power * &base;
    }
    let unit = match family {
        Family::X => Quaternion::e1(),
        Family::Y => Quaternion::e2(),
    };
    let factor = -hyperholomorphic_scale(n) / Rational::from_int(2);
    power.left_mul(&unit.scale(&factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{apply_d, laplacian};
    use crate::scalar::{rat, rat_int};

    fn x(i: usize) -> ScalarPoly {
        ScalarPoly::var(i)
    }

    #[test]
    fn solid_harmonic_examples() {
        assert_eq!(solid_harmonic(1, 0, HarmonicKind::U).unwrap(), x(0));
        assert_eq!(solid_harmonic(1, 1, HarmonicKind::U).unwrap(), x(1));
        assert_eq!(solid_harmonic(1, 1, HarmonicKind::V).unwrap(), x(2));
        let expected = &x(0).pow(2) - &(&x(1).pow(2) + &x(2).pow(2)).scale(&rat(1, 2));
        assert_eq!(solid_harmonic(2, 0, HarmonicKind::U).unwrap(), expected);
        assert!(solid_harmonic(2, 3, HarmonicKind::U).is_err());
        assert!(solid_harmonic(2, 0, HarmonicKind::V).is_err());
    }

    #[test]
    fn solid_harmonics_are_harmonic_and_homogeneous() {
        for k in 0..=9 {
            for l in 0..=k {
                let u = solid_harmonic(k, l, HarmonicKind::U).unwrap();
                assert!(u.laplacian().is_zero(), "U {k} {l}");
                assert!(u.is_homogeneous(k));
                if l >= 1 {
                    let v = solid_harmonic(k, l, HarmonicKind::V).unwrap();
                    assert!(v.laplacian().is_zero(), "V {k} {l}");
                    assert!(v.is_homogeneous(k));
                }
            }
        }
    }

    #[test]
    fn low_degree_elements() {
        let half = rat(1, 2);
        assert_eq!(*basis_polynomial(BasisIndex::x(0, 0)), APoly::from_scalar(ScalarPoly::constant(half.clone())));
        assert_eq!(
            *basis_polynomial(BasisIndex::x(0, 1)),
            APoly::reduced(ScalarPoly::zero(), ScalarPoly::constant(-half.clone()), ScalarPoly::zero())
        );
        assert_eq!(
            *basis_polynomial(BasisIndex::x(1, 0)),
            APoly::reduced(x(0), x(1).scale(&half), x(2).scale(&half))
        );
        let three_halves = rat(3, 2);
        assert_eq!(
            *basis_polynomial(BasisIndex::x(1, 1)),
            APoly::reduced(x(1).scale(&three_halves), x(0).scale(&-three_halves.clone()), ScalarPoly::zero())
        );
        assert_eq!(
            *basis_polynomial(BasisIndex::x(1, 2)),
            APoly::reduced(ScalarPoly::zero(), x(1).scale(&rat_int(-3)), x(2).scale(&rat_int(3)))
        );
        assert_eq!(
            *basis_polynomial(BasisIndex::y(1, 2)),
            APoly::reduced(ScalarPoly::zero(), x(2).scale(&rat_int(-3)), x(1).scale(&rat_int(-3)))
        );
    }

    #[test]
    fn monogenic_harmonic_reduced() {
        for idx in crate::basis::indices_up_to(6) {
            let p = basis_polynomial(idx);
            assert!(p.is_a_valued());
            assert!(p.is_homogeneous(idx.n));
            assert!(apply_d(&p).is_zero(), "{idx}");
            assert!(laplacian(&p).is_zero(), "{idx}");
        }
    }

    #[test]
    fn hyperholomorphic_constant_polynomials_match() {
        for n in 0..=7 {
            for family in [Family::X, Family::Y] {
                let closed = hyperholomorphic_constant_polynomial(n, family);
                assert!(closed.is_a_valued());
                assert_eq!(closed, *basis_polynomial(BasisIndex::new(n, family, n + 1).unwrap()), "{family} {n}");
                assert!(hypercomplex_derivative(&closed).is_zero());
            }
        }
    }

    #[test]
    fn cache_is_shared_across_threads() {
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| basis_polynomial(BasisIndex::y(5, 3))))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for r in &results {
            assert!(Arc::ptr_eq(r, &results[0]) || **r == *results[0]);
        }
        assert!(Arc::ptr_eq(&basis_polynomial(BasisIndex::y(5, 3)), &basis_polynomial(BasisIndex::y(5, 3))));
    }
}
