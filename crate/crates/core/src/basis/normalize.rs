//! Normalization on `B_R`. Norms are of the form `√(qπ)`, so the exact data
//! kept is the squared norm `qπ` next to the unnormalized polynomial.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::basis::{basis_polynomial, BasisIndex};
use crate::error::{Error, Result};
use crate::poly::{inner_product_l2, integrate::radius_power, APoly, QPoly};
use crate::scalar::{PiMultiple, Rational, Scalar};

fn unit_cache() -> &'static RwLock<HashMap<BasisIndex, PiMultiple>> {
    static CACHE: OnceLock<RwLock<HashMap<BasisIndex, PiMultiple>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `‖X‖²` on the unit ball (memoized).
pub fn unit_norm_sq(idx: BasisIndex) -> PiMultiple {
    if let Some(v) = unit_cache().read().expect("norm cache poisoned").get(&idx) {
        return v.clone();
    }
    let p = basis_polynomial(idx);
    let v = inner_product_l2(&p, &p, &Rational::from_int(1));
    unit_cache().write().expect("norm cache poisoned").entry(idx).or_insert(v).clone()
}

/// `‖X‖²` on `B_R`: homogeneity of degree `n` gives `R^{2n+3}` times the unit value.
pub fn norm_sq(idx: BasisIndex, radius: &Rational) -> PiMultiple {
    unit_norm_sq(idx).scale(&radius_power(radius, 2 * idx.n + 3))
}

#[derive(Clone, Debug)]
pub struct NormalizedBasisElement {
    pub index: BasisIndex,
    pub radius: Rational,
    /// The unnormalized polynomial; the element itself is `poly / √norm_sq`.
    pub poly: Arc<APoly>,
    pub norm_sq: PiMultiple,
}

pub fn normalize(idx: BasisIndex, radius: &Rational) -> Result<NormalizedBasisElement> {
    if radius <= &Rational::from_int(0) {
        return Err(Error::Domain("radius must be positive".into()));
    }
    Ok(NormalizedBasisElement {
        index: idx,
        radius: radius.clone(),
        poly: basis_polynomial(idx),
        norm_sq: norm_sq(idx, radius),
    })
}

impl NormalizedBasisElement {
    pub fn norm(&self) -> f64 {
        self.norm_sq.sqrt_f64()
    }

    /// The normalized element in floating point.
    pub fn to_f64(&self) -> QPoly<f64> {
        self.poly.to_f64().scale(&(1.0 / self.norm()))
    }

    /// `⟨self, other⟩` on `B_R`, returned as the exact value
    /// `⟨P, Q⟩ / √(‖P‖²‖Q‖²)` squared together with its sign, which is enough
    /// to decide "exactly 0" and "exactly 1".
    pub fn inner_product_squared(&self, other: &NormalizedBasisElement) -> (i8, Rational) {
        let ip = inner_product_l2(&self.poly, &other.poly, &self.radius);
        let sign = if ip.is_zero() { 0 } else if ip.is_positive() { 1 } else { -1 };
        // (qπ)² / (aπ · bπ) = q² / (ab)
        let sq = &ip.0 * &ip.0 / (&self.norm_sq.0 * &other.norm_sq.0);
        (sign, sq)
    }
}
