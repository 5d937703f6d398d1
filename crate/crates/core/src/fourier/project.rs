use crate::basis::{basis_polynomial, degree_indices, norm_sq, BasisIndex};
use crate::error::{Error, Result};
use crate::fourier::FourierCoefficients;
use crate::poly::{apply_d, grad, inner_product_l2, APoly, QPoly};
use crate::quaternion::ReducedQuaternion;
use crate::scalar::{PiMultiple, Rational, Scalar};

/// Exact Fourier coefficients of a monogenic polynomial up to degree
/// `max_degree` on `B_R`.
///
/// Basis elements of different degrees are orthogonal and every homogeneous
/// part of a monogenic polynomial is monogenic, so degree-`n` coefficients
/// only see the degree-`n` part of `f`.
pub fn project(f: &APoly, max_degree: u32, radius: &Rational) -> Result<FourierCoefficients> {
    f.ensure_a_valued()?;
    if !apply_d(f).is_zero() {
        return Err(Error::NotMonogenic);
    }
    if radius <= &Rational::from_int(0) {
        return Err(Error::Domain("radius must be positive".into()));
    }
    let mut out = FourierCoefficients::zeros(radius.clone(), max_degree);
    for n in 0..=max_degree {
        let part = f.homogeneous_part(n);
        if part.is_zero() {
            continue;
        }
        for idx in degree_indices(n) {
            let ip = inner_product_l2(&basis_polynomial(idx), &part, radius);
            out.set_ratio(idx, ip.ratio(&norm_sq(idx, radius)))?;
        }
    }
    Ok(out)
}

/// `f = f(0) + g + h`: constant term, main part (`m ≤ n`, `n ≥ 1`) and
/// hyperholomorphic-constant part (`m = n + 1`, `n ≥ 1`).
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub f0: ReducedQuaternion<f64>,
    /// `f(0)` exactly, when the degree-0 block is exact.
    pub f0_exact: Option<ReducedQuaternion<Rational>>,
    pub g: FourierCoefficients,
    pub h: FourierCoefficients,
}

pub fn decompose(c: &FourierCoefficients) -> Decomposition {
    let mut g = FourierCoefficients::zeros(c.radius.clone(), c.max_degree());
    let mut h = g.clone();
    for (idx, coeff) in c.iter() {
        if idx.n == 0 {
            continue;
        }
        let target = if idx.is_hyperholomorphic_constant() { &mut h } else { &mut g };
        let slot = match (idx.family, idx.m) {
            (crate::basis::Family::X, 0) => &mut target.blocks[idx.n as usize].a0,
            (crate::basis::Family::X, m) => &mut target.blocks[idx.n as usize].a[m as usize - 1],
            (crate::basis::Family::Y, m) => &mut target.blocks[idx.n as usize].b[m as usize - 1],
        };
        *slot = coeff.clone();
    }
    let degree_zero = degree_indices(0);
    let f0_exact = degree_zero
        .iter()
        .map(|&idx| {
            c.get(idx)
                .and_then(|k| k.ratio.clone())
                .map(|r| basis_polynomial(idx).evaluate(&[0, 0, 0].map(Rational::from_int)).scale(&r))
        })
        .collect::<Option<Vec<_>>>()
        .map(|vals| {
            let q = vals.into_iter().fold(crate::quaternion::Quaternion::zero(), |a, b| &a + &b);
            ReducedQuaternion::new(q.a0, q.a1, q.a2)
        });
    let f0 = degree_zero.iter().fold(ReducedQuaternion::zero(), |acc, &idx| {
        let v = basis_polynomial(idx).to_f64().evaluate(&[0.0; 3]).scale(&c.ratio_f64(idx));
        &acc + &ReducedQuaternion::new(v.a0, v.a1, v.a2)
    });
    Decomposition { f0, f0_exact, g, h }
}

impl Decomposition {
    /// `‖f(0)‖²` on `B_R`: `|f(0)|² · 4πR³/3`, exact.
    pub fn f0_norm_sq(&self, radius: &Rational) -> Option<PiMultiple> {
        let f0 = self.f0_exact.as_ref()?;
        let volume = Rational::new(4.into(), 3.into()) * radius * radius * radius;
        Some(PiMultiple(f0.norm_sqr() * volume))
    }
}

/// A square-integrable monogenic function on `B_R`, either as an exact
/// polynomial or as a truncated series.
#[derive(Clone, Debug)]
pub enum MonogenicFunction {
    Exact { poly: APoly, radius: Rational },
    Series(FourierCoefficients),
}

impl MonogenicFunction {
    pub fn exact(poly: APoly, radius: Rational) -> Result<Self> {
        poly.ensure_a_valued()?;
        if !apply_d(&poly).is_zero() {
            return Err(Error::NotMonogenic);
        }
        Ok(MonogenicFunction::Exact { poly, radius })
    }

    pub fn radius(&self) -> &Rational {
        match self {
            MonogenicFunction::Exact { radius, .. } => radius,
            MonogenicFunction::Series(c) => &c.radius,
        }
    }

    pub fn to_f64(&self) -> QPoly<f64> {
        match self {
            MonogenicFunction::Exact { poly, .. } => poly.to_f64(),
            MonogenicFunction::Series(c) => c.synthesize_poly_f64(),
        }
    }

    pub fn coefficients(&self) -> Result<FourierCoefficients> {
        match self {
            MonogenicFunction::Exact { poly, radius } => project(poly, poly.degree().unwrap_or(0), radius),
            MonogenicFunction::Series(c) => Ok(c.clone()),
        }
    }
}

/// Outcome of recovering one coefficient from the gradient of the scalar part.
#[derive(Clone, Debug)]
pub struct GradientRecovery {
    pub index: BasisIndex,
    pub holds: bool,
}

/// For `f` without hyperholomorphic-constant part, checks for every `n ≥ 1`,
/// `m ≤ n` that
/// `a = (‖X‖ / ‖grad Sc X‖²) ⟨grad Sc f, grad Sc X⟩`,
/// i.e. `ratio · ‖grad Sc X‖² = ⟨grad Sc f, grad Sc X⟩` exactly.
pub fn gradient_coefficient_recovery(f: &APoly, max_degree: u32, radius: &Rational) -> Result<Vec<GradientRecovery>> {
    let c = project(f, max_degree, radius)?;
    if c.has_hyperholomorphic_part() {
        return Err(Error::HyperholomorphicPart);
    }
    let grad_f = grad(f.sc());
    let mut out = Vec::new();
    for n in 1..=max_degree {
        for idx in degree_indices(n).into_iter().filter(|i| !i.is_hyperholomorphic_constant()) {
            let g = grad(basis_polynomial(idx).sc());
            let lhs = inner_product_l2(&g, &g, radius).scale(c.get(idx).and_then(|k| k.ratio.as_ref()).ok_or(Error::NotExact)?);
            let rhs = inner_product_l2(&grad_f, &g, radius);
            out.push(GradientRecovery { index: idx, holds: lhs == rhs });
        }
    }
    Ok(out)
}

/// `‖f‖²` split as `(‖f(0)‖², ‖g‖², ‖h‖²)`, all exact.
pub fn pythagoras_terms(d: &Decomposition) -> Result<(PiMultiple, PiMultiple, PiMultiple)> {
    let f0 = d.f0_norm_sq(&d.g.radius).ok_or(Error::NotExact)?;
    Ok((f0, d.g.sum_of_squares()?, d.h.sum_of_squares()?))
}
