//! Constants appearing on the right-hand sides of the growth inequalities.

use crate::error::{Error, Result};

fn check(r: f64, radius: f64) -> Result<()> {
    if radius.is_nan() || radius <= 0.0 || !(0.0..radius).contains(&r) {
        return Err(Error::Domain(format!("need 0 ≤ r < R, got r = {r}, R = {radius}")));
    }
    Ok(())
}

/// `A1(r, R) = √(2/3) (3R − r)(3R² − Rr + r²) / (R − r)²`
pub fn a1(r: f64, radius: f64) -> Result<f64> {
    check(r, radius)?;
    Ok((2.0f64 / 3.0).sqrt() * a(r, radius)? / (radius - r).powi(2))
}

/// `A2(r, R) = 2(2R − r)`
pub fn a2(r: f64, radius: f64) -> Result<f64> {
    check(r, radius)?;
    Ok(2.0 * (2.0 * radius - r))
}

/// `A(r, R) = (3R − r)(3R² − Rr + r²)`
pub fn a(r: f64, radius: f64) -> Result<f64> {
    check(r, radius)?;
    Ok((3.0 * radius - r) * (3.0 * radius * radius - radius * r + r * r))
}

/// `2r / (R − r)²`, the common prefactor of the real-part bound.
pub fn real_part_prefactor(r: f64, radius: f64) -> Result<f64> {
    check(r, radius)?;
    Ok(2.0 * r / (radius - r).powi(2))
}

/// `√(2/3) · 2r A(r, R) / (R − r)⁴`
pub fn orthogonal_factor(r: f64, radius: f64) -> Result<f64> {
    Ok((2.0f64 / 3.0).sqrt() * 2.0 * r * a(r, radius)? / (radius - r).powi(4))
}

/// `4√2 · r(2R − r) / (R − r)²`
pub fn gradient_factor(r: f64, radius: f64) -> Result<f64> {
    check(r, radius)?;
    Ok(4.0 * 2f64.sqrt() * r * (2.0 * radius - r) / (radius - r).powi(2))
}

/// `2√3 · rR(5r + 4R) / (R − r)⁴`
pub fn derivative_factor(r: f64, radius: f64) -> Result<f64> {
    check(r, radius)?;
    Ok(2.0 * 3f64.sqrt() * r * radius * (5.0 * r + 4.0 * radius) / (radius - r).powi(4))
}

/// Limit of `orthogonal_factor(r, R) / r` as `r → 0`: `√(2/3) · 18 / R`.
pub fn local_factor(radius: f64) -> f64 {
    (2.0f64 / 3.0).sqrt() * 18.0 / radius
}
