//! Scalar backings shared by the exact and floating-point code paths.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, the exact backing.
pub type Rational = BigRational;

/// A real scalar field element. Implemented for `f64` and [`Rational`], so
/// every algebraic routine in the crate runs unchanged on either backing.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    fn to_f64(&self) -> f64;

    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("integer fits the scalar backing")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Scalar for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Rational {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            // numerator/denominator too large for a direct conversion
            let (n, d) = (self.numer(), self.denom());
            let shift = n.bits().max(d.bits()).saturating_sub(900);
            let n = ToPrimitive::to_f64(&(n >> shift)).unwrap_or(f64::NAN);
            let d = ToPrimitive::to_f64(&(d >> shift)).unwrap_or(f64::NAN);
            n / d
        })
    }
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn big_rat(value: BigInt) -> Rational {
    Rational::from_integer(value)
}

/// Formats a rational as `num/den` (or `num` when the denominator is one).
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `num/den`, an integer, or a plain decimal such as `2.5` or `-1e-3`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Ok(n) = text.parse::<BigInt>() {
        return Some(big_rat(n));
    }
    parse_decimal(text)
}

fn parse_decimal(text: &str) -> Option<Rational> {
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let negative = mantissa.starts_with('-');
    let mantissa = mantissa.trim_start_matches(['-', '+']);
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int_part}{frac_part}0").parse().ok()?;
    let scale = exponent - frac_part.len() as i32 - 1;
    let ten = BigInt::from(10);
    let mut value = big_rat(digits);
    if scale >= 0 {
        value *= big_rat(num_traits::pow(ten, scale as usize));
    } else {
        value /= big_rat(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if negative { -value } else { value })
}

/// Exact conversion of an `f64` through its shortest decimal representation,
/// so that `0.1` becomes `1/10` rather than the nearest dyadic fraction.
pub fn rational_from_f64(value: f64) -> Option<Rational> {
    if !value.is_finite() {
        return None;
    }
    parse_decimal(&format!("{value:e}"))
}

/// A real number of the form `q·π` with `q` rational. Ball integrals of
/// polynomials land here, which keeps orthogonality checks exact.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PiMultiple(pub Rational);

impl PiMultiple {
    pub fn zero() -> Self {
        PiMultiple(Rational::zero())
    }

    pub fn coefficient(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn to_f64(&self) -> f64 {
        Scalar::to_f64(&self.0) * std::f64::consts::PI
    }

    /// `sqrt(q·π)` in floating point.
    pub fn sqrt_f64(&self) -> f64 {
        self.to_f64().sqrt()
    }

    /// The rational quotient `self / other` (π cancels).
    pub fn ratio(&self, other: &PiMultiple) -> Rational {
        &self.0 / &other.0
    }

    pub fn scale(&self, factor: &Rational) -> PiMultiple {
        PiMultiple(&self.0 * factor)
    }
}

impl std::ops::Add for PiMultiple {
    type Output = PiMultiple;
    fn add(self, rhs: PiMultiple) -> PiMultiple {
        PiMultiple(self.0 + rhs.0)
    }
}

impl std::ops::AddAssign<&PiMultiple> for PiMultiple {
    fn add_assign(&mut self, rhs: &PiMultiple) {
        self.0 += &rhs.0;
    }
}

impl std::fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})·π", format_rational(&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/4"), Some(rat(3, 4)));
        assert_eq!(parse_rational("-7"), Some(rat_int(-7)));
        assert_eq!(parse_rational("2.5"), Some(rat(5, 2)));
        assert_eq!(parse_rational("0.1"), Some(rat(1, 10)));
        assert_eq!(parse_rational("-1.25e-2"), Some(rat(-1, 80)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
    }

    #[test]
    fn f64_goes_through_shortest_decimal() {
        assert_eq!(rational_from_f64(0.1), Some(rat(1, 10)));
        assert_eq!(rational_from_f64(2.5), Some(rat(5, 2)));
        assert_eq!(rational_from_f64(f64::NAN), None);
    }

    #[test]
    fn huge_rationals_convert() {
        let big = big_rat(num_traits::pow(BigInt::from(10), 400)) / rat_int(3);
        let small = rat_int(1) / big_rat(num_traits::pow(BigInt::from(10), 400));
        let ratio = Scalar::to_f64(&(&big * &small));
        assert!((ratio - 1.0 / 3.0).abs() < 1e-15);
        assert!(Scalar::to_f64(&big).is_infinite() || Scalar::to_f64(&big) > 1e300);
    }
}
