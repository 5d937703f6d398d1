use serde::{Deserialize, Serialize};

use crate::basis::{basis_polynomial, degree_indices, norm_sq, BasisIndex, Family};
use crate::error::{Error, Result};
use crate::poly::{APoly, QPoly};
use crate::quaternion::ReducedQuaternion;
use crate::scalar::{format_rational, parse_rational, rational_from_f64, PiMultiple, Rational, Scalar};

/// One Fourier coefficient `a` with respect to the normalized element
/// `X* = X / ‖X‖`. When known exactly, `ratio = a / ‖X‖` is kept as well, so
/// that `a X* = ratio · X` stays a rational polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct Coefficient {
    pub value: f64,
    pub ratio: Option<Rational>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient {
            value: 0.0,
            ratio: Some(Rational::from_int(0)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.ratio {
            Some(r) => r == &Rational::from_int(0),
            None => self.value == 0.0,
        }
    }
}

/// Degree-`n` block: `a_n^0`, `a_n^m` and `b_n^m` for `m = 1..=n+1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    pub n: u32,
    pub a0: Coefficient,
    pub a: Vec<Coefficient>,
    pub b: Vec<Coefficient>,
}

impl Block {
    fn zero(n: u32) -> Self {
        Block {
            n,
            a0: Coefficient::zero(),
            a: vec![Coefficient::zero(); n as usize + 1],
            b: vec![Coefficient::zero(); n as usize + 1],
        }
    }
}

/// Truncated expansion `Σ_n [X_n^0* a_n^0 + Σ_m (X_n^m* a_n^m + Y_n^m* b_n^m)]`
/// on `B_R`.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierCoefficients {
    pub radius: Rational,
    pub blocks: Vec<Block>,
}

impl FourierCoefficients {
    pub fn zeros(radius: Rational, max_degree: u32) -> Self {
        FourierCoefficients {
            radius,
            blocks: (0..=max_degree).map(Block::zero).collect(),
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.blocks.len() as u32 - 1
    }

    pub fn get(&self, idx: BasisIndex) -> Option<&Coefficient> {
        let block = self.blocks.get(idx.n as usize)?;
        match (idx.family, idx.m) {
            (Family::X, 0) => Some(&block.a0),
            (Family::X, m) => block.a.get(m as usize - 1),
            (Family::Y, m) => block.b.get(m as usize - 1),
        }
    }

    fn slot(&mut self, idx: BasisIndex) -> Result<&mut Coefficient> {
        let max = self.max_degree();
        let block = self
            .blocks
            .get_mut(idx.n as usize)
            .ok_or_else(|| Error::Range(format!("{idx} beyond truncation degree {max}")))?;
        Ok(match (idx.family, idx.m) {
            (Family::X, 0) => &mut block.a0,
            (Family::X, m) => &mut block.a[m as usize - 1],
            (Family::Y, m) => &mut block.b[m as usize - 1],
        })
    }

    /// Sets the coefficient so that the term equals `ratio · X` exactly.
    pub fn set_ratio(&mut self, idx: BasisIndex, ratio: Rational) -> Result<()> {
        let norm = norm_sq(idx, &self.radius).sqrt_f64();
        *self.slot(idx)? = Coefficient {
            value: Scalar::to_f64(&ratio) * norm,
            ratio: Some(ratio),
        };
        Ok(())
    }

    /// Sets a floating-point coefficient `a` (no exact ratio).
    pub fn set_value(&mut self, idx: BasisIndex, value: f64) -> Result<()> {
        *self.slot(idx)? = Coefficient { value, ratio: None };
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (BasisIndex, &Coefficient)> + '_ {
        self.blocks.iter().flat_map(move |b| {
            degree_indices(b.n)
                .into_iter()
                .map(move |idx| (idx, self.get(idx).expect("index inside block")))
        })
    }

    pub fn is_exact(&self) -> bool {
        self.iter().all(|(_, c)| c.ratio.is_some())
    }

    /// Whether any hyperholomorphic-constant coefficient (`m = n + 1`, `n ≥ 1`)
    /// is nonzero.
    pub fn has_hyperholomorphic_part(&self) -> bool {
        self.iter()
            .any(|(idx, c)| idx.n >= 1 && idx.is_hyperholomorphic_constant() && !c.is_zero())
    }

    /// `a / ‖X‖` in floating point.
    pub fn ratio_f64(&self, idx: BasisIndex) -> f64 {
        let c = self.get(idx).expect("index inside truncation");
        match &c.ratio {
            Some(r) => Scalar::to_f64(r),
            None => c.value / norm_sq(idx, &self.radius).sqrt_f64(),
        }
    }

    /// Exact synthesis `Σ ratio · X`.
    pub fn synthesize_poly(&self) -> Result<APoly> {
        let mut acc = APoly::zero();
        for (idx, c) in self.iter() {
            let ratio = c.ratio.as_ref().ok_or(Error::NotExact)?;
            if ratio != &Rational::from_int(0) {
                acc = &acc + &basis_polynomial(idx).scale(ratio);
            }
        }
        Ok(acc)
    }

    /// Floating-point synthesis as a polynomial.
    pub fn synthesize_poly_f64(&self) -> QPoly<f64> {
        let mut acc = QPoly::zero();
        for (idx, c) in self.iter() {
            if !c.is_zero() {
                acc = &acc + &basis_polynomial(idx).to_f64().scale(&self.ratio_f64(idx));
            }
        }
        acc
    }

    /// Value of the series at `x`; `outside_ball` flags `|x| > R`.
    pub fn synthesize(&self, x: [f64; 3]) -> Evaluation {
        let value = self.synthesize_poly_f64().evaluate(&x);
        let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
        Evaluation {
            value: ReducedQuaternion::new(value.a0, value.a1, value.a2),
            outside_ball: r > Scalar::to_f64(&self.radius),
        }
    }

    /// `Σ a²` exactly (equals `‖f‖²` on `B_R` by orthonormality).
    pub fn sum_of_squares(&self) -> Result<PiMultiple> {
        let mut acc = PiMultiple::zero();
        for (idx, c) in self.iter() {
            let r = c.ratio.as_ref().ok_or(Error::NotExact)?;
            acc += &norm_sq(idx, &self.radius).scale(&(r * r));
        }
        Ok(acc)
    }

    pub fn sum_of_squares_f64(&self) -> f64 {
        self.iter().map(|(_, c)| c.value * c.value).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CoefficientsJson::from(self)).expect("coefficients serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: CoefficientsJson = serde_json::from_value(value.clone())?;
        raw.try_into()
    }
}

#[derive(Clone, Debug)]
pub struct Evaluation {
    pub value: ReducedQuaternion<f64>,
    pub outside_ball: bool,
}

#[derive(Serialize, Deserialize)]
struct ExactJson {
    a0: String,
    a: Vec<String>,
    b: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct BlockJson {
    n: u32,
    a0: f64,
    a: Vec<f64>,
    b: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exact: Option<ExactJson>,
}

#[derive(Serialize, Deserialize)]
struct CoefficientsJson {
    #[serde(default)]
    version: Option<String>,
    #[serde(rename = "R")]
    radius: f64,
    #[serde(rename = "R_exact", default, skip_serializing_if = "Option::is_none")]
    radius_exact: Option<String>,
    #[serde(rename = "N")]
    max_degree: u32,
    blocks: Vec<BlockJson>,
}

impl From<&FourierCoefficients> for CoefficientsJson {
    fn from(c: &FourierCoefficients) -> Self {
        let blocks = c
            .blocks
            .iter()
            .map(|b| {
                let exact = if b.a.iter().chain(&b.b).chain([&b.a0]).all(|c| c.ratio.is_some()) {
                    let fmt = |c: &Coefficient| format_rational(c.ratio.as_ref().expect("checked"));
                    Some(ExactJson {
                        a0: fmt(&b.a0),
                        a: b.a.iter().map(fmt).collect(),
                        b: b.b.iter().map(fmt).collect(),
                    })
                } else {
                    None
                };
                BlockJson {
                    n: b.n,
                    a0: b.a0.value,
                    a: b.a.iter().map(|c| c.value).collect(),
                    b: b.b.iter().map(|c| c.value).collect(),
                    exact,
                }
            })
            .collect();
        CoefficientsJson {
            version: Some(crate::VERSION.to_string()),
            radius: Scalar::to_f64(&c.radius),
            radius_exact: Some(format_rational(&c.radius)),
            max_degree: c.max_degree(),
            blocks,
        }
    }
}

impl TryFrom<CoefficientsJson> for FourierCoefficients {
    type Error = Error;

    fn try_from(raw: CoefficientsJson) -> Result<Self> {
        let radius = match &raw.radius_exact {
            Some(text) => parse_rational(text).ok_or_else(|| Error::Parse(format!("bad radius {text:?}")))?,
            None => rational_from_f64(raw.radius).ok_or_else(|| Error::Parse("bad radius".into()))?,
        };
        if radius <= Rational::from_int(0) {
            return Err(Error::Parse("radius must be positive".into()));
        }
        if raw.blocks.len() != raw.max_degree as usize + 1 {
            return Err(Error::Parse(format!(
                "expected {} blocks for N = {}, found {}",
                raw.max_degree + 1,
                raw.max_degree,
                raw.blocks.len()
            )));
        }
        let mut out = FourierCoefficients::zeros(radius, raw.max_degree);
        for (k, b) in raw.blocks.into_iter().enumerate() {
            if b.n as usize != k || b.a.len() != k + 1 || b.b.len() != k + 1 {
                return Err(Error::Parse(format!("block {k} has the wrong shape")));
            }
            let values = std::iter::once(b.a0).chain(b.a).chain(b.b);
            let idx = degree_indices(k as u32);
            match b.exact {
                Some(e) => {
                    if e.a.len() != k + 1 || e.b.len() != k + 1 {
                        return Err(Error::Parse(format!("exact block {k} has the wrong shape")));
                    }
                    let texts = std::iter::once(e.a0).chain(e.a).chain(e.b);
                    for (i, text) in idx.into_iter().zip(texts) {
                        let q = parse_rational(&text).ok_or_else(|| Error::Parse(format!("bad ratio {text:?}")))?;
                        out.set_ratio(i, q)?;
                    }
                }
                None => {
                    for (i, v) in idx.into_iter().zip(values) {
                        if !v.is_finite() {
                            return Err(Error::Parse("non-finite coefficient".into()));
                        }
                        out.set_value(i, v)?;
                    }
                }
            }
        }
        Ok(out)
    }
}
