use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};
use crate::quaternion::{Quaternion, ReducedQuaternion};
use crate::scalar::{Rational, Scalar};

/// Quaternion-valued polynomial `c0 + c1 e1 + c2 e2 + c3 e3`.
///
/// Every basis polynomial is stored this way. "A-valued" means `c3 ≡ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct QPoly<T> {
    comps: [Poly<T>; 4],
}

/// Exact quaternion-valued polynomial.
pub type APoly = QPoly<Rational>;

impl<T: Scalar> Default for QPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> QPoly<T> {
    pub fn zero() -> Self {
        QPoly {
            comps: [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()],
        }
    }

    pub fn from_components(comps: [Poly<T>; 4]) -> Self {
        QPoly { comps }
    }

    /// `c0 + c1 e1 + c2 e2` with zero `e3` part.
    pub fn reduced(c0: Poly<T>, c1: Poly<T>, c2: Poly<T>) -> Self {
        QPoly {
            comps: [c0, c1, c2, Poly::zero()],
        }
    }

    pub fn from_scalar(p: Poly<T>) -> Self {
        Self::reduced(p, Poly::zero(), Poly::zero())
    }

    pub fn constant(q: Quaternion<T>) -> Self {
        let [a0, a1, a2, a3] = [q.a0, q.a1, q.a2, q.a3];
        QPoly {
            comps: [a0, a1, a2, a3].map(Poly::constant),
        }
    }

    /// The identity map `x0 + x1 e1 + x2 e2`.
    pub fn identity() -> Self {
        Self::reduced(Poly::var(0), Poly::var(1), Poly::var(2))
    }

    pub fn component(&self, i: usize) -> &Poly<T> {
        &self.comps[i]
    }

    pub fn components(&self) -> &[Poly<T>; 4] {
        &self.comps
    }

    pub fn into_components(self) -> [Poly<T>; 4] {
        self.comps
    }

    /// Scalar part `Sc(f) = [f]_0`.
    pub fn sc(&self) -> &Poly<T> {
        &self.comps[0]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn is_a_valued(&self) -> bool {
        self.comps[3].is_zero()
    }

    pub fn ensure_a_valued(&self) -> Result<()> {
        if self.is_a_valued() {
            Ok(())
        } else {
            Err(Error::NotAValued)
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(Poly::degree).max()
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.comps.iter().all(|c| c.is_homogeneous(degree))
    }

    pub fn homogeneous_part(&self, degree: u32) -> Self {
        QPoly {
            comps: self.comps.clone().map(|c| c.homogeneous_part(degree)),
        }
    }

    pub fn conj(&self) -> Self {
        QPoly {
            comps: [
                self.comps[0].clone(),
                -&self.comps[1],
                -&self.comps[2],
                -&self.comps[3],
            ],
        }
    }

    pub fn scale(&self, factor: &T) -> Self {
        QPoly {
            comps: self.comps.clone().map(|c| c.scale(factor)),
        }
    }

    pub fn partial(&self, i: usize) -> Self {
        QPoly {
            comps: self.comps.clone().map(|c| c.partial(i)),
        }
    }

    /// Left multiplication by a constant quaternion, `q · f`.
    pub fn left_mul(&self, q: &Quaternion<T>) -> Self {
        &QPoly::constant(q.clone()) * self
    }

    /// Right multiplication by a constant quaternion, `f · q`.
    pub fn right_mul(&self, q: &Quaternion<T>) -> Self {
        self * &QPoly::constant(q.clone())
    }

    pub fn evaluate(&self, x: &[T; 3]) -> Quaternion<T> {
        let [c0, c1, c2, c3] = &self.comps;
        Quaternion::new(c0.evaluate(x), c1.evaluate(x), c2.evaluate(x), c3.evaluate(x))
    }

    /// Evaluation at a point, narrowed to `A`; fails if the value has an `e3` part.
    pub fn evaluate_reduced(&self, x: &[T; 3]) -> Result<ReducedQuaternion<T>> {
        ReducedQuaternion::try_from(self.evaluate(x))
    }

    pub fn to_f64(&self) -> QPoly<f64> {
        QPoly {
            comps: self.comps.clone().map(|c| c.to_f64()),
        }
    }
}

impl<T: Scalar> Add for &QPoly<T> {
    type Output = QPoly<T>;
    fn add(self, rhs: Self) -> QPoly<T> {
        let [a0, a1, a2, a3] = &self.comps;
        let [b0, b1, b2, b3] = &rhs.comps;
        QPoly {
            comps: [a0 + b0, a1 + b1, a2 + b2, a3 + b3],
        }
    }
}

impl<T: Scalar> Sub for &QPoly<T> {
    type Output = QPoly<T>;
    fn sub(self, rhs: Self) -> QPoly<T> {
        let [a0, a1, a2, a3] = &self.comps;
        let [b0, b1, b2, b3] = &rhs.comps;
        QPoly {
            comps: [a0 - b0, a1 - b1, a2 - b2, a3 - b3],
        }
    }
}

impl<T: Scalar> Neg for &QPoly<T> {
    type Output = QPoly<T>;
    fn neg(self) -> QPoly<T> {
        QPoly {
            comps: self.comps.clone().map(|c| -&c),
        }
    }
}

/// Pointwise quaternion product of two polynomial maps.
impl<T: Scalar> Mul for &QPoly<T> {
    type Output = QPoly<T>;
    fn mul(self, rhs: Self) -> QPoly<T> {
        let p = &self.comps;
        let q = &rhs.comps;
        let m = |i: usize, j: usize| &p[i] * &q[j];
        QPoly {
            comps: [
                &(&(&m(0, 0) - &m(1, 1)) - &m(2, 2)) - &m(3, 3),
                &(&(&m(0, 1) + &m(1, 0)) + &m(2, 3)) - &m(3, 2),
                &(&(&m(0, 2) - &m(1, 3)) + &m(2, 0)) + &m(3, 1),
                &(&(&m(0, 3) + &m(1, 2)) - &m(2, 1)) + &m(3, 0),
            ],
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for QPoly<T> {
            type Output = QPoly<T>;
            fn $method(self, rhs: Self) -> QPoly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar + fmt::Display> fmt::Display for QPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = ["", "e1", "e2", "e3"];
        let mut first = true;
        for (c, label) in self.comps.iter().zip(labels) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if label.is_empty() {
                write!(f, "[{c}]")?;
            } else {
                write!(f, "[{c}]{label}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Collects the distinct monomials of all four components.
pub fn support<T: Scalar>(f: &QPoly<T>) -> Vec<Monomial> {
    let mut ms: Vec<Monomial> = f
        .components()
        .iter()
        .flat_map(|c| c.terms().map(|(m, _)| *m))
        .collect();
    ms.sort();
    ms.dedup();
    ms
}
