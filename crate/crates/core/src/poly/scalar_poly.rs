use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::Monomial;
use crate::scalar::{Rational, Scalar};

/// Sparse polynomial in `(x0, x1, x2)`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    terms: BTreeMap<Monomial, T>,
}

/// Real-valued polynomial with exact rational coefficients.
pub type ScalarPoly = Poly<Rational>;

impl<T: Scalar> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// The coordinate function `x_i`.
    pub fn var(i: usize) -> Self {
        Self::term(Monomial::var(i), T::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, T)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The zero polynomial is homogeneous of every degree.
    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    pub fn scale(&self, factor: &T) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone() * factor.clone()))
                .collect(),
        }
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.derivative(i) {
                out.add_term(lowered, c.clone() * T::from_int(e as i64));
            }
        }
        out
    }

    pub fn laplacian(&self) -> Self {
        (0..3).fold(Self::zero(), |acc, i| &acc + &self.partial(i).partial(i))
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut acc = Self::constant(T::one());
        for _ in 0..exponent {
            acc = &acc * self;
        }
        acc
    }

    /// Part of the polynomial of exactly the given degree.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, x: &[T; 3]) -> T {
        let max_exp = self
            .terms
            .keys()
            .flat_map(|m| m.exps)
            .max()
            .unwrap_or(0) as usize;
        let powers: Vec<Vec<T>> = x
            .iter()
            .map(|xi| {
                let mut p = Vec::with_capacity(max_exp + 1);
                p.push(T::one());
                for k in 0..max_exp {
                    p.push(p[k].clone() * xi.clone());
                }
                p
            })
            .collect();
        self.terms.iter().fold(T::zero(), |acc, (m, c)| {
            acc + c.clone()
                * powers[0][m.exps[0] as usize].clone()
                * powers[1][m.exps[1] as usize].clone()
                * powers[2][m.exps[2] as usize].clone()
        })
    }

    pub fn to_f64(&self) -> Poly<f64> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, c.to_f64())))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Poly<T> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Poly<T> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Poly<T> {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Self) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m == Monomial::ONE {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})·{m}")?;
            }
        }
        Ok(())
    }
}
