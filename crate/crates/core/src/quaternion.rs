//! Real quaternions `H` and the reduced subspace `A = span{1, e1, e2}`.
//!
//! Both types are generic over [`Scalar`], so the same arithmetic runs on
//! exact rationals and on `f64`. `A` is a vector subspace but not a
//! subalgebra: products of reduced quaternions return a full [`Quaternion`].

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Quaternion<T> {
    pub a0: T,
    pub a1: T,
    pub a2: T,
    pub a3: T,
}

impl<T: Scalar> Quaternion<T> {
    pub fn new(a0: T, a1: T, a2: T, a3: T) -> Self {
        Quaternion { a0, a1, a2, a3 }
    }

    pub fn from_components(c: [T; 4]) -> Self {
        let [a0, a1, a2, a3] = c;
        Quaternion { a0, a1, a2, a3 }
    }

    pub fn components(&self) -> [&T; 4] {
        [&self.a0, &self.a1, &self.a2, &self.a3]
    }

    pub fn zero() -> Self {
        Self::real(T::zero())
    }

    pub fn one() -> Self {
        Self::real(T::one())
    }

    pub fn real(a0: T) -> Self {
        Quaternion::new(a0, T::zero(), T::zero(), T::zero())
    }

    /// The imaginary unit `e_i` for `i` in `1..=3`.
    pub fn unit(i: usize) -> Self {
        let mut c = [T::zero(), T::zero(), T::zero(), T::zero()];
        c[i] = T::one();
        Self::from_components(c)
    }

    pub fn e1() -> Self {
        Self::unit(1)
    }

    pub fn e2() -> Self {
        Self::unit(2)
    }

    pub fn e3() -> Self {
        Self::unit(3)
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(
            self.a0.clone(),
            -self.a1.clone(),
            -self.a2.clone(),
            -self.a3.clone(),
        )
    }

    /// Scalar part `Sc(q)`.
    pub fn sc(&self) -> T {
        self.a0.clone()
    }

    /// Vector part `Vec(q)` as a quaternion with zero scalar part.
    pub fn vec(&self) -> Self {
        Quaternion::new(T::zero(), self.a1.clone(), self.a2.clone(), self.a3.clone())
    }

    /// `|q|²`, exact on the rational backing.
    pub fn norm_sqr(&self) -> T {
        self.a0.clone() * self.a0.clone()
            + self.a1.clone() * self.a1.clone()
            + self.a2.clone() * self.a2.clone()
            + self.a3.clone() * self.a3.clone()
    }

    pub fn norm(&self) -> f64 {
        let c = [&self.a0, &self.a1, &self.a2, &self.a3].map(|a| a.to_f64());
        c.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn scale(&self, factor: &T) -> Self {
        Quaternion::new(
            self.a0.clone() * factor.clone(),
            self.a1.clone() * factor.clone(),
            self.a2.clone() * factor.clone(),
            self.a3.clone() * factor.clone(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    /// True when the `e3` component vanishes, i.e. the value lies in `A`.
    pub fn is_reduced(&self) -> bool {
        self.a3.is_zero()
    }

    pub fn to_f64(&self) -> Quaternion<f64> {
        Quaternion::new(
            self.a0.to_f64(),
            self.a1.to_f64(),
            self.a2.to_f64(),
            self.a3.to_f64(),
        )
    }

    /// Largest absolute component difference, in floating point.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let a = self.to_f64();
        let b = other.to_f64();
        [a.a0 - b.a0, a.a1 - b.a1, a.a2 - b.a2, a.a3 - b.a3]
            .iter()
            .fold(0.0f64, |acc, d| acc.max(d.abs()))
    }

    pub fn powi(&self, exponent: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exponent {
            acc = &acc * self;
        }
        acc
    }
}

impl<T: Scalar> Add for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn add(self, rhs: Self) -> Quaternion<T> {
        Quaternion::new(
            self.a0.clone() + rhs.a0.clone(),
            self.a1.clone() + rhs.a1.clone(),
            self.a2.clone() + rhs.a2.clone(),
            self.a3.clone() + rhs.a3.clone(),
        )
    }
}

impl<T: Scalar> Sub for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn sub(self, rhs: Self) -> Quaternion<T> {
        Quaternion::new(
            self.a0.clone() - rhs.a0.clone(),
            self.a1.clone() - rhs.a1.clone(),
            self.a2.clone() - rhs.a2.clone(),
            self.a3.clone() - rhs.a3.clone(),
        )
    }
}

impl<T: Scalar> Neg for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn neg(self) -> Quaternion<T> {
        Quaternion::new(
            -self.a0.clone(),
            -self.a1.clone(),
            -self.a2.clone(),
            -self.a3.clone(),
        )
    }
}

/// Hamilton product with `e1e2 = e3`, `e2e3 = e1`, `e3e1 = e2`, `ei² = -1`.
impl<T: Scalar> Mul for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn mul(self, q: Self) -> Quaternion<T> {
        let p = self;
        let m = |x: &T, y: &T| x.clone() * y.clone();
        Quaternion::new(
            m(&p.a0, &q.a0) - m(&p.a1, &q.a1) - m(&p.a2, &q.a2) - m(&p.a3, &q.a3),
            m(&p.a0, &q.a1) + m(&p.a1, &q.a0) + m(&p.a2, &q.a3) - m(&p.a3, &q.a2),
            m(&p.a0, &q.a2) - m(&p.a1, &q.a3) + m(&p.a2, &q.a0) + m(&p.a3, &q.a1),
            m(&p.a0, &q.a3) + m(&p.a1, &q.a2) - m(&p.a2, &q.a1) + m(&p.a3, &q.a0),
        )
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for Quaternion<T> {
            type Output = Quaternion<T>;
            fn $method(self, rhs: Self) -> Quaternion<T> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for Quaternion<T> {
    type Output = Quaternion<T>;
    fn neg(self) -> Quaternion<T> {
        -&self
    }
}

/// An element `a0 + a1 e1 + a2 e2` of the reduced subspace `A`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedQuaternion<T> {
    pub a0: T,
    pub a1: T,
    pub a2: T,
}

impl<T: Scalar> ReducedQuaternion<T> {
    pub fn new(a0: T, a1: T, a2: T) -> Self {
        ReducedQuaternion { a0, a1, a2 }
    }

    pub fn zero() -> Self {
        ReducedQuaternion::new(T::zero(), T::zero(), T::zero())
    }

    /// The embedding of a point `(x0, x1, x2)` as `x0 + x1 e1 + x2 e2`.
    pub fn from_point(x: [T; 3]) -> Self {
        let [a0, a1, a2] = x;
        ReducedQuaternion { a0, a1, a2 }
    }

    pub fn widen(&self) -> Quaternion<T> {
        Quaternion::new(self.a0.clone(), self.a1.clone(), self.a2.clone(), T::zero())
    }

    pub fn conj(&self) -> Self {
        ReducedQuaternion::new(self.a0.clone(), -self.a1.clone(), -self.a2.clone())
    }

    pub fn sc(&self) -> T {
        self.a0.clone()
    }

    /// The vector part `x1 e1 + x2 e2`.
    pub fn vec(&self) -> Self {
        ReducedQuaternion::new(T::zero(), self.a1.clone(), self.a2.clone())
    }

    pub fn norm_sqr(&self) -> T {
        self.widen().norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.widen().norm()
    }

    pub fn scale(&self, factor: &T) -> Self {
        ReducedQuaternion::new(
            self.a0.clone() * factor.clone(),
            self.a1.clone() * factor.clone(),
            self.a2.clone() * factor.clone(),
        )
    }

    pub fn to_f64(&self) -> ReducedQuaternion<f64> {
        ReducedQuaternion::new(self.a0.to_f64(), self.a1.to_f64(), self.a2.to_f64())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.widen().max_abs_diff(&other.widen())
    }
}

impl<T: Scalar> Add for &ReducedQuaternion<T> {
    type Output = ReducedQuaternion<T>;
    fn add(self, rhs: Self) -> ReducedQuaternion<T> {
        ReducedQuaternion::new(
            self.a0.clone() + rhs.a0.clone(),
            self.a1.clone() + rhs.a1.clone(),
            self.a2.clone() + rhs.a2.clone(),
        )
    }
}

impl<T: Scalar> Sub for &ReducedQuaternion<T> {
    type Output = ReducedQuaternion<T>;
    fn sub(self, rhs: Self) -> ReducedQuaternion<T> {
        ReducedQuaternion::new(
            self.a0.clone() - rhs.a0.clone(),
            self.a1.clone() - rhs.a1.clone(),
            self.a2.clone() - rhs.a2.clone(),
        )
    }
}

/// Reduced times reduced lands in `H`, not in `A`.
impl<T: Scalar> Mul for &ReducedQuaternion<T> {
    type Output = Quaternion<T>;
    fn mul(self, rhs: Self) -> Quaternion<T> {
        &self.widen() * &rhs.widen()
    }
}

impl<T: Scalar> From<ReducedQuaternion<T>> for Quaternion<T> {
    fn from(value: ReducedQuaternion<T>) -> Self {
        value.widen()
    }
}

impl<T: Scalar> TryFrom<Quaternion<T>> for ReducedQuaternion<T> {
    type Error = Error;

    fn try_from(q: Quaternion<T>) -> Result<Self, Error> {
        if !q.is_reduced() {
            return Err(Error::NotReduced);
        }
        Ok(ReducedQuaternion::new(q.a0, q.a1, q.a2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int, Rational};
    use proptest::prelude::*;

    type Q = Quaternion<Rational>;

    fn q(a: [i64; 4]) -> Q {
        Quaternion::from_components(a.map(rat_int))
    }

    #[test]
    fn unit_table() {
        assert_eq!(&Q::e1() * &Q::e2(), Q::e3());
        assert_eq!(&Q::e2() * &Q::e1(), -Q::e3());
        assert_eq!(&Q::e2() * &Q::e3(), Q::e1());
        assert_eq!(&Q::e3() * &Q::e2(), -Q::e1());
        assert_eq!(&Q::e3() * &Q::e1(), Q::e2());
        assert_eq!(&Q::e1() * &Q::e3(), -Q::e2());
        for i in 1..=3 {
            assert_eq!(&Q::unit(i) * &Q::unit(i), -Q::one());
        }
    }

    #[test]
    fn identity_and_expansion() {
        let x = q([3, -1, 4, 2]);
        assert_eq!(&x * &Q::one(), x);
        let lhs = &(&Q::e1() + &Q::e2()) * &(&Q::e1() - &Q::e2());
        assert_eq!(lhs, Q::e3().scale(&rat_int(-2)));
    }

    #[test]
    fn conjugation() {
        assert_eq!(q([1, 1, 0, 0]).conj(), q([1, -1, 0, 0]));
        let x = q([5, -2, 7, 1]);
        assert_eq!(x.conj().conj(), x);
        let e12 = &Q::e1() * &Q::e2();
        assert_eq!(e12.conj(), -Q::e3());
        assert_eq!(e12.conj(), &Q::e2().conj() * &Q::e1().conj());
    }

    #[test]
    fn parts_and_norm() {
        assert_eq!(q([3, 0, 2, 0]).sc(), rat_int(3));
        assert!(q([5, 0, 0, 0]).vec().is_zero());
        assert_eq!(q([1, 1, 1, 1]).norm(), 2.0);
        let x = q([2, -3, 1, 5]);
        assert_eq!(&x.real_part_plus_vec(), &x);
        assert_eq!((&x.conj() * &x).sc(), x.norm_sqr());
        assert!((&x.conj() * &x).vec().is_zero());
    }

    impl Q {
        fn real_part_plus_vec(&self) -> Q {
            &Q::real(self.sc()) + &self.vec()
        }
    }

    #[test]
    fn reduced_subspace_is_not_closed() {
        let e1 = ReducedQuaternion::new(rat_int(0), rat_int(1), rat_int(0));
        let e2 = ReducedQuaternion::new(rat_int(0), rat_int(0), rat_int(1));
        let product = &e1 * &e2;
        assert_eq!(product, Q::e3());
        assert!(ReducedQuaternion::try_from(product).is_err());
        let sum = &e1 + &e2.scale(&rat(1, 2));
        assert!(sum.widen().is_reduced());
        assert_eq!(sum.conj().conj(), sum);
    }

    #[test]
    fn reduced_norm_is_euclidean() {
        let x = ReducedQuaternion::new(1.0, 2.0, 2.0);
        assert_eq!(x.norm(), 3.0);
    }

    fn small_q() -> impl Strategy<Value = Q> {
        prop::array::uniform4((-20i64..20, 1i64..6)).prop_map(|c| {
            Quaternion::from_components(c.map(|(n, d)| rat(n, d)))
        })
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(p in small_q(), r in small_q()) {
            prop_assert_eq!((&p * &r).norm_sqr(), p.norm_sqr() * r.norm_sqr());
        }

        #[test]
        fn product_is_associative(p in small_q(), r in small_q(), s in small_q()) {
            prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
        }

        #[test]
        fn conj_reverses_products(p in small_q(), r in small_q()) {
            prop_assert_eq!((&p * &r).conj(), &r.conj() * &p.conj());
        }
    }
}
