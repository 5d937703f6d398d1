//! Exact integration over balls `B_R` centred at the origin.
//!
//! For even exponents `(2p, 2q, 2s)` the unit-ball moment is
//! `4π (2p−1)!! (2q−1)!! (2s−1)!! / ((2k+1)!! (2k+3))` with `k = p+q+s`;
//! any odd exponent gives zero. Scaling to radius `R` multiplies by
//! `R^(a+b+c+3)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::poly::{Monomial, Poly, QPoly};
use crate::scalar::{big_rat, PiMultiple, Rational};

fn odd_double_factorial(k: i64) -> BigInt {
    // (2j-1)!! with the convention (-1)!! = 1
    let mut acc = BigInt::one();
    let mut i = k;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    acc
}

/// `∫_{B_1} x0^a x1^b x2^c dV / π`.
pub fn unit_ball_moment(m: Monomial) -> Rational {
    if m.exps.iter().any(|e| e % 2 == 1) {
        return Rational::zero();
    }
    let [a, b, c] = m.exps.map(|e| e as i64);
    let k = (a + b + c) / 2;
    let numer = BigInt::from(4)
        * odd_double_factorial(a - 1)
        * odd_double_factorial(b - 1)
        * odd_double_factorial(c - 1);
    let denom = odd_double_factorial(2 * k + 1) * BigInt::from(2 * k + 3);
    Rational::new(numer, denom)
}

/// `∫_{B_R} x0^a x1^b x2^c dV` as an exact multiple of π.
pub fn ball_integral_monomial(a: u32, b: u32, c: u32, radius: &Rational) -> PiMultiple {
    let m = Monomial::new(a, b, c);
    let moment = unit_ball_moment(m);
    if moment.is_zero() {
        return PiMultiple::zero();
    }
    PiMultiple(moment * num_traits::pow(radius.clone(), (m.degree() + 3) as usize))
}

/// `∫_{B_R} p dV` for a scalar polynomial.
pub fn ball_integral(p: &Poly<Rational>, radius: &Rational) -> PiMultiple {
    let mut acc = PiMultiple::zero();
    for (m, c) in p.terms() {
        let [a, b, cc] = m.exps;
        acc += &ball_integral_monomial(a, b, cc, radius).scale(c);
    }
    acc
}

/// Moment table keyed by total monomial, built lazily per product.
struct Moments<'a> {
    radius: &'a Rational,
    cache: HashMap<Monomial, Rational>,
}

impl<'a> Moments<'a> {
    fn new(radius: &'a Rational) -> Self {
        Moments {
            radius,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, m: Monomial) -> &Rational {
        let radius = self.radius;
        self.cache.entry(m).or_insert_with(|| {
            let moment = unit_ball_moment(m);
            if moment.is_zero() {
                moment
            } else {
                moment * num_traits::pow(radius.clone(), (m.degree() + 3) as usize)
            }
        })
    }
}

fn scalar_product(p: &Poly<Rational>, q: &Poly<Rational>, moments: &mut Moments<'_>) -> Rational {
    // bucket q by exponent parity; only matching parities integrate to nonzero
    let mut buckets: HashMap<[u32; 3], Vec<(&Monomial, &Rational)>> = HashMap::new();
    for (m, c) in q.terms() {
        buckets.entry(m.parity()).or_default().push((m, c));
    }
    let mut acc = Rational::zero();
    for (m1, c1) in p.terms() {
        let Some(bucket) = buckets.get(&m1.parity()) else {
            continue;
        };
        for (m2, c2) in bucket {
            let moment = moments.get(m1.mul(m2));
            if !moment.is_zero() {
                acc += c1 * *c2 * moment;
            }
        }
    }
    acc
}

/// `∫_{B_R} p q dV` for two scalar polynomials.
pub fn inner_product_scalar(p: &Poly<Rational>, q: &Poly<Rational>, radius: &Rational) -> PiMultiple {
    let mut moments = Moments::new(radius);
    PiMultiple(scalar_product(p, q, &mut moments))
}

/// The real inner product `⟨f, g⟩ = ∫_{B_R} Sc(conj(f) g) dV`, exact.
///
/// `Sc(conj(f) g)` is the Euclidean dot product of the four components.
pub fn inner_product_l2(f: &QPoly<Rational>, g: &QPoly<Rational>, radius: &Rational) -> PiMultiple {
    let mut moments = Moments::new(radius);
    let mut acc = Rational::zero();
    for (p, q) in f.components().iter().zip(g.components()) {
        if p.is_zero() || q.is_zero() {
            continue;
        }
        acc += scalar_product(p, q, &mut moments);
    }
    PiMultiple(acc)
}

pub fn norm_sqr_l2(f: &QPoly<Rational>, radius: &Rational) -> PiMultiple {
    inner_product_l2(f, f, radius)
}

/// Full Gram matrix of a family of polynomials, computed in parallel.
pub fn gram_matrix(family: &[QPoly<Rational>], radius: &Rational) -> Vec<Vec<PiMultiple>> {
    let n = family.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let values: Vec<PiMultiple> = pairs
        .par_iter()
        .map(|&(i, j)| inner_product_l2(&family[i], &family[j], radius))
        .collect();
    let mut gram = vec![vec![PiMultiple::zero(); n]; n];
    for (&(i, j), v) in pairs.iter().zip(values) {
        gram[i][j] = v.clone();
        gram[j][i] = v;
    }
    gram
}

pub fn radius_power(radius: &Rational, exponent: u32) -> Rational {
    if exponent == 0 {
        return big_rat(BigInt::one());
    }
    num_traits::pow(radius.clone(), exponent as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{APoly, ScalarPoly};
    use crate::scalar::{rat, rat_int};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn one() -> Rational {
        rat_int(1)
    }

    #[test]
    fn ball_volume_and_parity() {
        assert_eq!(ball_integral_monomial(0, 0, 0, &one()), PiMultiple(rat(4, 3)));
        assert!(ball_integral_monomial(1, 0, 0, &one()).is_zero());
        assert!(ball_integral_monomial(2, 3, 0, &one()).is_zero());
        assert_eq!(ball_integral_monomial(2, 0, 0, &one()), PiMultiple(rat(4, 15)));
        // symmetric in the axes
        assert_eq!(
            ball_integral_monomial(0, 4, 2, &one()),
            ball_integral_monomial(2, 0, 4, &one())
        );
    }

    #[test]
    fn radius_scaling_is_exact() {
        let r2 = rat_int(2);
        for &(a, b, c) in &[(0, 0, 0), (2, 0, 0), (2, 2, 2), (4, 0, 2), (6, 2, 0)] {
            let big = ball_integral_monomial(a, b, c, &r2);
            let unit = ball_integral_monomial(a, b, c, &one());
            let expected = num_traits::pow(rat_int(2), (a + b + c + 3) as usize);
            assert_eq!(big.ratio(&unit), expected);
        }
    }

    /// Monte-Carlo oracle in the enclosing cube, 10^7 samples.
    fn monte_carlo(a: i32, b: i32, c: i32, samples: usize) -> (f64, f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        let (mut sum, mut sum_sq) = (0.0f64, 0.0f64);
        for _ in 0..samples {
            let x: [f64; 3] = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
            let v = if x.iter().map(|t| t * t).sum::<f64>() <= 1.0 {
                8.0 * x[0].powi(a) * x[1].powi(b) * x[2].powi(c)
            } else {
                0.0
            };
            sum += v;
            sum_sq += v * v;
        }
        let n = samples as f64;
        let mean = sum / n;
        let var = (sum_sq / n - mean * mean).max(0.0);
        (mean, (var / n).sqrt())
    }

    #[test]
    fn closed_form_matches_monte_carlo() {
        for &(a, b, c) in &[(2, 0, 0), (0, 0, 0), (2, 2, 0), (4, 0, 2)] {
            let exact = ball_integral_monomial(a as u32, b as u32, c as u32, &one()).to_f64();
            let (mean, sigma) = monte_carlo(a, b, c, 10_000_000);
            assert!(
                (mean - exact).abs() <= 3.0 * sigma,
                "({a},{b},{c}): mc {mean} ± {sigma} vs exact {exact}"
            );
        }
    }

    #[test]
    fn inner_product_examples() {
        let unit = APoly::from_scalar(ScalarPoly::constant(one()));
        assert_eq!(inner_product_l2(&unit, &unit, &one()), PiMultiple(rat(4, 3)));
        let half = rat(1, 2);
        let x = |i| ScalarPoly::var(i);
        let f = APoly::reduced(x(0), x(1).scale(&half), x(2).scale(&half));
        assert_eq!(norm_sqr_l2(&f, &one()), PiMultiple(rat(2, 5)));
    }

    #[test]
    fn inner_product_is_bilinear_symmetric_and_positive() {
        let x = |i| ScalarPoly::var(i);
        let f = APoly::reduced(&x(0) * &x(1), x(2), ScalarPoly::constant(rat(3, 2)));
        let g = APoly::from_components([x(1), &x(0) * &x(0), ScalarPoly::zero(), x(2)]);
        let h = APoly::reduced(ScalarPoly::constant(rat_int(-2)), &x(1) * &x(2), x(0));
        let r = rat(5, 2);
        assert_eq!(inner_product_l2(&f, &g, &r), inner_product_l2(&g, &f, &r));
        let lhs = inner_product_l2(&(&f.scale(&rat_int(3)) + &h), &g, &r);
        let rhs = inner_product_l2(&f, &g, &r).scale(&rat_int(3)) + inner_product_l2(&h, &g, &r);
        assert_eq!(lhs, rhs);
        for p in [&f, &g, &h] {
            assert!(norm_sqr_l2(p, &r).is_positive());
        }
        assert!(norm_sqr_l2(&APoly::zero(), &r).is_zero());
    }

    #[test]
    fn scalar_integral_and_gram() {
        let p = &ScalarPoly::var(0) * &ScalarPoly::var(0);
        assert_eq!(ball_integral(&p, &one()), PiMultiple(rat(4, 15)));
        let fam = vec![
            APoly::from_scalar(ScalarPoly::var(0)),
            APoly::from_scalar(ScalarPoly::var(1)),
        ];
        let g = gram_matrix(&fam, &one());
        assert!(g[0][1].is_zero());
        assert_eq!(g[0][0], PiMultiple(rat(4, 15)));
    }

    #[test]
    fn random_polys_have_positive_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let terms: Vec<_> = (0..5)
                .map(|_| {
                    (
                        Monomial::new(rng.gen_range(0..4), rng.gen_range(0..4), rng.gen_range(0..4)),
                        rat(rng.gen_range(-5..=5), rng.gen_range(1..4)),
                    )
                })
                .collect();
            let p = ScalarPoly::from_terms(terms);
            if p.is_zero() {
                continue;
            }
            assert!(norm_sqr_l2(&APoly::from_scalar(p), &one()).is_positive());
        }
    }
}
