//! Fourier expansions in the orthonormal basis on `B_R`, the decomposition
//! `f = f(0) + g + h`, and sup-norm sampling.

mod coefficients;
mod project;
pub mod sampling;

pub use coefficients::{Block, Coefficient, Evaluation, FourierCoefficients};
pub use project::{
    decompose, gradient_coefficient_recovery, project, pythagoras_terms, Decomposition, GradientRecovery,
    MonogenicFunction,
};
pub use sampling::{
    grad_scalar_sup, max_modulus, sc_h_e1_sup, scalar_sup, with_jobs, Objective, SphereGrid, SphereMax, SphereSamples,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{basis_polynomial, normalize, BasisIndex};
    use crate::error::Error;
    use crate::poly::{inner_product_l2, APoly, ScalarPoly};
    use crate::scalar::{rat, rat_int, Rational, Scalar};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn one() -> Rational {
        rat_int(1)
    }

    fn random_monogenic(rng: &mut ChaCha8Rng, max_degree: u32) -> APoly {
        let mut f = APoly::zero();
        for idx in crate::basis::indices_up_to(max_degree) {
            if rng.gen_bool(0.5) {
                let q = rat(rng.gen_range(-20..=20), rng.gen_range(1..=7));
                f = &f + &basis_polynomial(idx).scale(&q);
            }
        }
        f
    }

    #[test]
    fn projection_examples() {
        // normalized X_1^0: coefficient 1 there, zero elsewhere
        let idx = BasisIndex::x(1, 0);
        let e = normalize(idx, &one()).unwrap();
        let c = project(&basis_polynomial(idx), 3, &one()).unwrap();
        for (i, k) in c.iter() {
            if i == idx {
                assert_eq!(k.ratio, Some(rat_int(1)));
                assert!((k.value - e.norm()).abs() < 1e-15);
            } else {
                assert!(k.is_zero());
            }
        }
        // constant 1/2
        let half = APoly::from_scalar(ScalarPoly::constant(rat(1, 2)));
        let c = project(&half, 2, &one()).unwrap();
        let a0 = c.get(BasisIndex::x(0, 0)).unwrap();
        assert!((a0.value - 0.5 * (4.0 * std::f64::consts::PI / 3.0).sqrt()).abs() < 1e-15);
        assert_eq!(c.iter().filter(|(_, k)| !k.is_zero()).count(), 1);
        // X_1^0 + 2 Y_2^1
        let f = &*basis_polynomial(BasisIndex::x(1, 0)) + &basis_polynomial(BasisIndex::y(2, 1)).scale(&rat_int(2));
        let c = project(&f, 4, &one()).unwrap();
        let nonzero: Vec<_> = c.iter().filter(|(_, k)| !k.is_zero()).collect();
        assert_eq!(nonzero.len(), 2);
        let y = normalize(BasisIndex::y(2, 1), &one()).unwrap();
        assert!((c.get(BasisIndex::y(2, 1)).unwrap().value - 2.0 * y.norm()).abs() < 1e-13);
    }

    #[test]
    fn rejects_non_monogenic() {
        let f = APoly::from_scalar(ScalarPoly::var(1));
        assert!(matches!(project(&f, 2, &one()), Err(Error::NotMonogenic)));
    }

    #[test]
    fn synthesis_examples() {
        let zero = FourierCoefficients::zeros(one(), 3);
        assert!(zero.synthesize_poly().unwrap().is_zero());
        let mut c = FourierCoefficients::zeros(one(), 0);
        c.set_value(BasisIndex::x(0, 0), 1.0).unwrap();
        let v = c.synthesize([0.1, -0.2, 0.3]);
        assert!((v.value.a0 - (3.0 / (4.0 * std::f64::consts::PI)).sqrt()).abs() < 1e-15);
        assert!(!v.outside_ball);
        assert!(c.synthesize([1.0, 1.0, 0.0]).outside_ball);
        assert!(matches!(c.synthesize_poly(), Err(Error::NotExact)));
    }

    #[test]
    fn roundtrip_and_parseval() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for radius in [one(), rat(5, 2)] {
            for _ in 0..6 {
                let f = random_monogenic(&mut rng, 4);
                let c = project(&f, 4, &radius).unwrap();
                assert_eq!(c.synthesize_poly().unwrap(), f);
                assert_eq!(c.sum_of_squares().unwrap(), inner_product_l2(&f, &f, &radius));
                let d = decompose(&c);
                let (a, b, h) = pythagoras_terms(&d).unwrap();
                assert_eq!(a + b + h, inner_product_l2(&f, &f, &radius));
            }
        }
    }

    #[test]
    fn decomposition_example() {
        let f = &(&APoly::from_scalar(ScalarPoly::constant(rat_int(1))) + &*basis_polynomial(BasisIndex::x(1, 0)))
            + &*basis_polynomial(BasisIndex::x(1, 2));
        let c = project(&f, 3, &one()).unwrap();
        let d = decompose(&c);
        assert_eq!(d.f0_exact.clone().unwrap().a0, rat_int(1));
        assert!((d.f0.a0 - 1.0).abs() < 1e-15);
        assert_eq!(d.g.synthesize_poly().unwrap(), *basis_polynomial(BasisIndex::x(1, 0)));
        let h = d.h.synthesize_poly().unwrap();
        assert_eq!(h, *basis_polynomial(BasisIndex::x(1, 2)));
        assert!(h.partial(0).is_zero());
        // f(0) + g + h re-synthesizes f
        let f0 = APoly::constant(d.f0_exact.unwrap().widen());
        assert_eq!(&(&f0 + &d.g.synthesize_poly().unwrap()) + &h, f);
        // no m = n+1 terms: h vanishes
        let c = project(&basis_polynomial(BasisIndex::y(2, 2)), 3, &one()).unwrap();
        assert!(decompose(&c).h.synthesize_poly().unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let f = &*basis_polynomial(BasisIndex::x(2, 1)) + &basis_polynomial(BasisIndex::y(1, 2)).scale(&rat(-3, 4));
        let c = project(&f, 2, &rat(5, 2)).unwrap();
        let back = FourierCoefficients::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        let mut float = FourierCoefficients::zeros(rat(5, 2), 1);
        float.set_value(BasisIndex::y(1, 1), 0.25).unwrap();
        let back = FourierCoefficients::from_json(&float.to_json()).unwrap();
        assert_eq!(back.get(BasisIndex::y(1, 1)).unwrap().value, 0.25);
        assert!(FourierCoefficients::from_json(&serde_json::json!({"R": 1.0, "N": 1, "blocks": []})).is_err());
        assert!(FourierCoefficients::from_json(&serde_json::json!({"R": -1.0, "N": 0, "blocks": [{"n":0,"a0":1.0,"a":[0.0],"b":[0.0]}]})).is_err());
    }

    #[test]
    fn gradient_recovery_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut f = random_monogenic(&mut rng, 3);
        for n in 1..=3 {
            // drop the hyperholomorphic constants
            for fam in [crate::basis::Family::X, crate::basis::Family::Y] {
                let c = project(&f, 3, &one()).unwrap();
                let idx = BasisIndex::new(n, fam, n + 1).unwrap();
                let r = c.get(idx).unwrap().ratio.clone().unwrap();
                f = &f - &basis_polynomial(idx).scale(&r);
            }
        }
        let rec = gradient_coefficient_recovery(&f, 3, &rat(3, 2)).unwrap();
        assert!(!rec.is_empty());
        assert!(rec.iter().all(|r| r.holds));
        let with_h = basis_polynomial(BasisIndex::x(1, 2));
        assert!(matches!(
            gradient_coefficient_recovery(&with_h, 2, &one()),
            Err(Error::HyperholomorphicPart)
        ));
    }

    #[test]
    fn sup_examples() {
        let grid = SphereGrid::with_min_nodes(10_000);
        assert!(grid.len() >= 10_000);
        let x10 = basis_polynomial(BasisIndex::x(1, 0)).to_f64();
        for r in [0.3, 1.0] {
            assert!((max_modulus(&x10, r, &grid).value - r).abs() < 1e-12);
        }
        let half = APoly::from_scalar(ScalarPoly::constant(rat(1, 2))).to_f64();
        assert!((max_modulus(&half, 0.7, &grid).value - 0.5).abs() < 1e-15);
        assert!((scalar_sup(&x10, 1.0, &grid).value - 1.0).abs() < 1e-12);
        assert!((grad_scalar_sup(&x10, 1.0, &grid).value - 1.0).abs() < 1e-12);
        // h = X_1^2 = −3x1 e1 + 3x2 e2, so |Sc(h e1)| = 3|x1| ≤ 3R
        let h = basis_polynomial(BasisIndex::x(1, 2)).to_f64();
        let s = sc_h_e1_sup(&h, 2.0, &grid);
        assert!((s.value - 6.0).abs() < 1e-9);
        let closed = crate::basis::hyperholomorphic_constant_closed_form(
            1,
            crate::basis::Family::X,
            &crate::special::SphericalPoint::from_cartesian(s.point),
        )
        .unwrap();
        assert!((closed.a1.abs() - s.value).abs() < 1e-9);
    }

    #[test]
    fn max_modulus_agrees_with_random_sampling() {
        // x1 − x0 e1 is (2/3) X_1^1
        let f = basis_polynomial(BasisIndex::x(1, 1)).scale(&rat(2, 3)).to_f64();
        let grid = SphereGrid::with_min_nodes(10_000);
        let m = max_modulus(&f, 1.0, &grid).value;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut best = 0.0f64;
        for _ in 0..1_000_000 {
            let v: [f64; 3] = [rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5];
            let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            if n < 1e-9 {
                continue;
            }
            best = best.max(f.evaluate(&v.map(|c| c / n)).norm());
        }
        assert!((m - best).abs() < 1e-3, "{m} vs {best}");
        assert!(m >= best - 1e-12);
    }

    #[test]
    fn independent_of_thread_count() {
        let f = basis_polynomial(BasisIndex::y(4, 3)).to_f64();
        let grid = SphereGrid::with_min_nodes(5_000);
        let a = with_jobs(1, || max_modulus(&f, 0.8, &grid).value);
        let b = with_jobs(3, || max_modulus(&f, 0.8, &grid).value);
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn float_coefficients_synthesize() {
        let mut c = FourierCoefficients::zeros(rat(5, 2), 2);
        let idx = BasisIndex::x(2, 1);
        c.set_value(idx, 1.5).unwrap();
        let p = c.synthesize_poly_f64();
        let e = normalize(idx, &rat(5, 2)).unwrap();
        let x = [0.3, 0.1, -0.4];
        let expect = e.to_f64().evaluate(&x).scale(&1.5);
        assert!(p.evaluate(&x).max_abs_diff(&expect) < 1e-14);
        assert!((Scalar::to_f64(&c.radius) - 2.5).abs() < 1e-15);
    }
}
