//! Growth inequalities for monogenic functions in terms of the scalar part,
//! the gradient of the scalar part, and for the hypercomplex derivative —
//! evaluated on concrete functions with sampled sup-norms.

mod checks;
mod corpus;
pub mod formulas;

pub use checks::{reports_to_csv, tolerance, BoundReport, Inequality, SampledFunction, Sampling};
pub use corpus::{admissible, check_coefficients, corpus, sort_reports, sweep, CorpusEntry, SweepConfig};
pub use formulas::{a, a1, a2, derivative_factor, gradient_factor, local_factor, orthogonal_factor};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{basis_polynomial, BasisIndex};
    use crate::error::Error;
    use crate::fourier::{project, FourierCoefficients, SphereGrid};
    use crate::poly::{APoly, ScalarPoly};
    use crate::scalar::{rat, rat_int, Rational};

    fn sampled<'g>(f: &APoly, radius: Rational, grid: &'g SphereGrid) -> SampledFunction<'g> {
        let c = project(f, f.degree().unwrap_or(0), &radius).unwrap();
        SampledFunction::new("test", c, grid)
    }

    #[test]
    fn x10_examples() {
        let grid = SphereGrid::with_min_nodes(10_000);
        let f = sampled(&basis_polynomial(BasisIndex::x(1, 0)), rat_int(1), &grid);
        let rp = f.realpart_bound_check(0.5).unwrap();
        assert!((rp.lhs - 0.5).abs() < 1e-12);
        assert!(rp.rhs >= 89.8 && rp.pass);
        let g = f.gradient_bound_check(0.5).unwrap();
        assert!((g.rhs - 12.0 * 2f64.sqrt()).abs() < 1e-9 && g.pass);
        let d = f.derivative_bound_check(0.5).unwrap();
        assert!((d.lhs - 1.0).abs() < 1e-12);
        assert!((d.rhs - 104.0 * 3f64.sqrt()).abs() < 1e-8 && d.pass);
        assert!(f.orthogonal_realpart_check(0.5).unwrap().pass);
        let at_zero = f.realpart_bound_check(0.0).unwrap();
        assert!(at_zero.margin >= 0.0);
        assert!(matches!(f.realpart_bound_check(1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn constants() {
        let grid = SphereGrid::with_min_nodes(2_000);
        let half = APoly::from_scalar(ScalarPoly::constant(rat(1, 2)));
        let f = sampled(&half, rat_int(1), &grid);
        let rp = f.realpart_bound_check(0.3).unwrap();
        assert!((rp.lhs - 0.5).abs() < 1e-15 && rp.pass);
        let h = f.hadamard_check(0.3).unwrap();
        assert!(h.lhs.abs() < 1e-15 && h.rhs.abs() < 1e-15 && h.pass);
        let g = f.gradient_bound_check(0.3).unwrap();
        assert!((g.rhs - g.lhs).abs() < 1e-15 && g.pass);
    }

    #[test]
    fn hyperholomorphic_constant_rejected_where_required() {
        let grid = SphereGrid::with_min_nodes(2_000);
        let f = sampled(&basis_polynomial(BasisIndex::x(1, 2)), rat_int(1), &grid);
        assert!(f.has_h);
        assert!(matches!(f.orthogonal_realpart_check(0.5), Err(Error::HyperholomorphicPart)));
        assert!(matches!(f.hadamard_check(0.5), Err(Error::HyperholomorphicPart)));
        assert!(matches!(f.gradient_bound_check(0.5), Err(Error::HyperholomorphicPart)));
        let d = f.derivative_bound_check(0.5).unwrap();
        assert!(d.lhs < 1e-12 && d.pass);
        assert!(f.realpart_bound_check(0.5).unwrap().pass);
        assert_eq!(f.check_all(&[0.5]).unwrap().len(), 2);
    }

    #[test]
    fn translation() {
        // f and f + c: Hadamard sides coincide; real-part sides move only
        // through |f(0)| and sup|Sc f|
        let grid = SphereGrid::with_min_nodes(5_000);
        let x = basis_polynomial(BasisIndex::x(1, 0));
        let shifted = &*x + &APoly::from_scalar(ScalarPoly::constant(rat(1, 4)));
        let f = sampled(&x, rat_int(1), &grid);
        let g = sampled(&shifted, rat_int(1), &grid);
        for r in [0.1, 0.5, 0.9] {
            let (a, b) = (f.hadamard_check(r).unwrap(), g.hadamard_check(r).unwrap());
            assert!((a.lhs - b.lhs).abs() < 1e-12 && (a.rhs - b.rhs).abs() < 1e-9);
            let rp = g.realpart_bound_check(r).unwrap();
            let expected = g.f0.norm()
                + formulas::real_part_prefactor(r, 1.0).unwrap()
                    * (a1(r, 1.0).unwrap() * g.sup_sc.value + a2(r, 1.0).unwrap() * g.sup_sc_h_e1.value);
            assert_eq!(rp.rhs, expected);
            assert!((g.f0.norm() - 0.25).abs() < 1e-15);
            assert!((g.sup_sc.value - 1.25).abs() < 1e-9);
            assert_eq!(g.sup_sc_h_e1.value, f.sup_sc_h_e1.value);
        }
    }

    #[test]
    fn small_sweep_passes() {
        let config = SweepConfig {
            radii: vec![rat_int(1), rat(5, 2)],
            ratios: vec![0.1, 0.5, 0.9],
            grid_nodes: 2_000,
            basis_degree: 3,
            random_count: 3,
            random_degree: 3,
            ..SweepConfig::default()
        };
        let reports = sweep(&config).unwrap();
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(r.pass, "{r:?}");
        }
        let again = sweep(&config).unwrap();
        assert_eq!(serde_json::to_string(&reports).unwrap(), serde_json::to_string(&again).unwrap());
        let csv = reports_to_csv(&reports[..2]);
        assert!(csv.starts_with("id,function,r,R,lhs,rhs,margin,pass\n"));
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn coefficient_file_rows() {
        let mut c = FourierCoefficients::zeros(rat_int(1), 2);
        c.set_value(BasisIndex::x(2, 1), 0.7).unwrap();
        c.set_value(BasisIndex::y(1, 1), -0.2).unwrap();
        let reports = check_coefficients("file", &c, &[0.2, 0.4], 2_000).unwrap();
        assert_eq!(reports.len(), 2 * 5);
        assert!(reports.iter().all(|r| r.pass));
    }
}
