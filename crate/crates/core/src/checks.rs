//! The identity and sampling suites behind `riesz check`: each returns a
//! named pass/fail result with a short detail string.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{
    closed_form_trig, degree_indices, hyperholomorphic_constant_polynomial, hyperholomorphic_constant_trig,
    indices_up_to, normalize, pointwise_bound, recurrence_check_with, solid_harmonic, spherical_harmonic_form_trig,
    BasisIndex, Family, HarmonicKind,
};
use crate::fourier::{decompose, gradient_coefficient_recovery, project, pythagoras_terms, Objective, SphereGrid, SphereSamples};
use crate::poly::{
    apply_d, grad, hypercomplex_derivative, inner_product_l2, integrate::inner_product_scalar, laplacian, APoly,
    ScalarPoly,
};
use crate::quaternion::ReducedQuaternion;
use crate::scalar::{rat, Rational, Scalar};
use crate::special::TrigPoint;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(id: &'static str, failures: &[String], checked: usize) -> Self {
        let detail = if failures.is_empty() {
            format!("{checked} cases")
        } else {
            let shown: Vec<_> = failures.iter().take(5).cloned().collect();
            format!("{} of {checked} failed: {}", failures.len(), shown.join("; "))
        };
        CheckResult {
            id,
            passed: failures.is_empty(),
            detail,
        }
    }
}

/// Source of basis polynomials; [`Basis::corrupted`] perturbs one element so
/// that the harness can be shown to catch a bad table.
#[derive(Clone)]
pub struct Basis {
    corrupt: Option<BasisIndex>,
}

impl Basis {
    pub fn exact() -> Self {
        Basis { corrupt: None }
    }

    /// Adds `x0^n / 7` to the scalar part of `X_n^1` (or `X_n^0` at `n = 0`).
    pub fn corrupted(max_degree: u32) -> Self {
        let n = max_degree.clamp(1, 2);
        Basis {
            corrupt: Some(BasisIndex::x(n, 1)),
        }
    }

    pub fn get(&self, idx: BasisIndex) -> Arc<APoly> {
        let p = crate::basis::basis_polynomial(idx);
        if self.corrupt == Some(idx) {
            let bump = ScalarPoly::var(0).pow(idx.n).scale(&rat(1, 7));
            return Arc::new(&*p + &APoly::from_scalar(bump));
        }
        p
    }

    pub fn get_or_zero(&self, n: u32, family: Family, m: u32) -> Arc<APoly> {
        match BasisIndex::new(n, family, m) {
            Ok(idx) => self.get(idx),
            Err(_) => Arc::new(APoly::zero()),
        }
    }
}

fn one() -> Rational {
    Rational::from_int(1)
}

pub fn monogenicity(basis: &Basis, max_degree: u32) -> CheckResult {
    let idx = indices_up_to(max_degree);
    let failures: Vec<String> = idx
        .par_iter()
        .filter(|&&i| {
            let p = basis.get(i);
            !(p.is_a_valued() && p.is_homogeneous(i.n) && apply_d(&p).is_zero())
        })
        .map(|i| i.to_string())
        .collect();
    CheckResult::new("monogenicity", &failures, idx.len())
}

pub fn harmonicity(basis: &Basis, max_degree: u32) -> CheckResult {
    let idx = indices_up_to(max_degree);
    let failures: Vec<String> = idx
        .par_iter()
        .filter(|&&i| !laplacian(&basis.get(i)).is_zero())
        .map(|i| i.to_string())
        .collect();
    CheckResult::new("harmonicity", &failures, idx.len())
}

/// All pairwise inner products on `B_1` within and across degrees vanish,
/// each degree has `2n + 3` elements, and every normalized element has
/// self-product exactly 1.
pub fn orthogonality(basis: &Basis, max_degree: u32) -> CheckResult {
    let idx = indices_up_to(max_degree);
    let mut failures = Vec::new();
    for n in 0..=max_degree {
        if degree_indices(n).len() != (2 * n + 3) as usize {
            failures.push(format!("degree {n} count"));
        }
    }
    let polys: Vec<Arc<APoly>> = idx.iter().map(|&i| basis.get(i)).collect();
    let pairs: Vec<(usize, usize)> = (0..idx.len()).flat_map(|i| (i + 1..idx.len()).map(move |j| (i, j))).collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter(|&&(i, j)| !inner_product_l2(&polys[i], &polys[j], &one()).is_zero())
        .map(|&(i, j)| format!("<{}, {}> ≠ 0", idx[i], idx[j]))
        .collect();
    failures.extend(bad);
    for (k, &i) in idx.iter().enumerate() {
        let e = normalize(i, &one()).expect("positive radius");
        let self_ip = inner_product_l2(&polys[k], &polys[k], &one());
        if self_ip.ratio(&e.norm_sq) != one() {
            failures.push(format!("|{i}*|² ≠ 1"));
        }
    }
    CheckResult::new("orthogonality", &failures, pairs.len() + idx.len())
}

/// `Sc(X_n^l) = (n+l+1)/2 · r^n U^l_n` and `Sc(Y_n^m) = (n+m+1)/2 · r^n V^m_n`.
pub fn scalar_part_relation(basis: &Basis, max_degree: u32) -> CheckResult {
    let idx = indices_up_to(max_degree);
    let failures: Vec<String> = idx
        .par_iter()
        .filter(|&&i| {
            let kind = if i.family == Family::X { HarmonicKind::U } else { HarmonicKind::V };
            let expected = match solid_harmonic(i.n, i.m, kind) {
                Ok(h) => h.scale(&rat((i.n + i.m + 1) as i64, 2)),
                Err(_) => ScalarPoly::zero(), // order n+1: zero extension
            };
            basis.get(i).sc() != &expected
        })
        .map(|i| i.to_string())
        .collect();
    CheckResult::new("scalar-part-relation", &failures, idx.len())
}

/// For each element, its three real components are pairwise orthogonal.
pub fn component_orthogonality(basis: &Basis, max_degree: u32) -> CheckResult {
    let idx = indices_up_to(max_degree);
    let failures: Vec<String> = idx
        .par_iter()
        .filter(|&&i| {
            let p = basis.get(i);
            let c = p.components();
            [(0, 1), (0, 2), (1, 2)]
                .iter()
                .any(|&(a, b)| !inner_product_scalar(&c[a], &c[b], &one()).is_zero())
        })
        .map(|i| i.to_string())
        .collect();
    CheckResult::new("component-orthogonality", &failures, idx.len())
}

/// Gradients of the scalar parts within one degree are pairwise orthogonal,
/// and so are the three component gradients of each element.
pub fn gradient_orthogonality(basis: &Basis, max_degree: u32) -> CheckResult {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 0..=max_degree {
        let idx = degree_indices(n);
        let grads: Vec<APoly> = idx.iter().map(|&i| grad(basis.get(i).sc())).collect();
        for a in 0..idx.len() {
            for b in a + 1..idx.len() {
                checked += 1;
                if !inner_product_l2(&grads[a], &grads[b], &one()).is_zero() {
                    failures.push(format!("grad Sc {} · grad Sc {}", idx[a], idx[b]));
                }
            }
        }
        for &i in &idx {
            let p = basis.get(i);
            let g: Vec<APoly> = p.components()[..3].iter().map(grad).collect();
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                checked += 1;
                if !inner_product_l2(&g[a], &g[b], &one()).is_zero() {
                    failures.push(format!("{i} component gradients {a},{b}"));
                }
            }
        }
    }
    CheckResult::new("gradient-orthogonality", &failures, checked)
}

/// `grad Sc X_n^l = (n+l+1) conj(X_{n−1}^l)` (`l ≤ n`), likewise for Y, and
/// for `m ≥ 1`
/// `grad [X_n^m]_1 = ½ conj(X_{n−1}^{m+1}) − ½(n+m+1)(n+m) conj(X_{n−1}^{m−1})`,
/// `grad [X_n^m]_2 = ½ conj(Y_{n−1}^{m+1}) + ½(n+m+1)(n+m) conj(Y_{n−1}^{m−1})`.
pub fn gradient_relation(basis: &Basis, max_degree: u32) -> CheckResult {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=max_degree {
        for i in degree_indices(n) {
            let p = basis.get(i);
            if i.m <= n {
                checked += 1;
                let lower = basis.get_or_zero(n - 1, i.family, i.m).conj();
                if grad(p.sc()) != lower.scale(&Rational::from_int((n + i.m + 1) as i64)) {
                    failures.push(format!("grad Sc {i}"));
                }
            }
            if i.family == Family::X && i.m >= 1 {
                checked += 2;
                let k = Rational::from_int(((n + i.m + 1) * (n + i.m)) as i64);
                let half = rat(1, 2);
                let x = |m| basis.get_or_zero(n - 1, Family::X, m).conj();
                let y = |m| if m == 0 { APoly::zero() } else { basis.get_or_zero(n - 1, Family::Y, m).conj() };
                let first = &x(i.m + 1).scale(&half) - &x(i.m - 1).scale(&(&k * &half));
                let second = &y(i.m + 1).scale(&half) + &y(i.m - 1).scale(&(&k * &half));
                if grad(p.component(1)) != first {
                    failures.push(format!("grad [{i}]_1"));
                }
                if grad(p.component(2)) != second {
                    failures.push(format!("grad [{i}]_2"));
                }
            }
        }
    }
    CheckResult::new("gradient-relation", &failures, checked)
}

/// `½D̄ X_n^l = (n+l+1) X_{n−1}^l`, `½D̄ Y_n^m = (n+m+1) Y_{n−1}^m`, `n ≥ 1`.
pub fn derivative_identity(basis: &Basis, max_degree: u32) -> CheckResult {
    let idx: Vec<BasisIndex> = indices_up_to(max_degree).into_iter().filter(|i| i.n >= 1).collect();
    let failures: Vec<String> = idx
        .par_iter()
        .filter(|&&i| {
            let lhs = hypercomplex_derivative(&basis.get(i));
            let rhs = basis.get_or_zero(i.n - 1, i.family, i.m).scale(&Rational::from_int((i.n + i.m + 1) as i64));
            lhs != rhs
        })
        .map(|i| i.to_string())
        .collect();
    CheckResult::new("derivative-identity", &failures, idx.len())
}

pub fn recurrences(basis: &Basis, max_degree: u32) -> CheckResult {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 0..=max_degree {
        let lookup = |family: Family, m: u32| (*basis.get_or_zero(n, family, m)).clone();
        for outcome in recurrence_check_with(n, &lookup) {
            checked += 1;
            if !outcome.passed {
                failures.push(format!("{:?} n={} m={}", outcome.recurrence, outcome.n, outcome.m));
            }
        }
    }
    CheckResult::new("recurrences", &failures, checked)
}

/// Seeded rational points on rational spheres: `r ∈ (0, 1]` and half-angle
/// tangents with small denominators.
pub fn rational_points(seed: u64, count: usize) -> Vec<TrigPoint<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = rat(rng.gen_range(1..=16), 16);
            let s1 = rat(rng.gen_range(0..=24), rng.gen_range(1..=8));
            let s2 = rat(rng.gen_range(-24..=24), rng.gen_range(1..=8));
            TrigPoint::from_half_angle_tangents(r, s1, s2).expect("s1 ≥ 0")
        })
        .collect()
}

/// Seeded float spherical points in the unit ball.
pub fn float_points(seed: u64, count: usize) -> Vec<TrigPoint<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let p = crate::special::SphericalPoint::new(
                rng.gen_range(0.0..=1.0),
                rng.gen_range(0.0..=std::f64::consts::PI),
                rng.gen_range(0.0..2.0 * std::f64::consts::PI),
            );
            p.trig()
        })
        .collect()
}

/// Exact agreement of the polynomial, the Legendre–Chebyshev closed form and
/// the spherical-harmonic form at seeded rational points, plus the largest
/// float discrepancy relative to the pointwise bound (reported, not asserted).
pub fn triple_agreement(basis: &Basis, max_degree: u32, seed: u64, points: usize) -> CheckResult {
    let pts = rational_points(seed, points);
    let cart: Vec<[Rational; 3]> = pts.iter().map(|p| p.to_cartesian()).collect();
    let fpts = float_points(seed, points);
    let idx = indices_up_to(max_degree);
    let results: Vec<(Option<String>, f64)> = idx
        .par_iter()
        .map(|&i| {
            let p = basis.get(i);
            let mut failure = None;
            for (t, x) in pts.iter().zip(&cart) {
                let direct = p.evaluate(x);
                let direct = ReducedQuaternion::try_from(direct);
                let ok = match direct {
                    Ok(d) => closed_form_trig(i, t) == d && spherical_harmonic_form_trig(i, t) == d,
                    Err(_) => false,
                };
                if !ok {
                    failure = Some(i.to_string());
                    break;
                }
            }
            let pf = p.to_f64();
            let mut worst = 0.0f64;
            for t in &fpts {
                let d = pf.evaluate(&t.to_cartesian());
                let d = ReducedQuaternion::new(d.a0, d.a1, d.a2);
                let scale = pointwise_bound(i, 1.0).max(1.0);
                worst = worst
                    .max(closed_form_trig(i, t).max_abs_diff(&d) / scale)
                    .max(spherical_harmonic_form_trig(i, t).max_abs_diff(&d) / scale);
            }
            (failure, worst)
        })
        .collect();
    let failures: Vec<String> = results.iter().filter_map(|r| r.0.clone()).collect();
    let worst = results.iter().map(|r| r.1).fold(0.0, f64::max);
    let mut out = CheckResult::new("triple-agreement", &failures, idx.len() * points);
    out.detail.push_str(&format!(
        "; float cross-check: max |difference| / max(1, bound) = {worst:.2e}"
    ));
    out
}

/// `X_n^{n+1}`, `Y_n^{n+1}` have vanishing hypercomplex derivative and match
/// `−(e/2)(n+1)(2n+1)!! (x1 + e3 x2)^n` as polynomials and at rational points.
pub fn hyperholomorphic_constants(basis: &Basis, max_degree: u32, seed: u64, points: usize) -> CheckResult {
    let pts = rational_points(seed ^ 0x4848, points);
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 0..=max_degree {
        for family in [Family::X, Family::Y] {
            checked += 1;
            let p = basis.get(BasisIndex::new(n, family, n + 1).expect("valid"));
            let closed = hyperholomorphic_constant_polynomial(n, family);
            let agrees_pointwise = pts
                .iter()
                .all(|t| hyperholomorphic_constant_trig(n, family, t) == p.evaluate(&t.to_cartesian()));
            if !hypercomplex_derivative(&p).is_zero() || closed != *p || !agrees_pointwise {
                failures.push(format!("{family}_{n}^{}", n + 1));
            }
        }
    }
    CheckResult::new("hyperholomorphic-constants", &failures, checked)
}

/// Sampled sphere maximum below `½(n+1)√((n+1+m)!/(n+1−m)!) rⁿ`; by
/// homogeneity the unit sphere suffices. Also the bound is attained by
/// `X_1^0` at the pole.
pub fn pointwise_bounds(basis: &Basis, max_degree: u32, grid_nodes: usize) -> CheckResult {
    let grid = SphereGrid::with_min_nodes(grid_nodes);
    let idx = indices_up_to(max_degree);
    let mut failures: Vec<String> = idx
        .iter()
        .filter_map(|&i| {
            let sampled = SphereSamples::new(&basis.get(i).to_f64(), &grid).max_on_sphere(1.0, Objective::Modulus);
            let bound = pointwise_bound(i, 1.0);
            (sampled.value > bound * (1.0 + 1e-12)).then(|| format!("{i}: {} > {bound}", sampled.value))
        })
        .collect();
    let r = 0.8;
    let tight = SphereSamples::new(&basis.get(BasisIndex::x(1, 0)).to_f64(), &grid).max_on_sphere(r, Objective::Modulus);
    if (tight.value - pointwise_bound(BasisIndex::x(1, 0), r)).abs() > 1e-6 {
        failures.push(format!("X_1^0 not tight: {}", tight.value));
    }
    CheckResult::new("pointwise-bound", &failures, idx.len() + 1)
}

/// Seeded random monogenic polynomials `Σ q X` with small rational `q`.
pub fn random_monogenic(seed: u64, count: usize, max_degree: u32) -> Vec<APoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut f = APoly::zero();
            for i in indices_up_to(max_degree) {
                if rng.gen_bool(0.4) {
                    let q = rat(rng.gen_range(-9..=9), rng.gen_range(1..=5));
                    f = &f + &crate::basis::basis_polynomial(i).scale(&q);
                }
            }
            f
        })
        .collect()
}

/// Projection/synthesis roundtrip, Parseval, and `‖f‖² = ‖f(0)‖² + ‖g‖² + ‖h‖²`,
/// all exact, on `B_R`.
pub fn fourier_identities(seed: u64, count: usize, max_degree: u32, radius: &Rational) -> Vec<CheckResult> {
    let fs = random_monogenic(seed, count, max_degree);
    let outcomes: Vec<[bool; 3]> = fs
        .par_iter()
        .map(|f| {
            let Ok(c) = project(f, max_degree, radius) else {
                return [false; 3];
            };
            let norm = inner_product_l2(f, f, radius);
            let roundtrip = c.synthesize_poly().map(|g| &g == f).unwrap_or(false);
            let parseval = c.sum_of_squares().map(|s| s == norm).unwrap_or(false);
            let d = decompose(&c);
            let pythagoras = pythagoras_terms(&d).map(|(a, b, h)| a + b + h == norm).unwrap_or(false)
                && d.h.synthesize_poly().map(|h| h.partial(0).is_zero()).unwrap_or(false);
            [roundtrip, parseval, pythagoras]
        })
        .collect();
    ["fourier-roundtrip", "parseval", "pythagoras"]
        .iter()
        .enumerate()
        .map(|(k, id)| {
            let failures: Vec<String> = outcomes
                .iter()
                .enumerate()
                .filter(|(_, o)| !o[k])
                .map(|(j, _)| format!("sample {j}"))
                .collect();
            CheckResult::new(id, &failures, fs.len())
        })
        .collect()
}

/// Coefficients recovered from the gradient of the scalar part, exact,
/// for functions without hyperholomorphic-constant part.
pub fn gradient_recovery(seed: u64, count: usize, max_degree: u32, radius: &Rational) -> CheckResult {
    let fs = random_monogenic(seed ^ 0x6772, count, max_degree);
    let results: Vec<Vec<String>> = fs
        .par_iter()
        .enumerate()
        .map(|(j, f)| {
            // strip the m = n + 1 terms, n ≥ 1
            let mut g = f.clone();
            for n in 1..=max_degree {
                for family in [Family::X, Family::Y] {
                    let i = BasisIndex::new(n, family, n + 1).expect("valid");
                    let c = project(&f.homogeneous_part(n), max_degree, radius).expect("monogenic");
                    if let Some(r) = c.get(i).and_then(|k| k.ratio.clone()) {
                        g = &g - &crate::basis::basis_polynomial(i).scale(&r);
                    }
                }
            }
            match gradient_coefficient_recovery(&g, max_degree, radius) {
                Ok(rec) => rec.iter().filter(|r| !r.holds).map(|r| format!("sample {j} {}", r.index)).collect(),
                Err(e) => vec![format!("sample {j}: {e}")],
            }
        })
        .collect();
    let failures: Vec<String> = results.into_iter().flatten().collect();
    CheckResult::new("gradient-recovery", &failures, fs.len())
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_degree: u32,
    pub radius: Rational,
    pub seed: u64,
    pub points: usize,
    pub grid_nodes: usize,
    pub random_functions: usize,
    /// Basis suite whose input gets corrupted (test hook); see [`CORRUPTIBLE`].
    pub corrupt: Option<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_degree: 8,
            radius: one(),
            seed: 0x5eed,
            points: 100,
            grid_nodes: 10_000,
            random_functions: 50,
            corrupt: None,
        }
    }
}

pub const SUITE_IDS: [&str; 16] = [
    "monogenicity",
    "harmonicity",
    "orthogonality",
    "scalar-part-relation",
    "component-orthogonality",
    "gradient-orthogonality",
    "gradient-relation",
    "derivative-identity",
    "hyperholomorphic-constants",
    "recurrences",
    "triple-agreement",
    "pointwise-bound",
    "fourier-roundtrip",
    "parseval",
    "pythagoras",
    "gradient-recovery",
];

/// Suites that read the basis through [`Basis`] and so can be corrupted.
pub const CORRUPTIBLE: [&str; 12] = [
    "monogenicity",
    "harmonicity",
    "orthogonality",
    "scalar-part-relation",
    "component-orthogonality",
    "gradient-orthogonality",
    "gradient-relation",
    "derivative-identity",
    "hyperholomorphic-constants",
    "recurrences",
    "triple-agreement",
    "pointwise-bound",
];

/// Runs every suite. Fourier suites use degree `min(max_degree, 6)`.
pub fn run_suite(config: &SuiteConfig) -> Vec<CheckResult> {
    let n = config.max_degree;
    let basis_for = |id: &str| {
        if config.corrupt.as_deref() == Some(id) {
            Basis::corrupted(n)
        } else {
            Basis::exact()
        }
    };
    let mut out = vec![
        monogenicity(&basis_for("monogenicity"), n),
        harmonicity(&basis_for("harmonicity"), n),
        orthogonality(&basis_for("orthogonality"), n),
        scalar_part_relation(&basis_for("scalar-part-relation"), n),
        component_orthogonality(&basis_for("component-orthogonality"), n),
        gradient_orthogonality(&basis_for("gradient-orthogonality"), n),
        gradient_relation(&basis_for("gradient-relation"), n),
        derivative_identity(&basis_for("derivative-identity"), n),
        hyperholomorphic_constants(&basis_for("hyperholomorphic-constants"), n, config.seed, config.points),
        recurrences(&basis_for("recurrences"), n),
        triple_agreement(&basis_for("triple-agreement"), n, config.seed, config.points),
        pointwise_bounds(&basis_for("pointwise-bound"), n, config.grid_nodes),
    ];
    let fd = n.min(6);
    out.extend(fourier_identities(config.seed, config.random_functions, fd, &config.radius));
    out.push(gradient_recovery(config.seed, config.random_functions, fd, &config.radius));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_low_degree() {
        let config = SuiteConfig {
            max_degree: 4,
            points: 10,
            grid_nodes: 2_000,
            random_functions: 5,
            ..SuiteConfig::default()
        };
        let results = run_suite(&config);
        assert_eq!(results.len(), SUITE_IDS.len());
        for (r, id) in results.iter().zip(SUITE_IDS) {
            assert_eq!(r.id, id);
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn corruption_is_caught_by_every_basis_suite() {
        let basis = Basis::corrupted(3);
        assert!(!monogenicity(&basis, 3).passed);
        assert!(!harmonicity(&basis, 3).passed);
        assert!(!orthogonality(&basis, 3).passed);
        assert!(!scalar_part_relation(&basis, 3).passed);
        assert!(!derivative_identity(&basis, 3).passed);
        assert!(!recurrences(&basis, 3).passed);
        assert!(!triple_agreement(&basis, 3, 1, 3).passed);
        assert!(!gradient_relation(&basis, 3).passed);
    }
}
