use std::fmt;

use serde::{Serialize, Serializer};

use crate::bounds::formulas::{
    a1, a2, derivative_factor, gradient_factor, orthogonal_factor, real_part_prefactor,
};
use crate::error::{Error, Result};
use crate::fourier::{decompose, FourierCoefficients, Objective, SphereGrid, SphereMax, SphereSamples};
use crate::poly::{grad, hypercomplex_derivative, QPoly};
use crate::quaternion::Quaternion;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Inequality {
    /// `M(f,r) ≤ |f(0)| + 2r/(R−r)² (A1 sup|Sc f| + A2 sup|Sc(h e1)|)`
    RealPart,
    /// `M(f,r) ≤ |f(0)| + √(2/3) 2rA/(R−r)⁴ sup|Sc f|`, `h = 0`
    OrthogonalRealPart,
    /// `M(f − f(0), r) ≤ √(2/3) 2rA/(R−r)⁴ sup|Sc(f − f(0))|`, `h = 0`
    Hadamard,
    /// `M(f,r) ≤ |f(0)| + 4√2 r(2R−r)/(R−r)² sup|grad Sc f|`, `h = 0`
    Gradient,
    /// `M(½D̄f, r) ≤ 2√3 rR(5r+4R)/(R−r)⁴ sup|Sc f|`
    Derivative,
}

impl Inequality {
    pub const ALL: [Inequality; 5] = [
        Inequality::RealPart,
        Inequality::OrthogonalRealPart,
        Inequality::Hadamard,
        Inequality::Gradient,
        Inequality::Derivative,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Inequality::RealPart => "real-part",
            Inequality::OrthogonalRealPart => "orthogonal-real-part",
            Inequality::Hadamard => "hadamard",
            Inequality::Gradient => "gradient",
            Inequality::Derivative => "derivative",
        }
    }

    /// Whether the inequality assumes no hyperholomorphic-constant part.
    pub fn needs_orthogonality(&self) -> bool {
        matches!(
            self,
            Inequality::OrthogonalRealPart | Inequality::Hadamard | Inequality::Gradient
        )
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Inequality {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Sampling {
    pub grid_nodes: usize,
    pub refined: bool,
    pub shells: Vec<f64>,
    /// Where the left-hand side maximum was found.
    pub lhs_point: [f64; 3],
}

/// One evaluated inequality. Passes iff `margin ≥ −1e−9 (1 + |rhs|)`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub inequality: Inequality,
    pub function: String,
    pub r: f64,
    #[serde(rename = "R")]
    pub radius: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub pass: bool,
    pub sampling: Sampling,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reproduce: Option<serde_json::Value>,
}

pub fn tolerance(rhs: f64) -> f64 {
    1e-9 * (1.0 + rhs.abs())
}

impl BoundReport {
    pub const CSV_HEADER: &'static str = "id,function,r,R,lhs,rhs,margin,pass";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{:e},{:e},{:e},{}",
            self.inequality,
            self.function.replace(',', ";"),
            self.r,
            self.radius,
            self.lhs,
            self.rhs,
            self.margin,
            self.pass
        )
    }
}

pub fn reports_to_csv(reports: &[BoundReport]) -> String {
    let mut out = String::from(BoundReport::CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// A monogenic function prepared for the inequality checks: the polynomial
/// pieces each side needs are sampled once on a sphere grid, and the
/// radius-independent sups over `B_R` are computed up front.
pub struct SampledFunction<'g> {
    pub description: String,
    pub radius: f64,
    pub coefficients: FourierCoefficients,
    pub f0: Quaternion<f64>,
    pub has_h: bool,
    f: SphereSamples<'g>,
    centered: SphereSamples<'g>,
    derivative: SphereSamples<'g>,
    pub sup_sc: SphereMax,
    pub sup_sc_centered: SphereMax,
    pub sup_grad_sc: SphereMax,
    pub sup_sc_h_e1: SphereMax,
}

fn zero_max(grid: &SphereGrid) -> SphereMax {
    SphereMax {
        value: 0.0,
        point: [0.0; 3],
        radius: 0.0,
        grid_nodes: grid.len(),
        refined: false,
    }
}

impl<'g> SampledFunction<'g> {
    pub fn new(description: impl Into<String>, coefficients: FourierCoefficients, grid: &'g SphereGrid) -> Self {
        let radius = Scalar::to_f64(&coefficients.radius);
        let poly = coefficients.synthesize_poly_f64();
        let f0 = poly.evaluate(&[0.0; 3]);
        let centered_poly = &poly - &QPoly::constant(f0.clone());
        let d = decompose(&coefficients);
        let has_h = coefficients.has_hyperholomorphic_part();
        let f = SphereSamples::new(&poly, grid);
        let centered = SphereSamples::new(&centered_poly, grid);
        let derivative = SphereSamples::new(&hypercomplex_derivative(&poly), grid);
        let sup_sc = f.sup_in_ball(radius, Objective::Component(0));
        let sup_sc_centered = centered.sup_in_ball(radius, Objective::Component(0));
        let sup_grad_sc = SphereSamples::new(&grad(poly.sc()), grid).sup_in_ball(radius, Objective::Modulus);
        let sup_sc_h_e1 = if has_h {
            // Sc(h e1) = −[h]_1
            SphereSamples::new(&d.h.synthesize_poly_f64(), grid).sup_in_ball(radius, Objective::Component(1))
        } else {
            zero_max(grid)
        };
        SampledFunction {
            description: description.into(),
            radius,
            coefficients,
            f0,
            has_h,
            f,
            centered,
            derivative,
            sup_sc,
            sup_sc_centered,
            sup_grad_sc,
            sup_sc_h_e1,
        }
    }

    fn report(&self, inequality: Inequality, r: f64, lhs: SphereMax, rhs: f64) -> BoundReport {
        let margin = rhs - lhs.value;
        let pass = margin >= -tolerance(rhs);
        BoundReport {
            inequality,
            function: self.description.clone(),
            r,
            radius: self.radius,
            lhs: lhs.value,
            rhs,
            margin,
            pass,
            sampling: Sampling {
                grid_nodes: lhs.grid_nodes,
                refined: lhs.refined,
                shells: crate::fourier::sampling::SUP_SHELLS.to_vec(),
                lhs_point: lhs.point,
            },
            reproduce: None,
        }
    }

    fn require_orthogonal(&self) -> Result<()> {
        if self.has_h {
            Err(Error::HyperholomorphicPart)
        } else {
            Ok(())
        }
    }

    pub fn check(&self, inequality: Inequality, r: f64) -> Result<BoundReport> {
        match inequality {
            Inequality::RealPart => self.realpart_bound_check(r),
            Inequality::OrthogonalRealPart => self.orthogonal_realpart_check(r),
            Inequality::Hadamard => self.hadamard_check(r),
            Inequality::Gradient => self.gradient_bound_check(r),
            Inequality::Derivative => self.derivative_bound_check(r),
        }
    }

    pub fn realpart_bound_check(&self, r: f64) -> Result<BoundReport> {
        let big_r = self.radius;
        let rhs = self.f0.norm()
            + real_part_prefactor(r, big_r)?
                * (a1(r, big_r)? * self.sup_sc.value + a2(r, big_r)? * self.sup_sc_h_e1.value);
        let lhs = self.f.max_on_sphere(r, Objective::Modulus);
        Ok(self.report(Inequality::RealPart, r, lhs, rhs))
    }

    pub fn orthogonal_realpart_check(&self, r: f64) -> Result<BoundReport> {
        self.require_orthogonal()?;
        let rhs = self.f0.norm() + orthogonal_factor(r, self.radius)? * self.sup_sc.value;
        let lhs = self.f.max_on_sphere(r, Objective::Modulus);
        Ok(self.report(Inequality::OrthogonalRealPart, r, lhs, rhs))
    }

    pub fn hadamard_check(&self, r: f64) -> Result<BoundReport> {
        self.require_orthogonal()?;
        let rhs = orthogonal_factor(r, self.radius)? * self.sup_sc_centered.value;
        let lhs = self.centered.max_on_sphere(r, Objective::Modulus);
        Ok(self.report(Inequality::Hadamard, r, lhs, rhs))
    }

    pub fn gradient_bound_check(&self, r: f64) -> Result<BoundReport> {
        self.require_orthogonal()?;
        let rhs = self.f0.norm() + gradient_factor(r, self.radius)? * self.sup_grad_sc.value;
        let lhs = self.f.max_on_sphere(r, Objective::Modulus);
        Ok(self.report(Inequality::Gradient, r, lhs, rhs))
    }

    pub fn derivative_bound_check(&self, r: f64) -> Result<BoundReport> {
        let rhs = derivative_factor(r, self.radius)? * self.sup_sc.value;
        let lhs = self.derivative.max_on_sphere(r, Objective::Modulus);
        Ok(self.report(Inequality::Derivative, r, lhs, rhs))
    }

    /// Every inequality admissible for this function, at each `r`.
    pub fn check_all(&self, rs: &[f64]) -> Result<Vec<BoundReport>> {
        let mut out = Vec::new();
        for &r in rs {
            for inequality in Inequality::ALL {
                if inequality.needs_orthogonality() && self.has_h {
                    continue;
                }
                out.push(self.check(inequality, r)?);
            }
        }
        Ok(out)
    }
}
