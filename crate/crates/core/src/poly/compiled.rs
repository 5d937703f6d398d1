//! Floating-point evaluation of quaternion polynomials, laid out for
//! repeated evaluation on sphere grids.

use crate::poly::{apoly::support, QPoly};
use crate::quaternion::Quaternion;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
struct Term {
    exps: [usize; 3],
    coeff: [f64; 4],
}

/// A polynomial flattened to `(exponents, four f64 coefficients)` terms,
/// grouped by homogeneous degree.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    /// `parts[k]` holds the degree-`k` terms.
    parts: Vec<Vec<Term>>,
    max_exp: usize,
}

impl CompiledPoly {
    pub fn new<T: Scalar>(f: &QPoly<T>) -> Self {
        let mut parts: Vec<Vec<Term>> = Vec::new();
        let mut max_exp = 0;
        for m in support(f) {
            let coeff = [0, 1, 2, 3].map(|i| f.component(i).coeff(&m).to_f64());
            let exps = m.exps.map(|e| e as usize);
            max_exp = max_exp.max(*exps.iter().max().unwrap());
            let d = m.degree() as usize;
            if parts.len() <= d {
                parts.resize(d + 1, Vec::new());
            }
            parts[d].push(Term { exps, coeff });
        }
        CompiledPoly { parts, max_exp }
    }

    pub fn degree(&self) -> usize {
        self.parts.len().saturating_sub(1)
    }

    fn powers(&self, x: [f64; 3]) -> Vec<[f64; 3]> {
        let mut p = vec![[1.0; 3]; self.max_exp + 1];
        for k in 1..=self.max_exp {
            for i in 0..3 {
                p[k][i] = p[k - 1][i] * x[i];
            }
        }
        p
    }

    fn eval_part(part: &[Term], pw: &[[f64; 3]]) -> [f64; 4] {
        let mut acc = [0.0; 4];
        for t in part {
            let w = pw[t.exps[0]][0] * pw[t.exps[1]][1] * pw[t.exps[2]][2];
            for (a, c) in acc.iter_mut().zip(&t.coeff) {
                *a += c * w;
            }
        }
        acc
    }

    pub fn evaluate(&self, x: [f64; 3]) -> Quaternion<f64> {
        let pw = self.powers(x);
        let mut acc = [0.0; 4];
        for part in &self.parts {
            let v = Self::eval_part(part, &pw);
            for i in 0..4 {
                acc[i] += v[i];
            }
        }
        Quaternion::from_components(acc)
    }

    /// Values of each homogeneous part at a point, `parts[k](x)`. On a unit
    /// vector `ω`, `f(rω) = Σ_k r^k parts[k](ω)`.
    pub fn evaluate_parts(&self, x: [f64; 3]) -> Vec<[f64; 4]> {
        let pw = self.powers(x);
        self.parts.iter().map(|part| Self::eval_part(part, &pw)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{APoly, ScalarPoly};
    use crate::scalar::{rat, rat_int};

    #[test]
    fn matches_exact_evaluation() {
        let x = |i| ScalarPoly::var(i);
        let f = APoly::from_components([
            &(&x(0) * &x(1)) + &ScalarPoly::constant(rat(1, 3)),
            x(2).scale(&rat_int(-2)),
            (&x(0) * &x(0)).scale(&rat(5, 7)),
            x(1),
        ]);
        let c = CompiledPoly::new(&f);
        let p = [0.3, -0.7, 0.2];
        let exact = f.to_f64().evaluate(&p);
        assert!(c.evaluate(p).max_abs_diff(&exact) < 1e-15);
        let parts = c.evaluate_parts(p);
        assert_eq!(parts.len(), 3);
        assert!((parts[0][0] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn zero_polynomial() {
        let c = CompiledPoly::new(&APoly::zero());
        assert!(c.evaluate([1.0, 2.0, 3.0]).is_zero());
    }
}
