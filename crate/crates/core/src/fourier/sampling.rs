//! Sup-norm estimation on spheres and balls.
//!
//! A product grid in `(θ1, θ2)` plus both poles is evaluated once per
//! polynomial, split into homogeneous parts, so any radius costs one
//! combination pass. The best few nodes are then polished by a pattern search
//! in the angles. Values are per-node independent and the arg-max is taken
//! sequentially, so results do not depend on the thread count.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::poly::{CompiledPoly, QPoly};

#[derive(Clone, Debug)]
pub struct SphereGrid {
    pub n_theta: usize,
    pub n_phi: usize,
    nodes: Vec<[f64; 3]>,
    angles: Vec<[f64; 2]>,
}

fn unit(theta1: f64, theta2: f64) -> [f64; 3] {
    let (s1, c1) = theta1.sin_cos();
    let (s2, c2) = theta2.sin_cos();
    [c1, s1 * c2, s1 * s2]
}

impl SphereGrid {
    /// Smallest grid with `n_phi = 2 n_theta` and at least `min_nodes` nodes.
    pub fn with_min_nodes(min_nodes: usize) -> Self {
        let mut n_theta = 1;
        while 2 * n_theta * n_theta + 2 < min_nodes {
            n_theta += 1;
        }
        Self::new(n_theta, 2 * n_theta)
    }

    pub fn new(n_theta: usize, n_phi: usize) -> Self {
        let mut angles = vec![[0.0, 0.0], [PI, 0.0]];
        for i in 1..=n_theta {
            let t1 = PI * i as f64 / (n_theta + 1) as f64;
            for j in 0..n_phi {
                angles.push([t1, 2.0 * PI * j as f64 / n_phi as f64]);
            }
        }
        let nodes = angles.iter().map(|a| unit(a[0], a[1])).collect();
        SphereGrid {
            n_theta,
            n_phi,
            nodes,
            angles,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[[f64; 3]] {
        &self.nodes
    }

    /// Angular spacing in `θ1`.
    pub fn spacing(&self) -> f64 {
        PI / (self.n_theta + 1) as f64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Objective {
    /// `|f|`
    Modulus,
    /// `|[f]_i|`
    Component(usize),
}

impl Objective {
    fn apply(&self, v: &[f64; 4]) -> f64 {
        match self {
            Objective::Modulus => (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]).sqrt(),
            Objective::Component(i) => v[*i].abs(),
        }
    }
}

/// A sampled maximum with the metadata needed to reproduce it.
#[derive(Clone, Debug, Serialize)]
pub struct SphereMax {
    pub value: f64,
    pub point: [f64; 3],
    pub radius: f64,
    pub grid_nodes: usize,
    pub refined: bool,
}

const REFINE_STARTS: usize = 4;

/// A polynomial pre-evaluated on a [`SphereGrid`].
pub struct SphereSamples<'g> {
    grid: &'g SphereGrid,
    compiled: CompiledPoly,
    stride: usize,
    parts: Vec<[f64; 4]>,
}

impl<'g> SphereSamples<'g> {
    pub fn new(poly: &QPoly<f64>, grid: &'g SphereGrid) -> Self {
        let compiled = CompiledPoly::new(poly);
        let stride = compiled.degree() + 1;
        let per_node: Vec<Vec<[f64; 4]>> = grid
            .nodes
            .par_iter()
            .map(|&x| {
                let mut p = compiled.evaluate_parts(x);
                p.resize(stride, [0.0; 4]);
                p
            })
            .collect();
        SphereSamples {
            grid,
            compiled,
            stride,
            parts: per_node.into_iter().flatten().collect(),
        }
    }

    fn node_value(&self, node: usize, r: f64) -> [f64; 4] {
        let parts = &self.parts[node * self.stride..(node + 1) * self.stride];
        let mut acc = [0.0; 4];
        for part in parts.iter().rev() {
            for i in 0..4 {
                acc[i] = acc[i] * r + part[i];
            }
        }
        acc
    }

    fn eval_angles(&self, r: f64, a: [f64; 2], objective: Objective) -> f64 {
        let u = unit(a[0], a[1]);
        let q = self.compiled.evaluate([r * u[0], r * u[1], r * u[2]]);
        objective.apply(&[q.a0, q.a1, q.a2, q.a3])
    }

    /// `max_{|x| = r}` of the objective: grid pass plus local refinement.
    pub fn max_on_sphere(&self, r: f64, objective: Objective) -> SphereMax {
        let values: Vec<f64> = (0..self.grid.len())
            .into_par_iter()
            .map(|k| objective.apply(&self.node_value(k, r)))
            .collect();
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
        let mut best = (values[order[0]], self.grid.angles[order[0]]);
        if r > 0.0 {
            for &start in order.iter().take(REFINE_STARTS) {
                let (v, a) = self.pattern_search(r, self.grid.angles[start], values[start], objective);
                if v > best.0 {
                    best = (v, a);
                }
            }
        }
        let u = unit(best.1[0], best.1[1]);
        SphereMax {
            value: best.0,
            point: [r * u[0], r * u[1], r * u[2]],
            radius: r,
            grid_nodes: self.grid.len(),
            refined: r > 0.0,
        }
    }

    fn pattern_search(&self, r: f64, start: [f64; 2], start_value: f64, objective: Objective) -> (f64, [f64; 2]) {
        let mut step = self.grid.spacing();
        let (mut best, mut at) = (start_value, start);
        let dirs = [[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0], [1.0, 1.0], [1.0, -1.0], [-1.0, 1.0], [-1.0, -1.0]];
        let mut iterations = 0;
        while step > 1e-9 && iterations < 2000 {
            iterations += 1;
            let mut moved = false;
            for d in dirs {
                let cand = [(at[0] + d[0] * step).clamp(0.0, PI), at[1] + d[1] * step];
                let v = self.eval_angles(r, cand, objective);
                if v > best {
                    best = v;
                    at = cand;
                    moved = true;
                    break;
                }
            }
            if !moved {
                step *= 0.5;
            }
        }
        (best, at)
    }

    /// Sup over the open ball `|x| < radius`, estimated by the maxima on the
    /// spheres of radii `{0.5, 0.9, 0.99, 1} · radius`.
    pub fn sup_in_ball(&self, radius: f64, objective: Objective) -> SphereMax {
        SUP_SHELLS
            .iter()
            .map(|s| self.max_on_sphere(s * radius, objective))
            .fold(None::<SphereMax>, |acc, m| match acc {
                Some(a) if a.value >= m.value => Some(a),
                _ => Some(m),
            })
            .expect("at least one shell")
    }
}

pub const SUP_SHELLS: [f64; 4] = [0.5, 0.9, 0.99, 1.0];

/// `M(f, r) = max_{|x| = r} |f(x)|`.
pub fn max_modulus(f: &QPoly<f64>, r: f64, grid: &SphereGrid) -> SphereMax {
    SphereSamples::new(f, grid).max_on_sphere(r, Objective::Modulus)
}

/// `sup_{|ξ| < R} |Sc f(ξ)|`.
pub fn scalar_sup(f: &QPoly<f64>, radius: f64, grid: &SphereGrid) -> SphereMax {
    SphereSamples::new(f, grid).sup_in_ball(radius, Objective::Component(0))
}

/// `sup_{|ξ| < R} |grad Sc f(ξ)|`.
pub fn grad_scalar_sup(f: &QPoly<f64>, radius: f64, grid: &SphereGrid) -> SphereMax {
    let g = crate::poly::grad(f.sc());
    SphereSamples::new(&g, grid).sup_in_ball(radius, Objective::Modulus)
}

/// `sup_{|ξ| < R} |Sc(h(ξ) e1)|`; `Sc(h e1) = −[h]_1`.
pub fn sc_h_e1_sup(h: &QPoly<f64>, radius: f64, grid: &SphereGrid) -> SphereMax {
    SphereSamples::new(h, grid).sup_in_ball(radius, Objective::Component(1))
}

/// Runs `f` on a dedicated pool of `jobs` threads (`0` = rayon default).
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
