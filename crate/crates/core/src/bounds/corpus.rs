//! The fixed verification corpus and the parallel sweep over it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::basis::indices_up_to;
use crate::bounds::{BoundReport, Inequality, SampledFunction};
use crate::error::Result;
use crate::fourier::{FourierCoefficients, SphereGrid};
use crate::scalar::Rational;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub description: String,
    pub coefficients: FourierCoefficients,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub radii: Vec<Rational>,
    /// Values of `r / R`.
    pub ratios: Vec<f64>,
    pub seed: u64,
    pub grid_nodes: usize,
    /// Highest degree of the single normalized basis elements.
    pub basis_degree: u32,
    pub random_count: usize,
    pub random_degree: u32,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            radii: vec![Rational::from_integer(1.into()), Rational::new(5.into(), 2.into())],
            ratios: (1..=9).map(|k| k as f64 / 10.0).collect(),
            seed: 0x5eed,
            grid_nodes: 10_000,
            basis_degree: 8,
            random_count: 50,
            random_degree: 6,
        }
    }
}

/// Single normalized basis elements of degree `≤ basis_degree`, plus
/// `random_count` seeded combinations of degree `≤ random_degree` with
/// coefficients uniform in `[−1, 1]`; each combination also appears with
/// its hyperholomorphic-constant part removed.
pub fn corpus(radius: &Rational, config: &SweepConfig) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for idx in indices_up_to(config.basis_degree) {
        let mut c = FourierCoefficients::zeros(radius.clone(), idx.n);
        c.set_value(idx, 1.0)?;
        out.push(CorpusEntry {
            description: format!("basis {idx}"),
            coefficients: c,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for k in 0..config.random_count {
        let mut full = FourierCoefficients::zeros(radius.clone(), config.random_degree);
        let mut orthogonal = full.clone();
        for idx in indices_up_to(config.random_degree) {
            let v: f64 = rng.gen_range(-1.0..=1.0);
            full.set_value(idx, v)?;
            let keep = idx.n == 0 || !idx.is_hyperholomorphic_constant();
            orthogonal.set_value(idx, if keep { v } else { 0.0 })?;
        }
        out.push(CorpusEntry {
            description: format!("random {k:02}"),
            coefficients: full,
        });
        out.push(CorpusEntry {
            description: format!("random {k:02} without h"),
            coefficients: orthogonal,
        });
    }
    Ok(out)
}

fn reproduction_bundle(entry: &CorpusEntry, config: &SweepConfig) -> serde_json::Value {
    serde_json::json!({
        "seed": config.seed,
        "grid_nodes": config.grid_nodes,
        "coefficients": entry.coefficients.to_json(),
    })
}

/// Runs every admissible inequality on every corpus function, radius and
/// ratio. Reports come back sorted by (inequality, function, R, r); failures
/// carry a reproduction bundle.
pub fn sweep(config: &SweepConfig) -> Result<Vec<BoundReport>> {
    let grid = SphereGrid::with_min_nodes(config.grid_nodes);
    let mut entries = Vec::new();
    for radius in &config.radii {
        entries.extend(corpus(radius, config)?);
    }
    let per_entry: Vec<Result<Vec<BoundReport>>> = entries
        .par_iter()
        .map(|entry| run_entry(entry, &grid, config))
        .collect();
    let mut reports = Vec::new();
    for r in per_entry {
        reports.extend(r?);
    }
    sort_reports(&mut reports);
    Ok(reports)
}

fn run_entry(entry: &CorpusEntry, grid: &SphereGrid, config: &SweepConfig) -> Result<Vec<BoundReport>> {
    let f = SampledFunction::new(entry.description.clone(), entry.coefficients.clone(), grid);
    let rs: Vec<f64> = config.ratios.iter().map(|t| t * f.radius).collect();
    let mut reports = f.check_all(&rs)?;
    for rep in reports.iter_mut().filter(|r| !r.pass) {
        rep.reproduce = Some(reproduction_bundle(entry, config));
    }
    Ok(reports)
}

/// Checks one function given by its coefficients at each `r / R` ratio.
pub fn check_coefficients(
    description: &str,
    coefficients: &FourierCoefficients,
    ratios: &[f64],
    grid_nodes: usize,
) -> Result<Vec<BoundReport>> {
    let grid = SphereGrid::with_min_nodes(grid_nodes);
    let f = SampledFunction::new(description, coefficients.clone(), &grid);
    let rs: Vec<f64> = ratios.iter().map(|t| t * f.radius).collect();
    let mut reports = f.check_all(&rs)?;
    sort_reports(&mut reports);
    Ok(reports)
}

pub fn sort_reports(reports: &mut [BoundReport]) {
    reports.sort_by(|a, b| {
        (a.inequality, &a.function)
            .cmp(&(b.inequality, &b.function))
            .then(a.radius.total_cmp(&b.radius))
            .then(a.r.total_cmp(&b.r))
    });
}

/// Entries of the corpus admissible for a given inequality.
pub fn admissible(entry: &CorpusEntry, inequality: Inequality) -> bool {
    !(inequality.needs_orthogonality() && entry.coefficients.has_hyperholomorphic_part())
}
