//! Floating-point referee: seeded sphere samples, pointwise evaluation and
//! finite-difference checks of symbolic derivatives.
//!
//! Samples come from `ChaCha8Rng` seeded with a `u64`; Gaussian coordinates
//! are produced by the Box-Muller transform and normalized per block.

use std::f64::consts::TAU;
use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::maps::{Domain, PolyMap};
use crate::polyalg::Polynomial;

/// Default tolerance for pointwise zero checks.
pub const ZERO_TOLERANCE: f64 = 1e-9;
/// Default number of sample points.
pub const DEFAULT_POINTS: usize = 200;
/// Step of the central first difference.
pub const FIRST_DIFF_STEP: f64 = 1e-5;
/// Step of the second-order Laplacian stencil.
pub const SECOND_DIFF_STEP: f64 = 1e-4;
/// Relative tolerance of derivative comparisons.
pub const DIFF_RELATIVE_TOL: f64 = 1e-4;
/// Absolute floor for first-derivative comparisons near zeros.
pub const DIFF_ABSOLUTE_TOL: f64 = 1e-6;
/// Absolute floor for the Laplacian stencil, whose rounding error scales
/// with `|p|/h²`.
pub const STENCIL_ABSOLUTE_TOL: f64 = 1e-5;

#[derive(Clone, Debug, PartialEq)]
pub struct SampleSet {
    pub seed: u64,
    pub points: Vec<Vec<f64>>,
}

impl SampleSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Standard normal pairs from two uniforms.
fn box_muller<R: Rng>(rng: &mut R) -> (f64, f64) {
    // 1 − u lies in (0, 1], so the logarithm is finite.
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    (r * (TAU * u2).cos(), r * (TAU * u2).sin())
}

fn gaussian_vector<R: Rng>(rng: &mut R, len: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(len + 1);
    while out.len() < len {
        let (a, b) = box_muller(rng);
        out.push(a);
        out.push(b);
    }
    out.truncate(len);
    out
}

fn normalize_blocks(v: &mut [f64], blocks: &[Range<usize>]) -> bool {
    for b in blocks {
        let norm = v[b.clone()].iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-3 {
            return false;
        }
        for x in &mut v[b.clone()] {
            *x /= norm;
        }
    }
    true
}

fn sample_blocks(nvars: usize, blocks: &[Range<usize>], count: usize, seed: u64) -> SampleSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let mut v = gaussian_vector(&mut rng, nvars);
        if normalize_blocks(&mut v, blocks) {
            points.push(v);
        }
    }
    SampleSet { seed, points }
}

/// `count` points on `Sᵐ ⊂ R^{m+1}`.
pub fn sample_sphere(m: usize, count: usize, seed: u64) -> SampleSet {
    let n = m + 1;
    sample_blocks(n, std::slice::from_ref(&(0..n)), count, seed)
}

/// `count` points on the domain, normalized block by block.
pub fn sample_domain(domain: &Domain, count: usize, seed: u64) -> SampleSet {
    sample_blocks(domain.nvars(), domain.blocks(), count, seed)
}

/// A polynomial with coefficients converted to `f64` once.
#[derive(Clone, Debug)]
pub struct FloatPolynomial {
    nvars: usize,
    terms: Vec<(Vec<u16>, f64)>,
}

impl FloatPolynomial {
    pub fn new(p: &Polynomial) -> Self {
        Self {
            nvars: p.nvars(),
            terms: p.terms().map(|(m, c)| (m.exponents().to_vec(), c.to_f64())).collect(),
        }
    }

    pub fn evaluate(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.nvars, "point length must equal nvars");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .filter(|(&k, _)| k > 0)
                    .fold(*c, |acc, (&k, &xi)| acc * xi.powi(i32::from(k)))
            })
            .sum()
    }
}

/// Outcome of a pointwise zero test.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroCheckReport {
    pub max_residual: f64,
    pub tol: f64,
    pub seed: u64,
    pub points: usize,
    pub passed: bool,
}

/// Largest absolute component of `f` over the samples.
pub fn max_abs_component(f: &PolyMap, samples: &SampleSet) -> f64 {
    let comps: Vec<FloatPolynomial> = f.components().iter().map(FloatPolynomial::new).collect();
    samples
        .points
        .iter()
        .flat_map(|x| comps.iter().map(move |c| c.evaluate(x).abs()))
        .fold(0.0, f64::max)
}

pub fn numeric_zero_check(f: &PolyMap, samples: &SampleSet, tol: f64) -> ZeroCheckReport {
    let max_residual = max_abs_component(f, samples);
    ZeroCheckReport {
        max_residual,
        tol,
        seed: samples.seed,
        points: samples.len(),
        passed: max_residual <= tol,
    }
}

/// Outcome of a derivative comparison. `worst_excess` is the largest ratio
/// of error to allowed error; the check passes when it is at most 1.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteDiffReport {
    pub max_abs_error: f64,
    pub worst_excess: f64,
    pub comparisons: usize,
    pub passed: bool,
}

fn shifted(x: &[f64], i: usize, h: f64) -> Vec<f64> {
    let mut y = x.to_vec();
    y[i] += h;
    y
}

fn accumulate(report: &mut FiniteDiffReport, numeric: f64, symbolic: f64, abs_floor: f64) {
    let err = (numeric - symbolic).abs();
    let allowed = (DIFF_RELATIVE_TOL * symbolic.abs()).max(abs_floor);
    report.max_abs_error = report.max_abs_error.max(err);
    report.worst_excess = report.worst_excess.max(err / allowed);
    report.comparisons += 1;
}

fn finish(mut report: FiniteDiffReport) -> FiniteDiffReport {
    report.passed = report.worst_excess <= 1.0;
    report
}

fn empty_report() -> FiniteDiffReport {
    FiniteDiffReport {
        max_abs_error: 0.0,
        worst_excess: 0.0,
        comparisons: 0,
        passed: false,
    }
}

/// Central differences of `p` against every symbolic partial derivative.
pub fn finite_diff_check(p: &Polynomial, samples: &SampleSet) -> FiniteDiffReport {
    let n = p.nvars();
    let fp = FloatPolynomial::new(p);
    let partials: Vec<FloatPolynomial> = (0..n)
        .map(|i| FloatPolynomial::new(&p.partial_derivative(i).expect("index in range")))
        .collect();
    let h = FIRST_DIFF_STEP;
    let mut report = empty_report();
    for x in &samples.points {
        for (i, d) in partials.iter().enumerate() {
            let numeric = (fp.evaluate(&shifted(x, i, h)) - fp.evaluate(&shifted(x, i, -h))) / (2.0 * h);
            accumulate(&mut report, numeric, d.evaluate(x), DIFF_ABSOLUTE_TOL);
        }
    }
    finish(report)
}

/// Second-order stencil for `Δ°p = −Σ∂ᵢ²p` against a symbolic value.
pub fn laplacian_stencil_check(p: &Polynomial, laplacian: &Polynomial, samples: &SampleSet) -> FiniteDiffReport {
    let n = p.nvars();
    let fp = FloatPolynomial::new(p);
    let fl = FloatPolynomial::new(laplacian);
    let h = SECOND_DIFF_STEP;
    let mut report = empty_report();
    for x in &samples.points {
        let center = fp.evaluate(x);
        let second: f64 = (0..n)
            .map(|i| (fp.evaluate(&shifted(x, i, h)) - 2.0 * center + fp.evaluate(&shifted(x, i, -h))) / (h * h))
            .sum();
        accumulate(&mut report, -second, fl.evaluate(x), STENCIL_ABSOLUTE_TOL);
    }
    finish(report)
}
