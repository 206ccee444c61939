//! The `analyze` report: exact verdicts plus a floating-point referee.

use serde::Serialize;

use super::source::BuiltMap;
use crate::error::Result;
use crate::fields::{classify_with_meta, AnalysisReport};
use crate::maps::{MapKind, PolyMap, LAPLACIAN_CONVENTION};
use crate::numcheck::{max_abs_component, sample_domain, DEFAULT_POINTS, ZERO_TOLERANCE};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20240601;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalyzeOptions {
    pub seed: u64,
    pub points: usize,
    pub tol: f64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            points: DEFAULT_POINTS,
            tol: ZERO_TOLERANCE,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MetaJson {
    pub kind: &'static str,
    pub m: usize,
    pub nvars: usize,
    pub components: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_sq: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k1: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k2: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m1: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m2: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r1_sq: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r2_sq: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub harmonic: bool,
    pub biharmonic: bool,
    pub proper_biharmonic: bool,
}

/// Pointwise evaluation of the unreduced fields on seeded domain samples.
/// Fields that are symbolically zero must stay within `tol`; nonzero fields
/// must exceed it somewhere.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericCheck {
    pub seed: u64,
    pub points: usize,
    pub tol: f64,
    /// Largest absolute value among symbolically zero fields.
    pub max_residual: f64,
    /// Smallest peak absolute value among symbolically nonzero fields.
    pub min_witness: Option<f64>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalyzeReport {
    pub source: String,
    pub convention: &'static str,
    pub meta: MetaJson,
    pub verdicts: Verdicts,
    pub tension: Vec<String>,
    pub bitension: Vec<String>,
    pub energy_density: String,
    pub route_agreement: bool,
    pub routes: Vec<&'static str>,
    pub numeric_check: NumericCheck,
}

impl AnalyzeReport {
    /// Exit status for the command line: 4 when the routes or the numeric
    /// referee disagree with the exact result.
    pub fn exit_code(&self) -> i32 {
        if self.route_agreement && self.numeric_check.passed {
            0
        } else {
            4
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_human(&self) -> String {
        let m = &self.meta;
        let mut out = String::new();
        let shape = match m.kind {
            "homogeneous" => format!(
                "a form of degree {} with |F|^2 = {}|x|^{}",
                m.k.unwrap_or(0),
                m.r_sq.as_deref().unwrap_or("1"),
                2 * m.k.unwrap_or(0)
            ),
            "diagonal" => format!(
                "a diagonal map of degrees {} and {} with radii squared {} and {}",
                m.k1.unwrap_or(0),
                m.k2.unwrap_or(0),
                m.r1_sq.as_deref().unwrap_or("?"),
                m.r2_sq.as_deref().unwrap_or("?")
            ),
            _ => format!(
                "a product map on S^{} x S^{} of degrees {} and {} with radii squared {} and {}",
                m.m1.unwrap_or(0),
                m.m2.unwrap_or(0),
                m.k1.unwrap_or(0),
                m.k2.unwrap_or(0),
                m.r1_sq.as_deref().unwrap_or("?"),
                m.r2_sq.as_deref().unwrap_or("?")
            ),
        };
        out.push_str(&format!(
            "{} is {shape}, from a domain of dimension {} into R^{}.\n",
            self.source, m.m, m.components
        ));
        let v = &self.verdicts;
        let verdict = if v.harmonic {
            "harmonic (and therefore biharmonic)"
        } else if v.proper_biharmonic {
            "proper biharmonic: the tension is nonzero but the bitension vanishes"
        } else {
            "neither harmonic nor biharmonic"
        };
        out.push_str(&format!("The map is {verdict}.\n"));
        out.push_str(&format!("Tension: ({})\n", self.tension.join(", ")));
        out.push_str(&format!("Bitension: ({})\n", self.bitension.join(", ")));
        out.push_str(&format!("Energy density: {}\n", self.energy_density));
        out.push_str(&format!(
            "Routes {} {}.\n",
            self.routes.join(", "),
            if self.route_agreement { "agree" } else { "DISAGREE" }
        ));
        let n = &self.numeric_check;
        out.push_str(&format!(
            "Numeric check over {} points (seed {}): max residual {:e}, tolerance {:e}, {}.\n",
            n.points,
            n.seed,
            n.max_residual,
            n.tol,
            if n.passed { "passed" } else { "FAILED" }
        ));
        out.push_str(&format!("Convention: {}\n", self.convention));
        out
    }
}

fn meta_json(built: &BuiltMap) -> MetaJson {
    let meta = &built.meta;
    let mut out = MetaJson {
        kind: meta.kind().name(),
        m: meta.dim(),
        nvars: meta.nvars(),
        components: built.map.len(),
        k: None,
        r_sq: None,
        k1: None,
        k2: None,
        m1: None,
        m2: None,
        r1_sq: None,
        r2_sq: None,
        split: None,
    };
    match meta.kind() {
        MapKind::Homogeneous { degree, radius_sq } => {
            out.k = Some(*degree);
            out.r_sq = Some(radius_sq.to_string());
        }
        MapKind::Diagonal {
            k1,
            k2,
            r1_sq,
            r2_sq,
            split,
        } => {
            out.k1 = Some(*k1);
            out.k2 = Some(*k2);
            out.r1_sq = Some(r1_sq.to_string());
            out.r2_sq = Some(r2_sq.to_string());
            out.split = Some(*split);
        }
        MapKind::Product {
            m1,
            m2,
            k1,
            k2,
            r1_sq,
            r2_sq,
            split,
        } => {
            out.m1 = Some(*m1);
            out.m2 = Some(*m2);
            out.k1 = Some(*k1);
            out.k2 = Some(*k2);
            out.r1_sq = Some(r1_sq.to_string());
            out.r2_sq = Some(r2_sq.to_string());
            out.split = Some(*split);
        }
    }
    out
}

fn strings(f: &PolyMap) -> Vec<String> {
    f.components().iter().map(ToString::to_string).collect()
}

/// Runs the exact classification and the numeric referee on the samples.
pub fn numeric_referee(built: &BuiltMap, report: &AnalysisReport, opts: &AnalyzeOptions) -> NumericCheck {
    let samples = sample_domain(&built.meta.domain(), opts.points, opts.seed);
    let mut max_residual: f64 = 0.0;
    let mut min_witness: Option<f64> = None;
    let mut passed = true;
    for (exact, raw) in [
        (&report.tension, &report.tension_raw),
        (&report.bitension, &report.bitension_raw),
    ] {
        let peak = max_abs_component(raw, &samples);
        if exact.is_zero() {
            max_residual = max_residual.max(peak);
            passed &= peak <= opts.tol;
        } else {
            min_witness = Some(min_witness.map_or(peak, |w| w.min(peak)));
            passed &= peak > opts.tol;
        }
    }
    NumericCheck {
        seed: opts.seed,
        points: samples.len(),
        tol: opts.tol,
        max_residual,
        min_witness,
        passed,
    }
}

pub fn analyze(source: &str, built: &BuiltMap, opts: &AnalyzeOptions) -> Result<AnalyzeReport> {
    let report = classify_with_meta(&built.map, &built.meta)?;
    let numeric_check = numeric_referee(built, &report, opts);
    Ok(AnalyzeReport {
        source: source.to_string(),
        convention: LAPLACIAN_CONVENTION,
        meta: meta_json(built),
        verdicts: Verdicts {
            harmonic: report.is_harmonic,
            biharmonic: report.is_biharmonic,
            proper_biharmonic: report.is_proper_biharmonic,
        },
        tension: strings(&report.tension),
        bitension: strings(&report.bitension),
        energy_density: report.energy.to_string(),
        route_agreement: report.route_agreement,
        routes: report.routes.iter().map(|r| r.name).collect(),
        numeric_check,
    })
}
