//! Tension and bitension fields: one reference route built from the
//! composition formula and closed forms per map kind, plus classification
//! and identity checks.

mod classify;
mod diagonal;
mod general;
mod homogeneous;
mod identities;
mod product;

pub use classify::{classify, classify_with_hint, classify_with_meta, AnalysisReport, RouteResult};
pub use diagonal::{
    bitension_diagonal, bitension_diagonal_raw, bitension_diagonal_terms, brace_constant, tension_diagonal,
    tension_diagonal_raw,
};
pub use general::{
    bitension_general, bitension_on_domain, tension_general, tension_on_domain, BitensionWorksheet,
};
pub use homogeneous::{
    bitension_homogeneous, bitension_homogeneous_raw, bitension_homogeneous_terms, tension_homogeneous,
    tension_homogeneous_raw,
};
pub use identities::{
    harmonic_identities_check, minimality_check, quadratic_identity_check, small_hypersphere_check,
    HarmonicIdentityReport,
};
pub use product::{bitension_product, factors_harmonic, tension_product};

use crate::maps::PolyMap;

/// One named summand of a closed-form field, kept separate so that a
/// disagreement between routes can be traced to a single term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldTerm {
    pub name: &'static str,
    pub value: PolyMap,
}

impl FieldTerm {
    pub fn new(name: &'static str, value: PolyMap) -> Self {
        Self { name, value }
    }
}

/// Sum of the terms; the zero map shaped like `f` when there are none.
pub fn sum_terms(f: &PolyMap, terms: &[FieldTerm]) -> PolyMap {
    terms
        .iter()
        .fold(PolyMap::zeros(f.nvars(), f.len()), |acc, t| acc.add(&t.value))
}
