//! Harmonic / biharmonic verdicts for a sphere-restricting polynomial map.

use super::diagonal::{bitension_diagonal_raw, tension_diagonal_raw};
use super::general::{bitension_general, bitension_on_domain, tension_general, tension_on_domain};
use super::homogeneous::{bitension_homogeneous_raw, tension_homogeneous_raw};
use super::product::{bitension_product, factors_harmonic, tension_product};
use crate::error::Result;
use crate::maps::{energy_density, sphere_restriction_check, KindHint, MapKind, PolyMap, SphereMapMeta};
use crate::polyalg::Polynomial;

/// Tension and bitension produced by one computation route, in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteResult {
    pub name: &'static str,
    pub tension: PolyMap,
    pub bitension: PolyMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub meta: SphereMapMeta,
    /// Normal form of the tension from the primary route.
    pub tension: PolyMap,
    /// Normal form of the bitension from the primary route.
    pub bitension: PolyMap,
    pub is_harmonic: bool,
    pub is_biharmonic: bool,
    pub is_proper_biharmonic: bool,
    /// Energy density `½|dφ|²` in normal form.
    pub energy: Polynomial,
    /// Whether every route produced identical normal forms.
    pub route_agreement: bool,
    /// Every route that was run; the first one is primary.
    pub routes: Vec<RouteResult>,
    /// Primary-route tension before reduction, valid pointwise on the domain.
    pub tension_raw: PolyMap,
    /// Primary-route bitension before reduction.
    pub bitension_raw: PolyMap,
}

pub fn classify(f: &PolyMap) -> Result<AnalysisReport> {
    classify_with_hint(f, KindHint::Auto)
}

pub fn classify_with_hint(f: &PolyMap, hint: KindHint) -> Result<AnalysisReport> {
    let meta = sphere_restriction_check(f, hint)?;
    classify_with_meta(f, &meta)
}

fn reduced(meta: &SphereMapMeta, name: &'static str, tension: &PolyMap, bitension: &PolyMap) -> RouteResult {
    let domain = meta.domain();
    RouteResult {
        name,
        tension: domain.reduce_map(tension),
        bitension: domain.reduce_map(bitension),
    }
}

pub fn classify_with_meta(f: &PolyMap, meta: &SphereMapMeta) -> Result<AnalysisReport> {
    let mut routes = Vec::new();
    let (tension_raw, bitension_raw);
    match meta.kind() {
        MapKind::Homogeneous { .. } => {
            tension_raw = tension_homogeneous_raw(f, meta)?;
            bitension_raw = bitension_homogeneous_raw(f, meta)?;
            routes.push(reduced(meta, "homogeneous", &tension_raw, &bitension_raw));
            routes.push(general_route(f, meta)?);
            // A form with r² = 1 may also split as a diagonal map.
            if meta.target_radius_sq().is_one() {
                if let Ok(diag) = sphere_restriction_check(f, KindHint::Diagonal { split: None }) {
                    let t = tension_diagonal_raw(f, &diag)?;
                    let b = bitension_diagonal_raw(f, &diag)?;
                    routes.push(reduced(meta, "diagonal", &t, &b));
                }
            }
        }
        MapKind::Diagonal { .. } => {
            tension_raw = tension_diagonal_raw(f, meta)?;
            bitension_raw = bitension_diagonal_raw(f, meta)?;
            routes.push(reduced(meta, "diagonal", &tension_raw, &bitension_raw));
            routes.push(general_route(f, meta)?);
        }
        MapKind::Product { split, .. } => {
            let domain = meta.domain();
            let radius = meta.target_radius_sq();
            let tension = tension_on_domain(f, &domain, &radius)?;
            let (bitension, _) = bitension_on_domain(f, &domain, &radius)?;
            let general = RouteResult {
                name: "general",
                tension,
                bitension,
            };
            if factors_harmonic(f, *split) {
                let t = tension_product(f, meta)?;
                let b = bitension_product(f, meta)?;
                routes.push(reduced(meta, "product", &t, &b));
            }
            routes.push(general);
            tension_raw = routes[0].tension.clone();
            bitension_raw = routes[0].bitension.clone();
        }
    }

    let primary = &routes[0];
    let route_agreement = routes
        .iter()
        .all(|r| r.tension == primary.tension && r.bitension == primary.bitension);
    let is_harmonic = primary.tension.is_zero();
    let is_biharmonic = primary.bitension.is_zero();
    Ok(AnalysisReport {
        meta: meta.clone(),
        tension: primary.tension.clone(),
        bitension: primary.bitension.clone(),
        is_harmonic,
        is_biharmonic,
        is_proper_biharmonic: is_biharmonic && !is_harmonic,
        energy: energy_density(f, meta),
        route_agreement,
        routes,
        tension_raw,
        bitension_raw,
    })
}

fn general_route(f: &PolyMap, meta: &SphereMapMeta) -> Result<RouteResult> {
    Ok(RouteResult {
        name: "general",
        tension: tension_general(f, meta)?,
        bitension: bitension_general(f, meta)?.0,
    })
}
