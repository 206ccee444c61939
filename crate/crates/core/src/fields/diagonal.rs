//! Closed forms for diagonal maps `φ = i∘(φ₁, φ₂) : Sᵐ → S^{n₁+n₂+1}`
//! built from forms `F₁`, `F₂` of degrees `k₁`, `k₂` with `r₁² + r₂² = 1`.

use super::FieldTerm;
use crate::error::{Error, Result};
use crate::maps::{
    euclidean_laplacian, grad_norm_squared, hessian_norm_squared, laplacian_poly, push_gradient, MapKind,
    PolyMap, SphereMapMeta,
};
use crate::polyalg::{Polynomial, RadicalScalar};

struct DiagonalData {
    k1: i64,
    k2: i64,
    m: i64,
    r1: RadicalScalar,
    r2: RadicalScalar,
    split: usize,
}

fn diagonal_data(meta: &SphereMapMeta) -> Result<DiagonalData> {
    match meta.kind() {
        MapKind::Diagonal {
            k1,
            k2,
            r1_sq,
            r2_sq,
            split,
        } => Ok(DiagonalData {
            k1: i64::from(*k1),
            k2: i64::from(*k2),
            m: meta.dim() as i64,
            r1: r1_sq.clone(),
            r2: r2_sq.clone(),
            split: *split,
        }),
        other => Err(Error::WrongKind {
            expected: "diagonal",
            got: other.name(),
        }),
    }
}

fn int(n: i64) -> RadicalScalar {
    RadicalScalar::from_integer(n)
}

fn konst(nvars: usize, c: RadicalScalar) -> Polynomial {
    Polynomial::constant(nvars, c)
}

/// `(a₁·X₁, a₂·X₂)` with polynomial multipliers per factor.
fn blockwise(x1: &PolyMap, a1: &Polynomial, x2: &PolyMap, a2: &Polynomial) -> PolyMap {
    x1.scale_by(a1)
        .concat(&x2.scale_by(a2))
        .expect("factors share the domain")
}

/// `k₁²r₁² + k₂²r₂²`.
fn radial_energy(d: &DiagonalData) -> RadicalScalar {
    &d.r1.scale(&crate::polyalg::integer(d.k1 * d.k1)) + &d.r2.scale(&crate::polyalg::integer(d.k2 * d.k2))
}

/// `m² + 4mk − 6m + 5k² − 12k + 5`, the coefficient of `−rᵢ²kᵢ²` inside the
/// braces. It collects `eᵢ² − 2eᵢkᵢ(2kᵢ+m−1) − 2kᵢ²(kᵢ−2)(2kᵢ+m−1) + 2eᵢkᵢ²`
/// with `eᵢ = kᵢ(m+kᵢ−1)`, from `|τ(Φ)|²` and the radial part of `⟨dΦ, dτ(Φ)⟩`.
pub fn brace_constant(m: i64, k: i64) -> i64 {
    m * m + 4 * m * k - 6 * m + 5 * k * k - 12 * k + 5
}

pub fn tension_diagonal_raw(f: &PolyMap, meta: &SphereMapMeta) -> Result<PolyMap> {
    let d = diagonal_data(meta)?;
    let n = f.nvars();
    let (f1, f2) = f.split_at(d.split);
    let base = &grad_norm_squared(f) - &konst(n, radial_energy(&d));
    let c1 = &base + &konst(n, int(d.k1 * (1 - d.m - d.k1)));
    let c2 = &base + &konst(n, int(d.k2 * (1 - d.m - d.k2)));
    Ok(blockwise(&f1, &c1, &f2, &c2).sub(&euclidean_laplacian(f)))
}

pub fn tension_diagonal(f: &PolyMap, meta: &SphereMapMeta) -> Result<PolyMap> {
    let raw = tension_diagonal_raw(f, meta)?;
    Ok(meta.domain().reduce_map(&raw))
}

/// The diagonal bitension split into its named summands (unreduced).
pub fn bitension_diagonal_terms(f: &PolyMap, meta: &SphereMapMeta) -> Result<Vec<FieldTerm>> {
    let d = diagonal_data(meta)?;
    let (k1, k2, m) = (d.k1, d.k2, d.m);
    let n = f.nvars();
    let (f1, f2) = f.split_at(d.split);
    let lap = euclidean_laplacian(f);
    let (lap1, lap2) = lap.split_at(d.split);
    let g1 = grad_norm_squared(&f1);
    let g2 = grad_norm_squared(&f2);
    let g = &g1 + &g2;
    let excess = &g - &konst(n, radial_energy(&d));
    let c = |v: i64| konst(n, int(v));

    let lead = euclidean_laplacian(&lap);

    let e1 = k1 * (m + k1 - 1);
    let e2 = k2 * (m + k2 - 1);
    let squared_laplacian = lap1
        .scale(&int(2 * (m * k1 + k1 * k1 - 3 * k1 - m + 3)))
        .add(&f1.scale(&int(e1 * e1)))
        .concat(
            &lap2
                .scale(&int(2 * (m * k2 + k2 * k2 - 3 * k2 - m + 3)))
                .add(&f2.scale(&int(e2 * e2))),
        )?;

    let tau_phi = lap1
        .scale(&int(-1))
        .add(&f1.scale(&int(k1 * (1 - m - k1))))
        .concat(&lap2.scale(&int(-1)).add(&f2.scale(&int(k2 * (1 - m - k2)))))?;
    let energy_tau = tau_phi.scale_by(&excess.scale_int(2));

    let poly1 = int(brace_constant(m, k1));
    let poly2 = int(brace_constant(m, k2));
    let r1k1 = d.r1.scale(&crate::polyalg::integer(k1 * k1));
    let r2k2 = d.r2.scale(&crate::polyalg::integer(k2 * k2));
    let mut brace = &(&laplacian_poly(&g).scale_int(-2) - &hessian_norm_squared(f).scale_int(2))
        + &lap.norm_squared();
    brace = &brace + &g1.scale_int(2 * (m + 2 * k1 - 3));
    brace = &brace + &g2.scale_int(2 * (m + 2 * k2 - 3));
    brace = &brace - &konst(n, &r1k1 * &poly1);
    brace = &brace - &g1.scale_int(2 * k1 * (m + k1 - 1));
    brace = &brace - &konst(n, &r2k2 * &poly2);
    brace = &brace - &g2.scale_int(2 * k2 * (m + k2 - 1));
    brace = &brace + &(&excess * &excess).scale_int(2);
    let phi_term = f.scale_by(&brace);

    let push = push_gradient(f, &g)?.scale(&int(2));

    let radial_weight = (&g1.scale_int(k1 - 1) + &g2.scale_int(k2 - 1)).scale_int(-4);
    let radial_term = blockwise(
        &f1,
        &(&radial_weight * &c(k1)),
        &f2,
        &(&radial_weight * &c(k2)),
    );

    Ok(vec![
        FieldTerm::new("Δ°Δ°F", lead),
        FieldTerm::new("(2(mkᵢ+kᵢ²−3kᵢ−m+3)Δ°Fᵢ + kᵢ²(m+kᵢ−1)²Φᵢ)", squared_laplacian),
        FieldTerm::new("2(|d°F|²−k₁²r₁²−k₂²r₂²)(−Δ°Fᵢ + kᵢ(1−m−kᵢ)Φᵢ)", energy_tau),
        FieldTerm::new("{…}Φ", phi_term),
        FieldTerm::new("2d°F(grad°|d°F|²)", push),
        FieldTerm::new("−4((k₁−1)|d°F₁|²+(k₂−1)|d°F₂|²)(k₁Φ₁,k₂Φ₂)", radial_term),
    ])
}

pub fn bitension_diagonal_raw(f: &PolyMap, meta: &SphereMapMeta) -> Result<PolyMap> {
    Ok(super::sum_terms(f, &bitension_diagonal_terms(f, meta)?))
}

pub fn bitension_diagonal(f: &PolyMap, meta: &SphereMapMeta) -> Result<PolyMap> {
    let raw = bitension_diagonal_raw(f, meta)?;
    Ok(meta.domain().reduce_map(&raw))
}
