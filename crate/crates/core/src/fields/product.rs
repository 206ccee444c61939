//! Closed forms for product maps `S^{m₁} × S^{m₂} → Sⁿ` with harmonic factors.

use crate::error::{Error, Result};
use crate::maps::{euclidean_laplacian, MapKind, PolyMap, SphereMapMeta};
use crate::polyalg::RadicalScalar;

struct ProductData {
    /// `eᵢ = kᵢ(mᵢ+kᵢ−1)`, the eigenvalue of each factor.
    e1: RadicalScalar,
    e2: RadicalScalar,
    r1: RadicalScalar,
    r2: RadicalScalar,
    split: usize,
}

/// `Δ°F₁ = 0` and `Δ°F₂ = 0` as polynomials.
pub fn factors_harmonic(f: &PolyMap, split: usize) -> bool {
    let (a, b) = f.split_at(split);
    euclidean_laplacian(&a).is_zero() && euclidean_laplacian(&b).is_zero()
}

fn product_data(f: &PolyMap, meta: &SphereMapMeta) -> Result<ProductData> {
    let MapKind::Product {
        m1,
        m2,
        k1,
        k2,
        r1_sq,
        r2_sq,
        split,
    } = meta.kind()
    else {
        return Err(Error::WrongKind {
            expected: "product",
            got: meta.kind().name(),
        });
    };
    if !factors_harmonic(f, *split) {
        return Err(Error::FactorsNotHarmonic);
    }
    let e = |m: usize, k: u32| RadicalScalar::from_integer(i64::from(k) * (m as i64 + i64::from(k) - 1));
    Ok(ProductData {
        e1: e(*m1, *k1),
        e2: e(*m2, *k2),
        r1: r1_sq.clone(),
        r2: r2_sq.clone(),
        split: *split,
    })
}

/// `(e₁ − e₂)·((r₁²−1)Φ₁, r₁²Φ₂)`.
pub fn tension_product(f: &PolyMap, meta: &SphereMapMeta) -> Result<PolyMap> {
    let d = product_data(f, meta)?;
    let (a, b) = f.split_at(d.split);
    let coeff = &d.e1 - &d.e2;
    let first = &d.r1 - &RadicalScalar::one();
    let out = a.scale(&(&coeff * &first)).concat(&b.scale(&(&coeff * &d.r1)))?;
    Ok(meta.domain().reduce_map(&out))
}

/// `(e₁²Φ₁, e₂²Φ₂) + (2s² − r₁²e₁² − r₂²e₂²)Φ − 2s(e₁Φ₁, e₂Φ₂)` with
/// `s = r₁²e₁ + r₂²e₂`, which equals `(2r₁²−1)(e₁−e₂)·τ(φ)`.
pub fn bitension_product(f: &PolyMap, meta: &SphereMapMeta) -> Result<PolyMap> {
    let d = product_data(f, meta)?;
    let (a, b) = f.split_at(d.split);
    let s = &(&d.r1 * &d.e1) + &(&d.r2 * &d.e2);
    let two = RadicalScalar::from_integer(2);
    let common = &(&(&two * &(&s * &s)) - &(&d.r1 * &(&d.e1 * &d.e1))) - &(&d.r2 * &(&d.e2 * &d.e2));
    let coeff = |e: &RadicalScalar| &(&(e * e) + &common) - &(&two * &(&s * e));
    let out = a.scale(&coeff(&d.e1)).concat(&b.scale(&coeff(&d.e2)))?;
    Ok(meta.domain().reduce_map(&out))
}
