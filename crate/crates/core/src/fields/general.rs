//! Reference route: tension and bitension built from the composition
//! `Φ = i∘φ` alone, with every intrinsic quantity expressed through the
//! domain operators (`L`, tangential inner products and gradients).
//!
//! Intermediate polynomials are reduced to normal form as soon as they are
//! produced; the intrinsic operators only see the restriction to the domain,
//! so the choice of ambient extension does not matter.

use crate::error::{Error, Result};
use crate::maps::{Domain, MapKind, PolyMap, SphereMapMeta};
use crate::polyalg::{Polynomial, RadicalScalar};

/// Every ingredient of the composition formula, in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitensionWorksheet {
    /// `τ(Φ)`.
    pub tau: PolyMap,
    /// `|τ(Φ)|²`.
    pub tau_norm_sq: Polynomial,
    /// `|dΦ|²`.
    pub dphi_norm_sq: Polynomial,
    /// `Δ|dΦ|²`.
    pub laplacian_energy: Polynomial,
    /// `div θ♯` with `θ(X) = ⟨dΦ(X), τ(Φ)⟩`.
    pub div_theta: Polynomial,
    /// `dΦ(grad |dΦ|²)`.
    pub push_grad: PolyMap,
    /// `τ₂(Φ) = ΔΔΦ`.
    pub tau2_phi: PolyMap,
}

fn reject_product(meta: &SphereMapMeta) -> Result<()> {
    match meta.kind() {
        MapKind::Product { .. } => Err(Error::WrongKind {
            expected: "homogeneous or diagonal",
            got: "product",
        }),
        _ => Ok(()),
    }
}

/// `τ(φ) = τ(Φ) + (|dΦ|²/r²)·Φ` on an arbitrary round domain.
pub fn tension_on_domain(f: &PolyMap, domain: &Domain, radius_sq: &RadicalScalar) -> Result<PolyMap> {
    let inv_r2 = radius_sq.invert()?;
    let tau = domain.reduce_map(&domain.laplacian_map(f)).scale(&-RadicalScalar::one());
    let h = domain.reduce(&domain.differential_norm_squared(f));
    let out = tau.add(&f.scale_by(&h.scale(&inv_r2)));
    Ok(domain.reduce_map(&out))
}

/// Bitension on an arbitrary round domain, together with its worksheet.
pub fn bitension_on_domain(
    f: &PolyMap,
    domain: &Domain,
    radius_sq: &RadicalScalar,
) -> Result<(PolyMap, BitensionWorksheet)> {
    let inv_r2 = radius_sq.invert()?;
    let inv_r4 = &inv_r2 * &inv_r2;
    let red = |p: &Polynomial| domain.reduce(p);

    let tau = domain
        .reduce_map(&domain.laplacian_map(f))
        .scale(&-RadicalScalar::one());
    let tau2_phi = domain
        .reduce_map(&domain.laplacian_map(&tau))
        .scale(&-RadicalScalar::one());
    let h = red(&domain.differential_norm_squared(f));
    let laplacian_energy = red(&domain.laplacian(&h));
    let tau_norm_sq = red(&tau.norm_squared());
    // div θ♯ = |τ(Φ)|² + ⟨dΦ, dτ(Φ)⟩
    let div_theta = red(&(&tau_norm_sq + &domain.tangential_inner(f, &tau)));
    let push_grad = domain.reduce_map(&domain.push_tangential_gradient(f, &h));

    let two = RadicalScalar::from_integer(2);
    let coeff = &(&(&laplacian_energy.scale(&-inv_r2.clone()) + &div_theta.scale(&(&two * &inv_r2)))
        - &tau_norm_sq.scale(&inv_r2))
        + &(&h * &h).scale(&(&two * &inv_r4));
    let out = tau2_phi
        .add(&f.scale_by(&red(&coeff)))
        .add(&tau.scale_by(&h.scale(&(&two * &inv_r2))))
        .add(&push_grad.scale(&(&two * &inv_r2)));

    let worksheet = BitensionWorksheet {
        tau,
        tau_norm_sq,
        dphi_norm_sq: h,
        laplacian_energy,
        div_theta,
        push_grad,
        tau2_phi,
    };
    Ok((domain.reduce_map(&out), worksheet))
}

/// Reference tension for homogeneous and diagonal maps.
pub fn tension_general(f: &PolyMap, meta: &SphereMapMeta) -> Result<PolyMap> {
    reject_product(meta)?;
    tension_on_domain(f, &meta.domain(), &meta.target_radius_sq())
}

/// Reference bitension for homogeneous and diagonal maps.
pub fn bitension_general(f: &PolyMap, meta: &SphereMapMeta) -> Result<(PolyMap, BitensionWorksheet)> {
    reject_product(meta)?;
    bitension_on_domain(f, &meta.domain(), &meta.target_radius_sq())
}
