//! Closed-form tension and bitension of a form of degree `k` restricted to
//! `Sᵐ → Sⁿ(r)`, written entirely with operators acting on `R^{m+1}`.

use super::FieldTerm;
use crate::error::{Error, Result};
use crate::maps::{
    euclidean_laplacian, grad_norm_squared, hessian_norm_squared, laplacian_poly, push_gradient, MapKind,
    PolyMap, SphereMapMeta,
};
use crate::polyalg::{Polynomial, RadicalScalar};

pub(crate) struct HomogeneousData {
    pub k: i64,
    pub m: i64,
    pub r2: RadicalScalar,
    pub inv_r2: RadicalScalar,
}

pub(crate) fn homogeneous_data(meta: &SphereMapMeta) -> Result<HomogeneousData> {
    match meta.kind() {
        MapKind::Homogeneous { degree, radius_sq } => Ok(HomogeneousData {
            k: i64::from(*degree),
            m: meta.dim() as i64,
            r2: radius_sq.clone(),
            inv_r2: radius_sq.invert()?,
        }),
        other => Err(Error::WrongKind {
            expected: "homogeneous",
            got: other.name(),
        }),
    }
}

fn int(n: i64) -> RadicalScalar {
    RadicalScalar::from_integer(n)
}

/// `−Δ°F + ((1/r²)|d°F|² − k(m+2k−1))·Φ` before reduction.
pub fn tension_homogeneous_raw(f: &PolyMap, meta: &SphereMapMeta) -> Result<PolyMap> {
    let HomogeneousData { k, m, inv_r2, .. } = homogeneous_data(meta)?;
    let n = f.nvars();
    let coeff = &grad_norm_squared(f).scale(&inv_r2) - &Polynomial::constant(n, int(k * (m + 2 * k - 1)));
    Ok(f.scale_by(&coeff).sub(&euclidean_laplacian(f)))
}

pub fn tension_homogeneous(f: &PolyMap, meta: &SphereMapMeta) -> Result<PolyMap> {
    let raw = tension_homogeneous_raw(f, meta)?;
    Ok(meta.domain().reduce_map(&raw))
}

/// The bitension of a form split into its named summands (unreduced).
pub fn bitension_homogeneous_terms(f: &PolyMap, meta: &SphereMapMeta) -> Result<Vec<FieldTerm>> {
    let HomogeneousData { k, m, r2, inv_r2 } = homogeneous_data(meta)?;
    let n = f.nvars();
    let lap = euclidean_laplacian(f);
    let g = grad_norm_squared(f);
    let two = int(2);

    let lead = euclidean_laplacian(&lap);

    let lap_coeff = &Polynomial::constant(n, int(2 * (m * k + 2 * k * k - 3 * k - m + 3)))
        - &g.scale(&(&two * &inv_r2));
    let lap_term = lap.scale_by(&lap_coeff);

    let quadratic_block = &(&laplacian_poly(&g).scale_int(-2) - &hessian_norm_squared(f).scale_int(2))
        + &lap.norm_squared();
    let energy_terms = &g.scale_int(-2 * (2 * m * k + 6 * k * k - 6 * k - m + 3))
        + &(&g * &g).scale(&(&two * &inv_r2));
    let constant = Polynomial::constant(n, r2.scale(&crate::polyalg::integer(4 * k * k * (m + 2 * k - 1))));
    let phi_coeff = (&(&quadratic_block + &energy_terms) + &constant).scale(&inv_r2);
    let phi_term = f.scale_by(&phi_coeff);

    let push = push_gradient(f, &g)?.scale(&(&two * &inv_r2));

    Ok(vec![
        FieldTerm::new("Δ°Δ°F", lead),
        FieldTerm::new("2(mk+2k²−3k−m+3−|d°F|²/r²)Δ°F", lap_term),
        FieldTerm::new("(1/r²){…}Φ", phi_term),
        FieldTerm::new("(2/r²)d°F(grad°|d°F|²)", push),
    ])
}

pub fn bitension_homogeneous_raw(f: &PolyMap, meta: &SphereMapMeta) -> Result<PolyMap> {
    Ok(super::sum_terms(f, &bitension_homogeneous_terms(f, meta)?))
}

pub fn bitension_homogeneous(f: &PolyMap, meta: &SphereMapMeta) -> Result<PolyMap> {
    let raw = bitension_homogeneous_raw(f, meta)?;
    Ok(meta.domain().reduce_map(&raw))
}
