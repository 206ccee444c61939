//! Identities satisfied by quadratic and harmonic forms, minimal
//! representatives, and hyperplane slices of the image.

use super::homogeneous::{homogeneous_data, HomogeneousData};
use crate::error::{Error, Result};
use crate::maps::{
    euclidean_laplacian, grad_norm_squared, hessian_norm_squared, laplacian_poly, Domain, PolyMap,
    SphereMapMeta,
};
use crate::polyalg::{integer, Polynomial, RadicalScalar};

/// `NF(−2Δ°|d°F|² − 2|∇°d°F|² + |Δ°F|²)` on the domain sphere.
fn combined_quantity(f: &PolyMap, meta: &SphereMapMeta) -> Polynomial {
    let g = grad_norm_squared(f);
    let lap = euclidean_laplacian(f);
    let p = &(&laplacian_poly(&g).scale_int(-2) - &hessian_norm_squared(f).scale_int(2)) + &lap.norm_squared();
    meta.domain().reduce(&p)
}

/// For a quadratic form: the computed combined quantity and `4r²(m+1)(m+3)`.
pub fn quadratic_identity_check(f: &PolyMap, meta: &SphereMapMeta) -> Result<(Polynomial, RadicalScalar)> {
    let HomogeneousData { k, m, r2, .. } = homogeneous_data(meta)?;
    if k != 2 {
        return Err(Error::WrongKind {
            expected: "quadratic form",
            got: "form of another degree",
        });
    }
    let expected = r2.scale(&integer(4 * (m + 1) * (m + 3)));
    Ok((combined_quantity(f, meta), expected))
}

/// Computed and closed-form values of the second-order quantities of a
/// harmonic form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicIdentityReport {
    /// `NF(Δ°|d°F|²)`.
    pub laplacian_energy: Polynomial,
    /// `−2r²k(k−1)(m+2k−1)(m+2k−3)`.
    pub laplacian_energy_expected: RadicalScalar,
    /// `NF(|∇°d°F|²)`.
    pub hessian_norm_sq: Polynomial,
    /// `r²k(k−1)(m²−4m+3+4k(m−2)+4k²)`.
    pub hessian_norm_sq_expected: RadicalScalar,
    /// `NF(−2Δ°|d°F|² − 2|∇°d°F|² + |Δ°F|²)`.
    pub combined: Polynomial,
    pub combined_expected: RadicalScalar,
}

impl HarmonicIdentityReport {
    pub fn holds(&self) -> bool {
        let is = |p: &Polynomial, c: &RadicalScalar| p.as_constant().as_ref() == Some(c);
        is(&self.laplacian_energy, &self.laplacian_energy_expected)
            && is(&self.hessian_norm_sq, &self.hessian_norm_sq_expected)
            && is(&self.combined, &self.combined_expected)
    }
}

pub fn harmonic_identities_check(f: &PolyMap, meta: &SphereMapMeta) -> Result<HarmonicIdentityReport> {
    let HomogeneousData { k, m, r2, .. } = homogeneous_data(meta)?;
    if !euclidean_laplacian(f).is_zero() {
        return Err(Error::NotHarmonicForm);
    }
    let domain = meta.domain();
    let g = grad_norm_squared(f);
    let laplacian_energy = domain.reduce(&laplacian_poly(&g));
    let hessian_norm_sq = domain.reduce(&hessian_norm_squared(f));
    let lap_expected = r2.scale(&integer(-2 * k * (k - 1) * (m + 2 * k - 1) * (m + 2 * k - 3)));
    let hess_expected = r2.scale(&integer(k * (k - 1) * (m * m - 4 * m + 3 + 4 * k * (m - 2) + 4 * k * k)));
    let combined_expected = (&lap_expected + &hess_expected).scale(&integer(-2));
    Ok(HarmonicIdentityReport {
        laplacian_energy,
        laplacian_energy_expected: lap_expected,
        hessian_norm_sq,
        hessian_norm_sq_expected: hess_expected,
        combined: combined_quantity(f, meta),
        combined_expected,
    })
}

/// Strips common factors `Σxᵢ²` from all components; returns the minimal
/// representative and the number of factors removed.
pub fn minimality_check(f: &PolyMap) -> Result<(PolyMap, u32)> {
    if f.is_zero() {
        return Err(Error::ZeroMap);
    }
    let mut current = f.clone();
    let mut strips = 0;
    loop {
        let divided: Option<Vec<Polynomial>> = current
            .components()
            .iter()
            .map(Polynomial::divide_by_radius_squared)
            .collect();
        match divided {
            Some(parts) => {
                current = PolyMap::new(parts)?;
                strips += 1;
            }
            None => return Ok((current, strips)),
        }
    }
}

/// `Some(c₀)` when `⟨Φ, c⟩ = c₀` on the domain sphere, i.e. the image lies in
/// the hyperplane slice orthogonal to the unit vector `c`.
pub fn small_hypersphere_check(f: &PolyMap, c: &[RadicalScalar]) -> Result<Option<RadicalScalar>> {
    if c.len() != f.len() {
        return Err(Error::DimensionMismatch(format!(
            "direction has {} entries, map has {} components",
            c.len(),
            f.len()
        )));
    }
    let norm = c.iter().fold(RadicalScalar::zero(), |acc, x| &acc + &(x * x));
    if !norm.is_one() {
        return Err(Error::DimensionMismatch(format!("direction has squared length {norm}, not 1")));
    }
    let projection = f
        .components()
        .iter()
        .zip(c)
        .fold(Polynomial::zero(f.nvars()), |acc, (p, ci)| &acc + &p.scale(ci));
    Ok(Domain::sphere(f.nvars()).reduce(&projection).as_constant())
}
