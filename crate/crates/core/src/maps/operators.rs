//! Euclidean differential operators on polynomials and polynomial maps.
//!
//! `Δ°` follows the rough-Laplacian sign: `Δ°p = −Σ ∂²p/∂xᵢ²`.

use std::ops::Range;

use super::polymap::PolyMap;
use crate::error::{Error, Result};
use crate::polyalg::{Polynomial, RadicalScalar};

pub const LAPLACIAN_CONVENTION: &str = "Δ° = −Σ ∂²/∂xᵢ² (rough-Laplacian sign, the negative of the analysts' Laplacian)";

pub fn laplacian_poly(p: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero(p.nvars());
    for i in 0..p.nvars() {
        acc = &acc - &p.derivative(i).derivative(i);
    }
    acc
}

/// Componentwise `Δ°`.
pub fn euclidean_laplacian(f: &PolyMap) -> PolyMap {
    f.map(laplacian_poly)
}

pub fn radial_poly(p: &Polynomial) -> Polynomial {
    radial_poly_on(p, 0..p.nvars())
}

/// `Σ_{i∈block} xᵢ ∂p/∂xᵢ`.
pub fn radial_poly_on(p: &Polynomial, block: Range<usize>) -> Polynomial {
    let n = p.nvars();
    let mut acc = Polynomial::zero(n);
    for i in block {
        acc = &acc + &(&Polynomial::var(n, i) * &p.derivative(i));
    }
    acc
}

/// Componentwise Euler operator `r̄P = Σ xᵢ ∂P/∂xᵢ`.
pub fn radial_derivative(f: &PolyMap) -> PolyMap {
    f.map(radial_poly)
}

/// `|d°F|² = Σ_{i,α} (∂F_α/∂xᵢ)²`.
pub fn grad_norm_squared(f: &PolyMap) -> Polynomial {
    differential_inner(f, f)
}

/// `⟨d°F, d°G⟩ = Σ_{i,α} ∂F_α/∂xᵢ · ∂G_α/∂xᵢ`.
pub fn differential_inner(f: &PolyMap, g: &PolyMap) -> Polynomial {
    assert_eq!(f.len(), g.len(), "component counts differ");
    assert_eq!(f.nvars(), g.nvars(), "variable counts differ");
    let mut acc = Polynomial::zero(f.nvars());
    for (a, b) in f.components().iter().zip(g.components()) {
        for i in 0..f.nvars() {
            acc = &acc + &(&a.derivative(i) * &b.derivative(i));
        }
    }
    acc
}

/// Frobenius norm of the full Hessian, mixed partials counted twice.
pub fn hessian_norm_squared(f: &PolyMap) -> Polynomial {
    let n = f.nvars();
    let mut acc = Polynomial::zero(n);
    for p in f.components() {
        for i in 0..n {
            let di = p.derivative(i);
            for j in i..n {
                let dij = di.derivative(j);
                if dij.is_zero() {
                    continue;
                }
                let sq = &dij * &dij;
                acc = &acc + &if i == j { sq } else { sq.scale_int(2) };
            }
        }
    }
    acc
}

pub fn gradient(h: &Polynomial) -> PolyMap {
    PolyMap::new((0..h.nvars()).map(|i| h.derivative(i)).collect())
        .expect("gradient has nvars ≥ 1 components")
}

/// `d°F(grad° h)`, componentwise `Σᵢ ∂F_α/∂xᵢ · ∂h/∂xᵢ`.
pub fn push_gradient(f: &PolyMap, h: &Polynomial) -> Result<PolyMap> {
    if f.nvars() != h.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "map in {} variables, function in {}",
            f.nvars(),
            h.nvars()
        )));
    }
    let grad: Vec<Polynomial> = (0..h.nvars()).map(|i| h.derivative(i)).collect();
    Ok(f.map(|p| {
        let mut acc = Polynomial::zero(p.nvars());
        for (i, gi) in grad.iter().enumerate() {
            if !gi.is_zero() {
                acc = &acc + &(&p.derivative(i) * gi);
            }
        }
        acc
    }))
}

/// Intrinsic rough Laplacian of `p|Sᵐ` written as an ambient polynomial:
/// `L[p] = Δ°p + (m−1)·r̄p + r̄(r̄p)`. Meaningful on the sphere only.
pub fn sphere_laplacian(p: &Polynomial, m: usize) -> Polynomial {
    let rp = radial_poly(p);
    let rrp = radial_poly(&rp);
    let mut out = &laplacian_poly(p) + &rrp;
    if m != 1 {
        out = &out + &rp.scale_int(m as i64 - 1);
    }
    out
}

/// Row `i` of the result is `Σ_j A[i][j]·F_j`.
pub fn apply_linear_map(f: &PolyMap, a: &[Vec<RadicalScalar>]) -> Result<PolyMap> {
    if a.is_empty() {
        return Err(Error::DimensionMismatch("empty matrix".into()));
    }
    let mut rows = Vec::with_capacity(a.len());
    for row in a {
        if row.len() != f.len() {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} columns, map has {} components",
                row.len(),
                f.len()
            )));
        }
        let mut acc = Polynomial::zero(f.nvars());
        for (c, p) in row.iter().zip(f.components()) {
            if !c.is_zero() {
                acc = &acc + &p.scale(c);
            }
        }
        rows.push(acc);
    }
    PolyMap::new(rows)
}

/// `(Σ xᵢ²)^k` in `nvars` variables.
pub fn radius_power(nvars: usize, k: u32) -> Polynomial {
    Polynomial::radius_squared(nvars).pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{normal_form_mod_sphere, rational};

    fn constant(nvars: usize, n: i64) -> Polynomial {
        Polynomial::constant(nvars, RadicalScalar::from_integer(n))
    }

    fn cubic() -> Polynomial {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        &x.pow(3) - &(&x * &y.pow(2)).scale_int(3)
    }

    #[test]
    fn harmonic_cubic_is_killed() {
        assert!(laplacian_poly(&cubic()).is_zero());
    }

    #[test]
    fn quartic_radial_laplacians() {
        let f2 = Polynomial::radius_squared(4)
            .pow(2)
            .scale_rational(&rational(1, 2));
        let lap = laplacian_poly(&f2);
        assert_eq!(normal_form_mod_sphere(&lap), constant(4, -12));
        assert_eq!(normal_form_mod_sphere(&laplacian_poly(&lap)), constant(4, 96));
    }

    #[test]
    fn euler_on_monomial() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let p = &x.pow(2) * &y;
        assert_eq!(radial_poly(&p), p.scale_int(3));
        assert!(radial_poly(&constant(2, 5)).is_zero());
    }

    #[test]
    fn single_square_hessian() {
        let f = PolyMap::new(vec![Polynomial::var(1, 0).pow(2)]).unwrap();
        assert_eq!(hessian_norm_squared(&f), constant(1, 4));
    }

    #[test]
    fn gradient_of_radius() {
        let g = gradient(&Polynomial::radius_squared(2));
        assert_eq!(g.components()[0], Polynomial::var(2, 0).scale_int(2));
        assert_eq!(g.components()[1], Polynomial::var(2, 1).scale_int(2));
    }

    #[test]
    fn push_gradient_of_constant_vanishes() {
        let f = PolyMap::identity(3);
        assert!(push_gradient(&f, &constant(3, 1)).unwrap().is_zero());
        assert!(push_gradient(&f, &constant(2, 1)).is_err());
    }

    #[test]
    fn sphere_laplacian_of_coordinate() {
        for m in 1..5 {
            let x = Polynomial::var(m + 1, 0);
            assert_eq!(
                normal_form_mod_sphere(&sphere_laplacian(&x, m)),
                x.scale_int(m as i64)
            );
        }
        assert!(sphere_laplacian(&constant(3, 1), 2).is_zero());
    }

    #[test]
    fn linear_map_shape_errors() {
        let f = PolyMap::identity(2);
        let a = vec![vec![RadicalScalar::one()]];
        assert!(apply_linear_map(&f, &a).is_err());
        let id = vec![
            vec![RadicalScalar::one(), RadicalScalar::zero()],
            vec![RadicalScalar::zero(), RadicalScalar::one()],
        ];
        assert_eq!(apply_linear_map(&f, &id).unwrap(), f);
    }
}
