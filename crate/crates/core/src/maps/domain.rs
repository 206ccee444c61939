//! Round domains: a unit sphere, or a product of unit spheres on disjoint
//! variable blocks, together with the intrinsic operators used by the
//! general tension/bitension route.

use std::ops::Range;

use super::operators::{differential_inner, laplacian_poly, push_gradient, radial_poly_on};
use super::polymap::PolyMap;
use crate::polyalg::{Polynomial, SphereIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    ideal: SphereIdeal,
}

impl Domain {
    /// `S^{nvars-1}`.
    pub fn sphere(nvars: usize) -> Self {
        Self {
            ideal: SphereIdeal::unit(nvars),
        }
    }

    /// `S^{m1} × S^{m2}` on variables `[0, m1+1)` and `[m1+1, m1+m2+2)`.
    pub fn product(m1: usize, m2: usize) -> Self {
        Self {
            ideal: SphereIdeal::product(vec![0..m1 + 1, m1 + 1..m1 + m2 + 2]),
        }
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn blocks(&self) -> &[Range<usize>] {
        self.ideal.blocks()
    }

    /// Total dimension `Σ (|block| − 1)`.
    pub fn dim(&self) -> usize {
        self.blocks().iter().map(|b| b.len() - 1).sum()
    }

    pub fn ideal(&self) -> &SphereIdeal {
        &self.ideal
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        self.ideal.reduce(p)
    }

    pub fn reduce_map(&self, f: &PolyMap) -> PolyMap {
        f.reduce(&self.ideal)
    }

    /// Intrinsic rough Laplacian of the restriction:
    /// `Δ°p + Σ_B ((m_B − 1)·r̄_B p + r̄_B r̄_B p)`.
    pub fn laplacian(&self, p: &Polynomial) -> Polynomial {
        let mut out = laplacian_poly(p);
        for b in self.blocks() {
            let m = b.len() as i64 - 1;
            let rp = radial_poly_on(p, b.clone());
            let rrp = radial_poly_on(&rp, b.clone());
            out = &out + &rrp;
            if m != 1 {
                out = &out + &rp.scale_int(m - 1);
            }
        }
        out
    }

    pub fn laplacian_map(&self, f: &PolyMap) -> PolyMap {
        f.map(|p| self.laplacian(p))
    }

    /// `r̄_B F` for each block `B`.
    pub fn radial_parts(&self, f: &PolyMap) -> Vec<PolyMap> {
        self.blocks()
            .iter()
            .map(|b| f.map(|p| radial_poly_on(p, b.clone())))
            .collect()
    }

    /// Inner product of the tangential differentials:
    /// `⟨d°F, d°G⟩ − Σ_B ⟨r̄_B F, r̄_B G⟩`.
    pub fn tangential_inner(&self, f: &PolyMap, g: &PolyMap) -> Polynomial {
        let mut acc = differential_inner(f, g);
        for (rf, rg) in self.radial_parts(f).iter().zip(self.radial_parts(g)) {
            acc = &acc - &rf.dot(&rg);
        }
        acc
    }

    /// `|dΦ|²` as an ambient polynomial.
    pub fn differential_norm_squared(&self, f: &PolyMap) -> Polynomial {
        self.tangential_inner(f, f)
    }

    /// `dΦ(grad h)` with the gradient taken along the domain:
    /// `d°F(grad° h) − Σ_B (r̄_B h)·r̄_B F`.
    pub fn push_tangential_gradient(&self, f: &PolyMap, h: &Polynomial) -> PolyMap {
        let mut out = push_gradient(f, h).expect("map and function share the domain");
        for (b, rf) in self.blocks().iter().zip(self.radial_parts(f)) {
            let rh = radial_poly_on(h, b.clone());
            if !rh.is_zero() {
                out = out.sub(&rf.scale_by(&rh));
            }
        }
        out
    }
}
