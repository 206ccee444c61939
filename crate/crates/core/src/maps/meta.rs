//! Recognition of polynomial maps that restrict to maps between spheres.

use std::ops::Range;

use super::domain::Domain;
use super::operators::grad_norm_squared;
use super::polymap::PolyMap;
use crate::error::{Error, Result};
use crate::polyalg::{integer, Monomial, Polynomial, RadicalScalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapKind {
    /// A form of degree `degree` with `|F|² = r²·|x̄|^{2k}`.
    Homogeneous { degree: u32, radius_sq: RadicalScalar },
    /// `F = (F₁, F₂)` on one domain sphere, `F₁` being components `[0, split)`.
    Diagonal {
        k1: u32,
        k2: u32,
        r1_sq: RadicalScalar,
        r2_sq: RadicalScalar,
        split: usize,
    },
    /// `F = (F₁(x), F₂(y))` on `S^{m1} × S^{m2}`.
    Product {
        m1: usize,
        m2: usize,
        k1: u32,
        k2: u32,
        r1_sq: RadicalScalar,
        r2_sq: RadicalScalar,
        split: usize,
    },
}

impl MapKind {
    pub fn name(&self) -> &'static str {
        match self {
            MapKind::Homogeneous { .. } => "homogeneous",
            MapKind::Diagonal { .. } => "diagonal",
            MapKind::Product { .. } => "product",
        }
    }
}

/// Verified sphere-map metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereMapMeta {
    nvars: usize,
    kind: MapKind,
}

impl SphereMapMeta {
    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn domain(&self) -> Domain {
        match &self.kind {
            MapKind::Product { m1, m2, .. } => Domain::product(*m1, *m2),
            _ => Domain::sphere(self.nvars),
        }
    }

    /// Domain dimension `m` (or `m₁ + m₂` for products).
    pub fn dim(&self) -> usize {
        self.domain().dim()
    }

    /// Squared radius of the target sphere; 1 for diagonal and product maps.
    pub fn target_radius_sq(&self) -> RadicalScalar {
        match &self.kind {
            MapKind::Homogeneous { radius_sq, .. } => radius_sq.clone(),
            _ => RadicalScalar::one(),
        }
    }
}

/// What the caller expects `sphere_restriction_check` to find.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum KindHint {
    #[default]
    Auto,
    Homogeneous,
    Diagonal { split: Option<usize> },
    Product { first_block: Option<usize>, split: Option<usize> },
}

/// `Some((k, c))` when `p = c·(Σ_{i∈block} xᵢ²)^k` with `k ≥ 1` and `c > 0`.
fn match_radial_power(p: &Polynomial, block: Range<usize>) -> Option<(u32, RadicalScalar)> {
    let d = p.homogeneous_degree()?;
    if d == 0 || d % 2 == 1 {
        return None;
    }
    let k = d / 2;
    let mut lead = Monomial::one(p.nvars());
    lead.0[block.start] = u16::try_from(d).ok()?;
    let c = p.coefficient(&lead);
    if !c.is_positive() {
        return None;
    }
    let pattern = Polynomial::radius_squared_on(p.nvars(), block).pow(k).scale(&c);
    (pattern == *p).then_some((k, c))
}

fn check_homogeneous(f: &PolyMap) -> Option<SphereMapMeta> {
    let (degree, radius_sq) = match_radial_power(&f.norm_squared(), 0..f.nvars())?;
    if f.components().iter().any(|c| !c.is_zero() && c.homogeneous_degree() != Some(degree)) {
        return None;
    }
    Some(SphereMapMeta {
        nvars: f.nvars(),
        kind: MapKind::Homogeneous { degree, radius_sq },
    })
}

enum SplitOutcome {
    Ok(SphereMapMeta),
    BadRadii(RadicalScalar),
    NoMatch,
}

fn check_diagonal_split(f: &PolyMap, split: usize) -> SplitOutcome {
    if split == 0 || split >= f.len() {
        return SplitOutcome::NoMatch;
    }
    let n = f.nvars();
    let (a, b) = f.split_at(split);
    let (Some((k1, r1_sq)), Some((k2, r2_sq))) = (
        match_radial_power(&a.norm_squared(), 0..n),
        match_radial_power(&b.norm_squared(), 0..n),
    ) else {
        return SplitOutcome::NoMatch;
    };
    let sum = &r1_sq + &r2_sq;
    if !sum.is_one() {
        return SplitOutcome::BadRadii(sum);
    }
    let domain = Domain::sphere(n);
    let excess = &f.norm_squared() - &Polynomial::one(n);
    if !domain.reduce(&excess).is_zero() {
        return SplitOutcome::NoMatch;
    }
    SplitOutcome::Ok(SphereMapMeta {
        nvars: n,
        kind: MapKind::Diagonal {
            k1,
            k2,
            r1_sq,
            r2_sq,
            split,
        },
    })
}

fn check_product_split(f: &PolyMap, first_block: usize, split: usize) -> SplitOutcome {
    let n = f.nvars();
    if first_block < 2 || n < first_block + 2 || split == 0 || split >= f.len() {
        return SplitOutcome::NoMatch;
    }
    let (a, b) = f.split_at(split);
    let block_a = 0..first_block;
    let block_b = first_block..n;
    if !a.components().iter().all(|p| p.depends_only_on(block_a.clone()))
        || !b.components().iter().all(|p| p.depends_only_on(block_b.clone()))
    {
        return SplitOutcome::NoMatch;
    }
    let (Some((k1, r1_sq)), Some((k2, r2_sq))) = (
        match_radial_power(&a.norm_squared(), block_a),
        match_radial_power(&b.norm_squared(), block_b),
    ) else {
        return SplitOutcome::NoMatch;
    };
    let sum = &r1_sq + &r2_sq;
    if !sum.is_one() {
        return SplitOutcome::BadRadii(sum);
    }
    SplitOutcome::Ok(SphereMapMeta {
        nvars: n,
        kind: MapKind::Product {
            m1: first_block - 1,
            m2: n - first_block - 1,
            k1,
            k2,
            r1_sq,
            r2_sq,
            split,
        },
    })
}

fn first_success<I: Iterator<Item = SplitOutcome>>(outcomes: I, what: &str) -> Result<SphereMapMeta> {
    let mut bad_radii = None;
    for o in outcomes {
        match o {
            SplitOutcome::Ok(meta) => return Ok(meta),
            SplitOutcome::BadRadii(sum) => bad_radii = bad_radii.or(Some(sum)),
            SplitOutcome::NoMatch => {}
        }
    }
    match bad_radii {
        Some(sum) => Err(Error::RadiiDoNotSumToOne(sum.to_string())),
        None => Err(Error::NotASphereMap(what.to_string())),
    }
}

fn search_diagonal(f: &PolyMap, split: Option<usize>) -> Result<SphereMapMeta> {
    let splits: Vec<usize> = match split {
        Some(s) => vec![s],
        None => (1..f.len()).collect(),
    };
    first_success(
        splits.into_iter().map(|s| check_diagonal_split(f, s)),
        "no split gives |F₁|² = r₁²|x̄|^{2k₁} and |F₂|² = r₂²|x̄|^{2k₂}",
    )
}

fn search_product(f: &PolyMap, first_block: Option<usize>, split: Option<usize>) -> Result<SphereMapMeta> {
    let blocks: Vec<usize> = match first_block {
        Some(b) => vec![b],
        None => (2..f.nvars().saturating_sub(1)).collect(),
    };
    let splits: Vec<usize> = match split {
        Some(s) => vec![s],
        None => (1..f.len()).collect(),
    };
    let candidates = blocks
        .iter()
        .flat_map(|&b| splits.iter().map(move |&s| (b, s)))
        .map(|(b, s)| check_product_split(f, b, s));
    first_success(
        candidates,
        "no block/component split gives factors on disjoint variable blocks",
    )
}

/// Verifies the exact identities that make `F` restrict to a sphere map and
/// infers degrees and radii from `|F|²`.
pub fn sphere_restriction_check(f: &PolyMap, hint: KindHint) -> Result<SphereMapMeta> {
    match hint {
        KindHint::Homogeneous => check_homogeneous(f).ok_or_else(|| {
            Error::NotASphereMap("|F|² is not of the form r²·|x̄|^{2k}".into())
        }),
        KindHint::Diagonal { split } => search_diagonal(f, split),
        KindHint::Product { first_block, split } => search_product(f, first_block, split),
        KindHint::Auto => {
            if let Some(meta) = check_homogeneous(f) {
                return Ok(meta);
            }
            match search_diagonal(f, None) {
                Ok(meta) => return Ok(meta),
                Err(e @ Error::RadiiDoNotSumToOne(_)) => {
                    return search_product(f, None, None).or(Err(e));
                }
                Err(_) => {}
            }
            search_product(f, None, None).map_err(|e| match e {
                Error::NotASphereMap(_) => Error::NotASphereMap(
                    "|F|² matches no homogeneous, diagonal or product radius pattern".into(),
                ),
                other => other,
            })
        }
    }
}

/// `e(φ) = ½|dΦ|²` as a normal-form polynomial on the domain.
pub fn energy_density(f: &PolyMap, meta: &SphereMapMeta) -> Polynomial {
    let n = f.nvars();
    let sq = |k: u32, r: &RadicalScalar| r.scale(&integer(i64::from(k * k)));
    let radial = match meta.kind() {
        MapKind::Homogeneous { degree, radius_sq } => sq(*degree, radius_sq),
        MapKind::Diagonal { k1, k2, r1_sq, r2_sq, .. }
        | MapKind::Product { k1, k2, r1_sq, r2_sq, .. } => &sq(*k1, r1_sq) + &sq(*k2, r2_sq),
    };
    let full = &grad_norm_squared(f) - &Polynomial::constant(n, radial);
    meta.domain()
        .reduce(&full)
        .scale(&RadicalScalar::from_ratio(1, 2))
}
