//! Named maps and the schemes that build new sphere maps from old ones.

mod random;

pub use random::{harmonic_pool, random_sphere_map, rational_rotation, PoolEntry};

use crate::error::{Error, Result};
use crate::maps::{apply_linear_map, sphere_restriction_check, KindHint, MapKind, PolyMap, SphereMapMeta};
use crate::polyalg::{Polynomial, RadicalScalar};

/// A verified map from the gallery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub map: PolyMap,
    pub meta: SphereMapMeta,
    pub provenance: &'static str,
}

/// Gallery names accepted by [`named_form`], with their long aliases.
pub const GALLERY_NAMES: &[(&str, &str)] = &[
    ("veronese", "veronese"),
    ("cck3", "cck_degree3"),
    ("quad-f1", "quadratic_example_f1"),
    ("quart-f2", "quartic_example_f2"),
    ("final-map", "final_example_map"),
    ("mixed", "mixed_example"),
];

/// `q·√n`.
fn coef(num: i64, den: i64, radicand: u64) -> RadicalScalar {
    RadicalScalar::term(crate::polyalg::rational(num, den), radicand)
}

fn vars<const N: usize>() -> [Polynomial; N] {
    std::array::from_fn(|i| Polynomial::var(N, i))
}

/// `G_k = (Re zᵏ, Im zᵏ)` with `z = x + iy`; `k = 0` gives the constant `(1, 0)`.
pub fn circle_harmonics(k: u32) -> PolyMap {
    let [x, y] = vars::<2>();
    let mut p = Polynomial::one(2);
    let mut q = Polynomial::zero(2);
    for _ in 0..k {
        let next_p = &(&x * &p) - &(&y * &q);
        let next_q = &(&x * &q) + &(&y * &p);
        p = next_p;
        q = next_q;
    }
    PolyMap::new(vec![p, q]).expect("two components in two variables")
}

/// The Veronese map `S² → S⁴`.
pub fn veronese() -> PolyMap {
    let [x, y, z] = vars::<3>();
    let comps = vec![
        (&(&x.pow(2) + &y.pow(2)) - &z.pow(2).scale_int(2)).scale(&coef(1, 2, 1)),
        (&x.pow(2) - &y.pow(2)).scale(&coef(1, 2, 3)),
        (&x * &y).scale(&coef(1, 1, 3)),
        (&x * &z).scale(&coef(1, 1, 3)),
        (&y * &z).scale(&coef(1, 1, 3)),
    ];
    PolyMap::new(comps).expect("same variable count")
}

/// The cubic form `S² → S⁶` with coefficients over `1/4`-denominators.
pub fn cck_degree3() -> PolyMap {
    let [x, y, z] = vars::<3>();
    let (x2, y2, z2) = (x.pow(2), y.pow(2), z.pow(2));
    let minus_xy_4z = &(&z2.scale_int(4) - &x2) - &y2;
    let comps = vec![
        (&z * &(&(&x2.scale_int(-3) - &y2.scale_int(3)) + &z2.scale_int(2))).scale(&coef(1, 2, 1)),
        (&x * &minus_xy_4z).scale(&coef(1, 4, 6)),
        (&z * &(&x2 - &y2)).scale(&coef(1, 2, 15)),
        (&x * &(&x2 - &y2.scale_int(3))).scale(&coef(1, 4, 10)),
        (&y * &minus_xy_4z).scale(&coef(1, 4, 6)),
        (&(&x * &y) * &z).scale(&coef(1, 1, 15)),
        (&y * &(&x2.scale_int(3) - &y2)).scale(&coef(1, 4, 10)),
    ];
    PolyMap::new(comps).expect("same variable count")
}

/// Quadratic form `R⁴ → R⁴` with `|F|² = (3/4)|x̄|⁴`.
pub fn quadratic_example_f1() -> PolyMap {
    let [x1, x2, x3, x4] = vars::<4>();
    let r2 = Polynomial::radius_squared(4);
    let cross = (&(&x1 * &x4) + &(&x2 * &x3)).scale(&coef(1, 1, 2));
    let half_r2 = r2.scale(&coef(1, 2, 1));
    let inv_sqrt2 = coef(1, 2, 2);
    let comps = vec![
        (&(&(&x1.pow(2) + &x2.pow(2)) - &x3.pow(2)) - &x4.pow(2)).scale(&inv_sqrt2),
        (&(&x1 * &x3) - &(&x2 * &x4)).scale(&coef(1, 1, 2)),
        (&cross - &half_r2).scale(&inv_sqrt2),
        (&cross + &half_r2).scale(&inv_sqrt2),
    ];
    PolyMap::new(comps).expect("same variable count")
}

/// `½|x̄|⁴` on `R⁴`.
pub fn quartic_example_f2() -> PolyMap {
    let p = Polynomial::radius_squared(4).pow(2).scale(&coef(1, 2, 1));
    PolyMap::new(vec![p]).expect("one component")
}

/// The mixed quadratic/quartic example rotated so that its first three
/// components form a harmonic map into a small sphere.
pub fn final_example_map() -> PolyMap {
    let [x1, x2, x3, x4] = vars::<4>();
    let inv_sqrt2 = coef(1, 2, 2);
    let comps = vec![
        (&(&(&x1.pow(2) + &x2.pow(2)) - &x3.pow(2)) - &x4.pow(2)).scale(&inv_sqrt2),
        (&(&x1 * &x3) - &(&x2 * &x4)).scale(&coef(1, 1, 2)),
        (&(&x1 * &x4) + &(&x2 * &x3)).scale(&coef(1, 1, 2)),
        Polynomial::radius_squared(4).scale(&inv_sqrt2),
        Polynomial::zero(4),
    ];
    PolyMap::new(comps).expect("same variable count")
}

fn verified(
    name: &'static str,
    map: PolyMap,
    hint: KindHint,
    provenance: &'static str,
) -> Result<GalleryEntry> {
    let meta = sphere_restriction_check(&map, hint)?;
    Ok(GalleryEntry {
        name,
        map,
        meta,
        provenance,
    })
}

/// Looks up a gallery map by its short or long name.
pub fn named_form(name: &str) -> Result<GalleryEntry> {
    let canonical = GALLERY_NAMES
        .iter()
        .find(|(short, long)| *short == name || *long == name)
        .map(|(short, _)| *short)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    match canonical {
        "veronese" => verified(
            "veronese",
            veronese(),
            KindHint::Homogeneous,
            "Veronese embedding of the real projective plane, S² → S⁴",
        ),
        "cck3" => verified(
            "cck3",
            cck_degree3(),
            KindHint::Homogeneous,
            "cubic harmonic form S² → S⁶ of Chern, do Carmo and Kobayashi",
        ),
        "quad-f1" => verified(
            "quad-f1",
            quadratic_example_f1(),
            KindHint::Homogeneous,
            "non-harmonic quadratic form on R⁴ with |F|² = (3/4)|x̄|⁴",
        ),
        "quart-f2" => verified(
            "quart-f2",
            quartic_example_f2(),
            KindHint::Homogeneous,
            "scalar quartic ½|x̄|⁴ on R⁴",
        ),
        "final-map" => verified(
            "final-map",
            final_example_map(),
            KindHint::Homogeneous,
            "mixed example after a codomain rotation; a harmonic map into a small sphere",
        ),
        "mixed" => verified(
            "mixed",
            stack(&quadratic_example_f1(), &quartic_example_f2())?,
            KindHint::Diagonal {
                split: Some(quadratic_example_f1().len()),
            },
            "diagonal of quad-f1 and quart-f2, a proper biharmonic map S³ → S⁴",
        ),
        _ => unreachable!("every canonical name is handled"),
    }
}

/// Every gallery entry.
pub fn gallery() -> Vec<GalleryEntry> {
    GALLERY_NAMES
        .iter()
        .map(|(short, _)| named_form(short).expect("gallery maps verify"))
        .collect()
}

fn form_data(f: &PolyMap) -> Result<(u32, RadicalScalar)> {
    match sphere_restriction_check(f, KindHint::Homogeneous).map(|m| m.kind().clone()) {
        Ok(MapKind::Homogeneous { degree, radius_sq }) => Ok((degree, radius_sq)),
        _ => Err(Error::NotAForm(format!("|F|² is not r²|x̄|^(2k) for {f}"))),
    }
}

/// `(x¹G, x²G, …, x^{m+1}G)`.
pub fn x_times_g(g: &PolyMap) -> Result<PolyMap> {
    form_data(g)?;
    let n = g.nvars();
    let comps = (0..n)
        .flat_map(|i| {
            let xi = Polynomial::var(n, i);
            g.components().iter().map(move |c| &xi * c).collect::<Vec<_>>()
        })
        .collect();
    PolyMap::new(comps)
}

/// `|x̄|^{2p}·F`.
pub fn radial_multiple(f: &PolyMap, p: u32) -> PolyMap {
    f.scale_by(&Polynomial::radius_squared(f.nvars()).pow(p))
}

/// The identity `x̄ ↦ x̄` on `R^{m+1}`.
pub fn identity(m: usize) -> PolyMap {
    PolyMap::identity(m + 1)
}

/// Components of `a` followed by components of `b`, on shared variables.
pub fn stack(a: &PolyMap, b: &PolyMap) -> Result<PolyMap> {
    a.concat(b)
}

/// `(√r₁², √(1−r₁²))` for a rational `r₁²` strictly between 0 and 1.
fn radii(r1_sq: &RadicalScalar) -> Result<(RadicalScalar, RadicalScalar, RadicalScalar)> {
    let bad = || Error::RadiusNotRepresentable(r1_sq.to_string());
    let q = r1_sq.as_rational().ok_or_else(bad)?;
    let one = crate::polyalg::integer(1);
    if q <= crate::polyalg::integer(0) || q >= one {
        return Err(bad());
    }
    let r2_sq = &one - &q;
    let r1 = RadicalScalar::sqrt_rational(&q).ok_or_else(bad)?;
    let r2 = RadicalScalar::sqrt_rational(&r2_sq).ok_or_else(bad)?;
    Ok((r1, r2, RadicalScalar::from_rational(r2_sq)))
}

fn require_unit_form(f: &PolyMap) -> Result<()> {
    let (_, r) = form_data(f)?;
    if !r.is_one() {
        return Err(Error::NotAForm(format!("expected |F|² = |x̄|^(2k), found radius² {r}")));
    }
    Ok(())
}

/// `(r₁F₁, r₂F₂)` on one sphere, with `r₂² = 1 − r₁²`.
pub fn diagonal_sum(f1: &PolyMap, f2: &PolyMap, r1_sq: &RadicalScalar) -> Result<(PolyMap, SphereMapMeta)> {
    if f1.nvars() != f2.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "factors act on {} and {} variables",
            f1.nvars(),
            f2.nvars()
        )));
    }
    require_unit_form(f1)?;
    require_unit_form(f2)?;
    let (r1, r2, _) = radii(r1_sq)?;
    let map = f1.scale(&r1).concat(&f2.scale(&r2))?;
    let meta = sphere_restriction_check(&map, KindHint::Diagonal { split: Some(f1.len()) })?;
    Ok((map, meta))
}

/// `(r₁F₁(x), r₂F₂(y))` on `S^{m₁} × S^{m₂}`.
pub fn product_map(f1: &PolyMap, f2: &PolyMap, r1_sq: &RadicalScalar) -> Result<(PolyMap, SphereMapMeta)> {
    require_unit_form(f1)?;
    require_unit_form(f2)?;
    let (r1, r2, _) = radii(r1_sq)?;
    let (n1, n2) = (f1.nvars(), f2.nvars());
    let n = n1 + n2;
    let map = f1.embed(n, 0).scale(&r1).concat(&f2.embed(n, n1).scale(&r2))?;
    let meta = sphere_restriction_check(
        &map,
        KindHint::Product {
            first_block: Some(n1),
            split: Some(f1.len()),
        },
    )?;
    Ok((map, meta))
}

/// `T = (1/√2)[[1,0,0,1],[0,1,1,0],[0,1,−1,0],[1,0,0,−1]]`.
pub fn twist_matrix() -> Vec<Vec<RadicalScalar>> {
    let s = coef(1, 2, 2);
    let z = RadicalScalar::zero();
    let n = -s.clone();
    vec![
        vec![s.clone(), z.clone(), z.clone(), s.clone()],
        vec![z.clone(), s.clone(), s.clone(), z.clone()],
        vec![z.clone(), s.clone(), n.clone(), z.clone()],
        vec![s, z.clone(), z, n],
    ]
}

/// Applies [`twist_matrix`] to a four-component map and reorders the result
/// as `(y₁, y₃, y₄, y₂)`. On `x_times_g(G_k)` this gives
/// `(1/√2)(|z|²z^{k−1}, z^{k+1})` in real coordinates.
pub fn twist(f: &PolyMap) -> Result<PolyMap> {
    if f.len() != 4 {
        return Err(Error::WrongDimensions(format!(
            "twist needs 4 components, got {}",
            f.len()
        )));
    }
    let y = apply_linear_map(f, &twist_matrix())?.into_components();
    PolyMap::new(vec![y[0].clone(), y[2].clone(), y[3].clone(), y[1].clone()])
}
