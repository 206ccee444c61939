//! Random sphere-restricting maps assembled from a pool of harmonic forms,
//! scaled, rotated and stacked. Used to fuzz the field engines.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{circle_harmonics, cck_degree3, diagonal_sum, product_map, radial_multiple, veronese, x_times_g};
use crate::error::Result;
use crate::maps::{apply_linear_map, sphere_restriction_check, KindHint, PolyMap, SphereMapMeta};
use crate::polyalg::{integer, rational, Polynomial, RadicalScalar, Rational};

/// A unit-radius form together with its degree.
#[derive(Clone, Debug)]
pub struct PoolEntry {
    pub name: String,
    pub map: PolyMap,
    pub degree: u32,
}

fn entry(name: impl Into<String>, map: PolyMap, degree: u32) -> PoolEntry {
    PoolEntry {
        name: name.into(),
        map,
        degree,
    }
}

/// `(re, im)` pairs of real polynomials in `x₁..x₄` with `z₁ = x₁ + ix₂`,
/// `z₂ = x₃ + ix₄`.
type Complex = (Polynomial, Polynomial);

fn cmul(a: &Complex, b: &Complex) -> Complex {
    (&(&a.0 * &b.0) - &(&a.1 * &b.1), &(&a.0 * &b.1) + &(&a.1 * &b.0))
}

fn cpow(z: &Complex, e: u32) -> Complex {
    (0..e).fold((Polynomial::one(4), Polynomial::zero(4)), |acc, _| cmul(&acc, z))
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * i64::from(n - i) / i64::from(i + 1))
}

/// `(√C(d,j)·z₁^{d−j}z₂ʲ)_j`, the holomorphic isometric embedding of degree `d`.
fn holomorphic_veronese(d: u32) -> PolyMap {
    let z1 = (Polynomial::var(4, 0), Polynomial::var(4, 1));
    let z2 = (Polynomial::var(4, 2), Polynomial::var(4, 3));
    let mut comps = Vec::new();
    for j in 0..=d {
        let c = RadicalScalar::sqrt_rational(&integer(binomial(d, j))).expect("non-negative");
        let (re, im) = cmul(&cpow(&z1, d - j), &cpow(&z2, j));
        comps.push(re.scale(&c));
        comps.push(im.scale(&c));
    }
    PolyMap::new(comps).expect("same variable count")
}

/// `(|z₁|² − |z₂|², 2z₁z̄₂)`.
fn hopf() -> PolyMap {
    let x: [Polynomial; 4] = std::array::from_fn(|i| Polynomial::var(4, i));
    let a = &(&x[0].pow(2) + &x[1].pow(2)) - &(&x[2].pow(2) + &x[3].pow(2));
    let b = (&(&x[0] * &x[2]) + &(&x[1] * &x[3])).scale_int(2);
    let c = (&(&x[1] * &x[2]) - &(&x[0] * &x[3])).scale_int(2);
    PolyMap::new(vec![a, b, c]).expect("same variable count")
}

/// Unit-radius harmonic forms on `nvars ∈ {2, 3, 4}` variables.
pub fn harmonic_pool(nvars: usize) -> Vec<PoolEntry> {
    match nvars {
        2 => (1..=4).map(|k| entry(format!("circle:{k}"), circle_harmonics(k), k)).collect(),
        3 => vec![
            entry("identity:2", PolyMap::identity(3), 1),
            entry("veronese", veronese(), 2),
            entry("cck3", cck_degree3(), 3),
        ],
        4 => vec![
            entry("identity:3", PolyMap::identity(4), 1),
            entry("hopf", hopf(), 2),
            entry("holomorphic:2", holomorphic_veronese(2), 2),
            entry("holomorphic:3", holomorphic_veronese(3), 3),
            entry("holomorphic:4", holomorphic_veronese(4), 4),
        ],
        _ => Vec::new(),
    }
}

/// Unit-radius forms that are not harmonic, of degree at most 4.
fn non_harmonic_pool(nvars: usize) -> Vec<PoolEntry> {
    match nvars {
        2 => vec![
            entry("xg(circle:1)", x_times_g(&circle_harmonics(1)).expect("form"), 2),
            entry("xg(circle:2)", x_times_g(&circle_harmonics(2)).expect("form"), 3),
            entry("xg(circle:3)", x_times_g(&circle_harmonics(3)).expect("form"), 4),
            entry("radial(circle:2)", radial_multiple(&circle_harmonics(2), 1), 4),
        ],
        3 => vec![
            entry("radial(identity:2)", radial_multiple(&PolyMap::identity(3), 1), 3),
            entry("radial(veronese)", radial_multiple(&veronese(), 1), 4),
        ],
        4 => vec![
            entry("xg(identity:3)", x_times_g(&PolyMap::identity(4)).expect("form"), 2),
            entry("radial(identity:3)", radial_multiple(&PolyMap::identity(4), 1), 3),
        ],
        _ => Vec::new(),
    }
}

/// Rotation by the rational angle with `cos = (1−t²)/(1+t²)`,
/// `sin = 2t/(1+t²)` in the coordinate plane `(i, j)` of `Rⁿ`.
pub fn rational_rotation(n: usize, i: usize, j: usize, t: &Rational) -> Vec<Vec<RadicalScalar>> {
    let one = integer(1);
    let denom = &one + t * t;
    let c = RadicalScalar::from_rational((&one - t * t) / &denom);
    let s = RadicalScalar::from_rational((t * integer(2)) / &denom);
    let mut m: Vec<Vec<RadicalScalar>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|col| if r == col { RadicalScalar::one() } else { RadicalScalar::zero() })
                .collect()
        })
        .collect();
    m[i][i] = c.clone();
    m[j][j] = c;
    m[i][j] = -s.clone();
    m[j][i] = s;
    m
}

fn random_rotate<R: Rng + ?Sized>(f: &PolyMap, rng: &mut R) -> Result<PolyMap> {
    let n = f.len();
    if n < 2 {
        return Ok(f.clone());
    }
    let mut out = f.clone();
    for _ in 0..rng.gen_range(0..=2) {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let t = rational(rng.gen_range(1..=3), rng.gen_range(1..=4));
        out = apply_linear_map(&out, &rational_rotation(n, i, j, &t))?;
    }
    Ok(out)
}

fn pick_form<R: Rng + ?Sized>(nvars: usize, rng: &mut R) -> PoolEntry {
    let mut pool = harmonic_pool(nvars);
    if rng.gen_bool(0.3) {
        pool.extend(non_harmonic_pool(nvars));
    }
    pool.choose(rng).expect("pool is non-empty").clone()
}

const SPLIT_RADII: [(i64, i64); 3] = [(1, 4), (1, 2), (3, 4)];
const TARGET_RADII: [(i64, i64); 4] = [(1, 1), (1, 4), (1, 2), (2, 1)];

/// A random sphere-restricting map on at most 4 variables with degree at
/// most 4: a scaled form, a diagonal of two forms, or a product of circle
/// harmonics. Returns a short description alongside.
pub fn random_sphere_map<R: Rng + ?Sized>(rng: &mut R) -> Result<(PolyMap, SphereMapMeta, String)> {
    let nvars = rng.gen_range(2..=4);
    match rng.gen_range(0..10) {
        0..=3 => {
            let form = pick_form(nvars, rng);
            let (p, q) = *TARGET_RADII.choose(rng).expect("non-empty");
            let r = RadicalScalar::sqrt_rational(&rational(p, q)).expect("positive");
            let map = random_rotate(&form.map, rng)?.scale(&r);
            let meta = sphere_restriction_check(&map, KindHint::Homogeneous)?;
            Ok((map, meta, format!("{}·√({p}/{q})", form.name)))
        }
        4..=7 => {
            let a = pick_form(nvars, rng);
            let b = pick_form(nvars, rng);
            let (p, q) = *SPLIT_RADII.choose(rng).expect("non-empty");
            let fa = random_rotate(&a.map, rng)?;
            let fb = random_rotate(&b.map, rng)?;
            let (map, meta) = diagonal_sum(&fa, &fb, &RadicalScalar::from_ratio(p, q))?;
            Ok((map, meta, format!("diagonal({}, {}, {p}/{q})", a.name, b.name)))
        }
        _ => {
            let k1 = rng.gen_range(1..=3);
            let k2 = rng.gen_range(1..=3);
            let (p, q) = *SPLIT_RADII.choose(rng).expect("non-empty");
            let (map, meta) = product_map(
                &circle_harmonics(k1),
                &circle_harmonics(k2),
                &RadicalScalar::from_ratio(p, q),
            )?;
            Ok((map, meta, format!("product(circle:{k1}, circle:{k2}, {p}/{q})")))
        }
    }
}
