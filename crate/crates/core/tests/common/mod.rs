//! Property suites shared by the property tests and the acceptance run.
//! Each suite runs a deterministic proptest runner and reports the first
//! minimal counterexample as text.
#![allow(dead_code)]

use biharmonic::cli::parse_polynomial_in;
use biharmonic::constructors::{
    harmonic_pool, random_sphere_map, rational_rotation, stack, x_times_g,
};
use biharmonic::fields::classify_with_meta;
use biharmonic::maps::{
    apply_linear_map, differential_inner, energy_density, euclidean_laplacian, grad_norm_squared,
    hessian_norm_squared, laplacian_poly, radial_poly, sphere_restriction_check, KindHint, MapKind, PolyMap,
};
use biharmonic::polyalg::{normal_form_mod_sphere, rational, Monomial, Polynomial, RadicalScalar, Rational};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const CASES: u32 = 200;

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

pub fn scalar() -> impl Strategy<Value = RadicalScalar> {
    prop::collection::vec((prop::sample::select(vec![1u64, 2, 3, 5, 6]), -6i64..=6, 1i64..=4), 0..3).prop_map(
        |terms| {
            terms.into_iter().fold(RadicalScalar::zero(), |acc, (n, a, b)| {
                &acc + &RadicalScalar::term(rational(a, b), n)
            })
        },
    )
}

pub fn polynomial(nvars: usize, max_exp: u16, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), scalar()), 0..=max_terms)
        .prop_map(move |terms| Polynomial::from_terms(nvars, terms.into_iter().map(|(e, c)| (Monomial(e), c))))
}

pub fn any_polynomial() -> impl Strategy<Value = Polynomial> {
    (1usize..=4).prop_flat_map(|n| polynomial(n, 3, 6))
}

/// A homogeneous polynomial of degree `k` as a sum of products of `k`
/// variables.
pub fn homogeneous(nvars: usize, k: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..nvars, k), scalar()), 0..=5).prop_map(move |terms| {
        Polynomial::from_terms(
            nvars,
            terms.into_iter().map(|(vars, c)| {
                let mut e = vec![0u16; nvars];
                for v in vars {
                    e[v] += 1;
                }
                (Monomial(e), c)
            }),
        )
    })
}

pub fn poly_map(nvars: usize, len: usize) -> impl Strategy<Value = PolyMap> {
    prop::collection::vec(polynomial(nvars, 2, 4), len).prop_map(|c| PolyMap::new(c).expect("same nvars"))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=5).prop_map(|(a, b)| rational(a, b))
}

pub fn radical_ring_axioms(cases: u32) -> Result<(), String> {
    run(cases, (scalar(), scalar(), scalar()), |(a, b, c)| {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a * &RadicalScalar::one(), a.clone());
        Ok(())
    })
}

pub fn normal_form_laws(cases: u32) -> Result<(), String> {
    let strategy = (1usize..=4).prop_flat_map(|n| (polynomial(n, 3, 5), polynomial(n, 2, 4)));
    run(cases, strategy, |(p, q)| {
        let n = p.nvars();
        let generator = &Polynomial::radius_squared(n) - &Polynomial::one(n);
        let nf = normal_form_mod_sphere(&p);
        prop_assert_eq!(normal_form_mod_sphere(&(&p + &(&generator * &q))), nf.clone());
        prop_assert_eq!(normal_form_mod_sphere(&nf), nf.clone());
        prop_assert!(nf.terms().all(|(m, _)| m.exponents()[0] < 2));
        Ok(())
    })
}

pub fn homogeneity(cases: u32) -> Result<(), String> {
    let strategy = (1usize..=5, 0usize..=6).prop_flat_map(|(n, k)| {
        (
            homogeneous(n, k),
            Just(k),
            prop::collection::vec(small_rational(), n),
            small_rational(),
        )
    });
    run(cases, strategy, |(p, k, point, t)| {
        let scaled: Vec<Rational> = point.iter().map(|x| x * &t).collect();
        let lhs = p.evaluate_exact(&scaled);
        let rhs = p.evaluate_exact(&point).scale(&num_traits::pow(t, k));
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

pub fn radius_division(cases: u32) -> Result<(), String> {
    run(cases, any_polynomial(), |p| {
        let r2 = Polynomial::radius_squared(p.nvars());
        prop_assert_eq!(Some(p.clone()), (&p * &r2).divide_by_radius_squared());
        if let Some(d) = p.divide_by_radius_squared() {
            prop_assert_eq!(&d * &r2, p);
        }
        Ok(())
    })
}

pub fn euler_identity(cases: u32) -> Result<(), String> {
    let strategy = (1usize..=5, 0usize..=6).prop_flat_map(|(n, k)| (homogeneous(n, k), Just(k)));
    run(cases, strategy, |(p, k)| {
        prop_assert_eq!(radial_poly(&p), p.scale_int(k as i64));
        Ok(())
    })
}

pub fn flat_weitzenbock(cases: u32) -> Result<(), String> {
    let strategy = (1usize..=3, 1usize..=3).prop_flat_map(|(n, len)| poly_map(n, len));
    run(cases, strategy, |f| {
        let lhs = laplacian_poly(&grad_norm_squared(&f));
        let rhs = &differential_inner(&f, &euclidean_laplacian(&f)).scale_int(2) - &hessian_norm_squared(&f).scale_int(2);
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

pub fn orthogonal_invariance(cases: u32) -> Result<(), String> {
    let strategy = (1usize..=3, 2usize..=3).prop_flat_map(|(n, len)| {
        (poly_map(n, len), 0..len, 0..len, small_rational())
    });
    run(cases, strategy, |(f, i, j, t)| {
        prop_assume!(i != j);
        let a = rational_rotation(f.len(), i, j, &t);
        let af = apply_linear_map(&f, &a).expect("square matrix");
        prop_assert_eq!(grad_norm_squared(&af), grad_norm_squared(&f));
        prop_assert_eq!(
            euclidean_laplacian(&af),
            apply_linear_map(&euclidean_laplacian(&f), &a).expect("square matrix")
        );
        Ok(())
    })
}

pub fn print_parse_round_trip(cases: u32) -> Result<(), String> {
    run(cases, any_polynomial(), |p| {
        let text = p.to_string();
        let back = parse_polynomial_in(&text, p.nvars()).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
        prop_assert_eq!(back, p);
        Ok(())
    })
}

/// A quadratic form with `|F|² = |x̄|⁴`: a rotated stack of a harmonic
/// quadratic scaled by `√t` and the non-harmonic `x·x̄` scaled by `√(1−t)`.
fn quadratic_map(nvars: usize, pick: usize, t: (i64, i64), rotation: (usize, usize, Rational)) -> PolyMap {
    let harmonic: Vec<PolyMap> = harmonic_pool(nvars).into_iter().filter(|e| e.degree == 2).map(|e| e.map).collect();
    let h = harmonic[pick % harmonic.len()].clone();
    let n = x_times_g(&PolyMap::identity(nvars)).expect("identity is a form");
    let (a, b) = t;
    let f = if a == 0 {
        n
    } else if a == b {
        h
    } else {
        let ra = RadicalScalar::sqrt_rational(&rational(a, b)).expect("positive");
        let rb = RadicalScalar::sqrt_rational(&rational(b - a, b)).expect("positive");
        stack(&h.scale(&ra), &n.scale(&rb)).expect("same nvars")
    };
    let (i, j, s) = rotation;
    let (i, j) = (i % f.len(), j % f.len());
    if i == j {
        return f;
    }
    apply_linear_map(&f, &rational_rotation(f.len(), i, j, &s)).expect("square matrix")
}

/// τ = 0 ⇔ Δ°F = 0 ⇔ e(φ) = m + 1 for quadratic maps with r = 1.
pub fn quadratic_triple_equivalence(cases: u32) -> Result<(), String> {
    let strategy = (
        3usize..=4,
        0usize..4,
        prop::sample::select(vec![(0i64, 1i64), (1, 4), (1, 2), (3, 4), (1, 1)]),
        (0usize..12, 0usize..12, small_rational()),
    );
    run(cases, strategy, |(nvars, pick, t, rot)| {
        let f = quadratic_map(nvars, pick, t, rot);
        let meta = sphere_restriction_check(&f, KindHint::Homogeneous).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let unit_quadratic = matches!(meta.kind(), MapKind::Homogeneous { degree: 2, radius_sq } if radius_sq.is_one());
        prop_assert!(unit_quadratic);
        let report = classify_with_meta(&f, &meta).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let lap_zero = euclidean_laplacian(&f).is_zero();
        let m = nvars as i64 - 1;
        let energy_ok = energy_density(&f, &meta) == Polynomial::constant(nvars, RadicalScalar::from_integer(m + 1));
        prop_assert_eq!(report.is_harmonic, lap_zero);
        prop_assert_eq!(report.is_harmonic, energy_ok);
        prop_assert_eq!(report.is_harmonic, t.0 == t.1);
        Ok(())
    })
}

pub fn harmonic_implies_biharmonic(cases: u32) -> Result<(), String> {
    run(cases, any::<u64>(), |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, meta, name) = random_sphere_map(&mut rng).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let r = classify_with_meta(&f, &meta).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(r.route_agreement, "{}", name);
        prop_assert!(!r.is_harmonic || r.is_biharmonic, "{}", name);
        Ok(())
    })
}

/// Indices `(i, j)` of a coordinate plane inside one component block, so
/// that rotating it keeps the map's kind.
fn block_plane(meta: &biharmonic::maps::SphereMapMeta, len: usize, a: usize, b: usize) -> Option<(usize, usize)> {
    let (lo, hi) = match meta.kind() {
        MapKind::Homogeneous { .. } => (0, len),
        MapKind::Diagonal { split, .. } | MapKind::Product { split, .. } => {
            if a.is_multiple_of(2) && *split >= 2 {
                (0, *split)
            } else {
                (*split, len)
            }
        }
    };
    let width = hi - lo;
    if width < 2 {
        return None;
    }
    let (i, j) = (lo + a % width, lo + b % width);
    (i != j).then_some((i, j))
}

/// τ(A∘F) = A·τ(F) and τ₂(A∘F) = A·τ₂(F) for orthogonal `A`.
pub fn equivariance(cases: u32) -> Result<(), String> {
    run(cases, (any::<u64>(), 0usize..16, 0usize..16, small_rational()), |(seed, a, b, t)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, meta, name) = random_sphere_map(&mut rng).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let Some((i, j)) = block_plane(&meta, f.len(), a, b) else {
            return Ok(());
        };
        let rot = rational_rotation(f.len(), i, j, &t);
        let af = apply_linear_map(&f, &rot).expect("square matrix");
        let hint = match meta.kind() {
            MapKind::Homogeneous { .. } => KindHint::Homogeneous,
            MapKind::Diagonal { split, .. } => KindHint::Diagonal { split: Some(*split) },
            MapKind::Product { m1, split, .. } => KindHint::Product {
                first_block: Some(m1 + 1),
                split: Some(*split),
            },
        };
        let ameta = sphere_restriction_check(&af, hint).map_err(|e| TestCaseError::fail(format!("{name}: {e}")))?;
        let r = classify_with_meta(&f, &meta).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let ar = classify_with_meta(&af, &ameta).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(&ar.tension, &apply_linear_map(&r.tension, &rot).expect("square"), "{}", name);
        prop_assert_eq!(&ar.bitension, &apply_linear_map(&r.bitension, &rot).expect("square"), "{}", name);
        Ok(())
    })
}
