//! The battery of exact checks behind `verify-paper`.
//!
//! Checks run in parallel and are reported in declaration order.

use rayon::prelude::*;

use crate::constructors::{
    cck_degree3, circle_harmonics, diagonal_sum, final_example_map, product_map, quadratic_example_f1,
    quartic_example_f2, radial_multiple, stack, veronese, x_times_g,
};
use crate::error::Result;
use crate::fields::{
    bitension_general, classify, classify_with_meta, harmonic_identities_check, quadratic_identity_check,
    small_hypersphere_check,
};
use crate::maps::{
    euclidean_laplacian, grad_norm_squared, hessian_norm_squared, push_gradient, sphere_restriction_check, Domain, KindHint, PolyMap,
};
use crate::polyalg::{rational, Polynomial, RadicalScalar};

/// One line of the verify-paper report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub expected: &'static str,
    pub got: String,
    pub passed: bool,
}

impl std::fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} expected: {} got: {}", self.id, self.expected, self.got)
    }
}

struct Check {
    id: &'static str,
    expected: &'static str,
    run: fn() -> Result<(String, bool)>,
}

fn q(n: i64, d: i64) -> RadicalScalar {
    RadicalScalar::from_ratio(n, d)
}

fn sphere_nf(f: &PolyMap) -> PolyMap {
    Domain::sphere(f.nvars()).reduce_map(f)
}

fn constant_map(nvars: usize, values: Vec<RadicalScalar>) -> PolyMap {
    PolyMap::new(values.into_iter().map(|c| Polynomial::constant(nvars, c)).collect()).expect("non-empty")
}

fn blockwise(f: &PolyMap, split: usize, a: &RadicalScalar, b: &RadicalScalar) -> PolyMap {
    let (f1, f2) = f.split_at(split);
    f1.scale(a).concat(&f2.scale(b)).expect("same variables")
}

fn equal_poly(got: &Polynomial, want: &Polynomial) -> (String, bool) {
    (got.to_string(), got == want)
}

fn equal_map(got: &PolyMap, want: &PolyMap) -> (String, bool) {
    (got.to_string(), got == want)
}

fn all(parts: Vec<(String, bool)>) -> (String, bool) {
    let passed = parts.iter().all(|(_, p)| *p);
    let text = parts.into_iter().map(|(s, _)| s).collect::<Vec<_>>().join("; ");
    (text, passed)
}

const RADII: [(i64, i64); 3] = [(1, 4), (1, 2), (3, 4)];

fn veronese_tension() -> Result<(String, bool)> {
    let r = classify(&veronese())?;
    Ok((
        format!("tau = {}, routes agree: {}", r.tension, r.route_agreement),
        r.tension.is_zero() && r.route_agreement,
    ))
}

fn veronese_worksheet() -> Result<(String, bool)> {
    let f = veronese();
    let meta = sphere_restriction_check(&f, KindHint::Homogeneous)?;
    let (_, ws) = bitension_general(&f, &meta)?;
    let want_tau = sphere_nf(&f.scale(&q(-6, 1)));
    Ok((
        format!(
            "tau(Phi) = {}, |tau(Phi)|^2 = {}, |dPhi|^2 = {}",
            ws.tau, ws.tau_norm_sq, ws.dphi_norm_sq
        ),
        ws.tau == want_tau
            && ws.tau_norm_sq == Polynomial::constant(3, q(36, 1))
            && ws.dphi_norm_sq == Polynomial::constant(3, q(6, 1)),
    ))
}

fn veronese_energy_gradient() -> Result<(String, bool)> {
    Ok(equal_poly(
        &grad_norm_squared(&veronese()),
        &Polynomial::radius_squared(3).scale_int(10),
    ))
}

fn circle_energy_gradient() -> Result<(String, bool)> {
    Ok(all((1..=8)
        .map(|k| {
            let want = Polynomial::radius_squared(2).pow(k - 1).scale_int(2 * i64::from(k * k));
            let got = grad_norm_squared(&circle_harmonics(k));
            (format!("k={k}: {got}"), got == want)
        })
        .collect()))
}

fn quad_f1_energy_gradient() -> Result<(String, bool)> {
    Ok(equal_poly(
        &grad_norm_squared(&quadratic_example_f1()),
        &Polynomial::radius_squared(4).scale_int(7),
    ))
}

fn quart_f2_energy_gradient() -> Result<(String, bool)> {
    Ok(equal_poly(
        &grad_norm_squared(&quartic_example_f2()),
        &Polynomial::radius_squared(4).pow(3).scale_int(4),
    ))
}

fn quart_f2_laplacians() -> Result<(String, bool)> {
    let lap = euclidean_laplacian(&quartic_example_f2());
    let once = sphere_nf(&lap);
    let twice = sphere_nf(&euclidean_laplacian(&lap));
    Ok(all(vec![
        equal_map(&once, &constant_map(4, vec![q(-12, 1)])),
        equal_map(&twice, &constant_map(4, vec![q(96, 1)])),
    ]))
}

fn quadratic_identity(f: PolyMap, want: i64) -> Result<(String, bool)> {
    let meta = sphere_restriction_check(&f, KindHint::Homogeneous)?;
    let (got, expected) = quadratic_identity_check(&f, &meta)?;
    Ok((
        got.to_string(),
        expected == q(want, 1) && got == Polynomial::constant(f.nvars(), q(want, 1)),
    ))
}

fn quadratic_identity_f1() -> Result<(String, bool)> {
    quadratic_identity(quadratic_example_f1(), 72)
}

fn quadratic_identity_veronese() -> Result<(String, bool)> {
    quadratic_identity(veronese(), 60)
}

fn cck_harmonic_identity() -> Result<(String, bool)> {
    let mut parts = Vec::new();
    for (a, b) in [(1, 1), RADII[0], RADII[2]] {
        let r2 = q(a, b);
        let root = RadicalScalar::sqrt_rational(&rational(a, b)).expect("rational root");
        let f = cck_degree3().scale(&root);
        let meta = sphere_restriction_check(&f, KindHint::Homogeneous)?;
        let rep = harmonic_identities_check(&f, &meta)?;
        let want = Polynomial::constant(3, &r2 * &q(420, 1));
        parts.push((format!("r^2={r2}: {}", rep.combined), rep.combined == want && rep.holds()));
    }
    Ok(all(parts))
}

fn mixed_map() -> Result<PolyMap> {
    stack(&quadratic_example_f1(), &quartic_example_f2())
}

fn mixed_proper_biharmonic() -> Result<(String, bool)> {
    let f = mixed_map()?;
    let meta = sphere_restriction_check(&f, KindHint::Diagonal { split: Some(4) })?;
    let r = classify_with_meta(&f, &meta)?;
    Ok((
        format!(
            "tau zero: {}, tau2 = {}, routes agree: {}",
            r.is_harmonic, r.bitension, r.route_agreement
        ),
        r.is_proper_biharmonic && r.route_agreement,
    ))
}

fn mixed_tension() -> Result<(String, bool)> {
    let f1 = quadratic_example_f1();
    let f = mixed_map()?;
    let meta = sphere_restriction_check(&f, KindHint::Diagonal { split: Some(4) })?;
    let r = classify_with_meta(&f, &meta)?;
    let s = RadicalScalar::term(rational(2, 1), 2);
    let z = RadicalScalar::zero();
    let shift = constant_map(4, vec![z.clone(), z, -s.clone(), s, q(12, 1)]);
    let tail = constant_map(4, vec![q(10, 1)]);
    let want = sphere_nf(&shift.sub(&f1.scale(&q(4, 1)).concat(&tail)?));
    Ok(equal_map(&r.tension, &want))
}

fn mixed_push_gradient() -> Result<(String, bool)> {
    let f = mixed_map()?;
    let got = sphere_nf(&push_gradient(&f, &grad_norm_squared(&f))?);
    let ones = constant_map(4, vec![q(1, 1)]);
    let want = sphere_nf(&quadratic_example_f1().concat(&ones)?.scale(&q(76, 1)));
    Ok(equal_map(&got, &want))
}

/// Bitension of Veronese ⊕ CCK compared against `law(r₁² = a/b)` as a
/// pair of block coefficients.
fn veronese_cck(law: fn(i64, i64) -> (RadicalScalar, RadicalScalar)) -> Result<(String, bool)> {
    let mut parts = Vec::new();
    for (a, b) in RADII {
        let (f, meta) = diagonal_sum(&veronese(), &cck_degree3(), &q(a, b))?;
        let r = classify_with_meta(&f, &meta)?;
        let (c1, c2) = law(a, b);
        let want = sphere_nf(&blockwise(&f, 5, &c1, &c2));
        parts.push((
            format!("r1^2={a}/{b}: ({}, {})", r.bitension.components()[0], r.bitension.components()[5]),
            r.bitension == want && r.route_agreement,
        ));
    }
    Ok(all(parts))
}

fn veronese_cck_printed() -> Result<(String, bool)> {
    veronese_cck(|a, b| {
        let c = q(12 * (b - 2 * a), b);
        (c.clone(), &c * &q(-2, 1))
    })
}

fn veronese_cck_harmonic_law() -> Result<(String, bool)> {
    veronese_cck(|a, b| {
        let c = q(36 * (2 * a - b), b);
        (&c * &q(a - b, b), &c * &q(a, b))
    })
}

fn veronese_cck_push_gradient() -> Result<(String, bool)> {
    let mut parts = Vec::new();
    for (a, b) in RADII {
        let (f, _) = diagonal_sum(&veronese(), &cck_degree3(), &q(a, b))?;
        let w = q(2 * (10 * a + 42 * (b - a)), b);
        let got = sphere_nf(&push_gradient(&f, &grad_norm_squared(&f))?);
        let want = sphere_nf(&blockwise(&f, 5, &(&w * &q(2, 1)), &(&w * &q(3, 1))));
        parts.push((format!("r1^2={a}/{b}: {}", got == want), got == want));
    }
    Ok(all(parts))
}

fn x_times_circle_family() -> Result<(String, bool)> {
    let mut parts = Vec::new();
    for k in 1..=4 {
        let r = classify(&x_times_g(&circle_harmonics(k))?)?;
        parts.push((
            format!("k={k}: tau zero {}, tau2 zero {}", r.is_harmonic, r.is_biharmonic),
            r.is_proper_biharmonic && r.route_agreement,
        ));
    }
    Ok(all(parts))
}

fn x_times_circle_hessian() -> Result<(String, bool)> {
    let mut parts = Vec::new();
    for (k, want) in [(1u32, 12i64), (2, 96)] {
        let f = x_times_g(&circle_harmonics(k))?;
        let got = Domain::sphere(2).reduce(&hessian_norm_squared(&f));
        parts.push((format!("k={k}: {got}"), got == Polynomial::constant(2, q(want, 1))));
    }
    Ok(all(parts))
}

fn x_times_harmonic_push_gradient() -> Result<(String, bool)> {
    let mut parts = Vec::new();
    let cases = [
        ("circle:1", circle_harmonics(1), 1i64, 1i64),
        ("circle:2", circle_harmonics(2), 1, 2),
        ("circle:3", circle_harmonics(3), 1, 3),
        ("veronese", veronese(), 2, 2),
    ];
    for (name, g, m, k) in cases {
        let f = x_times_g(&g)?;
        let got = sphere_nf(&push_gradient(&f, &grad_norm_squared(&f))?);
        let c = 2 * k * (k + 1) * (m + 2 * k + 1 + k * (m + 2 * k - 1));
        let want = sphere_nf(&f.scale(&q(c, 1)));
        parts.push((format!("{name}: {}", got == want), got == want));
    }
    Ok(all(parts))
}

fn x_times_veronese() -> Result<(String, bool)> {
    let r = classify(&x_times_g(&veronese())?)?;
    Ok((
        format!("tau2 zero: {}", r.is_biharmonic),
        !r.is_biharmonic && r.route_agreement,
    ))
}

fn radial_identity() -> Result<(String, bool)> {
    let mut parts = Vec::new();
    for p in 1..=3i64 {
        let f = radial_multiple(&PolyMap::identity(3), p as u32);
        let r = classify(&f)?;
        let lap = sphere_nf(&euclidean_laplacian(&f));
        let want_lap = sphere_nf(&f.scale(&q(-2 * p * (2 * p + 3), 1)));
        let energy = Domain::sphere(3).reduce(&grad_norm_squared(&f));
        let want_energy = Polynomial::constant(3, q(4 * p * p + 4 * p + 3, 1));
        parts.push((
            format!("p={p}: harmonic {}, |dF|^2 = {energy}", r.is_harmonic),
            r.is_harmonic && lap == want_lap && energy == want_energy,
        ));
    }
    Ok(all(parts))
}

fn circle_diagonal_grid() -> Result<(String, bool)> {
    let mut mismatches = 0;
    let mut cases = 0;
    for k1 in 1..=4 {
        for k2 in 1..=4 {
            for (a, b) in RADII {
                let (f, meta) = diagonal_sum(&circle_harmonics(k1), &circle_harmonics(k2), &q(a, b))?;
                let r = classify_with_meta(&f, &meta)?;
                let want_proper = 2 * a == b && k1 != k2;
                let want_harmonic = k1 == k2;
                cases += 1;
                if r.is_proper_biharmonic != want_proper
                    || r.is_harmonic != want_harmonic
                    || r.is_biharmonic != (want_proper || want_harmonic)
                    || !r.route_agreement
                {
                    mismatches += 1;
                }
            }
        }
    }
    Ok((format!("{cases} cases, {mismatches} mismatches"), mismatches == 0))
}

fn circle_diagonal_values() -> Result<(String, bool)> {
    let (f, meta) = diagonal_sum(&circle_harmonics(1), &circle_harmonics(2), &q(3, 4))?;
    let r = classify_with_meta(&f, &meta)?;
    Ok(equal_map(&r.bitension, &sphere_nf(&blockwise(&f, 2, &q(-9, 8), &q(27, 8)))))
}

fn circle_product() -> Result<(String, bool)> {
    let (f, meta) = product_map(&circle_harmonics(1), &circle_harmonics(2), &q(1, 2))?;
    let r = classify_with_meta(&f, &meta)?;
    Ok((
        format!("tau zero {}, tau2 zero {}", r.is_harmonic, r.is_biharmonic),
        r.is_proper_biharmonic && r.route_agreement,
    ))
}

fn veronese_identity_product() -> Result<(String, bool)> {
    let mut parts = Vec::new();
    for (a, b) in RADII {
        let (f, meta) = product_map(&veronese(), &PolyMap::identity(7), &q(a, b))?;
        let r = classify_with_meta(&f, &meta)?;
        parts.push((format!("r1^2={a}/{b}: harmonic {}", r.is_harmonic), r.is_harmonic && r.route_agreement));
    }
    Ok(all(parts))
}

fn circle_product_law() -> Result<(String, bool)> {
    let (f, meta) = product_map(&circle_harmonics(1), &circle_harmonics(2), &q(1, 4))?;
    let r = classify_with_meta(&f, &meta)?;
    let want = r.tension.scale(&q(-1, 2));
    Ok((
        format!("tau2 = {}, (2r1^2-1)tau = {}", r.bitension, want),
        r.bitension == want,
    ))
}

fn small_hypersphere() -> Result<(String, bool)> {
    let f = final_example_map();
    let axis = |i: usize| -> Vec<RadicalScalar> {
        (0..5).map(|j| if i == j { q(1, 1) } else { q(0, 1) }).collect()
    };
    let fourth = small_hypersphere_check(&f, &axis(3))?;
    let fifth = small_hypersphere_check(&f, &axis(4))?;
    let r = classify(&f)?;
    Ok((
        format!(
            "4th axis: {:?}, 5th axis: {:?}, proper biharmonic: {}",
            fourth.as_ref().map(ToString::to_string),
            fifth.as_ref().map(ToString::to_string),
            r.is_proper_biharmonic
        ),
        fourth == Some(RadicalScalar::term(rational(1, 2), 2))
            && fifth == Some(RadicalScalar::zero())
            && r.is_proper_biharmonic,
    ))
}

const CHECKS: &[Check] = &[
    Check {
        id: "veronese-tension",
        expected: "tau = 0 on every route",
        run: veronese_tension,
    },
    Check {
        id: "veronese-eigen-worksheet",
        expected: "tau(Phi) = -6 Phi, |tau(Phi)|^2 = 36, |dPhi|^2 = 6",
        run: veronese_worksheet,
    },
    Check {
        id: "veronese-energy-gradient",
        expected: "|dF|^2 = 10|x|^2",
        run: veronese_energy_gradient,
    },
    Check {
        id: "circle-energy-gradient",
        expected: "|dG_k|^2 = 2k^2(x^2+y^2)^(k-1) for k = 1..8",
        run: circle_energy_gradient,
    },
    Check {
        id: "quad-f1-energy-gradient",
        expected: "|dF1|^2 = 7|x|^2",
        run: quad_f1_energy_gradient,
    },
    Check {
        id: "quart-f2-energy-gradient",
        expected: "|dF2|^2 = 4|x|^6",
        run: quart_f2_energy_gradient,
    },
    Check {
        id: "quart-f2-laplacians",
        expected: "Lap F2 = -12 and Lap Lap F2 = 96 on S^3",
        run: quart_f2_laplacians,
    },
    Check {
        id: "quadratic-identity-f1",
        expected: "72 for m=3, r^2=3/4",
        run: quadratic_identity_f1,
    },
    Check {
        id: "quadratic-identity-veronese",
        expected: "60 for m=2, r^2=1",
        run: quadratic_identity_veronese,
    },
    Check {
        id: "cck-harmonic-identity",
        expected: "420 r^2 for r^2 in {1, 1/4, 3/4}",
        run: cck_harmonic_identity,
    },
    Check {
        id: "mixed-example-tension",
        expected: "(0,0,-4/sqrt2,4/sqrt2,12) - (4F1,10)",
        run: mixed_tension,
    },
    Check {
        id: "mixed-example-push-gradient",
        expected: "dF(grad|dF|^2) = 76(F1, 1)",
        run: mixed_push_gradient,
    },
    Check {
        id: "mixed-example-proper-biharmonic",
        expected: "tau2 = 0 and tau != 0",
        run: mixed_proper_biharmonic,
    },
    Check {
        id: "veronese-cck-push-gradient",
        expected: "dF(grad|dF|^2) = 2(10r1^2+42r2^2)(2F1,3F2)",
        run: veronese_cck_push_gradient,
    },
    Check {
        id: "veronese-cck-bitension",
        expected: "12(1-2r1^2)(F1,-2F2) for r1^2 in {1/4,1/2,3/4}",
        run: veronese_cck_printed,
    },
    Check {
        id: "veronese-cck-bitension-harmonic-law",
        expected: "36(2r1^2-1)((r1^2-1)Phi1, r1^2 Phi2) for r1^2 in {1/4,1/2,3/4}",
        run: veronese_cck_harmonic_law,
    },
    Check {
        id: "x-times-circle-family",
        expected: "m=1, k=1..4: tau2 = 0 and tau != 0",
        run: x_times_circle_family,
    },
    Check {
        id: "x-times-circle-hessian",
        expected: "|Hess F|^2 = 8k^2+4k^4 on S^1: 12 for k=1, 96 for k=2",
        run: x_times_circle_hessian,
    },
    Check {
        id: "x-times-harmonic-push-gradient",
        expected: "dF(grad|dF|^2) = 2k(k+1)(m+2k+1+k(m+2k-1)) Phi for circles k=1..3 and the Veronese map",
        run: x_times_harmonic_push_gradient,
    },
    Check {
        id: "x-times-veronese",
        expected: "m=2: tau2 != 0",
        run: x_times_veronese,
    },
    Check {
        id: "radial-identity",
        expected: "harmonic, Lap F = -2p(2p+3)F, |dF|^2 = 4p^2+4p+3 for p=1..3",
        run: radial_identity,
    },
    Check {
        id: "circle-diagonal-grid",
        expected: "48 cases: proper biharmonic iff r1^2=1/2 and k1!=k2, harmonic iff k1=k2",
        run: circle_diagonal_grid,
    },
    Check {
        id: "circle-diagonal-bitension",
        expected: "k1=1, k2=2, r1^2=3/4: (-9/8 Phi1, 27/8 Phi2)",
        run: circle_diagonal_values,
    },
    Check {
        id: "circle-product",
        expected: "circle(1) x circle(2), r1^2=1/2: proper biharmonic",
        run: circle_product,
    },
    Check {
        id: "veronese-identity-product",
        expected: "veronese x identity(S^6): harmonic for r1^2 in {1/4,1/2,3/4}",
        run: veronese_identity_product,
    },
    Check {
        id: "circle-product-law",
        expected: "circle(1) x circle(2), r1^2=1/4: tau2 = (2r1^2-1) tau",
        run: circle_product_law,
    },
    Check {
        id: "small-hypersphere",
        expected: "final map lies in small hyperspheres at heights 1/sqrt2 and 0",
        run: small_hypersphere,
    },
];

/// Identifiers of every check, in report order.
pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

/// Runs every check whose identifier contains `filter`.
pub fn verify_paper(filter: Option<&str>) -> Vec<CheckOutcome> {
    CHECKS
        .par_iter()
        .filter(|c| filter.is_none_or(|f| c.id.contains(f)))
        .map(|c| {
            let (got, passed) = (c.run)().unwrap_or_else(|e| (format!("error: {e}"), false));
            CheckOutcome {
                id: c.id,
                expected: c.expected,
                got,
                passed,
            }
        })
        .collect()
}
