use biharmonic::constructors::{
    circle_harmonics, cck_degree3, diagonal_sum, final_example_map, named_form, product_map,
    quadratic_example_f1, quartic_example_f2, radial_multiple, stack, veronese, x_times_g,
};
use biharmonic::fields::*;
use biharmonic::maps::{
    euclidean_laplacian, grad_norm_squared, push_gradient, sphere_restriction_check, Domain, KindHint, MapKind,
    PolyMap, SphereMapMeta,
};
use biharmonic::polyalg::{rational, Polynomial, RadicalScalar};
use biharmonic::Error;

fn q(n: i64, d: i64) -> RadicalScalar {
    RadicalScalar::from_ratio(n, d)
}

fn meta(f: &PolyMap) -> SphereMapMeta {
    sphere_restriction_check(f, KindHint::Auto).unwrap()
}

fn hom(f: &PolyMap) -> SphereMapMeta {
    sphere_restriction_check(f, KindHint::Homogeneous).unwrap()
}

fn diag(f: &PolyMap, split: usize) -> SphereMapMeta {
    sphere_restriction_check(f, KindHint::Diagonal { split: Some(split) }).unwrap()
}

fn sphere_nf(f: &PolyMap) -> PolyMap {
    Domain::sphere(f.nvars()).reduce_map(f)
}

/// `(a·Φ₁, b·Φ₂)` for a split map.
fn blockwise(f: &PolyMap, split: usize, a: &RadicalScalar, b: &RadicalScalar) -> PolyMap {
    let (f1, f2) = f.split_at(split);
    f1.scale(a).concat(&f2.scale(b)).unwrap()
}

#[test]
fn veronese_is_harmonic_with_expected_worksheet() {
    let f = veronese();
    let m = hom(&f);
    assert!(tension_homogeneous(&f, &m).unwrap().is_zero());
    assert!(tension_general(&f, &m).unwrap().is_zero());
    assert!(bitension_homogeneous(&f, &m).unwrap().is_zero());
    let (b, ws) = bitension_general(&f, &m).unwrap();
    assert!(b.is_zero());
    assert_eq!(ws.tau, sphere_nf(&f.scale(&q(-6, 1))));
    assert_eq!(ws.tau_norm_sq, Polynomial::constant(3, q(36, 1)));
    assert_eq!(ws.dphi_norm_sq, Polynomial::constant(3, q(6, 1)));
}

#[test]
fn radial_multiples_of_identity_are_harmonic() {
    for p in 1..=3 {
        let f = radial_multiple(&PolyMap::identity(3), p);
        let m = hom(&f);
        assert!(tension_homogeneous(&f, &m).unwrap().is_zero());
        assert!(tension_general(&f, &m).unwrap().is_zero());
        // Δ°F̃ = −2p(2p+3)Φ̃ and |d°F̃|² = 4p²+4p+3 on S²
        let pi = i64::from(p);
        let lap = sphere_nf(&euclidean_laplacian(&f));
        assert_eq!(lap, sphere_nf(&f.scale(&q(-2 * pi * (2 * pi + 3), 1))));
        let energy = Domain::sphere(3).reduce(&grad_norm_squared(&f));
        assert_eq!(energy, Polynomial::constant(3, q(4 * pi * pi + 4 * pi + 3, 1)));
    }
}

#[test]
fn x_times_circle_harmonic_is_proper_biharmonic() {
    for k in 1..=4 {
        let f = x_times_g(&circle_harmonics(k)).unwrap();
        let m = hom(&f);
        assert_eq!(m.dim(), 1);
        let tau = tension_homogeneous(&f, &m).unwrap();
        let expected = sphere_nf(
            &euclidean_laplacian(&f)
                .scale(&q(-1, 1))
                .sub(&f.scale(&q(2 * i64::from(k), 1))),
        );
        assert_eq!(tau, expected, "k = {k}");
        assert!(!tau.is_zero());
        assert!(bitension_homogeneous(&f, &m).unwrap().is_zero(), "k = {k}");
        assert!(bitension_general(&f, &m).unwrap().0.is_zero(), "k = {k}");
    }
}

#[test]
fn x_times_veronese_is_not_biharmonic() {
    let f = x_times_g(&veronese()).unwrap();
    let m = hom(&f);
    let b = bitension_homogeneous(&f, &m).unwrap();
    assert!(!b.is_zero());
    assert_eq!(b, bitension_general(&f, &m).unwrap().0);
}

#[test]
fn x_times_harmonic_energy_and_laplacian() {
    // |d°F|² = (m+2k+1+k(m+2k−1))|x̄|^{2k} and Δ°F = −2(∂G/∂xⁱ)ᵢ
    for (g, m, k) in [(circle_harmonics(2), 1i64, 2u32), (circle_harmonics(3), 1, 3), (veronese(), 2, 2)] {
        let f = x_times_g(&g).unwrap();
        let ki = i64::from(k);
        let c = m + 2 * ki + 1 + ki * (m + 2 * ki - 1);
        let n = g.nvars();
        assert_eq!(grad_norm_squared(&f), Polynomial::radius_squared(n).pow(k).scale_int(c));
        let partials: Vec<Polynomial> = (0..n)
            .flat_map(|i| {
                g.components()
                    .iter()
                    .map(move |p| p.partial_derivative(i).unwrap().scale_int(-2))
            })
            .collect();
        assert_eq!(euclidean_laplacian(&f), PolyMap::new(partials).unwrap());
    }
}

#[test]
fn wrong_kind_is_reported() {
    let (f, m) = diagonal_sum(&circle_harmonics(1), &circle_harmonics(2), &q(1, 2)).unwrap();
    assert!(matches!(tension_homogeneous(&f, &m), Err(Error::WrongKind { .. })));
    let v = veronese();
    assert!(matches!(tension_diagonal(&v, &hom(&v)), Err(Error::WrongKind { .. })));
    let (p, pm) = product_map(&circle_harmonics(1), &circle_harmonics(2), &q(1, 2)).unwrap();
    assert!(matches!(tension_general(&p, &pm), Err(Error::WrongKind { .. })));
    assert!(matches!(bitension_general(&p, &pm), Err(Error::WrongKind { .. })));
}

#[test]
fn equal_degree_diagonals_are_harmonic() {
    for k in 1..=4 {
        for r in [q(1, 4), q(1, 2), q(3, 4)] {
            let g = circle_harmonics(k);
            let (f, m) = diagonal_sum(&g, &g, &r).unwrap();
            assert!(tension_diagonal(&f, &m).unwrap().is_zero());
            assert!(tension_general(&f, &m).unwrap().is_zero());
        }
    }
}

#[test]
fn mixed_example_intermediates() {
    let f1 = quadratic_example_f1();
    let f2 = quartic_example_f2();
    let r2 = Polynomial::radius_squared(4);
    assert_eq!(grad_norm_squared(&f1), r2.scale_int(7));
    assert_eq!(grad_norm_squared(&f2), r2.pow(3).scale_int(4));
    let s = RadicalScalar::term(rational(4, 2), 2);
    let lap1 = sphere_nf(&euclidean_laplacian(&f1));
    let z = RadicalScalar::zero();
    let expected = PolyMap::new(
        [z.clone(), z, s.clone(), -s]
            .into_iter()
            .map(|c| Polynomial::constant(4, c))
            .collect(),
    )
    .unwrap();
    assert_eq!(lap1, expected);
    assert!(euclidean_laplacian(&euclidean_laplacian(&f1)).is_zero());
    let lap2 = euclidean_laplacian(&f2);
    assert_eq!(sphere_nf(&lap2).components()[0], Polynomial::constant(4, q(-12, 1)));
    assert_eq!(
        sphere_nf(&euclidean_laplacian(&lap2)).components()[0],
        Polynomial::constant(4, q(96, 1))
    );
    // d°F(grad°|d°F|²) = 76(F₁, 1) on S³
    let f = stack(&f1, &f2).unwrap();
    let push = sphere_nf(&push_gradient(&f, &grad_norm_squared(&f)).unwrap());
    let ones = PolyMap::new(vec![Polynomial::one(4)]).unwrap();
    assert_eq!(push, sphere_nf(&f1.concat(&ones).unwrap().scale(&q(76, 1))));
}

#[test]
fn mixed_example_is_proper_biharmonic() {
    let f1 = quadratic_example_f1();
    let f = stack(&f1, &quartic_example_f2()).unwrap();
    let m = diag(&f, 4);
    assert_eq!(
        m.kind(),
        &MapKind::Diagonal {
            k1: 2,
            k2: 4,
            r1_sq: q(3, 4),
            r2_sq: q(1, 4),
            split: 4
        }
    );
    let tau = tension_diagonal(&f, &m).unwrap();
    assert_eq!(tau, tension_general(&f, &m).unwrap());
    // (0, 0, −4/√2, 4/√2, 12) − (4F₁, 10)
    let s = RadicalScalar::term(rational(4, 2), 2);
    let z = RadicalScalar::zero();
    let shift = PolyMap::new(
        [z.clone(), z, -s.clone(), s, q(12, 1)]
            .into_iter()
            .map(|c| Polynomial::constant(4, c))
            .collect(),
    )
    .unwrap();
    let ten = PolyMap::new(vec![Polynomial::constant(4, q(10, 1))]).unwrap();
    let expected = sphere_nf(&shift.sub(&f1.scale(&q(4, 1)).concat(&ten).unwrap()));
    assert_eq!(tau, expected);
    assert!(bitension_diagonal(&f, &m).unwrap().is_zero());
    assert!(bitension_general(&f, &m).unwrap().0.is_zero());
    let report = classify(&f).unwrap();
    assert!(report.is_proper_biharmonic && report.route_agreement);
}

#[test]
fn harmonic_factor_diagonal_tension() {
    // For harmonic F₁, F₂ of degrees k₁ ≠ k₂:
    // τ = (k₂−k₁)(m+k₁+k₂−1)·(r₂²Φ₁, −r₁²Φ₂)
    let cases = [
        (circle_harmonics(1), circle_harmonics(2)),
        (circle_harmonics(3), circle_harmonics(1)),
        (veronese(), cck_degree3()),
        (PolyMap::identity(3), veronese()),
    ];
    for (g1, g2) in cases {
        let k1 = i64::from(hom(&g1).kind().clone().degree());
        let k2 = i64::from(hom(&g2).kind().clone().degree());
        let mdim = g1.nvars() as i64 - 1;
        for (a, b) in [(1, 4), (1, 2), (3, 4)] {
            let (f, m) = diagonal_sum(&g1, &g2, &q(a, b)).unwrap();
            let c = (k2 - k1) * (mdim + k1 + k2 - 1);
            let expected = sphere_nf(&blockwise(&f, g1.len(), &q(c * (b - a), b), &q(-c * a, b)));
            assert_eq!(tension_diagonal(&f, &m).unwrap(), expected);
            assert_eq!(tension_general(&f, &m).unwrap(), expected);
        }
    }
}

trait Degree {
    fn degree(self) -> u32;
}

impl Degree for MapKind {
    fn degree(self) -> u32 {
        match self {
            MapKind::Homogeneous { degree, .. } => degree,
            _ => panic!("not homogeneous"),
        }
    }
}

#[test]
fn veronese_cck_bitension() {
    for (a, b) in [(1, 4), (1, 2), (3, 4), (2, 3)] {
        let (f, m) = diagonal_sum(&veronese(), &cck_degree3(), &q(a, b)).unwrap();
        let bit = bitension_diagonal(&f, &m).unwrap();
        // (2r₁²−1)(k₁−k₂)²(m+k₁+k₂−1)²((r₁²−1)Φ₁, r₁²Φ₂) with m=2, k₁=2, k₂=3
        let c = q(36 * (2 * a - b), b);
        let expected = sphere_nf(&blockwise(&f, 5, &(&c * &q(a - b, b)), &(&c * &q(a, b))));
        assert_eq!(bit, expected, "r₁² = {a}/{b}");
        assert_eq!(bitension_general(&f, &m).unwrap().0, expected);
        // The printed value 12(1−2r₁²)(F₁, −2F₂) agrees only where both vanish
        // or at r₁² = 2/3.
        let c = q(12 * (b - 2 * a), b);
        let printed = sphere_nf(&blockwise(&f, 5, &c, &(&c * &q(-2, 1))));
        assert_eq!(bit == printed, 2 * a == b || 3 * a == 2 * b, "r₁² = {a}/{b}");
        // d°F(grad°|d°F|²) = 2(10r₁²+42r₂²)(2F₁, 3F₂)
        let w = q(2 * (10 * a + 42 * (b - a)), b);
        let push = sphere_nf(&push_gradient(&f, &grad_norm_squared(&f)).unwrap());
        assert_eq!(push, sphere_nf(&blockwise(&f, 5, &(&w * &q(2, 1)), &(&w * &q(3, 1)))));
    }
}

#[test]
fn circle_diagonal_bitension_values() {
    let g1 = circle_harmonics(1);
    let g2 = circle_harmonics(2);
    let (f, m) = diagonal_sum(&g1, &g2, &q(1, 2)).unwrap();
    assert!(bitension_diagonal(&f, &m).unwrap().is_zero());
    let (f, m) = diagonal_sum(&g1, &g2, &q(3, 4)).unwrap();
    let expected = sphere_nf(&blockwise(&f, 2, &q(-9, 8), &q(27, 8)));
    assert_eq!(bitension_diagonal(&f, &m).unwrap(), expected);
    assert_eq!(bitension_general(&f, &m).unwrap().0, expected);
}

#[test]
fn diagonal_bitension_terms_sum_to_total() {
    let (f, m) = diagonal_sum(&veronese(), &cck_degree3(), &q(1, 4)).unwrap();
    let terms = bitension_diagonal_terms(&f, &m).unwrap();
    assert_eq!(terms.len(), 6);
    assert_eq!(sum_terms(&f, &terms), bitension_diagonal_raw(&f, &m).unwrap());
    let h = hom(&veronese());
    assert_eq!(bitension_homogeneous_terms(&veronese(), &h).unwrap().len(), 4);
}

#[test]
fn products_of_harmonic_factors() {
    // k₁(m₁+k₁−1) = 2·3 = 1·6 = k₂(m₂+k₂−1)
    for (a, b) in [(1, 4), (1, 2), (3, 4)] {
        let (f, m) = product_map(&veronese(), &PolyMap::identity(7), &q(a, b)).unwrap();
        assert!(tension_product(&f, &m).unwrap().is_zero());
        let report = classify(&f).unwrap();
        assert!(report.is_harmonic);
    }
    let (f, m) = product_map(&circle_harmonics(1), &circle_harmonics(2), &q(1, 2)).unwrap();
    let tau = tension_product(&f, &m).unwrap();
    assert!(!tau.is_zero());
    assert!(bitension_product(&f, &m).unwrap().is_zero());
    let domain = m.domain();
    assert_eq!(tau, tension_on_domain(&f, &domain, &RadicalScalar::one()).unwrap());
    assert!(bitension_on_domain(&f, &domain, &RadicalScalar::one()).unwrap().0.is_zero());
    let report = classify(&f).unwrap();
    assert!(report.is_proper_biharmonic && report.route_agreement);
    assert_eq!(report.routes.len(), 2);
}

fn r_half(a: i64, b: i64) -> bool {
    2 * a == b
}

#[test]
fn product_closed_forms_match_domain_route() {
    for (k1, k2) in [(1, 2), (2, 3), (3, 1)] {
        for (a, b) in [(1, 4), (1, 2), (3, 4)] {
            let (f, m) = product_map(&circle_harmonics(k1), &circle_harmonics(k2), &q(a, b)).unwrap();
            let domain = m.domain();
            let one = RadicalScalar::one();
            let tau = tension_product(&f, &m).unwrap();
            assert_eq!(tau, tension_on_domain(&f, &domain, &one).unwrap());
            let bit = bitension_product(&f, &m).unwrap();
            assert_eq!(bit, bitension_on_domain(&f, &domain, &one).unwrap().0);
            // (2r₁²−1)(e₁−e₂)·τ with eᵢ = kᵢ²
            let gap = i64::from(k1 * k1) - i64::from(k2 * k2);
            assert_eq!(bit, tau.scale(&q((2 * a - b) * gap, b)));
            if r_half(a, b) {
                assert!(bit.is_zero());
            }
        }
    }
}

#[test]
fn non_harmonic_factors_are_rejected() {
    let xg = x_times_g(&circle_harmonics(1)).unwrap();
    let (f, m) = product_map(&xg, &circle_harmonics(1), &q(1, 2)).unwrap();
    assert!(matches!(tension_product(&f, &m), Err(Error::FactorsNotHarmonic)));
    let report = classify(&f).unwrap();
    assert_eq!(report.routes.len(), 1);
    assert_eq!(report.routes[0].name, "general");
}

#[test]
fn classification_examples() {
    let g1 = circle_harmonics(1);
    let g2 = circle_harmonics(2);
    let (f, _) = diagonal_sum(&g1, &g2, &q(1, 2)).unwrap();
    let r = classify(&f).unwrap();
    assert!(r.is_proper_biharmonic && r.route_agreement);
    let (f, _) = diagonal_sum(&g1, &g2, &q(1, 4)).unwrap();
    let r = classify(&f).unwrap();
    assert!(!r.is_harmonic && !r.is_biharmonic && !r.is_proper_biharmonic);
    let r = classify(&veronese()).unwrap();
    assert!(r.is_harmonic && r.is_biharmonic && !r.is_proper_biharmonic);
    assert_eq!(r.energy, Polynomial::constant(3, q(3, 1)));
    let bad = PolyMap::new(vec![Polynomial::var(2, 0), Polynomial::var(2, 1).pow(2)]).unwrap();
    assert!(matches!(classify(&bad), Err(Error::NotASphereMap(_))));
}

#[test]
fn equal_degree_diagonal_also_runs_homogeneous_route() {
    let g = circle_harmonics(2);
    let (f, _) = diagonal_sum(&g, &g, &q(1, 4)).unwrap();
    let r = classify(&f).unwrap();
    assert!(matches!(r.meta.kind(), MapKind::Homogeneous { .. }));
    let names: Vec<_> = r.routes.iter().map(|r| r.name).collect();
    assert_eq!(names, ["homogeneous", "general", "diagonal"]);
    assert!(r.route_agreement && r.is_harmonic);
}

#[test]
fn quadratic_identity_values() {
    let f = quadratic_example_f1();
    let (got, expected) = quadratic_identity_check(&f, &hom(&f)).unwrap();
    assert_eq!(expected, q(72, 1));
    assert_eq!(got, Polynomial::constant(4, q(72, 1)));
    let v = veronese();
    let (got, expected) = quadratic_identity_check(&v, &hom(&v)).unwrap();
    assert_eq!(expected, q(60, 1));
    assert_eq!(got, Polynomial::constant(3, q(60, 1)));
    let g = circle_harmonics(2);
    let (got, expected) = quadratic_identity_check(&g, &hom(&g)).unwrap();
    assert_eq!(expected, q(32, 1));
    assert_eq!(got, Polynomial::constant(2, q(32, 1)));
    let c = cck_degree3();
    assert!(matches!(quadratic_identity_check(&c, &hom(&c)), Err(Error::WrongKind { .. })));
}

#[test]
fn harmonic_identity_values() {
    for r in [q(1, 1), q(1, 4), q(3, 4)] {
        let root = RadicalScalar::sqrt_rational(&r.as_rational().unwrap()).unwrap();
        let c = cck_degree3().scale(&root);
        let rep = harmonic_identities_check(&c, &hom(&c)).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.combined, Polynomial::constant(3, &r * &q(420, 1)));
    }
    for k in 1..=6 {
        let g = circle_harmonics(k);
        let rep = harmonic_identities_check(&g, &hom(&g)).unwrap();
        assert!(rep.holds(), "k = {k}");
        let ki = i64::from(k);
        let hess = Polynomial::constant(2, q(4 * ki * ki * (ki - 1) * (ki - 1), 1));
        assert_eq!(rep.hessian_norm_sq, hess);
        if k == 1 {
            assert!(rep.laplacian_energy.is_zero() && rep.hessian_norm_sq.is_zero());
        }
    }
    let f = quadratic_example_f1();
    assert!(matches!(harmonic_identities_check(&f, &hom(&f)), Err(Error::NotHarmonicForm)));
}

#[test]
fn minimal_representatives() {
    let id = PolyMap::identity(3);
    assert_eq!(minimality_check(&radial_multiple(&id, 3)).unwrap(), (id, 3));
    let v = veronese();
    assert_eq!(minimality_check(&v).unwrap(), (v, 0));
    let x = Polynomial::var(2, 0);
    let y = Polynomial::var(2, 1);
    let r = Polynomial::radius_squared(2);
    let f = PolyMap::new(vec![&x * &r, &y * &r]).unwrap();
    assert_eq!(minimality_check(&f).unwrap(), (PolyMap::identity(2), 1));
    assert!(matches!(minimality_check(&PolyMap::zeros(2, 2)), Err(Error::ZeroMap)));
}

fn axis(n: usize, i: usize) -> Vec<RadicalScalar> {
    (0..n)
        .map(|j| if i == j { RadicalScalar::one() } else { RadicalScalar::zero() })
        .collect()
}

#[test]
fn small_hypersphere_slices() {
    let f = final_example_map();
    assert_eq!(
        small_hypersphere_check(&f, &axis(5, 3)).unwrap(),
        Some(RadicalScalar::term(rational(1, 2), 2))
    );
    assert_eq!(small_hypersphere_check(&f, &axis(5, 4)).unwrap(), Some(RadicalScalar::zero()));
    assert_eq!(small_hypersphere_check(&f, &axis(5, 0)).unwrap(), None);
    let v = veronese();
    for i in 0..5 {
        assert_eq!(small_hypersphere_check(&v, &axis(5, i)).unwrap(), None);
    }
    assert!(small_hypersphere_check(&v, &vec![q(1, 1); 5]).is_err());
    let r = classify(&f).unwrap();
    assert!(r.is_proper_biharmonic && r.route_agreement);
}

#[test]
fn gallery_maps_agree_across_routes() {
    for name in ["veronese", "cck3", "quad-f1", "quart-f2", "final-map", "mixed"] {
        let e = named_form(name).unwrap();
        let r = classify_with_meta(&e.map, &e.meta).unwrap();
        assert!(r.route_agreement, "{name}");
        assert!(r.routes.len() >= 2, "{name}");
        assert!(!r.is_harmonic || r.is_biharmonic, "{name}");
    }
    let _ = meta(&veronese());
}
