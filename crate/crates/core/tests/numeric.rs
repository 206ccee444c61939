use biharmonic::constructors::{cck_degree3, circle_harmonics, diagonal_sum, veronese, x_times_g};
use biharmonic::fields::classify;
use biharmonic::maps::{grad_norm_squared, hessian_norm_squared, laplacian_poly, Domain, PolyMap};
use biharmonic::numcheck::{
    finite_diff_check, laplacian_stencil_check, numeric_zero_check, sample_domain, sample_sphere, DEFAULT_POINTS,
    ZERO_TOLERANCE,
};
use biharmonic::polyalg::{Polynomial, RadicalScalar};

#[test]
fn veronese_energy_partials_match_differences() {
    let samples = sample_sphere(2, DEFAULT_POINTS, 1);
    let r = finite_diff_check(&grad_norm_squared(&veronese()), &samples);
    assert!(r.passed, "{r:?}");
    assert_eq!(r.comparisons, 3 * DEFAULT_POINTS);
}

#[test]
fn cck_laplacian_matches_stencil() {
    let samples = sample_sphere(2, DEFAULT_POINTS, 2);
    for p in cck_degree3().components() {
        assert!(laplacian_stencil_check(p, &laplacian_poly(p), &samples).passed);
    }
}

#[test]
fn zero_fields_vanish_pointwise() {
    let (f, _) = diagonal_sum(&circle_harmonics(1), &circle_harmonics(3), &RadicalScalar::from_ratio(1, 2)).unwrap();
    let r = classify(&f).unwrap();
    assert!(r.is_proper_biharmonic);
    let samples = sample_domain(&r.meta.domain(), DEFAULT_POINTS, 3);
    let zero = numeric_zero_check(&r.bitension_raw, &samples, ZERO_TOLERANCE);
    assert!(zero.passed, "{zero:?}");
    let nonzero = numeric_zero_check(&r.tension_raw, &samples, ZERO_TOLERANCE);
    assert!(!nonzero.passed && nonzero.max_residual > 1e-6);
}

#[test]
fn hessian_norms() {
    let x2 = PolyMap::new(vec![Polynomial::var(1, 0).pow(2)]).unwrap();
    assert_eq!(hessian_norm_squared(&x2), Polynomial::constant(1, RadicalScalar::from_integer(4)));
    // 8k² + 4k⁴ on S¹ for x·G_k
    for (k, want) in [(1, 12), (2, 96)] {
        let f = x_times_g(&circle_harmonics(k)).unwrap();
        let got = Domain::sphere(2).reduce(&hessian_norm_squared(&f));
        assert_eq!(got, Polynomial::constant(2, RadicalScalar::from_integer(want)));
    }
    let got = Domain::sphere(3).reduce(&hessian_norm_squared(&veronese()));
    assert_eq!(got, Polynomial::constant(3, RadicalScalar::from_integer(30)));
}
