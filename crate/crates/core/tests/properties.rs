use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use zeta_sieve::appendixc::{
    constraint_rhs, dl_dsigma, dl_dsigma_numeric, l_endpoints, l_function, FD_STEP,
};
use zeta_sieve::critline::{critical_zeta, factors};
use zeta_sieve::funceq::{chi_factor, functional_residuals, pq_coefficients, pq_norm_residual};
use zeta_sieve::specfun::{
    digamma, digamma_complex, gamma, gamma_complex, zeta, zeta_rho_deriv, zeta_strip,
};
use zeta_sieve::StripPoint;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn strip() -> impl Strategy<Value = StripPoint> {
    (0.05f64..=0.95, 0.5f64..=80.0).prop_map(|(s, r)| StripPoint::new(s, r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn functional_equation_holds(p in strip()) {
        let r = functional_residuals(p).unwrap();
        prop_assert!(r.relative() <= 1e-8, "{p}: {r:?}");
    }

    #[test]
    fn pq_norm_matches_closed_form(p in strip()) {
        prop_assert!(pq_norm_residual(p).unwrap().abs() <= 1e-9);
    }

    #[test]
    fn expanded_coefficients_equal_chi(p in strip()) {
        let chi = chi_factor(p).unwrap();
        let pq = pq_coefficients(p).unwrap().as_chi();
        prop_assert!((chi - pq).norm() <= 1e-10 * chi.norm(), "{p}");
    }

    #[test]
    fn zeta_is_conjugate_symmetric(s in -0.9f64..1.9, r in 0.1f64..300.0) {
        let z = Complex64::new(s, r);
        prop_assert_eq!(zeta(z.conj()).unwrap(), zeta(z).unwrap().conj());
    }

    #[test]
    fn digamma_is_conjugate_symmetric(p in strip()) {
        let z = digamma_complex(p).unwrap();
        prop_assert_eq!(digamma(p.to_complex().conj()).unwrap(), z.conj());
    }

    #[test]
    fn critical_line_factor_identities(rho in 1.0f64..400.0) {
        let f = factors(rho).unwrap();
        prop_assert_eq!(f.dr + f.di, 1.0);
        prop_assert!((f.n * f.n - f.dr * f.di).abs() <= 1e-9);
        prop_assert!(f.dr >= -1e-9 && f.dr <= 1.0 + 1e-9);
    }

    #[test]
    fn constraint_function_vanishes_on_line(rho in 0.01f64..400.0) {
        prop_assert_eq!(l_function(StripPoint::critical(rho).unwrap()).unwrap(), 0.0);
    }

    #[test]
    fn constraint_rhs_is_inside_unit_band(s in 0.0f64..=1.0, rho in 1e-3f64..50.0) {
        prop_assert!(constraint_rhs(StripPoint::new(s, rho).unwrap()).abs() < 1.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn rho_derivative_matches_finite_differences(s in 0.1f64..0.9, r in 1.0f64..60.0) {
        let h = 1e-5;
        let at = |rho| zeta_strip(StripPoint::new(s, rho).unwrap(), Default::default())
            .unwrap()
            .value;
        let fd = (at(r + h) - at(r - h)) / (2.0 * h);
        let d = zeta_rho_deriv(StripPoint::new(s, r).unwrap(), 1).unwrap();
        prop_assert!((fd - d).norm() <= 1e-6, "({s}, {r}): {fd} vs {d}");
    }

    #[test]
    fn sigma_derivative_matches_finite_differences(s in 0.05f64..0.95, r in 0.5f64..40.0) {
        let p = StripPoint::new(s, r).unwrap();
        let fd = dl_dsigma_numeric(p, FD_STEP).unwrap();
        prop_assert!((dl_dsigma(p).unwrap() - fd).abs() <= 1e-6);
    }

    /// A point close to a zero has a reflected partner close to a zero, scaled by `|χ|`.
    #[test]
    fn near_zeros_are_mirrored(k in 0usize..4, ds in 1e-4f64..1e-2, dr in -1e-3f64..1e-3) {
        let zeros = [14.134725141734694, 21.022039638771555, 25.01085758014569, 30.424876125859513];
        let p = StripPoint::new(0.5 - ds, zeros[k] + dr).unwrap();
        let here = zeta(p.to_complex()).unwrap().norm();
        let there = zeta(p.reflected().to_complex()).unwrap().norm();
        let scale = chi_factor(p).unwrap().norm();
        prop_assert!(there <= scale * here * (1.0 + 1e-8) + 1e-12, "{p}");
    }
}

#[test]
fn second_derivative_matches_finite_differences() {
    let (s, r, h) = (0.5, 20.0, 1e-4);
    let at = |rho| zeta(Complex64::new(s, rho)).unwrap();
    let fd = (at(r + h) - 2.0 * at(r) + at(r - h)) / (h * h);
    let d = zeta_rho_deriv(StripPoint::new(s, r).unwrap(), 2).unwrap();
    assert!((fd - d).norm() < 1e-5, "{fd} vs {d}");
}

#[test]
fn rho_derivative_follows_cauchy_riemann() {
    let p = StripPoint::new(0.37, 12.5).unwrap();
    let h = 1e-6;
    let at = |s| zeta(Complex64::new(s, 12.5)).unwrap();
    let d_sigma = (at(0.37 + h) - at(0.37 - h)) / (2.0 * h);
    let d_rho = zeta_rho_deriv(p, 1).unwrap();
    // ∂ζ_R/∂ρ = -∂ζ_I/∂σ and ∂ζ_I/∂ρ = ∂ζ_R/∂σ
    assert!((d_rho.re + d_sigma.im).abs() < 1e-7);
    assert!((d_rho.im - d_sigma.re).abs() < 1e-7);
}

#[test]
fn rho_derivative_at_two() {
    let d = zeta_rho_deriv(StripPoint::new(2.0, 0.0).unwrap(), 1).unwrap();
    assert_eq!(d.re, 0.0);
    assert!((d.im + 0.937_548_254_315_843_8).abs() < 1e-12);
}

#[test]
fn gamma_modulus_identities() {
    for rho in [0.5, 1.0, 2.0, 5.0, 10.0] {
        let x = PI * rho;
        let on_axis = gamma(Complex64::new(0.0, rho)).unwrap().norm_sqr();
        let half = gamma_complex(StripPoint::new(0.5, rho).unwrap())
            .unwrap()
            .norm_sqr();
        let one = gamma_complex(StripPoint::new(1.0, rho).unwrap())
            .unwrap()
            .norm_sqr();
        assert!(rel(on_axis, PI / (rho * x.sinh())) < 1e-10, "{rho}");
        assert!(rel(half, PI / x.cosh()) < 1e-10, "{rho}");
        assert!(rel(one, x / x.sinh()) < 1e-10, "{rho}");
    }
    let g = gamma_complex(StripPoint::new(0.5, 1.0).unwrap()).unwrap();
    assert!((g.norm_sqr() - 0.271_014_951_399_418_35).abs() < 1e-12);
}

#[test]
fn digamma_special_values() {
    let euler = 0.577_215_664_901_532_9;
    let one = digamma_complex(StripPoint::new(1.0, 0.0).unwrap()).unwrap();
    let half = digamma_complex(StripPoint::new(0.5, 0.0).unwrap()).unwrap();
    assert!((one.re + euler).abs() < 1e-12 && one.im == 0.0);
    assert!((half.re + 1.963_510_026_021_423_5).abs() < 1e-12);
}

#[test]
fn endpoint_closed_forms() {
    for i in 0..=99 {
        let rho = 0.5 + 0.5 * i as f64;
        let (l0, l1) = l_endpoints(rho).unwrap();
        let at = |s| l_function(StripPoint::new(s, rho).unwrap()).unwrap();
        assert!((at(0.0) - l0).abs() <= 1e-9, "{rho}");
        assert!((at(1.0) - l1).abs() <= 1e-9, "{rho}");
    }
    let (_, l1) = l_endpoints(1e-3).unwrap();
    assert!((l1 - (2.0 * PI * PI - 1.0)).abs() < 1e-4);
    let near_one = l_function(StripPoint::new(1.0, 1e-3).unwrap()).unwrap();
    assert!((near_one - (2.0 * PI * PI - 1.0)).abs() < 1e-4);
}

#[test]
fn critical_zeta_agrees_with_general_evaluator() {
    let rho = 33.0;
    assert_eq!(
        critical_zeta(rho).unwrap(),
        zeta(Complex64::new(0.5, rho)).unwrap()
    );
}
