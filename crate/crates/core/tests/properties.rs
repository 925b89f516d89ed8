//! Property-based invariants: norm axioms on the boundary space, backend
//! agreement between the exact and spectral representations, never-failing
//! certificates on random functions, and the endpoint-to-trace implication
//! chain.

use num_complex::Complex64;
use proptest::prelude::*;

use sobocheck::certificate::{
    check_endpoint_sq, check_friedrichs, check_poincare, check_poincare_smooth_sq, check_trace0,
    check_trace_jet,
};
use sobocheck::chebfun::ChebFunction;
use sobocheck::exact::{ratio, ExactPoly, GaussianRational, Rational};
use sobocheck::funcrep::FuncRep;
use sobocheck::interval::{Endpoint, Interval};
use sobocheck::norms::{trace_norm, TraceValue};

fn complex_box(limit: f64) -> impl Strategy<Value = Complex64> {
    (-limit..=limit, -limit..=limit).prop_map(|(re, im)| Complex64::new(re, im))
}

fn interval_strategy() -> impl Strategy<Value = Interval> {
    (-2.0..=2.0f64, 0.1..=8.0f64).prop_map(|(a, lambda)| Interval::new(a, a + lambda).unwrap())
}

fn cheb_strategy() -> impl Strategy<Value = ChebFunction> {
    (interval_strategy(), prop::collection::vec(complex_box(1.0), 1..=21))
        .prop_map(|(iv, coeffs)| ChebFunction::from_coeffs(iv, coeffs).unwrap())
}

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-10i64..=10, 1i64..=10).prop_map(|(n, d)| ratio(n, d))
}

/// Intervals for monomial-basis comparisons stay short: degree-12 monomials
/// with magnitude-10 coefficients on long intervals span ten orders of
/// magnitude, which no floating-point representation can track pointwise.
fn exact_interval_strategy() -> impl Strategy<Value = Interval> {
    (-0.5..=0.5f64, 0.1..=1.0f64).prop_map(|(a, lambda)| Interval::new(a, a + lambda).unwrap())
}

fn exact_poly_strategy() -> impl Strategy<Value = ExactPoly> {
    let coeff = (rational_strategy(), rational_strategy())
        .prop_map(|(re, im)| GaussianRational::new(re, im));
    (exact_interval_strategy(), prop::collection::vec(coeff, 1..=13))
        .prop_map(|(iv, coeffs)| ExactPoly::new(iv, coeffs).unwrap())
}

proptest! {
    /// Triangle inequality, absolute homogeneity, and definiteness of the
    /// boundary-space norm.
    #[test]
    fn boundary_norm_axioms(
        a1 in complex_box(5.0),
        b1 in complex_box(5.0),
        a2 in complex_box(5.0),
        b2 in complex_box(5.0),
        alpha in complex_box(3.0),
    ) {
        let s = TraceValue::new(a1, b1);
        let t = TraceValue::new(a2, b2);
        let sum = TraceValue::new(a1 + a2, b1 + b2);
        prop_assert!(trace_norm(&sum) <= trace_norm(&s) + trace_norm(&t) + 1e-12);

        let scaled = TraceValue::new(alpha * a1, alpha * b1);
        let expect = alpha.norm() * trace_norm(&s);
        prop_assert!((trace_norm(&scaled) - expect).abs() <= 1e-12 * (1.0 + expect));

        prop_assert_eq!(trace_norm(&s) == 0.0, a1 == Complex64::new(0.0, 0.0) && b1 == Complex64::new(0.0, 0.0));
    }

    /// The exact backend and the spectral image of the same polynomial agree
    /// on evaluation, differentiation, and squared-modulus integration.
    #[test]
    fn backends_agree_on_random_rational_polynomials(p in exact_poly_strategy()) {
        let cheb = p.to_cheb().unwrap();
        let iv = *p.interval();
        for k in 0..=8 {
            let x = iv.a + iv.lambda * k as f64 / 8.0;
            let x = x.min(iv.b);
            let want = p.evaluate_f64(x).unwrap();
            let got = cheb.evaluate(x).unwrap();
            let scale = 1.0 + want.norm().max(got.norm());
            prop_assert!((want - got).norm() <= 1e-10 * scale, "evaluate at {x}");
        }

        let dp = p.differentiate();
        let dcheb = cheb.differentiate();
        for k in 0..=8 {
            let x = iv.a + iv.lambda * k as f64 / 8.0;
            let x = x.min(iv.b);
            let want = dp.evaluate_f64(x).unwrap();
            let got = dcheb.evaluate(x).unwrap();
            let scale = 1.0 + want.norm().max(got.norm());
            prop_assert!((want - got).norm() <= 1e-10 * scale, "derivative at {x}");
        }

        let exact_l2 = sobocheck::exact::rational_to_f64(&p.integrate_abs_sq());
        let spectral_l2 = cheb.integrate_l2sq();
        let scale = 1.0 + exact_l2.max(spectral_l2);
        prop_assert!((exact_l2 - spectral_l2).abs() <= 1e-10 * scale);
    }

    /// Every certificate passes on every random function, and passing both
    /// endpoint bounds implies the trace bound passes (the proof chain).
    #[test]
    fn certificates_never_fail_and_chain_is_consistent(u in cheb_strategy()) {
        let f = FuncRep::Spectral(u);
        let at_a = check_endpoint_sq(&f, Endpoint::A).unwrap();
        let at_b = check_endpoint_sq(&f, Endpoint::B).unwrap();
        let tr = check_trace0(&f).unwrap();
        prop_assert!(at_a.pass && at_b.pass && tr.pass);
        if at_a.pass && at_b.pass {
            prop_assert!(tr.pass, "endpoint bounds passed but trace bound failed");
        }
        for x0 in [Endpoint::A, Endpoint::B] {
            prop_assert!(check_poincare(&f, x0).unwrap().pass);
            prop_assert!(check_poincare_smooth_sq(&f, x0).unwrap().pass);
            prop_assert!(check_friedrichs(&f, x0).unwrap().pass);
        }
        prop_assert!(check_trace_jet(&f, 3).unwrap().pass);
    }

    /// Certificate ratios are invariant under complex rescaling of the input.
    #[test]
    fn certificate_ratios_are_scale_invariant(
        u in cheb_strategy(),
        alpha in complex_box(3.0).prop_filter("away from zero", |a| a.norm() > 0.1),
    ) {
        let f = FuncRep::Spectral(u);
        let g = f.scaled(alpha).unwrap();
        let r1 = check_trace0(&f).unwrap().ratio;
        let r2 = check_trace0(&g).unwrap().ratio;
        prop_assert!((r1 - r2).abs() <= 1e-12 * (1.0 + r1.max(r2)));
        let f1 = check_friedrichs(&f, Endpoint::B).unwrap().ratio;
        let f2 = check_friedrichs(&g, Endpoint::B).unwrap().ratio;
        prop_assert!((f1 - f2).abs() <= 1e-12 * (1.0 + f1.max(f2)));
    }
}
