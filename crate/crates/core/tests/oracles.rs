//! Independent-oracle cross-checks: the dense eigensolver against the
//! tridiagonal power iteration, and the exact-rational backend against the
//! spectral one.

mod common;

use common::{dense_max_eigenvalue, dense_min_eigenvalue};
use sobocheck::chebfun::ChebFunction;
use sobocheck::exact::ExactPoly;
use sobocheck::interval::{Endpoint, Interval};
use sobocheck::sharp::{discretize, solve_extremal, Extremal, QuotientKind, QuotientSpec};

fn spec(kind: QuotientKind, lambda: f64) -> QuotientSpec {
    QuotientSpec {
        kind,
        interval: Interval::new(0.0, lambda).unwrap(),
    }
}

#[test]
fn power_iteration_matches_dense_oracle_for_every_kind() {
    for kind in QuotientKind::all() {
        let (a, b) = discretize(&spec(kind, 1.0), 120).unwrap();
        let (mine, _) = solve_extremal(&a, &b, kind.extremal()).unwrap();
        let oracle = match kind.extremal() {
            Extremal::Max => dense_max_eigenvalue(&a, &b),
            Extremal::Min => dense_min_eigenvalue(&a, &b),
        };
        let rel = (mine - oracle).abs() / oracle.abs();
        assert!(rel < 1e-9, "{kind}: {mine} vs oracle {oracle} (rel {rel})");
    }
}

#[test]
fn coarse_poincare_mesh_reproduces_analytic_eigenvalue() {
    // Brute-force dense eigensolve on the n=8 grid.
    let (a, b) = discretize(&spec(QuotientKind::PoincareDirichlet(Endpoint::A), 1.0), 8).unwrap();
    let oracle = dense_min_eigenvalue(&a, &b);
    assert!((oracle - 2.477772).abs() < 1e-5, "dense n=8: {oracle}");
    let analytic = std::f64::consts::FRAC_PI_2.powi(2);
    assert!((oracle - analytic).abs() < 0.05);
    let (mine, _) = solve_extremal(&a, &b, Extremal::Min).unwrap();
    assert!((mine - oracle).abs() < 1e-10);
}

#[test]
fn dense_oracle_reproduces_trace_kernel_value_at_n500() {
    let (a, b) = discretize(&spec(QuotientKind::TraceSingle(Endpoint::A), 1.0), 500).unwrap();
    let oracle = dense_max_eigenvalue(&a, &b);
    let coth1 = 1.0 / 1.0f64.tanh();
    assert!(
        (oracle.sqrt() - coth1.sqrt()).abs() < 1e-5,
        "dense n=500 value {} vs {}",
        oracle.sqrt(),
        coth1.sqrt()
    );
    let (mine, _) = solve_extremal(&a, &b, Extremal::Max).unwrap();
    assert!((mine - oracle).abs() / oracle < 1e-9);
}

#[test]
fn spectral_l2_integral_matches_exact_rational_oracle() {
    // T3 on [-1, 1]: the quadrature result against exact integration of the
    // same polynomial converted without rounding.
    let iv = Interval::new(-1.0, 1.0).unwrap();
    let t3 = ChebFunction::from_real_samples(iv, 3, |x| 4.0 * x * x * x - 3.0 * x).unwrap();
    let spectral = t3.integrate_l2sq();
    let exact = ExactPoly::from_cheb(&t3).unwrap().integrate_abs_sq();
    let exact = sobocheck::exact::rational_to_f64(&exact);
    let rel = (spectral - exact).abs() / exact;
    assert!(rel < 1e-13, "spectral {spectral} vs exact {exact}");
}
