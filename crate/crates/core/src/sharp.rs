//! Sharp-constant estimation for the trace, Poincare, and Friedrichs
//! quotients.
//!
//! Each quotient of quadratic forms is discretized with uniform-grid P1
//! finite elements (tridiagonal mass/stiffness plus rank-one boundary terms,
//! so every matrix here stays symmetric tridiagonal), solved as a generalized
//! symmetric eigenproblem by power iteration with factored solves, and
//! Richardson-extrapolated across a mesh sweep. Real scalars suffice: the
//! quotients are invariant under a complex phase, so their extrema are
//! attained at real vectors.
//!
//! Only quadratic-form quotients are estimated. The additive bound
//! `||u|| <= C (||u'|| + |u(x0)|)` relates to the Friedrichs quotient through
//! `(x + y)^2 <= 2 (x^2 + y^2)`; no sharpness is claimed for the additive
//! form itself.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{Endpoint, Interval, PaperConstants};

/// Mesh sizes (grid points) used by [`estimate_sharp`].
pub const MESH_SIZES: [usize; 4] = [250, 500, 1000, 2000];

/// An estimate is flagged `extrapolated` only when the gap between the finest
/// mesh and the extrapolated value is below this threshold.
pub const EXTRAPOLATION_GATE: f64 = 1e-6;

/// Relative eigenvalue tolerance for the power iteration.
pub const EIG_REL_TOL: f64 = 1e-12;

/// Iteration cap for the power iteration.
pub const MAX_ITERATIONS: usize = 100_000;

const MIN_GRID: usize = 8;

/// Symmetric tridiagonal matrix: `diag` on the main diagonal, `off` on the
/// first sub/superdiagonal.
#[derive(Debug, Clone)]
pub struct SymTridiag {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiag {
    pub fn zeros(n: usize) -> Self {
        SymTridiag {
            diag: vec![0.0; n],
            off: vec![0.0; n.saturating_sub(1)],
        }
    }

    pub fn identity(n: usize) -> Self {
        SymTridiag {
            diag: vec![1.0; n],
            off: vec![0.0; n.saturating_sub(1)],
        }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim();
        let mut y = vec![0.0; n];
        for (i, yi) in y.iter_mut().enumerate() {
            let mut v = self.diag[i] * x[i];
            if i > 0 {
                v += self.off[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                v += self.off[i] * x[i + 1];
            }
            *yi = v;
        }
        y
    }

    /// `x' T x`. Diagonal and off-diagonal contributions are interleaved so
    /// the running total stays near the final value even when the two parts
    /// cancel (as they do for stiffness forms of smooth vectors); summing
    /// them separately would cost several digits there.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        let n = self.dim();
        let mut total = 0.0;
        for (i, &xi) in x.iter().enumerate() {
            total += self.diag[i] * xi * xi;
            if i + 1 < n {
                total += 2.0 * self.off[i] * xi * x[i + 1];
            }
        }
        total
    }

    /// Same sum with every term taken in absolute value; `EPSILON` times this
    /// bounds the rounding error of [`SymTridiag::quadratic_form`].
    pub fn abs_quadratic_form(&self, x: &[f64]) -> f64 {
        let n = self.dim();
        let mut total = 0.0;
        for (i, &xi) in x.iter().enumerate() {
            total += (self.diag[i] * xi * xi).abs();
            if i + 1 < n {
                total += (2.0 * self.off[i] * xi * x[i + 1]).abs();
            }
        }
        total
    }

    pub fn add(&self, other: &SymTridiag) -> SymTridiag {
        SymTridiag {
            diag: self
                .diag
                .iter()
                .zip(&other.diag)
                .map(|(x, y)| x + y)
                .collect(),
            off: self.off.iter().zip(&other.off).map(|(x, y)| x + y).collect(),
        }
    }

    /// Drops the row/column of one boundary node (Dirichlet elimination).
    pub fn eliminate(&self, e: Endpoint) -> SymTridiag {
        match e {
            Endpoint::A => SymTridiag {
                diag: self.diag[1..].to_vec(),
                off: self.off[1..].to_vec(),
            },
            Endpoint::B => SymTridiag {
                diag: self.diag[..self.dim() - 1].to_vec(),
                off: self.off[..self.off.len() - 1].to_vec(),
            },
        }
    }

    /// LDL^T factorization; fails when a pivot is non-positive.
    pub fn ldl(&self) -> Result<TridiagFactor> {
        let n = self.dim();
        let mut d = vec![0.0; n];
        let mut l = vec![0.0; n.saturating_sub(1)];
        d[0] = self.diag[0];
        if d[0] <= 0.0 {
            return Err(Error::NotPositiveDefinite {
                row: 0,
                pivot: d[0],
            });
        }
        for i in 1..n {
            l[i - 1] = self.off[i - 1] / d[i - 1];
            d[i] = self.diag[i] - self.off[i - 1] * l[i - 1];
            if d[i] <= 0.0 {
                return Err(Error::NotPositiveDefinite {
                    row: i,
                    pivot: d[i],
                });
            }
        }
        Ok(TridiagFactor { d, l })
    }
}

/// LDL^T factor of a symmetric positive definite tridiagonal matrix.
#[derive(Debug, Clone)]
pub struct TridiagFactor {
    d: Vec<f64>,
    l: Vec<f64>,
}

impl TridiagFactor {
    pub fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        let n = self.d.len();
        let mut x = rhs.to_vec();
        for i in 1..n {
            x[i] -= self.l[i - 1] * x[i - 1];
        }
        for (xi, di) in x.iter_mut().zip(&self.d) {
            *xi /= di;
        }
        for i in (0..n - 1).rev() {
            x[i] -= self.l[i] * x[i + 1];
        }
        x
    }
}

/// P1 mass matrix on a uniform grid with `n` points.
pub fn mass_matrix(iv: &Interval, n: usize) -> SymTridiag {
    let h = iv.lambda / (n - 1) as f64;
    let mut m = SymTridiag::zeros(n);
    for i in 0..n {
        m.diag[i] = if i == 0 || i == n - 1 { h / 3.0 } else { 2.0 * h / 3.0 };
    }
    for v in &mut m.off {
        *v = h / 6.0;
    }
    m
}

/// P1 stiffness matrix on a uniform grid with `n` points.
pub fn stiffness_matrix(iv: &Interval, n: usize) -> SymTridiag {
    let h = iv.lambda / (n - 1) as f64;
    let mut k = SymTridiag::zeros(n);
    for i in 0..n {
        k.diag[i] = if i == 0 || i == n - 1 { 1.0 / h } else { 2.0 / h };
    }
    for v in &mut k.off {
        *v = -1.0 / h;
    }
    k
}

/// Which norm quotient is being maximized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientKind {
    /// `(|u(a)|^2 + |u(b)|^2) / (||u||^2 + ||u'||^2)`
    TraceBoth,
    /// `|u(e)|^2 / (||u||^2 + ||u'||^2)`
    TraceSingle(Endpoint),
    /// `||u||^2 / ||u'||^2` over functions vanishing at `x0`
    PoincareDirichlet(Endpoint),
    /// `||u||^2 / (||u'||^2 + |u(x0)|^2)`
    FriedrichsForm(Endpoint),
}

impl QuotientKind {
    pub fn all() -> Vec<QuotientKind> {
        vec![
            QuotientKind::TraceBoth,
            QuotientKind::TraceSingle(Endpoint::A),
            QuotientKind::TraceSingle(Endpoint::B),
            QuotientKind::PoincareDirichlet(Endpoint::A),
            QuotientKind::PoincareDirichlet(Endpoint::B),
            QuotientKind::FriedrichsForm(Endpoint::A),
            QuotientKind::FriedrichsForm(Endpoint::B),
        ]
    }

    pub fn name(self) -> String {
        match self {
            QuotientKind::TraceBoth => "trace_both".to_string(),
            QuotientKind::TraceSingle(e) => format!("trace_single_{e}"),
            QuotientKind::PoincareDirichlet(e) => format!("poincare_dirichlet_{e}"),
            QuotientKind::FriedrichsForm(e) => format!("friedrichs_form_{e}"),
        }
    }

    pub fn parse(s: &str) -> Option<QuotientKind> {
        QuotientKind::all().into_iter().find(|k| k.name() == s)
    }

    pub fn extremal(self) -> Extremal {
        match self {
            QuotientKind::PoincareDirichlet(_) => Extremal::Min,
            _ => Extremal::Max,
        }
    }

    /// Sharp constant in norm form from the extremal eigenvalue. The
    /// Poincare-Dirichlet problem is posed as (stiffness, mass), so its
    /// constant is the reciprocal square root of the smallest eigenvalue.
    pub fn value_from_eigenvalue(self, mu: f64) -> f64 {
        match self {
            QuotientKind::PoincareDirichlet(_) => 1.0 / mu.sqrt(),
            _ => mu.sqrt(),
        }
    }

    /// The explicit constant that must dominate the sharp estimate.
    pub fn paper_constant(self, pc: &PaperConstants) -> f64 {
        match self {
            QuotientKind::TraceBoth | QuotientKind::TraceSingle(_) => pc.c_trace0,
            QuotientKind::PoincareDirichlet(_) => pc.c_poincare,
            QuotientKind::FriedrichsForm(_) => pc.c_friedrichs,
        }
    }
}

impl Serialize for QuotientKind {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

impl std::fmt::Display for QuotientKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

/// A quotient together with its interval.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct QuotientSpec {
    pub kind: QuotientKind,
    pub interval: Interval,
}

/// Which generalized eigenvalue the solver extracts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremal {
    Max,
    Min,
}

/// Assembles the numerator/denominator forms `(A, B)` of the quotient on a
/// uniform grid with `n` points, so that `x'Ax / x'Bx` converges to the
/// continuum quotient at second order in the mesh width. For the
/// Poincare-Dirichlet kind the pair is `(stiffness, mass)` with the
/// constrained node eliminated, and the smallest eigenvalue is the target.
pub fn discretize(spec: &QuotientSpec, n: usize) -> Result<(SymTridiag, SymTridiag)> {
    if n < MIN_GRID {
        return Err(Error::GridTooSmall { n, min: MIN_GRID });
    }
    let iv = &spec.interval;
    let m = mass_matrix(iv, n);
    let k = stiffness_matrix(iv, n);
    let pair = match spec.kind {
        QuotientKind::TraceBoth => {
            let mut a = SymTridiag::zeros(n);
            a.diag[0] = 1.0;
            a.diag[n - 1] = 1.0;
            (a, m.add(&k))
        }
        QuotientKind::TraceSingle(e) => {
            let mut a = SymTridiag::zeros(n);
            match e {
                Endpoint::A => a.diag[0] = 1.0,
                Endpoint::B => a.diag[n - 1] = 1.0,
            }
            (a, m.add(&k))
        }
        QuotientKind::PoincareDirichlet(x0) => (k.eliminate(x0), m.eliminate(x0)),
        QuotientKind::FriedrichsForm(x0) => {
            let mut b = k;
            match x0 {
                Endpoint::A => b.diag[0] += 1.0,
                Endpoint::B => b.diag[n - 1] += 1.0,
            }
            (m, b)
        }
    };
    Ok(pair)
}

/// Extremal generalized eigenpair of `A x = mu B x` by power iteration with
/// factored solves: `Max` iterates `B^{-1} A`, `Min` iterates `A^{-1} B`
/// (both operators require the factored matrix to be positive definite).
/// The start vector is all-ones with a graded fallback if that lies in the
/// kernel of the driving form.
pub fn solve_extremal(
    a: &SymTridiag,
    b: &SymTridiag,
    which: Extremal,
) -> Result<(f64, Vec<f64>)> {
    let n = a.dim();
    let factor = match which {
        Extremal::Max => b.ldl()?,
        Extremal::Min => a.ldl()?,
    };
    let mut x = vec![1.0; n];
    normalize_inf(&mut x);
    let mut used_fallback = false;
    let mut rho_prev = rayleigh(a, b, &x);
    for iter in 0..MAX_ITERATIONS {
        let driven = match which {
            Extremal::Max => a.matvec(&x),
            Extremal::Min => b.matvec(&x),
        };
        if driven.iter().all(|v| *v == 0.0) {
            if used_fallback {
                return Err(Error::NoConvergence {
                    iterations: iter,
                    last: rho_prev,
                });
            }
            used_fallback = true;
            x = (0..n).map(|i| 1.0 + i as f64 / n as f64).collect();
            normalize_inf(&mut x);
            rho_prev = rayleigh(a, b, &x);
            continue;
        }
        let mut y = factor.solve(&driven);
        normalize_inf(&mut y);
        x = y;
        let fb = b.quadratic_form(&x);
        let rho = a.quadratic_form(&x) / fb;
        // The quotient cannot be resolved below the rounding floor of its
        // own evaluation; changes inside that floor count as converged.
        let noise_floor = f64::EPSILON
            * (a.abs_quadratic_form(&x) + rho.abs() * b.abs_quadratic_form(&x))
            / fb
            * (n as f64).sqrt();
        let band = (EIG_REL_TOL * rho.abs().max(f64::MIN_POSITIVE)).max(noise_floor);
        if iter >= 2 && (rho - rho_prev).abs() <= band {
            return Ok((rho, x));
        }
        rho_prev = rho;
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        last: rho_prev,
    })
}

fn rayleigh(a: &SymTridiag, b: &SymTridiag, x: &[f64]) -> f64 {
    a.quadratic_form(x) / b.quadratic_form(x)
}

fn normalize_inf(x: &mut [f64]) {
    let scale = x.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if scale > 0.0 {
        for v in x.iter_mut() {
            *v /= scale;
        }
    }
}

/// A sharp-constant estimate with its mesh-convergence evidence.
/// `raw_values` are the extremal eigenvalues per mesh; `value` is the norm
/// form of the order-2 Richardson extrapolation of the two finest meshes;
/// `error_indicator` is the distance (in norm form) between the finest mesh
/// and the extrapolated value.
#[derive(Debug, Clone, Serialize)]
pub struct SharpEstimate {
    pub spec: QuotientSpec,
    pub value: f64,
    pub mesh_sizes: Vec<usize>,
    pub raw_values: Vec<f64>,
    pub extrapolated: bool,
    pub error_indicator: f64,
}

/// Runs the mesh sweep and extrapolates.
pub fn estimate_sharp(spec: &QuotientSpec) -> Result<SharpEstimate> {
    let mut raw_values = Vec::with_capacity(MESH_SIZES.len());
    for &n in &MESH_SIZES {
        let (a, b) = discretize(spec, n)?;
        let (mu, _) = solve_extremal(&a, &b, spec.kind.extremal())?;
        raw_values.push(mu);
    }
    let h1 = spec.interval.lambda / (MESH_SIZES[2] - 1) as f64;
    let h2 = spec.interval.lambda / (MESH_SIZES[3] - 1) as f64;
    let mu1 = raw_values[2];
    let mu2 = raw_values[3];
    let mu_extrap = (h1 * h1 * mu2 - h2 * h2 * mu1) / (h1 * h1 - h2 * h2);
    let value = spec.kind.value_from_eigenvalue(mu_extrap);
    let error_indicator = (spec.kind.value_from_eigenvalue(mu2) - value).abs();
    Ok(SharpEstimate {
        spec: *spec,
        value,
        mesh_sizes: MESH_SIZES.to_vec(),
        raw_values,
        extrapolated: error_indicator < EXTRAPOLATION_GATE,
        error_indicator,
    })
}

/// Whether the explicit constant dominates the estimated sharp constant.
#[derive(Debug, Clone, Serialize)]
pub struct DominationReport {
    pub kind: QuotientKind,
    pub lambda: f64,
    pub sharp: f64,
    pub paper_constant: f64,
    pub slack: f64,
    pub dominated: bool,
}

/// Checks `sharp <= paper constant`. A violation would falsify either the
/// inequality or the discretization, so callers treat it as a hard failure.
pub fn compare_with_paper(est: &SharpEstimate, pc: &PaperConstants) -> DominationReport {
    let paper_constant = est.spec.kind.paper_constant(pc);
    let slack = if est.value > 0.0 {
        paper_constant / est.value
    } else {
        f64::INFINITY
    };
    DominationReport {
        kind: est.spec.kind,
        lambda: est.spec.interval.lambda,
        sharp: est.value,
        paper_constant,
        slack,
        dominated: est.value <= paper_constant,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn unit() -> Interval {
        Interval::new(0.0, 1.0).unwrap()
    }

    fn spec(kind: QuotientKind, lambda: f64) -> QuotientSpec {
        QuotientSpec {
            kind,
            interval: Interval::new(0.0, lambda).unwrap(),
        }
    }

    fn coth(x: f64) -> f64 {
        1.0 / x.tanh()
    }

    #[test]
    fn identity_pencil_has_unit_eigenvalue() {
        let a = SymTridiag::identity(12);
        let b = SymTridiag::identity(12);
        let (mu, _) = solve_extremal(&a, &b, Extremal::Max).unwrap();
        assert_relative_eq!(mu, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn two_by_two_diagonal_pencil() {
        let a = SymTridiag {
            diag: vec![2.0, 1.0],
            off: vec![0.0],
        };
        let b = SymTridiag::identity(2);
        let (mu, v) = solve_extremal(&a, &b, Extremal::Max).unwrap();
        assert_relative_eq!(mu, 2.0, max_relative = 1e-12);
        assert!(v[0].abs() > 0.99 && v[1].abs() < 1e-6);
    }

    #[test]
    fn mass_and_stiffness_reproduce_simple_forms() {
        let iv = unit();
        let n = 11;
        let m = mass_matrix(&iv, n);
        let k = stiffness_matrix(&iv, n);
        let ones = vec![1.0; n];
        // int 1^2 = 1 and int (1)' = 0
        assert_relative_eq!(m.quadratic_form(&ones), 1.0, max_relative = 1e-12);
        assert_abs_diff_eq!(k.quadratic_form(&ones), 0.0, epsilon = 1e-12);
        // nodal interpolant of x: mass form gives int x^2 exactly at P1 order
        let x: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
        assert_relative_eq!(k.quadratic_form(&x), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn raw_stiffness_is_singular_without_elimination() {
        let k = stiffness_matrix(&unit(), 16);
        assert!(k.ldl().is_err());
    }

    #[test]
    fn grid_size_floor_enforced() {
        let s = spec(QuotientKind::TraceBoth, 1.0);
        assert!(discretize(&s, 7).is_err());
        assert!(discretize(&s, 8).is_ok());
    }

    #[test]
    fn coarse_poincare_eigenvalue_matches_dense_oracle_value() {
        // Frozen from an independent dense eigensolve of the same matrices.
        let s = spec(QuotientKind::PoincareDirichlet(Endpoint::A), 1.0);
        let (a, b) = discretize(&s, 8).unwrap();
        let (mu, _) = solve_extremal(&a, &b, Extremal::Min).unwrap();
        assert_abs_diff_eq!(mu, 2.477772, epsilon = 1e-5);
        let analytic = (std::f64::consts::FRAC_PI_2).powi(2);
        assert!((mu - analytic).abs() < 0.05);
    }

    #[test]
    fn fine_poincare_eigenvalue_approaches_analytic_value() {
        let s = spec(QuotientKind::PoincareDirichlet(Endpoint::A), 1.0);
        let (a, b) = discretize(&s, 2000).unwrap();
        let (mu, _) = solve_extremal(&a, &b, Extremal::Min).unwrap();
        assert_abs_diff_eq!(mu, (std::f64::consts::FRAC_PI_2).powi(2), epsilon = 1e-5);
    }

    #[test]
    fn boundary_forms_have_expected_structure() {
        let s = spec(QuotientKind::TraceSingle(Endpoint::A), 1.0);
        let (a, _) = discretize(&s, 16).unwrap();
        assert_eq!(a.diag[0], 1.0);
        assert!(a.diag[1..].iter().all(|v| *v == 0.0));
        assert!(a.off.iter().all(|v| *v == 0.0));

        let s = spec(QuotientKind::FriedrichsForm(Endpoint::A), 1.0);
        let (a, b) = discretize(&s, 16).unwrap();
        let k = stiffness_matrix(&unit(), 16);
        let m = mass_matrix(&unit(), 16);
        assert_relative_eq!(b.diag[0], k.diag[0] + 1.0, max_relative = 1e-15);
        assert_relative_eq!(a.diag[3], m.diag[3], max_relative = 1e-15);
    }

    #[test]
    fn estimated_poincare_constant_matches_analytic() {
        let est = estimate_sharp(&spec(QuotientKind::PoincareDirichlet(Endpoint::A), 1.0)).unwrap();
        assert!(est.extrapolated);
        assert_abs_diff_eq!(est.value, 2.0 / std::f64::consts::PI, epsilon = 1e-6);
    }

    #[test]
    fn estimated_trace_constant_matches_kernel_prediction() {
        let est = estimate_sharp(&spec(QuotientKind::TraceSingle(Endpoint::A), 1.0)).unwrap();
        assert!(est.extrapolated);
        assert_abs_diff_eq!(est.value, coth(1.0).sqrt(), epsilon = 1e-5);
    }

    #[test]
    fn trace_both_estimate_matches_two_point_kernel() {
        let est = estimate_sharp(&spec(QuotientKind::TraceBoth, 1.0)).unwrap();
        assert_abs_diff_eq!(est.value, coth(0.5).sqrt(), epsilon = 1e-5);
    }

    #[test]
    fn friedrichs_estimate_matches_transcendental_root() {
        // Extremal value 1/w where w solves tan(w) = 1/w on (0, pi/2).
        let est = estimate_sharp(&spec(QuotientKind::FriedrichsForm(Endpoint::A), 1.0)).unwrap();
        assert_abs_diff_eq!(est.value, 1.1623398327848782, epsilon = 1e-5);
    }

    #[test]
    fn quotient_is_invariant_under_eigenvector_rescaling() {
        use rand::{Rng, SeedableRng};
        let s = spec(QuotientKind::TraceBoth, 1.0);
        let (a, b) = discretize(&s, 64).unwrap();
        let (mu, v) = solve_extremal(&a, &b, Extremal::Max).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let scale: f64 = rng.gen_range(0.1..=10.0);
            let scaled: Vec<f64> = v.iter().map(|x| scale * x).collect();
            let q = a.quadratic_form(&scaled) / b.quadratic_form(&scaled);
            assert_relative_eq!(q, mu, max_relative = 1e-12);
        }
    }

    #[test]
    fn endpoint_symmetry_of_trace_estimates() {
        let ea = estimate_sharp(&spec(QuotientKind::TraceSingle(Endpoint::A), 1.0)).unwrap();
        let eb = estimate_sharp(&spec(QuotientKind::TraceSingle(Endpoint::B), 1.0)).unwrap();
        assert_abs_diff_eq!(ea.value, eb.value, epsilon = 1e-9);
    }

    #[test]
    fn mesh_differences_show_second_order_convergence() {
        for kind in QuotientKind::all() {
            let est = estimate_sharp(&spec(kind, 1.0)).unwrap();
            let r = &est.raw_values;
            let d1 = (r[1] - r[2]).abs();
            let d2 = (r[2] - r[3]).abs();
            let ratio = d1 / d2;
            assert!(
                (3.0..=5.0).contains(&ratio),
                "{kind}: difference ratio {ratio}"
            );
        }
    }

    #[test]
    fn paper_constants_dominate_sharp_estimates() {
        for lambda in [0.25, 1.0, 4.0] {
            let iv = Interval::new(0.0, lambda).unwrap();
            let pc = iv.constants();
            for kind in QuotientKind::all() {
                let est = estimate_sharp(&QuotientSpec { kind, interval: iv }).unwrap();
                let report = compare_with_paper(&est, &pc);
                assert!(
                    report.dominated,
                    "{kind} at lambda={lambda}: sharp {} vs paper {}",
                    report.sharp, report.paper_constant
                );
                assert!(report.slack >= 1.0);
            }
        }
    }
}
