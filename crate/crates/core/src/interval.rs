//! Interval geometry and the explicit inequality constants attached to it.
//!
//! Every constant in this toolkit is a pure function of the interval length
//! `lambda = b - a`. [`PaperConstants`] collects the closed-form constants
//! used by the certificate checks; the sharp estimates in [`crate::sharp`]
//! quantify how much slack those closed forms carry.

use serde::Serialize;

use crate::error::{Error, Result};

/// A bounded interval `[a, b]` with `a < b`.
///
/// The length `lambda` is stored at construction so the interval is a single
/// source of truth; it is never recomputed from the endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub a: f64,
    pub b: f64,
    pub lambda: f64,
}

impl Interval {
    /// Builds an interval, rejecting non-finite endpoints and `a >= b`.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || a >= b {
            return Err(Error::InvalidInterval { a, b });
        }
        Ok(Interval { a, b, lambda: b - a })
    }

    /// Maps `x` in `[a, b]` to the reference coordinate `t` in `[-1, 1]`.
    pub fn to_unit(&self, x: f64) -> f64 {
        (2.0 * x - self.a - self.b) / self.lambda
    }

    /// Maps the reference coordinate `t` in `[-1, 1]` to `x` in `[a, b]`.
    pub fn from_unit(&self, t: f64) -> f64 {
        self.a + 0.5 * self.lambda * (t + 1.0)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.a && x <= self.b
    }

    /// Constants of the explicit inequalities on this interval.
    pub fn constants(&self) -> PaperConstants {
        PaperConstants::for_interval(self)
    }
}

/// One endpoint of an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Endpoint {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
}

impl Endpoint {
    pub fn coordinate(self, iv: &Interval) -> f64 {
        match self {
            Endpoint::A => iv.a,
            Endpoint::B => iv.b,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Endpoint::A => "a",
            Endpoint::B => "b",
        }
    }
}

impl std::fmt::Display for Endpoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Explicit constants, as functions of the interval length `lambda`:
///
/// * `c_trace0 = sqrt(max{4 lambda, 4 / lambda})` bounds the boundary trace
///   norm by the full `H^1` norm.
/// * `c_poincare = sqrt(2) * max{sqrt(lambda), lambda}` bounds the `L^2` norm
///   by the derivative norm plus one endpoint value.
/// * `c_friedrichs = sqrt(2 c_poincare^2 + 1)` bounds the full `H^1` norm by
///   the seminorm-plus-endpoint quantity; it is the smallest constant
///   obtainable by squaring the Poincare bound and adding the derivative term.
/// * `c_equiv_lower = 1 / c_friedrichs` and `c_equiv_upper =
///   sqrt(1 + c_trace0^2)` frame the two-sided norm equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PaperConstants {
    pub c_trace0: f64,
    pub c_poincare: f64,
    pub c_friedrichs: f64,
    pub c_equiv_lower: f64,
    pub c_equiv_upper: f64,
}

impl PaperConstants {
    pub fn for_interval(iv: &Interval) -> Self {
        let lambda = iv.lambda;
        let c_trace0 = f64::max(4.0 * lambda, 4.0 / lambda).sqrt();
        let c_poincare = std::f64::consts::SQRT_2 * f64::max(lambda.sqrt(), lambda);
        let c_friedrichs = (2.0 * c_poincare * c_poincare + 1.0).sqrt();
        PaperConstants {
            c_trace0,
            c_poincare,
            c_friedrichs,
            c_equiv_lower: 1.0 / c_friedrichs,
            c_equiv_upper: (1.0 + c_trace0 * c_trace0).sqrt(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn builds_unit_interval() {
        let iv = Interval::new(0.0, 1.0).unwrap();
        assert_eq!(iv.a, 0.0);
        assert_eq!(iv.b, 1.0);
        assert_eq!(iv.lambda, 1.0);
    }

    #[test]
    fn builds_symmetric_interval() {
        let iv = Interval::new(-1.0, 1.0).unwrap();
        assert_eq!(iv.lambda, 2.0);
    }

    #[test]
    fn rejects_degenerate_and_non_finite() {
        assert!(Interval::new(1.0, 1.0).is_err());
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn constants_at_unit_length() {
        let pc = Interval::new(0.0, 1.0).unwrap().constants();
        assert_relative_eq!(pc.c_trace0, 2.0, max_relative = 1e-15);
        assert_relative_eq!(pc.c_poincare, std::f64::consts::SQRT_2, max_relative = 1e-15);
        assert_relative_eq!(pc.c_friedrichs, 5.0_f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(pc.c_equiv_upper, 5.0_f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(pc.c_equiv_lower, 1.0 / 5.0_f64.sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn constants_at_length_four() {
        let pc = Interval::new(0.0, 4.0).unwrap().constants();
        assert_relative_eq!(pc.c_trace0, 4.0, max_relative = 1e-15);
        assert_relative_eq!(pc.c_poincare, 4.0 * std::f64::consts::SQRT_2, max_relative = 1e-15);
    }

    #[test]
    fn trace_constant_is_minimized_at_unit_length() {
        // c_trace0 decreases on (0, 1] and increases on [1, inf).
        let lambdas_left: Vec<f64> = (1..=40).map(|i| i as f64 / 40.0).collect();
        for w in lambdas_left.windows(2) {
            let c0 = Interval::new(0.0, w[0]).unwrap().constants().c_trace0;
            let c1 = Interval::new(0.0, w[1]).unwrap().constants().c_trace0;
            assert!(c0 >= c1, "expected decrease: {c0} -> {c1}");
        }
        let lambdas_right: Vec<f64> = (1..=40).map(|i| 1.0 + i as f64 / 4.0).collect();
        for w in lambdas_right.windows(2) {
            let c0 = Interval::new(0.0, w[0]).unwrap().constants().c_trace0;
            let c1 = Interval::new(0.0, w[1]).unwrap().constants().c_trace0;
            assert!(c1 >= c0, "expected increase: {c0} -> {c1}");
        }
        let at_one = Interval::new(0.0, 1.0).unwrap().constants().c_trace0;
        assert_relative_eq!(at_one, 2.0, max_relative = 1e-15);
    }

    #[test]
    fn poincare_constant_is_nondecreasing() {
        let mut prev = 0.0;
        for i in 1..=60 {
            let lambda = 10f64.powf(-3.0 + i as f64 * 0.1);
            let c = Interval::new(0.0, lambda).unwrap().constants().c_poincare;
            assert!(c >= prev);
            prev = c;
        }
    }

    #[test]
    fn constants_finite_and_positive_over_wide_range() {
        for i in 0..=48 {
            let lambda = 10f64.powf(-6.0 + i as f64 * 0.25);
            let pc = Interval::new(0.0, lambda).unwrap().constants();
            for c in [
                pc.c_trace0,
                pc.c_poincare,
                pc.c_friedrichs,
                pc.c_equiv_lower,
                pc.c_equiv_upper,
            ] {
                assert!(c.is_finite() && c > 0.0, "lambda={lambda}: constant {c}");
            }
        }
    }
}
