//! Inequality certificates.
//!
//! Each check evaluates both sides of one explicit inequality on a concrete
//! function and emits a machine-readable [`Certificate`] with the constant
//! used, the observed ratio, and a verdict. The float checks run on the
//! spectral pipeline; `check_exact_*` variants recompute the squared forms in
//! exact rational arithmetic with a zero-tolerance verdict.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ratio, rational_to_f64, ExactPoly, Rational};
use crate::funcrep::FuncRep;
use crate::interval::{Endpoint, Interval};
use crate::norms::NormProfile;

/// Relative slack allowed before a comparison is declared failed.
pub const REL_TOL: f64 = 1e-12;
/// Absolute slack; also the zero-case threshold when the right side vanishes.
pub const ABS_TOL: f64 = 1e-12;

/// Identifier of one inequality family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum CertificateKind {
    #[serde(rename = "endpoint_a_sq")]
    EndpointASq,
    #[serde(rename = "endpoint_b_sq")]
    EndpointBSq,
    #[serde(rename = "trace0")]
    Trace0,
    #[serde(rename = "trace_jet_m")]
    TraceJetM,
    #[serde(rename = "poincare_smooth_sq")]
    PoincareSmoothSq,
    #[serde(rename = "poincare")]
    Poincare,
    #[serde(rename = "friedrichs")]
    Friedrichs,
    #[serde(rename = "equiv_upper")]
    EquivUpper,
    #[serde(rename = "equiv_lower")]
    EquivLower,
}

impl CertificateKind {
    pub const ALL: [CertificateKind; 9] = [
        CertificateKind::EndpointASq,
        CertificateKind::EndpointBSq,
        CertificateKind::Trace0,
        CertificateKind::TraceJetM,
        CertificateKind::PoincareSmoothSq,
        CertificateKind::Poincare,
        CertificateKind::Friedrichs,
        CertificateKind::EquivUpper,
        CertificateKind::EquivLower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CertificateKind::EndpointASq => "endpoint_a_sq",
            CertificateKind::EndpointBSq => "endpoint_b_sq",
            CertificateKind::Trace0 => "trace0",
            CertificateKind::TraceJetM => "trace_jet_m",
            CertificateKind::PoincareSmoothSq => "poincare_smooth_sq",
            CertificateKind::Poincare => "poincare",
            CertificateKind::Friedrichs => "friedrichs",
            CertificateKind::EquivUpper => "equiv_upper",
            CertificateKind::EquivLower => "equiv_lower",
        }
    }

    pub fn parse(s: &str) -> Option<CertificateKind> {
        CertificateKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

impl std::fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Context a certificate row carries so the checked instance can be
/// regenerated in isolation.
#[derive(Debug, Clone, Serialize)]
pub struct CertMetadata {
    pub interval: Interval,
    pub m: Option<u32>,
    pub x0: Option<Endpoint>,
    pub descriptor: String,
    pub seed: u64,
}

impl CertMetadata {
    fn new(interval: Interval, m: Option<u32>, x0: Option<Endpoint>) -> Self {
        CertMetadata {
            interval,
            m,
            x0,
            descriptor: "manual".to_string(),
            seed: 0,
        }
    }
}

/// One inequality check: both sides, the constant used, and the verdict.
///
/// `pass` is `lhs <= rhs * (1 + REL_TOL) + ABS_TOL`; when the right side is
/// zero (only the zero function) this degenerates to `lhs <= ABS_TOL` and the
/// ratio is reported as zero.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub name: CertificateKind,
    pub lhs: f64,
    pub rhs: f64,
    pub constant_used: f64,
    pub ratio: f64,
    pub margin: f64,
    pub pass: bool,
    pub tolerance: f64,
    pub metadata: CertMetadata,
}

impl Certificate {
    fn from_sides(
        name: CertificateKind,
        lhs: f64,
        rhs: f64,
        constant_used: f64,
        metadata: CertMetadata,
    ) -> Certificate {
        let pass = lhs <= rhs * (1.0 + REL_TOL) + ABS_TOL;
        let ratio = if rhs > 0.0 { lhs / rhs } else { 0.0 };
        Certificate {
            name,
            lhs,
            rhs,
            constant_used,
            ratio,
            margin: rhs - lhs,
            pass,
            tolerance: REL_TOL,
            metadata,
        }
    }
}

/// Constant for the order-`m` trace bound: summing the per-order endpoint
/// bounds counts every derivative level at most twice, so the bound holds
/// with `sqrt(2 * max{4 lambda, 4 / lambda})` uniformly in `m`.
pub fn jet_constant(iv: &Interval) -> f64 {
    (2.0 * f64::max(4.0 * iv.lambda, 4.0 / iv.lambda)).sqrt()
}

/// `|u(x0)|^2 <= 2 lambda int |u'|^2 + (2 / lambda) int |u|^2`.
///
/// `constant_used` reports `max{2 lambda, 2 / lambda}`; together with the
/// interval in the metadata that pins the coefficient pair.
pub fn check_endpoint_sq(u: &FuncRep, endpoint: Endpoint) -> Result<Certificate> {
    Ok(check_endpoint_sq_with(&NormProfile::new(u, 1)?, endpoint))
}

pub fn check_endpoint_sq_with(profile: &NormProfile, endpoint: Endpoint) -> Certificate {
    let iv = *profile.interval();
    let lambda = iv.lambda;
    let lhs = profile.trace(0).at(endpoint).norm_sqr();
    let rhs = 2.0 * lambda * profile.l2sq(1) + (2.0 / lambda) * profile.l2sq(0);
    let name = match endpoint {
        Endpoint::A => CertificateKind::EndpointASq,
        Endpoint::B => CertificateKind::EndpointBSq,
    };
    Certificate::from_sides(
        name,
        lhs,
        rhs,
        f64::max(2.0 * lambda, 2.0 / lambda),
        CertMetadata::new(iv, None, Some(endpoint)),
    )
}

/// Trace bound `sqrt(|u(a)|^2 + |u(b)|^2) <= c_trace0 * ||u||_{H^1}`.
pub fn check_trace0(u: &FuncRep) -> Result<Certificate> {
    Ok(check_trace0_with(&NormProfile::new(u, 1)?))
}

pub fn check_trace0_with(profile: &NormProfile) -> Certificate {
    let iv = *profile.interval();
    let c = iv.constants().c_trace0;
    let lhs = profile.trace(0).norm();
    let rhs = c * profile.h_norm(1);
    Certificate::from_sides(
        CertificateKind::Trace0,
        lhs,
        rhs,
        c,
        CertMetadata::new(iv, None, None),
    )
}

/// Higher-order trace bound: the jet norm of derivatives `0..m` against
/// `jet_constant * ||u||_{H^m}` for `2 <= m <= 4`.
pub fn check_trace_jet(u: &FuncRep, m: usize) -> Result<Certificate> {
    if !(2..=4).contains(&m) {
        return Err(Error::JetCertificateOrder { m });
    }
    Ok(check_trace_jet_with(&NormProfile::new(u, m)?, m).expect("order validated"))
}

pub fn check_trace_jet_with(profile: &NormProfile, m: usize) -> Result<Certificate> {
    if !(2..=4).contains(&m) {
        return Err(Error::JetCertificateOrder { m });
    }
    let iv = *profile.interval();
    let c = jet_constant(&iv);
    let lhs = (0..m)
        .map(|j| {
            let t = profile.trace(j);
            t.at_a.norm_sqr() + t.at_b.norm_sqr()
        })
        .sum::<f64>()
        .sqrt();
    let rhs = c * profile.h_norm(m);
    Ok(Certificate::from_sides(
        CertificateKind::TraceJetM,
        lhs,
        rhs,
        c,
        CertMetadata::new(iv, Some(m as u32), None),
    ))
}

/// Poincare bound `||u||_{L^2} <= c_poincare * (||u'||_{L^2} + |u(x0)|)`.
pub fn check_poincare(u: &FuncRep, x0: Endpoint) -> Result<Certificate> {
    Ok(check_poincare_with(&NormProfile::new(u, 1)?, x0))
}

pub fn check_poincare_with(profile: &NormProfile, x0: Endpoint) -> Certificate {
    let iv = *profile.interval();
    let c = iv.constants().c_poincare;
    let lhs = profile.l2sq(0).sqrt();
    let rhs = c * (profile.l2sq(1).sqrt() + profile.trace(0).at(x0).norm());
    Certificate::from_sides(
        CertificateKind::Poincare,
        lhs,
        rhs,
        c,
        CertMetadata::new(iv, None, Some(x0)),
    )
}

/// Squared intermediate Poincare form
/// `||u||^2 <= 2 lambda^2 ||u'||^2 + 2 lambda |u(x0)|^2`.
pub fn check_poincare_smooth_sq(u: &FuncRep, x0: Endpoint) -> Result<Certificate> {
    Ok(check_poincare_smooth_sq_with(&NormProfile::new(u, 1)?, x0))
}

pub fn check_poincare_smooth_sq_with(profile: &NormProfile, x0: Endpoint) -> Certificate {
    let iv = *profile.interval();
    let lambda = iv.lambda;
    let lhs = profile.l2sq(0);
    let rhs = 2.0 * lambda * lambda * profile.l2sq(1)
        + 2.0 * lambda * profile.trace(0).at(x0).norm_sqr();
    Certificate::from_sides(
        CertificateKind::PoincareSmoothSq,
        lhs,
        rhs,
        2.0 * f64::max(lambda, lambda * lambda),
        CertMetadata::new(iv, None, Some(x0)),
    )
}

/// Friedrichs bound
/// `||u||_{H^1} <= c_friedrichs * (||u'||^2 + |u(x0)|^2)^{1/2}`.
pub fn check_friedrichs(u: &FuncRep, x0: Endpoint) -> Result<Certificate> {
    Ok(check_friedrichs_with(&NormProfile::new(u, 1)?, x0))
}

pub fn check_friedrichs_with(profile: &NormProfile, x0: Endpoint) -> Certificate {
    let iv = *profile.interval();
    let c = iv.constants().c_friedrichs;
    let lhs = profile.h_norm(1);
    let rhs = c * seminorm_plus_endpoint(profile, x0);
    Certificate::from_sides(
        CertificateKind::Friedrichs,
        lhs,
        rhs,
        c,
        CertMetadata::new(iv, None, Some(x0)),
    )
}

/// Two-sided norm equivalence between `||u||_{H^1}` and
/// `(||u'||^2 + |u(x0)|^2)^{1/2}`. Returns `(lower, upper)` where `lower` is
/// the Friedrichs direction and `upper` bounds the alternative norm by
/// `sqrt(1 + c_trace0^2) * ||u||_{H^1}`.
pub fn check_equiv(u: &FuncRep, x0: Endpoint) -> Result<(Certificate, Certificate)> {
    Ok(check_equiv_with(&NormProfile::new(u, 1)?, x0))
}

pub fn check_equiv_with(profile: &NormProfile, x0: Endpoint) -> (Certificate, Certificate) {
    let iv = *profile.interval();
    let pc = iv.constants();
    let alt = seminorm_plus_endpoint(profile, x0);
    let h1 = profile.h_norm(1);
    let lower = Certificate::from_sides(
        CertificateKind::EquivLower,
        h1,
        pc.c_friedrichs * alt,
        pc.c_friedrichs,
        CertMetadata::new(iv, None, Some(x0)),
    );
    let upper = Certificate::from_sides(
        CertificateKind::EquivUpper,
        alt,
        pc.c_equiv_upper * h1,
        pc.c_equiv_upper,
        CertMetadata::new(iv, None, Some(x0)),
    );
    (lower, upper)
}

fn seminorm_plus_endpoint(profile: &NormProfile, x0: Endpoint) -> f64 {
    (profile.l2sq(1) + profile.trace(0).at(x0).norm_sqr()).sqrt()
}

/// Exact-rational certificate: squared form of one inequality with a
/// zero-tolerance verdict.
#[derive(Debug, Clone)]
pub struct ExactCertificate {
    pub kind: CertificateKind,
    pub lhs: Rational,
    pub rhs: Rational,
    pub pass: bool,
}

impl ExactCertificate {
    fn new(kind: CertificateKind, lhs: Rational, rhs: Rational) -> Self {
        let pass = lhs <= rhs;
        ExactCertificate {
            kind,
            lhs,
            rhs,
            pass,
        }
    }

    pub fn lhs_f64(&self) -> f64 {
        rational_to_f64(&self.lhs)
    }

    pub fn rhs_f64(&self) -> f64 {
        rational_to_f64(&self.rhs)
    }
}

/// Exact counterpart of [`check_endpoint_sq`].
pub fn check_exact_endpoint_sq(p: &ExactPoly, endpoint: Endpoint) -> ExactCertificate {
    let lambda = p.lambda_exact();
    let two = ratio(2, 1);
    let lhs = p.endpoint_abs_sq(endpoint);
    let rhs = &two * &lambda * p.differentiate().integrate_abs_sq()
        + &two / &lambda * p.integrate_abs_sq();
    let kind = match endpoint {
        Endpoint::A => CertificateKind::EndpointASq,
        Endpoint::B => CertificateKind::EndpointBSq,
    };
    ExactCertificate::new(kind, lhs, rhs)
}

/// Exact squared form of the trace bound:
/// `|u(a)|^2 + |u(b)|^2 <= max{4 lambda, 4 / lambda} (||u||^2 + ||u'||^2)`.
pub fn check_exact_trace0_sq(p: &ExactPoly) -> ExactCertificate {
    let lambda = p.lambda_exact();
    let four = ratio(4, 1);
    let c_sq = std::cmp::max(&four * &lambda, &four / &lambda);
    let lhs = p.endpoint_abs_sq(Endpoint::A) + p.endpoint_abs_sq(Endpoint::B);
    let rhs = c_sq * (p.integrate_abs_sq() + p.differentiate().integrate_abs_sq());
    ExactCertificate::new(CertificateKind::Trace0, lhs, rhs)
}

/// Exact counterpart of [`check_poincare_smooth_sq`].
pub fn check_exact_poincare_smooth_sq(p: &ExactPoly, x0: Endpoint) -> ExactCertificate {
    let lambda = p.lambda_exact();
    let two = ratio(2, 1);
    let lhs = p.integrate_abs_sq();
    let rhs = &two * &lambda * &lambda * p.differentiate().integrate_abs_sq()
        + &two * &lambda * p.endpoint_abs_sq(x0);
    ExactCertificate::new(CertificateKind::PoincareSmoothSq, lhs, rhs)
}
