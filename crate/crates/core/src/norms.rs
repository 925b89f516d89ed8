//! Sobolev norms, the two-point boundary space, and the trace maps.
//!
//! Traces are computed by classical endpoint evaluation: every function
//! representation here is smooth, so the trace of order zero is literally the
//! pair of endpoint values and the order-`m-1` jet is the pair of endpoint
//! values of each derivative up to `m-1`.

use num_complex::Complex64;

use crate::chebfun::{ChebFunction, DERIVATIVE_ORDER_CAP};
use crate::error::{Error, Result};
use crate::funcrep::FuncRep;
use crate::interval::{Endpoint, Interval};

/// An element of the boundary space over `{a, b}`: the pair of values
/// `(phi(a), phi(b))` with Euclidean norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceValue {
    pub at_a: Complex64,
    pub at_b: Complex64,
}

impl TraceValue {
    pub fn new(at_a: Complex64, at_b: Complex64) -> Self {
        TraceValue { at_a, at_b }
    }

    pub fn at(&self, e: Endpoint) -> Complex64 {
        match e {
            Endpoint::A => self.at_a,
            Endpoint::B => self.at_b,
        }
    }

    pub fn norm(&self) -> f64 {
        (self.at_a.norm_sqr() + self.at_b.norm_sqr()).sqrt()
    }
}

/// Endpoint values of all derivatives of order `0..m`, i.e. the image of the
/// order-`m-1` trace map. The product space carries the Euclidean combination
/// of the component norms.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceJet {
    entries: Vec<TraceValue>,
}

impl TraceJet {
    pub fn entries(&self) -> &[TraceValue] {
        &self.entries
    }

    /// The `m` of the generating `trace_jet(u, m)` call.
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|t| t.at_a.norm_sqr() + t.at_b.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// Derivative ladder of a function with the `L^2` integrals of each level.
///
/// Batch drivers build one profile per function so each quadrature runs once
/// no matter how many certificates consume it.
#[derive(Debug, Clone)]
pub struct NormProfile {
    interval: Interval,
    derivs: Vec<ChebFunction>,
    l2sq: Vec<f64>,
}

impl NormProfile {
    pub fn new(u: &FuncRep, max_order: usize) -> Result<Self> {
        if max_order > DERIVATIVE_ORDER_CAP {
            return Err(Error::OrderTooHigh {
                order: max_order,
                cap: DERIVATIVE_ORDER_CAP,
            });
        }
        let base = u.to_cheb()?.into_owned();
        let interval = *base.interval();
        let mut derivs = Vec::with_capacity(max_order + 1);
        derivs.push(base);
        for _ in 0..max_order {
            let next = derivs.last().expect("non-empty").differentiate();
            derivs.push(next);
        }
        let l2sq = derivs.iter().map(ChebFunction::integrate_l2sq).collect();
        Ok(NormProfile {
            interval,
            derivs,
            l2sq,
        })
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn max_order(&self) -> usize {
        self.derivs.len() - 1
    }

    /// `int_a^b |u^(j)|^2 dx`.
    pub fn l2sq(&self, j: usize) -> f64 {
        self.l2sq[j]
    }

    /// Squared Sobolev norm of order `m`.
    pub fn h_norm_sq(&self, m: usize) -> f64 {
        self.l2sq[..=m].iter().sum()
    }

    pub fn h_norm(&self, m: usize) -> f64 {
        self.h_norm_sq(m).sqrt()
    }

    /// Endpoint values of the `j`-th derivative.
    pub fn trace(&self, j: usize) -> TraceValue {
        let d = &self.derivs[j];
        TraceValue::new(
            d.evaluate(self.interval.a).expect("endpoint is in the domain"),
            d.evaluate(self.interval.b).expect("endpoint is in the domain"),
        )
    }

    pub fn derivative(&self, j: usize) -> &ChebFunction {
        &self.derivs[j]
    }
}

/// The Sobolev norm `(sum_{j=0..=m} int_a^b |u^(j)|^p dx)^(1/p)`.
///
/// For `p = 2` the derivative integrals are spectrally exact; other exponents
/// go through adaptive quadrature.
pub fn sobolev_norm(u: &FuncRep, m: usize, p: f64) -> Result<f64> {
    if p < 1.0 || !p.is_finite() {
        return Err(Error::InvalidExponent { p });
    }
    if m > DERIVATIVE_ORDER_CAP {
        return Err(Error::OrderTooHigh {
            order: m,
            cap: DERIVATIVE_ORDER_CAP,
        });
    }
    if p == 2.0 {
        return Ok(NormProfile::new(u, m)?.h_norm(m));
    }
    let mut d = u.to_cheb()?.into_owned();
    let mut total = d.integrate_lp(p)?;
    for _ in 0..m {
        d = d.differentiate();
        total += d.integrate_lp(p)?;
    }
    Ok(total.powf(1.0 / p))
}

/// Boundary trace of order zero: `(u(a), u(b))`.
pub fn trace0(u: &FuncRep) -> Result<TraceValue> {
    Ok(NormProfile::new(u, 0)?.trace(0))
}

/// Boundary traces of derivatives `0..m` (the order-`m-1` trace map).
/// `m = 0` is rejected; use [`trace0`] for the single-entry case `m = 1`.
pub fn trace_jet(u: &FuncRep, m: usize) -> Result<TraceJet> {
    if m == 0 || m > DERIVATIVE_ORDER_CAP {
        return Err(Error::InvalidJetOrder {
            m,
            cap: DERIVATIVE_ORDER_CAP,
        });
    }
    let profile = NormProfile::new(u, m - 1)?;
    Ok(TraceJet {
        entries: (0..m).map(|j| profile.trace(j)).collect(),
    })
}

pub fn trace_norm(t: &TraceValue) -> f64 {
    t.norm()
}

pub fn jet_norm(tj: &TraceJet) -> f64 {
    tj.norm()
}
