//! Exact-rational polynomial backend.
//!
//! [`ExactPoly`] mirrors the spectral operations (evaluate, differentiate,
//! squared-modulus integration) in exact Gaussian-rational arithmetic: no
//! rounding occurs in any of them. It serves as the independent oracle route
//! for the floating-point pipeline; conversions in both directions
//! ([`ExactPoly::to_cheb`], [`ExactPoly::from_cheb`]) let the two backends be
//! compared on identical polynomials.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::chebfun::{ChebFunction, DERIVATIVE_ORDER_CAP};
use crate::error::{Error, Result};
use crate::interval::Interval;

pub type Rational = BigRational;

/// Builds `n / d` as an exact rational.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact rational-to-float conversion. Scales the quotient so that it carries
/// about 80 significant bits before the final rounding, so values whose
/// numerator and denominator are individually far outside the `f64` range
/// still convert correctly.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if r.numer().is_zero() {
        return 0.0;
    }
    let negative = r.numer().is_negative();
    let n = r.numer().abs();
    let d = r.denom().clone();
    let shift = 80i64 - (n.bits() as i64 - d.bits() as i64);
    let q = if shift >= 0 {
        (n << shift as usize) / d
    } else {
        n / (d << (-shift) as usize)
    };
    let mut value = ldexp(q.to_f64().unwrap_or(f64::INFINITY), -shift);
    if negative {
        value = -value;
    }
    value
}

fn ldexp(x: f64, mut e: i64) -> f64 {
    let mut r = x;
    while e > 1000 {
        r *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        r *= 2f64.powi(-1000);
        e += 1000;
    }
    r * 2f64.powi(e as i32)
}

/// A complex number with exact rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        GaussianRational::new(ratio(n, 1), Rational::zero())
    }

    /// Exact image of a pair of floats (every finite `f64` is rational).
    pub fn from_f64(re: f64, im: f64) -> Option<Self> {
        Some(GaussianRational {
            re: Rational::from_float(re)?,
            im: Rational::from_float(im)?,
        })
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    pub fn mul_rational(&self, s: &Rational) -> Self {
        GaussianRational {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

/// A polynomial in the monomial basis with Gaussian-rational coefficients on
/// an interval with rational endpoints. All arithmetic is exact.
#[derive(Debug, Clone)]
pub struct ExactPoly {
    interval: Interval,
    a: Rational,
    b: Rational,
    coeffs: Vec<GaussianRational>,
}

impl ExactPoly {
    /// Wraps monomial coefficients (constant term first) on an interval whose
    /// `f64` endpoints are taken exactly. Non-finite endpoints are rejected.
    pub fn new(interval: Interval, coeffs: Vec<GaussianRational>) -> Result<Self> {
        let a = Rational::from_float(interval.a).ok_or(Error::InvalidInterval {
            a: interval.a,
            b: interval.b,
        })?;
        let b = Rational::from_float(interval.b).ok_or(Error::InvalidInterval {
            a: interval.a,
            b: interval.b,
        })?;
        Ok(ExactPoly {
            interval,
            a,
            b,
            coeffs: normalize(coeffs),
        })
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn lambda_exact(&self) -> Rational {
        &self.b - &self.a
    }

    pub fn endpoint_exact(&self, e: crate::interval::Endpoint) -> &Rational {
        match e {
            crate::interval::Endpoint::A => &self.a,
            crate::interval::Endpoint::B => &self.b,
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Horner evaluation at an exact rational point.
    pub fn evaluate(&self, x: &Rational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_rational(x).add(c);
        }
        acc
    }

    /// Evaluates exactly at the rational image of an `f64` point.
    pub fn evaluate_f64(&self, x: f64) -> Result<Complex64> {
        if !self.interval.contains(x) {
            return Err(Error::OutOfDomain {
                x,
                a: self.interval.a,
                b: self.interval.b,
            });
        }
        let xr = Rational::from_float(x).expect("finite by domain check");
        Ok(self.evaluate(&xr).to_complex())
    }

    /// Exact derivative.
    pub fn differentiate(&self) -> ExactPoly {
        if self.degree() == 0 {
            return ExactPoly {
                interval: self.interval,
                a: self.a.clone(),
                b: self.b.clone(),
                coeffs: vec![GaussianRational::zero()],
            };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c.mul_rational(&ratio(j as i64, 1)))
            .collect();
        ExactPoly {
            interval: self.interval,
            a: self.a.clone(),
            b: self.b.clone(),
            coeffs: normalize(coeffs),
        }
    }

    /// Exact product (same interval assumed).
    pub fn multiply(&self, other: &ExactPoly) -> ExactPoly {
        let mut coeffs = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, ci) in self.coeffs.iter().enumerate() {
            for (j, cj) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&ci.mul(cj));
            }
        }
        ExactPoly {
            interval: self.interval,
            a: self.a.clone(),
            b: self.b.clone(),
            coeffs: normalize(coeffs),
        }
    }

    fn conj_poly(&self) -> ExactPoly {
        ExactPoly {
            interval: self.interval,
            a: self.a.clone(),
            b: self.b.clone(),
            coeffs: self.coeffs.iter().map(GaussianRational::conj).collect(),
        }
    }

    /// Exact `int_a^b |u(x)|^2 dx`. The integrand `u * conj(u)` is a
    /// polynomial with rational coefficients.
    pub fn integrate_abs_sq(&self) -> Rational {
        let sq = self.multiply(&self.conj_poly());
        let mut total = Rational::zero();
        let mut pow_a = Rational::one();
        let mut pow_b = Rational::one();
        for (m, c) in sq.coeffs.iter().enumerate() {
            debug_assert!(c.im.is_zero(), "squared modulus must be real");
            pow_a *= &self.a;
            pow_b *= &self.b;
            total += &c.re * (&pow_b - &pow_a) / ratio(m as i64 + 1, 1);
        }
        total
    }

    /// Exact squared Sobolev norm `sum_{j=0..=m} int |u^(j)|^2`.
    pub fn h_norm_sq(&self, m: usize) -> Result<Rational> {
        if m > DERIVATIVE_ORDER_CAP {
            return Err(Error::OrderTooHigh {
                order: m,
                cap: DERIVATIVE_ORDER_CAP,
            });
        }
        let mut total = Rational::zero();
        let mut d = self.clone();
        for j in 0..=m {
            total += d.integrate_abs_sq();
            if j < m {
                d = d.differentiate();
            }
        }
        Ok(total)
    }

    /// Exact squared modulus of the value at an endpoint.
    pub fn endpoint_abs_sq(&self, e: crate::interval::Endpoint) -> Rational {
        let x = self.endpoint_exact(e).clone();
        self.evaluate(&x).norm_sqr()
    }

    /// Spectral image of the same polynomial: interpolation at its own
    /// degree, with samples evaluated in exact arithmetic before rounding.
    pub fn to_cheb(&self) -> Result<ChebFunction> {
        let iv = self.interval;
        ChebFunction::from_samples(iv, self.degree(), |x| {
            let xr = Rational::from_float(x).expect("Lobatto nodes are finite");
            self.evaluate(&xr).to_complex()
        })
    }

    /// Exact monomial image of a Chebyshev series: every stored `f64`
    /// coefficient is taken as the rational it is, and the basis change is
    /// done in rational arithmetic.
    pub fn from_cheb(u: &ChebFunction) -> Result<ExactPoly> {
        let iv = *u.interval();
        let a = Rational::from_float(iv.a).ok_or(Error::InvalidInterval { a: iv.a, b: iv.b })?;
        let b = Rational::from_float(iv.b).ok_or(Error::InvalidInterval { a: iv.a, b: iv.b })?;
        let lambda = &b - &a;
        // t(x) = (2x - a - b) / lambda
        let t0 = -(&a + &b) / &lambda;
        let t1 = ratio(2, 1) / &lambda;

        let n = u.coeffs().len();
        let mut acc = vec![GaussianRational::zero(); n];
        // Chebyshev basis polynomials in x via the three-term recurrence.
        let mut prev: Vec<Rational> = vec![Rational::one()];
        let mut curr: Vec<Rational> = vec![t0.clone(), t1.clone()];
        for (j, c) in u.coeffs().iter().enumerate() {
            let cj = GaussianRational::from_f64(c.re, c.im)
                .expect("stored coefficients are finite");
            let basis: &[Rational] = if j == 0 { &prev } else { &curr };
            for (i, v) in basis.iter().enumerate() {
                acc[i] = acc[i].add(&cj.mul_rational(v));
            }
            if j >= 1 && j + 1 < n {
                // next = 2 t * curr - prev
                let mut next = vec![Rational::zero(); curr.len() + 1];
                for (i, v) in curr.iter().enumerate() {
                    let two_v = v * ratio(2, 1);
                    next[i] += &t0 * &two_v;
                    next[i + 1] += &t1 * &two_v;
                }
                for (i, v) in prev.iter().enumerate() {
                    next[i] -= v;
                }
                prev = std::mem::replace(&mut curr, next);
            }
        }
        Ok(ExactPoly {
            interval: iv,
            a,
            b,
            coeffs: normalize(acc),
        })
    }
}

/// Keeps at least one coefficient; drops exactly-zero leading-degree terms.
fn normalize(mut coeffs: Vec<GaussianRational>) -> Vec<GaussianRational> {
    while coeffs.len() > 1 && coeffs.last().map(GaussianRational::is_zero) == Some(true) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        coeffs.push(GaussianRational::zero());
    }
    coeffs
}
