//! Chebyshev-series representation of smooth complex-valued functions on an
//! interval.
//!
//! A [`ChebFunction`] stores coefficients of the series `sum_j c_j T_j(t)`
//! where `t` is the affine image of `x in [a, b]` in `[-1, 1]`. Construction
//! interpolates through Chebyshev-Lobatto nodes, so polynomials of degree at
//! most `n` are reproduced exactly and analytic functions converge
//! geometrically. Differentiation and squared-modulus integration act on the
//! coefficients and are exact for the represented polynomial up to rounding,
//! which keeps discretization error far below the certificate tolerances.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Trailing coefficients below this fraction of the largest magnitude are
/// chopped at construction.
pub const TRUNCATION_FLOOR_REL: f64 = 1e-14;

/// Highest derivative order accepted by norm and trace operations. Each
/// differentiation of a degree-`n` series can lose O(n^2) accuracy, so the
/// cap keeps round-off well below the certificate tolerances.
pub const DERIVATIVE_ORDER_CAP: usize = 8;

/// Relative tolerance targeted by the adaptive quadrature in
/// [`ChebFunction::integrate_lp`].
pub const LP_QUAD_REL_TOL: f64 = 1e-10;

/// A truncated Chebyshev series on an interval.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebFunction {
    interval: Interval,
    coeffs: Vec<Complex64>,
}

impl ChebFunction {
    /// Wraps explicit Chebyshev coefficients (constant term first). Trailing
    /// coefficients under the truncation floor are chopped.
    pub fn from_coeffs(interval: Interval, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Descriptor("coefficient list must be non-empty".into()));
        }
        for (index, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::Descriptor(format!("coefficient {index} is not finite")));
            }
        }
        Ok(ChebFunction {
            interval,
            coeffs: chop(coeffs),
        })
    }

    /// Interpolates `f` through the `n + 1` Chebyshev-Lobatto nodes mapped to
    /// the interval. Exact (up to rounding) for polynomials of degree <= `n`.
    pub fn from_samples<F>(interval: Interval, n: usize, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Complex64,
    {
        let nodes = lobatto_nodes(&interval, n);
        let mut values = Vec::with_capacity(n + 1);
        for (index, &x) in nodes.iter().enumerate() {
            let v = f(x);
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFiniteSample { index, x });
            }
            values.push(v);
        }
        Ok(ChebFunction {
            interval,
            coeffs: chop(transform(&values)),
        })
    }

    /// Interpolates a real-valued callback.
    pub fn from_real_samples<F>(interval: Interval, n: usize, f: F) -> Result<Self>
    where
        F: Fn(f64) -> f64,
    {
        Self::from_samples(interval, n, |x| Complex64::new(f(x), 0.0))
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Evaluates the series at `x in [a, b]` by Clenshaw recursion.
    pub fn evaluate(&self, x: f64) -> Result<Complex64> {
        if !self.interval.contains(x) {
            return Err(Error::OutOfDomain {
                x,
                a: self.interval.a,
                b: self.interval.b,
            });
        }
        Ok(self.eval_unit(self.interval.to_unit(x)))
    }

    /// Clenshaw evaluation at the reference coordinate `t` (no domain check).
    pub(crate) fn eval_unit(&self, t: f64) -> Complex64 {
        let mut d = Complex64::new(0.0, 0.0);
        let mut dd = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().skip(1).rev() {
            let tmp = d;
            d = 2.0 * t * d - dd + c;
            dd = tmp;
        }
        t * d - dd + self.coeffs[0]
    }

    /// Exact derivative of the represented polynomial, with the chain-rule
    /// factor `2 / lambda` from the affine map to the interval.
    pub fn differentiate(&self) -> ChebFunction {
        let n = self.degree();
        if n == 0 {
            return ChebFunction {
                interval: self.interval,
                coeffs: vec![Complex64::new(0.0, 0.0)],
            };
        }
        let a = &self.coeffs;
        let mut b = vec![Complex64::new(0.0, 0.0); n];
        for j in (1..=n).rev() {
            let carry = if j < n - 1 { b[j + 1] } else { Complex64::new(0.0, 0.0) };
            b[j - 1] = carry + 2.0 * j as f64 * a[j];
        }
        b[0] *= 0.5;
        let scale = 2.0 / self.interval.lambda;
        for c in &mut b {
            *c *= scale;
        }
        ChebFunction {
            interval: self.interval,
            coeffs: chop(b),
        }
    }

    /// Integral of the series over the interval.
    pub fn integrate(&self) -> Complex64 {
        let mut sum = 2.0 * self.coeffs[0];
        for (j, &c) in self.coeffs.iter().enumerate().skip(2).step_by(2) {
            sum += c * (2.0 / (1.0 - (j * j) as f64));
        }
        sum * (0.5 * self.interval.lambda)
    }

    /// `int_a^b |u(x)|^2 dx` by Clenshaw-Curtis quadrature at resolution
    /// `2 * degree + 1`, which is exact for the squared-modulus polynomial.
    pub fn integrate_l2sq(&self) -> f64 {
        let m = 2 * self.degree();
        let nodes = lobatto_nodes(&self.interval, m);
        let values: Vec<Complex64> = nodes
            .iter()
            .map(|&x| {
                let v = self.eval_unit(self.interval.to_unit(x));
                Complex64::new(v.norm_sqr(), 0.0)
            })
            .collect();
        let sq = ChebFunction {
            interval: self.interval,
            coeffs: transform(&values),
        };
        sq.integrate().re.max(0.0)
    }

    /// `int_a^b |u(x)|^p dx` by adaptive composite Simpson quadrature with
    /// relative tolerance [`LP_QUAD_REL_TOL`]. The integrand is not polynomial
    /// for general `p`, so spectral exactness does not apply here.
    pub fn integrate_lp(&self, p: f64) -> Result<f64> {
        if p < 1.0 || !p.is_finite() {
            return Err(Error::InvalidExponent { p });
        }
        let f = |x: f64| self.eval_unit(self.interval.to_unit(x)).norm().powf(p);
        // Coarse scan fixes the absolute tolerance scale.
        let (a, b) = (self.interval.a, self.interval.b);
        let mut scale = 0.0f64;
        for k in 0..=32 {
            let x = a + (b - a) * k as f64 / 32.0;
            scale = scale.max(f(x));
        }
        if scale == 0.0 {
            return Ok(0.0);
        }
        let tol = LP_QUAD_REL_TOL * scale * (b - a);
        Ok(adaptive_simpson(&f, a, b, tol))
    }

    /// The function scaled by a complex factor.
    pub fn scaled(&self, alpha: Complex64) -> ChebFunction {
        ChebFunction {
            interval: self.interval,
            coeffs: self.coeffs.iter().map(|&c| alpha * c).collect(),
        }
    }

    /// Pointwise linear combination `alpha * self + beta * other` (same
    /// interval required; the result has the larger degree).
    pub fn linear_combination(&self, alpha: Complex64, other: &ChebFunction, beta: Complex64) -> ChebFunction {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Complex64::new(0.0, 0.0); len];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] += alpha * c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            coeffs[i] += beta * c;
        }
        ChebFunction {
            interval: self.interval,
            coeffs: chop(coeffs),
        }
    }
}

/// Chebyshev-Lobatto nodes `x_k = map(cos(k pi / n))`, `k = 0..=n`.
/// For `n = 0` the single node is the right endpoint (the `k = 0` limit).
pub fn lobatto_nodes(iv: &Interval, n: usize) -> Vec<f64> {
    if n == 0 {
        return vec![iv.b];
    }
    (0..=n)
        .map(|k| iv.from_unit((k as f64 * std::f64::consts::PI / n as f64).cos()))
        .collect()
}

/// Values at Lobatto nodes -> Chebyshev coefficients (discrete cosine
/// transform of type I with halved first/last weights).
fn transform(values: &[Complex64]) -> Vec<Complex64> {
    let n = values.len() - 1;
    if n == 0 {
        return values.to_vec();
    }
    // cos(j k pi / n) looked up via (j * k) mod 2n.
    let table: Vec<f64> = (0..2 * n)
        .map(|i| (i as f64 * std::f64::consts::PI / n as f64).cos())
        .collect();
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &v) in values.iter().enumerate() {
            let w = if k == 0 || k == n { 0.5 } else { 1.0 };
            acc += v * (w * table[(j * k) % (2 * n)]);
        }
        let cj = if j == 0 || j == n { 2.0 } else { 1.0 };
        coeffs.push(acc * (2.0 / (cj * n as f64)));
    }
    coeffs
}

/// Drops trailing coefficients below `TRUNCATION_FLOOR_REL * max |c|`,
/// always keeping at least the constant term.
fn chop(mut coeffs: Vec<Complex64>) -> Vec<Complex64> {
    let max_mag = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if max_mag == 0.0 {
        coeffs.truncate(1);
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        return coeffs;
    }
    let floor = TRUNCATION_FLOOR_REL * max_mag;
    while coeffs.len() > 1 && coeffs.last().map(|c| c.norm() < floor) == Some(true) {
        coeffs.pop();
    }
    coeffs
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}
