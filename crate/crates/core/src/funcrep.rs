//! Union of the two function backends.

use std::borrow::Cow;

use num_complex::Complex64;

use crate::chebfun::ChebFunction;
use crate::error::Result;
use crate::exact::ExactPoly;
use crate::interval::Interval;

/// A smooth complex-valued function on an interval, in spectral (Chebyshev)
/// or exact-rational-polynomial form.
///
/// Every floating-point norm, trace, and certificate computation runs on the
/// spectral image (see [`FuncRep::to_cheb`]); the methods on [`ExactPoly`]
/// are the independent exact route used to cross-check that pipeline.
#[derive(Debug, Clone)]
pub enum FuncRep {
    Spectral(ChebFunction),
    Exact(ExactPoly),
}

impl FuncRep {
    pub fn interval(&self) -> &Interval {
        match self {
            FuncRep::Spectral(u) => u.interval(),
            FuncRep::Exact(p) => p.interval(),
        }
    }

    /// Spectral view of the function. For the exact backend this interpolates
    /// the polynomial at its own degree, sampling in exact arithmetic.
    pub fn to_cheb(&self) -> Result<Cow<'_, ChebFunction>> {
        match self {
            FuncRep::Spectral(u) => Ok(Cow::Borrowed(u)),
            FuncRep::Exact(p) => Ok(Cow::Owned(p.to_cheb()?)),
        }
    }

    pub fn evaluate(&self, x: f64) -> Result<Complex64> {
        match self {
            FuncRep::Spectral(u) => u.evaluate(x),
            FuncRep::Exact(p) => p.to_cheb()?.evaluate(x),
        }
    }

    /// The function scaled by a complex factor. Exact inputs are scaled on
    /// their spectral image, so the result is always spectral.
    pub fn scaled(&self, alpha: Complex64) -> Result<FuncRep> {
        Ok(FuncRep::Spectral(self.to_cheb()?.scaled(alpha)))
    }
}

impl From<ChebFunction> for FuncRep {
    fn from(u: ChebFunction) -> Self {
        FuncRep::Spectral(u)
    }
}

impl From<ExactPoly> for FuncRep {
    fn from(p: ExactPoly) -> Self {
        FuncRep::Exact(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, GaussianRational, Rational};
    use approx::assert_abs_diff_eq;
    use num_traits::Zero;

    #[test]
    fn backends_agree_on_simple_polynomial() {
        let iv = Interval::new(0.0, 1.0).unwrap();
        // p(x) = 1/2 - x + 2 x^2
        let exact = ExactPoly::new(
            iv,
            vec![
                GaussianRational::new(ratio(1, 2), Rational::zero()),
                GaussianRational::new(ratio(-1, 1), Rational::zero()),
                GaussianRational::new(ratio(2, 1), Rational::zero()),
            ],
        )
        .unwrap();
        let f = FuncRep::Exact(exact);
        let g = FuncRep::Spectral(
            ChebFunction::from_real_samples(iv, 2, |x| 0.5 - x + 2.0 * x * x).unwrap(),
        );
        for k in 0..=10 {
            let x = k as f64 / 10.0;
            let diff = (f.evaluate(x).unwrap() - g.evaluate(x).unwrap()).norm();
            assert_abs_diff_eq!(diff, 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn scaling_multiplies_values() {
        let iv = Interval::new(0.0, 1.0).unwrap();
        let u = FuncRep::Spectral(ChebFunction::from_real_samples(iv, 5, |x| x * x).unwrap());
        let alpha = Complex64::new(2.0, -1.0);
        let v = u.scaled(alpha).unwrap();
        let x = 0.37;
        let want = alpha * u.evaluate(x).unwrap();
        assert_abs_diff_eq!((v.evaluate(x).unwrap() - want).norm(), 0.0, epsilon = 1e-15);
    }
}
