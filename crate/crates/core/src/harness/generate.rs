//! Seeded function families.
//!
//! A [`FunctionDescriptor`] plus a seed reproduces a function bit-for-bit:
//! every family draws from a ChaCha8 stream in a fixed order, and the
//! interpolation degrees are fixed constants.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chebfun::ChebFunction;
use crate::error::{Error, Result};
use crate::exact::{ratio, ExactPoly, GaussianRational};
use crate::funcrep::FuncRep;
use crate::interval::Interval;

/// Generator embedded in reports; draws are reproducible only with the same
/// generator and draw order.
pub const GENERATOR_NAME: &str = "ChaCha8";

/// Interpolation degree of a Fourier-mode sum is `4 * max_mode + 16`.
pub const FOURIER_DEGREE_PER_MODE: usize = 4;
pub const FOURIER_DEGREE_BASE: usize = 16;
/// Interpolation degree of the Gaussian bump family.
pub const GAUSSIAN_DEGREE: usize = 64;
/// Interpolation degree of the Runge family.
pub const RUNGE_DEGREE: usize = 128;
/// Interpolation degree of the named analytic functions.
pub const NAMED_DEGREE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFunction {
    Sin,
    Cos,
    Exp,
}

impl NamedFunction {
    pub fn name(self) -> &'static str {
        match self {
            NamedFunction::Sin => "sin",
            NamedFunction::Cos => "cos",
            NamedFunction::Exp => "exp",
        }
    }

    fn apply(self, x: f64) -> f64 {
        match self {
            NamedFunction::Sin => x.sin(),
            NamedFunction::Cos => x.cos(),
            NamedFunction::Exp => x.exp(),
        }
    }
}

/// A family template; the interval and seed complete it to a function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionFamily {
    /// Random Chebyshev coefficients in the complex unit box, with the degree
    /// drawn uniformly from `0..=max_degree`.
    Polynomial { max_degree: usize },
    /// Random complex sine/cosine mode sums with the mode count drawn from
    /// `1..=max_modes`.
    Fourier { max_modes: usize },
    /// Complex-amplitude Gaussian with drawn center and width.
    GaussianBump,
    /// Complex-amplitude `1 / (1 + 25 t^2)` in the reference coordinate.
    Runge,
    Named(NamedFunction),
}

impl FunctionFamily {
    /// Parses a config token: `polynomial:20`, `fourier:8`, `gaussian_bump`,
    /// `runge`, `named:sin`.
    pub fn parse(token: &str) -> Result<FunctionFamily> {
        let (head, arg) = match token.split_once(':') {
            Some((h, a)) => (h.trim(), Some(a.trim())),
            None => (token.trim(), None),
        };
        let bad = || Error::Descriptor(format!("unrecognized family token `{token}`"));
        match (head, arg) {
            ("polynomial", Some(d)) => Ok(FunctionFamily::Polynomial {
                max_degree: d.parse().map_err(|_| bad())?,
            }),
            ("polynomial", None) => Ok(FunctionFamily::Polynomial { max_degree: 20 }),
            ("fourier", Some(m)) => Ok(FunctionFamily::Fourier {
                max_modes: m.parse().map_err(|_| bad())?,
            }),
            ("fourier", None) => Ok(FunctionFamily::Fourier { max_modes: 8 }),
            ("gaussian_bump", None) => Ok(FunctionFamily::GaussianBump),
            ("runge", None) => Ok(FunctionFamily::Runge),
            ("named", Some("sin")) => Ok(FunctionFamily::Named(NamedFunction::Sin)),
            ("named", Some("cos")) => Ok(FunctionFamily::Named(NamedFunction::Cos)),
            ("named", Some("exp")) => Ok(FunctionFamily::Named(NamedFunction::Exp)),
            _ => Err(bad()),
        }
    }

    pub fn token(&self) -> String {
        match self {
            FunctionFamily::Polynomial { max_degree } => format!("polynomial:{max_degree}"),
            FunctionFamily::Fourier { max_modes } => format!("fourier:{max_modes}"),
            FunctionFamily::GaussianBump => "gaussian_bump".to_string(),
            FunctionFamily::Runge => "runge".to_string(),
            FunctionFamily::Named(f) => format!("named:{}", f.name()),
        }
    }
}

impl std::fmt::Display for FunctionFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.token())
    }
}

impl Serialize for FunctionFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.token())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Backend {
    #[serde(rename = "spectral")]
    Spectral,
    #[serde(rename = "exact")]
    Exact,
}

/// Everything needed (besides the seed) to regenerate a function.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FunctionDescriptor {
    pub family: FunctionFamily,
    pub interval: Interval,
    pub backend: Backend,
}

impl FunctionDescriptor {
    pub fn spectral(family: FunctionFamily, interval: Interval) -> Self {
        FunctionDescriptor {
            family,
            interval,
            backend: Backend::Spectral,
        }
    }

    /// Comma-free label used in certificate metadata and CSV rows.
    pub fn label(&self) -> String {
        match self.backend {
            Backend::Spectral => self.family.token(),
            Backend::Exact => format!("{};exact", self.family.token()),
        }
    }
}

/// Per-instance seed: a splitmix64 scramble of the master seed with the
/// lambda/family/instance indices packed into disjoint bit ranges.
pub fn instance_seed(master: u64, lambda_index: usize, family_index: usize, instance: usize) -> u64 {
    splitmix64(
        master
            ^ ((lambda_index as u64) << 48)
            ^ ((family_index as u64) << 40)
            ^ instance as u64,
    )
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn draw_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    let re = rng.gen_range(-1.0..=1.0);
    let im = rng.gen_range(-1.0..=1.0);
    Complex64::new(re, im)
}

/// Deterministically generates the function described by `fd` from `seed`.
pub fn generate(fd: &FunctionDescriptor, seed: u64) -> Result<FuncRep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let iv = fd.interval;
    match (fd.family, fd.backend) {
        (FunctionFamily::Polynomial { max_degree }, Backend::Spectral) => {
            let degree = rng.gen_range(0..=max_degree);
            let coeffs = (0..=degree).map(|_| draw_complex(&mut rng)).collect();
            Ok(FuncRep::Spectral(ChebFunction::from_coeffs(iv, coeffs)?))
        }
        (FunctionFamily::Polynomial { max_degree }, Backend::Exact) => Ok(FuncRep::Exact(
            draw_exact_polynomial(iv, max_degree, &mut rng)?,
        )),
        (FunctionFamily::Fourier { max_modes }, Backend::Spectral) => {
            if max_modes == 0 {
                return Err(Error::Descriptor("fourier family needs max_modes >= 1".into()));
            }
            let modes = rng.gen_range(1..=max_modes);
            let sin_coeffs: Vec<Complex64> = (0..modes).map(|_| draw_complex(&mut rng)).collect();
            let cos_coeffs: Vec<Complex64> = (0..modes).map(|_| draw_complex(&mut rng)).collect();
            Ok(FuncRep::Spectral(fourier_interpolant(
                iv,
                &sin_coeffs,
                &cos_coeffs,
            )?))
        }
        (FunctionFamily::GaussianBump, Backend::Spectral) => {
            let center = iv.a + iv.lambda * rng.gen_range(0.2..=0.8);
            let width = iv.lambda * rng.gen_range(0.2..=0.5);
            let amplitude = draw_complex(&mut rng);
            Ok(FuncRep::Spectral(gaussian_bump(iv, center, width, amplitude)?))
        }
        (FunctionFamily::Runge, Backend::Spectral) => {
            let amplitude = draw_complex(&mut rng);
            Ok(FuncRep::Spectral(runge_function(iv, amplitude)?))
        }
        (FunctionFamily::Named(f), Backend::Spectral) => {
            Ok(FuncRep::Spectral(named_function(iv, f)?))
        }
        (family, Backend::Exact) => Err(Error::Descriptor(format!(
            "family {} does not support the exact backend",
            family.token()
        ))),
    }
}

/// Random exact polynomial with small-rational coefficients (numerators in
/// `-10..=10`, denominators in `1..=10`).
pub fn generate_exact_polynomial(iv: Interval, max_degree: usize, seed: u64) -> Result<ExactPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    draw_exact_polynomial(iv, max_degree, &mut rng)
}

fn draw_exact_polynomial(
    iv: Interval,
    max_degree: usize,
    rng: &mut ChaCha8Rng,
) -> Result<ExactPoly> {
    let degree = rng.gen_range(0..=max_degree);
    let coeffs = (0..=degree)
        .map(|_| {
            let re = ratio(rng.gen_range(-10..=10), rng.gen_range(1..=10));
            let im = ratio(rng.gen_range(-10..=10), rng.gen_range(1..=10));
            GaussianRational::new(re, im)
        })
        .collect();
    ExactPoly::new(iv, coeffs)
}

/// `sum_k sin_coeffs[k-1] sin(k pi (x - a) / lambda) + cos_coeffs[k-1]
/// cos(k pi (x - a) / lambda)`, interpolated at degree `4 * k_max + 16`.
pub fn fourier_interpolant(
    iv: Interval,
    sin_coeffs: &[Complex64],
    cos_coeffs: &[Complex64],
) -> Result<ChebFunction> {
    let k_max = sin_coeffs.len().max(cos_coeffs.len()).max(1);
    let degree = FOURIER_DEGREE_PER_MODE * k_max + FOURIER_DEGREE_BASE;
    ChebFunction::from_samples(iv, degree, |x| {
        let s = std::f64::consts::PI * (x - iv.a) / iv.lambda;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in sin_coeffs.iter().enumerate() {
            acc += c * ((k + 1) as f64 * s).sin();
        }
        for (k, c) in cos_coeffs.iter().enumerate() {
            acc += c * ((k + 1) as f64 * s).cos();
        }
        acc
    })
}

/// `amplitude * exp(-((x - center) / width)^2)` at degree 64.
pub fn gaussian_bump(
    iv: Interval,
    center: f64,
    width: f64,
    amplitude: Complex64,
) -> Result<ChebFunction> {
    ChebFunction::from_samples(iv, GAUSSIAN_DEGREE, |x| {
        let r = (x - center) / width;
        amplitude * (-r * r).exp()
    })
}

/// `amplitude / (1 + 25 t^2)` with `t` the reference coordinate, at degree 128.
pub fn runge_function(iv: Interval, amplitude: Complex64) -> Result<ChebFunction> {
    ChebFunction::from_samples(iv, RUNGE_DEGREE, |x| {
        let t = iv.to_unit(x);
        amplitude / (1.0 + 25.0 * t * t)
    })
}

/// One of the named analytic functions at degree 64.
pub fn named_function(iv: Interval, f: NamedFunction) -> Result<ChebFunction> {
    ChebFunction::from_samples(iv, NAMED_DEGREE, |x| Complex64::new(f.apply(x), 0.0))
}
