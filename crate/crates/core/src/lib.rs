//! Numerical toolkit for one-dimensional Sobolev-space inequalities.
//!
//! The crate computes Sobolev norms, boundary traces, and trace norms for
//! smooth complex-valued functions on an interval `[a, b]`; checks every
//! explicit trace/Poincare/Friedrichs inequality with its closed-form
//! constant and emits pass/fail [`certificate::Certificate`]s; and estimates
//! the best-possible constants for the underlying norm quotients via
//! discretized Rayleigh-quotient eigenproblems, confirming the closed-form
//! constants dominate them.
//!
//! Functions live in one of two backends: a Chebyshev spectral form
//! ([`chebfun::ChebFunction`]) used by the floating-point pipeline, and an
//! exact Gaussian-rational polynomial form ([`exact::ExactPoly`]) used as an
//! independent oracle. The [`harness`] module drives seeded batch sweeps and
//! writes JSON/CSV reports.

pub mod certificate;
pub mod chebfun;
pub mod error;
pub mod exact;
pub mod funcrep;
pub mod harness;
pub mod interval;
pub mod norms;
pub mod sharp;

pub use certificate::{Certificate, CertificateKind};
pub use chebfun::ChebFunction;
pub use error::{Error, Result};
pub use exact::ExactPoly;
pub use funcrep::FuncRep;
pub use interval::{Endpoint, Interval, PaperConstants};
pub use norms::{NormProfile, TraceJet, TraceValue};
pub use sharp::{QuotientKind, QuotientSpec, SharpEstimate};
