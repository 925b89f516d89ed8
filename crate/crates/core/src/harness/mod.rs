//! Batch harness: seeded function families, certificate suites, and
//! sharp-constant sweeps with JSON/CSV reports.

mod config;
mod generate;
mod report;

pub use config::{parse_config, parse_kinds, OutputFormat, RunConfig};
pub use generate::{
    fourier_interpolant, gaussian_bump, generate, generate_exact_polynomial, instance_seed,
    named_function, runge_function, Backend, FunctionDescriptor, FunctionFamily, NamedFunction,
    GENERATOR_NAME,
};
pub use report::{run_sharp, run_suite, write_text, SharpEntry, SharpReport, SuiteReport, SuiteSummary};
