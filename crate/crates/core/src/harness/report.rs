//! Suite and sweep drivers with JSON/CSV emission.
//!
//! Report rows are emitted in sorted order (lambda ascending, then family,
//! instance, kind), so output is stable no matter how the work is scheduled.
//! JSON is the canonical format; floats print in shortest round-trip decimal
//! form in both formats.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::certificate::{
    check_endpoint_sq_with, check_equiv_with, check_poincare_smooth_sq_with, check_poincare_with,
    check_trace0_with, check_trace_jet_with, check_friedrichs_with, Certificate, CertificateKind,
};
use crate::error::{Error, Result};
use crate::harness::config::RunConfig;
use crate::harness::generate::{generate, instance_seed, FunctionDescriptor, GENERATOR_NAME};
use crate::interval::{Endpoint, Interval};
use crate::norms::NormProfile;
use crate::sharp::{compare_with_paper, estimate_sharp, QuotientKind, QuotientSpec};

/// Aggregate block of a certificate report.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub max_ratio_by_kind: BTreeMap<String, f64>,
}

/// Output of [`run_suite`].
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub generator: &'static str,
    pub config: RunConfig,
    pub summary: SuiteSummary,
    pub certificates: Vec<Certificate>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// CSV rows in the certificate field order, metadata flattened at the end.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::new();
        out.push_str(
            "name,lhs,rhs,constant_used,ratio,margin,pass,tolerance,a,b,lambda,m,x0,descriptor,seed\n",
        );
        for c in &self.certificates {
            let m = c.metadata.m.map(|v| v.to_string()).unwrap_or_default();
            let x0 = c.metadata.x0.map(|e| e.name().to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                c.name,
                c.lhs,
                c.rhs,
                c.constant_used,
                c.ratio,
                c.margin,
                c.pass,
                c.tolerance,
                c.metadata.interval.a,
                c.metadata.interval.b,
                c.metadata.interval.lambda,
                m,
                x0,
                c.metadata.descriptor,
                c.metadata.seed,
            );
        }
        out
    }

    pub fn render(&self) -> String {
        match self.config.format {
            crate::harness::OutputFormat::Json => self.to_json_string(),
            crate::harness::OutputFormat::Csv => self.to_csv_string(),
        }
    }
}

/// Runs every configured certificate on every generated function.
///
/// Emits one [`Certificate`] per `(lambda, family instance, kind, m, x0)`
/// combination; each row carries the descriptor and per-instance seed, so a
/// failing function can be regenerated in isolation.
pub fn run_suite(cfg: &RunConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let mut lambdas = cfg.lambdas.clone();
    lambdas.sort_by(f64::total_cmp);
    let max_order = if cfg.kinds.contains(&CertificateKind::TraceJetM) {
        cfg.m_values.iter().copied().max().unwrap_or(2).max(1)
    } else {
        1
    };
    let mut certificates = Vec::new();
    for (lambda_index, &lambda) in lambdas.iter().enumerate() {
        let interval = Interval::new(0.0, lambda)?;
        for (family_index, family) in cfg.families.iter().enumerate() {
            let fd = FunctionDescriptor::spectral(*family, interval);
            let label = fd.label();
            for instance in 0..cfg.count {
                let seed = instance_seed(cfg.seed, lambda_index, family_index, instance);
                let u = generate(&fd, seed)?;
                let profile = NormProfile::new(&u, max_order)?;
                for kind in &cfg.kinds {
                    emit_kind(&mut certificates, &profile, *kind, &cfg.m_values, &label, seed)?;
                }
            }
        }
    }
    let summary = summarize(&certificates);
    Ok(SuiteReport {
        generator: GENERATOR_NAME,
        config: cfg.clone(),
        summary,
        certificates,
    })
}

fn emit_kind(
    out: &mut Vec<Certificate>,
    profile: &NormProfile,
    kind: CertificateKind,
    m_values: &[usize],
    label: &str,
    seed: u64,
) -> Result<()> {
    let mut push = |mut cert: Certificate| {
        cert.metadata.descriptor = label.to_string();
        cert.metadata.seed = seed;
        out.push(cert);
    };
    match kind {
        CertificateKind::EndpointASq => push(check_endpoint_sq_with(profile, Endpoint::A)),
        CertificateKind::EndpointBSq => push(check_endpoint_sq_with(profile, Endpoint::B)),
        CertificateKind::Trace0 => push(check_trace0_with(profile)),
        CertificateKind::TraceJetM => {
            let mut ms: Vec<usize> = m_values.iter().copied().filter(|m| (2..=4).contains(m)).collect();
            ms.sort_unstable();
            for m in ms {
                push(check_trace_jet_with(profile, m)?);
            }
        }
        CertificateKind::PoincareSmoothSq => {
            for e in [Endpoint::A, Endpoint::B] {
                push(check_poincare_smooth_sq_with(profile, e));
            }
        }
        CertificateKind::Poincare => {
            for e in [Endpoint::A, Endpoint::B] {
                push(check_poincare_with(profile, e));
            }
        }
        CertificateKind::Friedrichs => {
            for e in [Endpoint::A, Endpoint::B] {
                push(check_friedrichs_with(profile, e));
            }
        }
        CertificateKind::EquivUpper => {
            for e in [Endpoint::A, Endpoint::B] {
                push(check_equiv_with(profile, e).1);
            }
        }
        CertificateKind::EquivLower => {
            for e in [Endpoint::A, Endpoint::B] {
                push(check_equiv_with(profile, e).0);
            }
        }
    }
    Ok(())
}

fn summarize(certificates: &[Certificate]) -> SuiteSummary {
    let mut max_ratio_by_kind = BTreeMap::new();
    let mut failed = 0usize;
    for c in certificates {
        if !c.pass {
            failed += 1;
        }
        let entry = max_ratio_by_kind
            .entry(c.name.name().to_string())
            .or_insert(0.0f64);
        if c.ratio > *entry {
            *entry = c.ratio;
        }
    }
    SuiteSummary {
        total: certificates.len(),
        passed: certificates.len() - failed,
        failed,
        max_ratio_by_kind,
    }
}

/// One sharp-constant entry: the estimate plus its domination verdict.
#[derive(Debug, Clone, Serialize)]
pub struct SharpEntry {
    pub kind: QuotientKind,
    pub lambda: f64,
    pub mesh_sizes: Vec<usize>,
    pub raw_values: Vec<f64>,
    pub value: f64,
    pub error_indicator: f64,
    pub extrapolated: bool,
    pub paper_constant: f64,
    pub slack_vs_paper: f64,
    pub dominated: bool,
}

/// Output of [`run_sharp`].
#[derive(Debug, Clone, Serialize)]
pub struct SharpReport {
    pub entries: Vec<SharpEntry>,
    pub all_dominated: bool,
    pub all_extrapolated: bool,
    pub max_error_indicator: f64,
}

impl SharpReport {
    /// The run fails on any domination violation or unconverged extrapolation.
    pub fn passed(&self) -> bool {
        self.all_dominated && self.all_extrapolated
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Per-lambda constant curves: `lambda,kind,paper_constant,sharp_estimate`.
    pub fn curves_csv(&self) -> String {
        let mut out = String::from("lambda,kind,paper_constant,sharp_estimate\n");
        for e in &self.entries {
            let _ = writeln!(out, "{},{},{},{}", e.lambda, e.kind, e.paper_constant, e.value);
        }
        out
    }
}

/// Estimates the sharp constant for every `(lambda, kind)` pair and checks
/// domination by the explicit constants.
pub fn run_sharp(lambdas: &[f64], kinds: &[QuotientKind]) -> Result<SharpReport> {
    if lambdas.is_empty() || kinds.is_empty() {
        return Err(Error::Config("need at least one lambda and one kind".into()));
    }
    let mut lambdas = lambdas.to_vec();
    lambdas.sort_by(f64::total_cmp);
    let mut entries = Vec::new();
    for &lambda in &lambdas {
        let interval = Interval::new(0.0, lambda)?;
        let pc = interval.constants();
        for &kind in kinds {
            let est = estimate_sharp(&QuotientSpec { kind, interval })?;
            let dom = compare_with_paper(&est, &pc);
            entries.push(SharpEntry {
                kind,
                lambda,
                mesh_sizes: est.mesh_sizes,
                raw_values: est.raw_values,
                value: est.value,
                error_indicator: est.error_indicator,
                extrapolated: est.extrapolated,
                paper_constant: dom.paper_constant,
                slack_vs_paper: dom.slack,
                dominated: dom.dominated,
            });
        }
    }
    let all_dominated = entries.iter().all(|e| e.dominated);
    let all_extrapolated = entries.iter().all(|e| e.extrapolated);
    let max_error_indicator = entries
        .iter()
        .map(|e| e.error_indicator)
        .fold(0.0, f64::max);
    Ok(SharpReport {
        entries,
        all_dominated,
        all_extrapolated,
        max_error_indicator,
    })
}

/// Writes a rendered report, reporting the path on failure. The buffer is
/// flushed even when later writes fail, so partial output is preserved.
pub fn write_text(path: &Path, text: &str) -> Result<()> {
    let wrap = |source: std::io::Error| Error::Io {
        path: path.display().to_string(),
        source,
    };
    let file = std::fs::File::create(path).map_err(wrap)?;
    let mut writer = std::io::BufWriter::new(file);
    let write_result = writer.write_all(text.as_bytes());
    let flush_result = writer.flush();
    write_result.map_err(wrap)?;
    flush_result.map_err(wrap)?;
    Ok(())
}
