//! Run configuration and the flat key-value config format.

use std::path::PathBuf;

use serde::Serialize;

use crate::certificate::CertificateKind;
use crate::error::{Error, Result};
use crate::harness::generate::FunctionFamily;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OutputFormat {
    #[serde(rename = "json")]
    Json,
    #[serde(rename = "csv")]
    Csv,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<OutputFormat> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Config(format!("unknown format `{other}`"))),
        }
    }
}

/// Full description of a certificate sweep. Identical configs (including the
/// seed) produce byte-identical reports.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub lambdas: Vec<f64>,
    pub families: Vec<FunctionFamily>,
    pub count: usize,
    pub seed: u64,
    pub kinds: Vec<CertificateKind>,
    pub m_values: Vec<usize>,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            lambdas: vec![0.1, 1.0, 10.0],
            families: vec![
                FunctionFamily::Polynomial { max_degree: 20 },
                FunctionFamily::Fourier { max_modes: 8 },
                FunctionFamily::GaussianBump,
                FunctionFamily::Runge,
            ],
            count: 1000,
            seed: 42,
            kinds: CertificateKind::ALL.to_vec(),
            m_values: vec![2, 3, 4],
            output: None,
            format: OutputFormat::Json,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.lambdas.is_empty() {
            return Err(Error::Config("need at least one lambda".into()));
        }
        if let Some(l) = self.lambdas.iter().find(|l| **l <= 0.0 || !l.is_finite()) {
            return Err(Error::Config(format!("lambda must be positive and finite, got {l}")));
        }
        if self.families.is_empty() {
            return Err(Error::Config("need at least one family".into()));
        }
        if self.count == 0 {
            return Err(Error::Config("count must be at least 1".into()));
        }
        if self.kinds.is_empty() {
            return Err(Error::Config("need at least one certificate kind".into()));
        }
        if let Some(m) = self.m_values.iter().find(|m| !(1..=4).contains(*m)) {
            return Err(Error::Config(format!("m value {m} outside 1..=4")));
        }
        Ok(())
    }
}

/// Parses the flat `key = value` config format (UTF-8, `#` comments).
///
/// Keys mirror the [`RunConfig`] fields: `lambdas`, `families`, `count`,
/// `seed`, `kinds` (names or `all`), `m_values`, `output`, `format`.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.split_once('#') {
            Some((before, _)) => before,
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::Config(format!("line {}: expected `key = value`", lineno + 1))
        })?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "lambdas" => {
                cfg.lambdas = split_list(value)
                    .map(|tok| {
                        tok.parse::<f64>()
                            .map_err(|_| Error::Config(format!("bad lambda `{tok}`")))
                    })
                    .collect::<Result<_>>()?;
            }
            "families" => {
                cfg.families = split_list(value)
                    .map(FunctionFamily::parse)
                    .collect::<Result<_>>()?;
            }
            "count" => {
                cfg.count = value
                    .parse()
                    .map_err(|_| Error::Config(format!("bad count `{value}`")))?;
            }
            "seed" => {
                cfg.seed = value
                    .parse()
                    .map_err(|_| Error::Config(format!("bad seed `{value}`")))?;
            }
            "kinds" => {
                cfg.kinds = parse_kinds(value)?;
            }
            "m_values" => {
                cfg.m_values = split_list(value)
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|_| Error::Config(format!("bad m value `{tok}`")))
                    })
                    .collect::<Result<_>>()?;
            }
            "output" => {
                cfg.output = Some(PathBuf::from(value));
            }
            "format" => {
                cfg.format = OutputFormat::parse(value)?;
            }
            other => {
                return Err(Error::Config(format!("unknown key `{other}`")));
            }
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Parses a kind list, accepting `all` as shorthand for every kind.
pub fn parse_kinds(value: &str) -> Result<Vec<CertificateKind>> {
    if value.trim() == "all" {
        return Ok(CertificateKind::ALL.to_vec());
    }
    split_list(value)
        .map(|tok| {
            CertificateKind::parse(tok)
                .ok_or_else(|| Error::Config(format!("unknown certificate kind `{tok}`")))
        })
        .collect()
}

fn split_list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty())
}
