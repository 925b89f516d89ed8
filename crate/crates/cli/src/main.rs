//! Command-line harness: certificate sweeps, sharp-constant estimation, and
//! constant tables.
//!
//! Exit status: 0 on success, 1 when any certificate or domination check
//! fails (or a runtime error occurs), 2 on usage or config errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sobocheck::harness::{
    parse_config, parse_kinds, run_sharp, run_suite, write_text, FunctionFamily, OutputFormat,
    RunConfig,
};
use sobocheck::sharp::QuotientKind;
use sobocheck::{Error, Interval};

#[derive(Parser)]
#[command(
    name = "sobocheck",
    version,
    about = "Verify trace/Poincare/Friedrichs inequalities on an interval and estimate their sharp constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run certificate suites over seeded function families
    Verify(VerifyArgs),
    /// Estimate sharp constants and check they are dominated
    Sharp(SharpArgs),
    /// Print the explicit constants for a list of lambdas
    Constants(ConstantsArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Config file (flat `key = value` lines, `#` comments)
    #[arg(long)]
    config: Option<PathBuf>,

    /// Interval lengths; repeatable or comma-separated
    #[arg(long = "lambda", value_delimiter = ',')]
    lambda: Vec<f64>,

    /// Family templates: polynomial:N, fourier:K, gaussian_bump, runge, named:sin|cos|exp
    #[arg(long, value_delimiter = ',')]
    families: Vec<String>,

    /// Functions per family per lambda
    #[arg(long)]
    count: Option<usize>,

    /// Master seed for the ChaCha8 generator
    #[arg(long)]
    seed: Option<u64>,

    /// Certificate kinds (comma list of names, or `all`)
    #[arg(long, value_delimiter = ',')]
    kinds: Vec<String>,

    /// Orders checked by trace_jet_m
    #[arg(long = "m-values", value_delimiter = ',')]
    m_values: Vec<usize>,

    /// Report path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,

    /// Report format: json (canonical) or csv (lossy)
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct SharpArgs {
    /// Interval lengths; repeatable or comma-separated
    #[arg(long = "lambda", value_delimiter = ',', required = true)]
    lambda: Vec<f64>,

    /// Quotient kinds (e.g. trace_both, trace_single_a, poincare_dirichlet_a,
    /// friedrichs_form_b); all kinds when omitted
    #[arg(long, value_delimiter = ',')]
    kinds: Vec<String>,

    /// JSON report path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,

    /// Optional CSV of per-lambda constant curves
    #[arg(long)]
    curves: Option<PathBuf>,
}

#[derive(Args)]
struct ConstantsArgs {
    /// Interval lengths; repeatable or comma-separated
    #[arg(long = "lambda", value_delimiter = ',', required = true)]
    lambda: Vec<f64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Config(_) | Error::Descriptor(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> sobocheck::Result<ExitCode> {
    match cli.command {
        Command::Verify(args) => {
            let cfg = build_config(&args)?;
            let report = run_suite(&cfg)?;
            let rendered = report.render();
            match &cfg.output {
                Some(path) => write_text(path, &rendered)?,
                None => print!("{rendered}"),
            }
            eprintln!(
                "{} certificates: {} passed, {} failed",
                report.summary.total, report.summary.passed, report.summary.failed
            );
            Ok(exit_flag(report.all_passed()))
        }
        Command::Sharp(args) => {
            let kinds = parse_quotient_kinds(&args.kinds)?;
            let report = run_sharp(&args.lambda, &kinds)?;
            let rendered = report.to_json_string();
            match &args.out {
                Some(path) => write_text(path, &rendered)?,
                None => print!("{rendered}"),
            }
            if let Some(path) = &args.curves {
                write_text(path, &report.curves_csv())?;
            }
            for e in &report.entries {
                eprintln!(
                    "lambda={} {}: sharp {:.9} <= paper {:.9} (slack {:.3}){}",
                    e.lambda,
                    e.kind,
                    e.value,
                    e.paper_constant,
                    e.slack_vs_paper,
                    if e.dominated { "" } else { "  VIOLATION" }
                );
            }
            Ok(exit_flag(report.passed()))
        }
        Command::Constants(args) => {
            println!(
                "{:>12} {:>14} {:>14} {:>14} {:>14} {:>14}",
                "lambda", "c_trace0", "c_poincare", "c_friedrichs", "c_equiv_lower", "c_equiv_upper"
            );
            for &lambda in &args.lambda {
                let pc = Interval::new(0.0, lambda)?.constants();
                println!(
                    "{:>12.6} {:>14.8} {:>14.8} {:>14.8} {:>14.8} {:>14.8}",
                    lambda,
                    pc.c_trace0,
                    pc.c_poincare,
                    pc.c_friedrichs,
                    pc.c_equiv_lower,
                    pc.c_equiv_upper
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_flag(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// Config file first (when given), then explicit flags override it.
fn build_config(args: &VerifyArgs) -> sobocheck::Result<RunConfig> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.display().to_string(),
                source,
            })?;
            parse_config(&text)?
        }
        None => RunConfig::default(),
    };
    if !args.lambda.is_empty() {
        cfg.lambdas = args.lambda.clone();
    }
    if !args.families.is_empty() {
        cfg.families = args
            .families
            .iter()
            .map(|tok| FunctionFamily::parse(tok))
            .collect::<sobocheck::Result<_>>()?;
    }
    if let Some(count) = args.count {
        cfg.count = count;
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if !args.kinds.is_empty() {
        cfg.kinds = parse_kinds(&args.kinds.join(","))?;
    }
    if !args.m_values.is_empty() {
        cfg.m_values = args.m_values.clone();
    }
    if let Some(out) = &args.out {
        cfg.output = Some(out.clone());
    }
    if let Some(format) = &args.format {
        cfg.format = OutputFormat::parse(format)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn parse_quotient_kinds(tokens: &[String]) -> sobocheck::Result<Vec<QuotientKind>> {
    if tokens.is_empty() || tokens.iter().any(|t| t == "all") {
        return Ok(QuotientKind::all());
    }
    tokens
        .iter()
        .map(|tok| {
            QuotientKind::parse(tok)
                .ok_or_else(|| Error::Config(format!("unknown quotient kind `{tok}`")))
        })
        .collect()
}
