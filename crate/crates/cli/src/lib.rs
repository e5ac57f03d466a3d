//! Command-line front end for `metacyclic-core`: argument validation, the
//! pipelines behind each subcommand, and text/JSON reports.

pub mod cli;
pub mod report;
mod text;

use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::Parser;
use metacyclic_core::battery::{check_instance, has_failures, instances, summarize, BatteryConfig, InstanceReport};
use metacyclic_core::cycfactor::{classify, factor_xn_minus_1};
use metacyclic_core::group::GroupSpec;
use metacyclic_core::idempotents::{full_set, noncentral_all};
use metacyclic_core::oracle::Oracle;
use metacyclic_core::wedderburn::{base_field, decompose};
use metacyclic_core::{Error, GroupKind, GroupPresentation};
use rand::rngs::ChaCha8Rng;
use rand::{RngExt, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::cli::{Cli, Command, Format, KindArg};
use crate::report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Number of random associativity triples per group of order above 32.
const SPOT_CHECKS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfigError {
    Core(Error),
    Argument(String),
}

impl ConfigError {
    pub fn code(&self) -> &'static str {
        match self {
            ConfigError::Core(e) => e.code(),
            ConfigError::Argument(_) => "InvalidArgument",
        }
    }
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConfigError::Core(e) => write!(f, "{e}"),
            ConfigError::Argument(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for ConfigError {
    fn from(e: Error) -> Self {
        ConfigError::Core(e)
    }
}

/// A validated command.
#[derive(Debug, Clone)]
pub enum RunConfig {
    Factor { q: u64, n: u64, s: Option<u64>, format: Format },
    Decompose { group: GroupPresentation, format: Format },
    Idempotents { group: GroupPresentation, include_noncentral: bool, crt_fallback: bool, format: Format },
    Verify { group: GroupPresentation, seed: u64, format: Format },
    Battery { config: BatteryConfig, seed: u64, format: Format },
}

impl RunConfig {
    pub fn format(&self) -> Format {
        match self {
            RunConfig::Factor { format, .. }
            | RunConfig::Decompose { format, .. }
            | RunConfig::Idempotents { format, .. }
            | RunConfig::Verify { format, .. }
            | RunConfig::Battery { format, .. } => *format,
        }
    }
}

fn parse_group(q: u64, spec: &str) -> Result<GroupPresentation, ConfigError> {
    let spec: GroupSpec = spec.parse()?;
    Ok(spec.with_q(q)?)
}

pub fn validate(cli: &Cli) -> Result<RunConfig, ConfigError> {
    Ok(match &cli.command {
        Command::Factor(a) => {
            base_field(a.q)?;
            match (&a.group, a.n) {
                (Some(spec), _) => {
                    let g = parse_group(a.q, spec)?;
                    RunConfig::Factor { q: a.q, n: g.cyclic_order(), s: Some(g.s()), format: a.format }
                }
                (None, Some(n)) => RunConfig::Factor { q: a.q, n, s: a.s, format: a.format },
                (None, None) => return Err(ConfigError::Argument("factor needs --n or --group".into())),
            }
        }
        Command::Decompose(a) => RunConfig::Decompose { group: parse_group(a.q, &a.group)?, format: a.format },
        Command::Idempotents(a) => RunConfig::Idempotents {
            group: parse_group(a.group.q, &a.group.group)?,
            include_noncentral: a.include_noncentral,
            crt_fallback: a.crt_fallback,
            format: a.group.format,
        },
        Command::Verify(a) => {
            RunConfig::Verify { group: parse_group(a.group.q, &a.group.group)?, seed: a.seed, format: a.group.format }
        }
        Command::Battery(a) => {
            let q_congruence = match &a.q_mod {
                None => None,
                Some(text) => {
                    let bad = || ConfigError::Argument(format!("--q-mod expects r:m, got {text:?}"));
                    let (r, m) = text.split_once(':').ok_or_else(bad)?;
                    let (r, m): (u64, u64) = (r.trim().parse().map_err(|_| bad())?, m.trim().parse().map_err(|_| bad())?);
                    if m == 0 {
                        return Err(bad());
                    }
                    Some((r, m))
                }
            };
            let kinds = match a.kind {
                None => vec![GroupKind::Split, GroupKind::NonSplit],
                Some(KindArg::Split) => vec![GroupKind::Split],
                Some(KindArg::Nonsplit) => vec![GroupKind::NonSplit],
            };
            let config = BatteryConfig { kinds, n_max: a.n_max, qs: a.q.clone(), q_congruence };
            RunConfig::Battery { config, seed: a.seed, format: a.format }
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => json(value),
        Format::Text => text(value),
    }
}

fn error_output(format: Format, code: i32, err: &ConfigError) -> Output {
    let report = ErrorReport { code: err.code().to_string(), message: err.to_string() };
    match format {
        Format::Json => Output { code, stdout: json(&report), stderr: String::new() },
        Format::Text => Output { code, stdout: String::new(), stderr: format!("error[{}]: {}\n", report.code, report.message) },
    }
}

/// Deterministic associativity triples for one group.
fn spot_checks(seed: u64, g: &GroupPresentation) -> Vec<(u64, u64, u64)> {
    let key = seed ^ (g.order() << 32) ^ (g.s() << 16) ^ g.q() ^ ((g.kind() == GroupKind::NonSplit) as u64) << 63;
    let mut rng = ChaCha8Rng::seed_from_u64(key);
    (0..SPOT_CHECKS).map(|_| (rng.random(), rng.random(), rng.random())).collect()
}

/// Runs a validated command. Library errors on valid configurations map
/// to exit code 1 with their machine-readable code.
pub fn run(config: &RunConfig) -> Output {
    let format = config.format();
    let ok = |stdout: String| Output { code: EXIT_OK, stdout, stderr: String::new() };
    let result: Result<Output, ConfigError> = (|| {
        Ok(match config {
            RunConfig::Factor { q, n, s, .. } => {
                let field = base_field(*q)?;
                let mut report = factor_xn_minus_1(*n, &field)?;
                if let Some(s) = s {
                    report = classify(&report, *s)?;
                }
                ok(render(format, &FactorizationInfo::new(&report), text::factorization))
            }
            RunConfig::Decompose { group, .. } => {
                let dec = decompose(group)?;
                ok(render(format, &DecompositionReport::new(&dec), text::decomposition))
            }
            RunConfig::Idempotents { group, include_noncentral, crt_fallback, .. } => {
                let dec = decompose(group)?;
                let oracle = Oracle::new(group, &dec.base);
                let set = full_set(&oracle, &dec, *include_noncentral, *crt_fallback)?;
                let (mut noncentral, mut unavailable) = (Vec::new(), Vec::new());
                if *include_noncentral {
                    for (factor, r) in noncentral_all(&oracle, &dec, *crt_fallback) {
                        match r {
                            Ok(p) => noncentral.push(PairInfo::new(&p)),
                            Err(e) => unavailable.push(UnavailableInfo {
                                factor,
                                code: e.code().to_string(),
                                message: e.to_string(),
                            }),
                        }
                    }
                }
                let report = IdempotentReport {
                    group: GroupInfo::new(group),
                    idempotents: idempotent_infos(&dec.base, &set),
                    noncentral,
                    unavailable,
                };
                ok(render(format, &report, text::idempotents))
            }
            RunConfig::Verify { group, seed, .. } => {
                let r = check_instance(group, &spot_checks(*seed, group));
                let passed = r.failures().next().is_none();
                let report = VerifyReport { group: GroupInfo::new(group), seed: *seed, checks: check_infos(&r), passed };
                let code = if passed { EXIT_OK } else { EXIT_VERIFY };
                Output { code, stdout: render(format, &report, text::verify), stderr: String::new() }
            }
            RunConfig::Battery { config, seed, .. } => {
                let groups = instances(config);
                let reports: Vec<InstanceReport> =
                    groups.par_iter().map(|g| check_instance(g, &spot_checks(*seed, g))).collect();
                let failures = reports
                    .iter()
                    .flat_map(|r| {
                        r.failures().map(|(inv, why)| BatteryFailure {
                            group: r.group.to_string(),
                            invariant: inv.name().to_string(),
                            detail: why.clone(),
                        })
                    })
                    .collect();
                let passed = !has_failures(&reports);
                let report = BatteryReport {
                    instances: groups.len(),
                    seed: *seed,
                    rows: summarize(&reports).iter().map(|(inv, t)| BatteryRow::new(*inv, t)).collect(),
                    failures,
                    passed,
                };
                let code = if passed { EXIT_OK } else { EXIT_VERIFY };
                Output { code, stdout: render(format, &report, text::battery), stderr: String::new() }
            }
        })
    })();
    result.unwrap_or_else(|e| error_output(format, EXIT_INVALID, &e))
}

/// Parses, validates and runs; panics become exit code 2.
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output { code, stdout: String::new(), stderr: rendered }
            } else {
                Output { code, stdout: rendered, stderr: String::new() }
            };
        }
    };
    let config = match validate(&cli) {
        Ok(c) => c,
        Err(e) => {
            let format = match &cli.command {
                Command::Factor(a) => a.format,
                Command::Decompose(a) => a.format,
                Command::Idempotents(a) => a.group.format,
                Command::Verify(a) => a.group.format,
                Command::Battery(a) => a.format,
            };
            return error_output(format, EXIT_INVALID, &e);
        }
    };
    match catch_unwind(AssertUnwindSafe(|| run(&config))) {
        Ok(out) => out,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| String::from("unknown panic"));
            Output { code: EXIT_INTERNAL, stdout: String::new(), stderr: format!("internal error: {msg}\n") }
        }
    }
}
