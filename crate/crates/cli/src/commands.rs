//! The operations behind each subcommand, free of argument parsing and
//! terminal output.

use frobsplit_core::{enumerate_with, validate_splitting, CompatibleLattice, Limits, SequentialExecutor, StepExecutor};

use crate::document::LatticeDocument;
use crate::error::CliError;
use crate::parallel::RayonExecutor;
use crate::probe::{probe, ProbeConfig, ProbeReport};
use crate::session::{CountConvention, SessionSpec};
use frobsplit_core::verify_lattice;

pub const BUDGET_ENV: &str = "FROBSPLIT_BUDGET";

/// `N` sets the pair-reduction limit; `N,M` also sets the closure-round
/// limit.
pub fn parse_budget(text: &str, mut limits: Limits) -> Result<Limits, CliError> {
    let bad = || CliError::Argument(format!("{BUDGET_ENV}={text}: expected `N` or `N,M`"));
    let mut parts = text.split(',').map(str::trim);
    limits.max_pair_reductions = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if let Some(rounds) = parts.next() {
        limits.max_closure_rounds = rounds.parse().map_err(|_| bad())?;
    }
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(limits)
}

/// Session limits, overridden by the environment when set.
pub fn effective_limits(spec: &SessionSpec, env: Option<&str>) -> Result<Limits, CliError> {
    match env {
        Some(text) => parse_budget(text, spec.limits()),
        None => Ok(spec.limits()),
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions<'a> {
    pub parallel: bool,
    pub budget: Option<&'a str>,
}

fn executor(parallel: bool) -> &'static (dyn StepExecutor + Sync) {
    if parallel {
        &RayonExecutor
    } else {
        &SequentialExecutor
    }
}

/// Enumerates and verifies without deciding on success: the returned
/// document carries the verification outcome.
pub fn enumerate_lattice(spec: &SessionSpec, options: RunOptions) -> Result<CompatibleLattice, CliError> {
    let ring = spec.ring_with(effective_limits(spec, options.budget)?);
    let s = validate_splitting(&spec.polynomial(&ring))?;
    Ok(enumerate_with(&s, executor(options.parallel))?)
}

pub fn cmd_enumerate(
    spec: &SessionSpec,
    options: RunOptions,
    convention: CountConvention,
) -> Result<LatticeDocument, CliError> {
    let mut lattice = enumerate_lattice(spec, options)?;
    let report = verify_lattice(lattice.splitting(), &lattice);
    lattice.mark_verified(&report);
    Ok(LatticeDocument::new(spec, &lattice, &report, convention))
}

/// Re-verifies a stored document, typically one edited by hand. The result
/// describes the rebuilt lattice.
pub fn cmd_verify(doc: &LatticeDocument) -> Result<LatticeDocument, CliError> {
    let spec: SessionSpec = doc.input.parse()?;
    let convention = doc.counts.convention.parse().map_err(CliError::Document)?;
    let mut lattice = doc.rebuild()?;
    let report = verify_lattice(lattice.splitting(), &lattice);
    lattice.mark_verified(&report);
    Ok(LatticeDocument::new(&spec, &lattice, &report, convention))
}

pub fn cmd_probe(spec: &SessionSpec, options: RunOptions, config: ProbeConfig) -> Result<ProbeReport, CliError> {
    let lattice = enumerate_lattice(spec, options)?;
    probe(&lattice, config)
}

impl SessionSpec {
    /// Probe settings from the session, falling back to defaults.
    pub fn probe_config(&self) -> ProbeConfig {
        let d = ProbeConfig::default();
        ProbeConfig {
            seed: self.options.seed.unwrap_or(d.seed),
            probes: self.options.probes.unwrap_or(d.probes),
            max_deg: self.options.max_deg.unwrap_or(d.max_deg),
        }
    }
}
