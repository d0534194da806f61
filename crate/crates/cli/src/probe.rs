//! Randomized completeness check: the compatible closure of any ideal must
//! already be a member of the enumerated lattice.

use frobsplit_core::{compatible_closure, CompatibleLattice, Ideal, Monomial, Polynomial, Ring};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;

pub const PROBE_RNG: &str = "ChaCha8Rng::seed_from_u64";
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_PROBES: usize = 100;
pub const DEFAULT_MAX_DEG: u32 = 3;
const MAX_GENERATORS: usize = 2;
const MAX_TERMS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeConfig {
    pub seed: u64,
    pub probes: usize,
    pub max_deg: u32,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { seed: DEFAULT_SEED, probes: DEFAULT_PROBES, max_deg: DEFAULT_MAX_DEG }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeMiss {
    pub index: usize,
    pub generators: Vec<String>,
    pub closure: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub rng: String,
    pub seed: u64,
    pub probes: usize,
    pub max_deg: u32,
    pub misses: Vec<ProbeMiss>,
}

impl ProbeReport {
    pub fn passed(&self) -> bool {
        self.misses.is_empty()
    }
}

fn random_monomial(ring: &Ring, rng: &mut ChaCha8Rng, max_deg: u32) -> Monomial {
    let mut remaining = rng.random_range(0..=max_deg);
    let exps = (0..ring.nvars())
        .map(|_| {
            let e = rng.random_range(0..=remaining);
            remaining -= e;
            e
        })
        .collect();
    Monomial::new(exps)
}

/// At most two generators of at most three terms, total degree at most
/// `max_deg`, nonzero coefficients.
pub fn random_ideal(ring: &Ring, rng: &mut ChaCha8Rng, max_deg: u32) -> Result<Ideal, CliError> {
    let p = ring.characteristic();
    let gens: Vec<Polynomial> = (0..rng.random_range(1..=MAX_GENERATORS))
        .map(|_| {
            let terms: Vec<(Monomial, u32)> = (0..rng.random_range(1..=MAX_TERMS))
                .map(|_| (random_monomial(ring, rng, max_deg), rng.random_range(1..p)))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    Ok(Ideal::new(ring, gens)?)
}

pub fn probe(lattice: &CompatibleLattice, config: ProbeConfig) -> Result<ProbeReport, CliError> {
    let ring = lattice.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut misses = Vec::new();
    for index in 0..config.probes {
        let j = random_ideal(ring, &mut rng, config.max_deg)?;
        let closure = compatible_closure(lattice.splitting(), &j)?;
        if !lattice.contains(&closure) {
            misses.push(ProbeMiss {
                index,
                generators: j.generators().iter().map(|g| g.to_string()).collect(),
                closure: closure.basis().iter().map(|g| g.to_string()).collect(),
            });
        }
    }
    Ok(ProbeReport { rng: PROBE_RNG.into(), seed: config.seed, probes: config.probes, max_deg: config.max_deg, misses })
}
