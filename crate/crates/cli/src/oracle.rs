//! Brute-force check of the enumeration for coordinate splittings: every
//! ideal generated by squarefree monomials, filtered by compatibility.

use std::collections::BTreeSet;

use frobsplit_core::{
    enumerate_with, is_compatible, validate_splitting, Ideal, Monomial, PolyRing, Polynomial, Ring, Splitting,
    StepExecutor,
};
use serde::Serialize;

use crate::error::CliError;

pub const MAX_ORACLE_VARS: usize = 3;
const NAMES: [&str; MAX_ORACLE_VARS] = ["x", "y", "z"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub p: u64,
    pub agree: bool,
    pub oracle_count: usize,
    pub enumerated_count: usize,
    pub oracle: Vec<String>,
    pub enumerated: Vec<String>,
    pub missing: Vec<String>,
    pub extra: Vec<String>,
}

fn oracle_ring(n: usize, p: u64) -> Result<Ring, CliError> {
    if n == 0 || n > MAX_ORACLE_VARS {
        return Err(CliError::Argument(format!("oracle needs 1 <= n <= {MAX_ORACLE_VARS}, got {n}")));
    }
    Ok(PolyRing::grevlex(p, &NAMES[..n])?)
}

/// `(x_1⋯x_n)^{p-1}`.
pub fn coordinate_splitting(n: usize, p: u64) -> Result<Splitting, CliError> {
    let ring = oracle_ring(n, p)?;
    let product = (0..n).fold(Polynomial::one(&ring), |a, i| &a * &Polynomial::var(&ring, i));
    Ok(validate_splitting(&product.pow(p as u32 - 1))?)
}

/// All distinct ideals generated by sets of squarefree monomials, `(0)` and
/// `(1)` included.
pub fn squarefree_monomial_ideals(ring: &Ring) -> Result<Vec<Ideal>, CliError> {
    let n = ring.nvars();
    let monomials: Vec<Polynomial> = (0u32..1 << n)
        .map(|mask| {
            let exps = (0..n).map(|i| (mask >> i) & 1).collect();
            Polynomial::monomial(ring, Monomial::new(exps), 1)
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for subset in 0u64..1 << monomials.len() {
        let gens = (0..monomials.len()).filter(|i| subset >> i & 1 == 1).map(|i| monomials[i].clone());
        let ideal = Ideal::new(ring, gens)?;
        if seen.insert(ideal.key()) {
            out.push(ideal);
        }
    }
    Ok(out)
}

/// Squarefree monomial ideals compatible with the coordinate splitting.
pub fn monomial_oracle(n: usize, p: u64) -> Result<Vec<Ideal>, CliError> {
    let s = coordinate_splitting(n, p)?;
    let mut out = Vec::new();
    for ideal in squarefree_monomial_ideals(s.ring())? {
        if is_compatible(&s, &ideal)? {
            out.push(ideal);
        }
    }
    Ok(out)
}

pub fn cmd_oracle<E: StepExecutor + ?Sized>(n: usize, p: u64, executor: &E) -> Result<OracleReport, CliError> {
    let oracle: BTreeSet<String> = monomial_oracle(n, p)?.iter().map(Ideal::key).collect();
    let lattice = enumerate_with(&coordinate_splitting(n, p)?, executor)?;
    let enumerated: BTreeSet<String> = lattice.members().iter().map(|m| m.key()).collect();
    Ok(OracleReport {
        n,
        p,
        agree: oracle == enumerated,
        oracle_count: oracle.len(),
        enumerated_count: enumerated.len(),
        missing: oracle.difference(&enumerated).cloned().collect(),
        extra: enumerated.difference(&oracle).cloned().collect(),
        oracle: oracle.into_iter().collect(),
        enumerated: enumerated.into_iter().collect(),
    })
}
