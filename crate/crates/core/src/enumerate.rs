//! Recursive search for compatible primes and the verification pass.
//!
//! Starting from `P = (0)`, every compatible prime strictly above `P`
//! contains `G(P) = P + Z(P)·J(P)`, where `Z(P)` cuts out the zeros of the
//! splitting induced on the regular part of `V(P)` and the Jacobian ideal
//! `J(P)` cuts out its singular part. `Z(P)` is only claimed exact at
//! regular points; at singular points the Jacobian factor is responsible.
//! The children of `P` are the minimal primes of the compatible closure of
//! `G(P)`. Primes strictly ascend along every branch, so depth is at most
//! `n`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::frobenius::{compatible_closure, is_compatible, Splitting};
use crate::ideal::Ideal;
use crate::lattice::CompatibleLattice;
use crate::primes::minimal_primes;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatiblePrimeNode {
    pub prime: Ideal,
    /// Index of the node this prime was first discovered under.
    pub parent: Option<usize>,
    pub depth: usize,
}

/// `P + (((f) + P^[p]) : (P^[p] : P))`.
pub fn z_ideal(s: &Splitting, prime: &Ideal) -> Result<Ideal> {
    let ring = prime.ring();
    let bracket = prime.bracket_power(ring.characteristic() as u64)?;
    let denominator = bracket.colon(prime)?;
    let numerator = Ideal::principal(s.polynomial().clone())?.sum(&bracket)?;
    let z = prime.sum(&numerator.colon(&denominator)?)?;
    if z.is_subset_of(prime)? {
        return Err(Error::Internal(format!("zero ideal of the induced splitting on {prime} is degenerate")));
    }
    Ok(z)
}

/// Children of `P`: minimal primes of `A(P + Z(P)·J(P))`, each checked to be
/// compatible and to strictly contain `P`.
pub fn recursion_step(s: &Splitting, prime: &Ideal) -> Result<Vec<Ideal>> {
    let z = z_ideal(s, prime)?;
    let g = prime.sum(&z.product(&prime.jacobian_ideal()?)?)?;
    let t = compatible_closure(s, &g)?;
    if t.is_unit() {
        return Ok(Vec::new());
    }
    let children = minimal_primes(&t)?;
    for child in &children {
        if !is_compatible(s, child)? {
            return Err(Error::Internal(format!("component {child} of {t} is not compatible")));
        }
        if !prime.is_subset_of(child)? || child == prime {
            return Err(Error::Internal(format!("child {child} does not strictly contain {prime}")));
        }
    }
    Ok(children)
}

/// Runs one breadth-first level of recursion steps. Results must come back
/// in frontier order.
pub trait StepExecutor {
    fn run(&self, s: &Splitting, frontier: &[Ideal]) -> Vec<Result<Vec<Ideal>>>;
}

pub struct SequentialExecutor;

impl StepExecutor for SequentialExecutor {
    fn run(&self, s: &Splitting, frontier: &[Ideal]) -> Vec<Result<Vec<Ideal>>> {
        frontier.iter().map(|p| recursion_step(s, p)).collect()
    }
}

/// Enumerates the compatible primes level by level and closes them into a
/// lattice. The result is not verified.
pub fn enumerate_with<E: StepExecutor + ?Sized>(s: &Splitting, executor: &E) -> Result<CompatibleLattice> {
    if !s.is_validated() {
        return Err(Error::NotASplitting { trace: crate::frobenius::trace(s.polynomial()).to_string() });
    }
    let ring = s.ring();
    let n = ring.nvars();
    let mut nodes = vec![CompatiblePrimeNode { prime: Ideal::zero(ring), parent: None, depth: 0 }];
    let mut seen: BTreeSet<String> = BTreeSet::new();
    seen.insert(nodes[0].prime.key());
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let ideals: Vec<Ideal> = frontier.iter().map(|&i| nodes[i].prime.clone()).collect();
        let results = executor.run(s, &ideals);
        if results.len() != frontier.len() {
            return Err(Error::Internal("executor returned the wrong number of results".into()));
        }
        let mut next = Vec::new();
        for (&parent, result) in frontier.iter().zip(results) {
            for child in result? {
                if !seen.insert(child.key()) {
                    continue;
                }
                let depth = nodes[parent].depth + 1;
                if depth > n {
                    return Err(Error::Internal(format!("recursion depth {depth} exceeds {n} at {child}")));
                }
                next.push(nodes.len());
                nodes.push(CompatiblePrimeNode { prime: child, parent: Some(parent), depth });
            }
        }
        frontier = next;
    }
    CompatibleLattice::close(s.clone(), nodes)
}

/// Enumerates sequentially, verifies, and fails on any verification error.
pub fn enumerate_all(s: &Splitting) -> Result<CompatibleLattice> {
    let mut lattice = enumerate_with(s, &SequentialExecutor)?;
    let report = verify_lattice(s, &lattice);
    if !report.passed() {
        return Err(Error::VerificationFailed(report.summary()));
    }
    lattice.mark_verified(&report);
    Ok(lattice)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    /// Per member, in lattice order: passed every member-local check.
    pub member_verified: Vec<bool>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// One line per failing check.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in self.checks.iter().filter(|c| !c.passed) {
            if !out.is_empty() {
                out.push_str("; ");
            }
            out.push_str(&format!("{}: {}", c.name, c.failures.join(", ")));
        }
        out
    }
}

pub const CHECK_TRIVIAL: &str = "trivial_members";
pub const CHECK_COMPATIBLE: &str = "a_compatible";
pub const CHECK_CONTAINS_F: &str = "b_contains_f";
pub const CHECK_MINIMUM: &str = "c_minimum";
pub const CHECK_PRIMES: &str = "d_minimal_primes";
pub const CHECK_CLOSED: &str = "e_sum_intersection";

/// Checks a lattice against `s`. Never fails; problems go into the report.
pub fn verify_lattice(s: &Splitting, lattice: &CompatibleLattice) -> VerificationReport {
    let members = lattice.members();
    let ring = s.ring();
    let f = s.polynomial();
    let mut local_ok = vec![true; members.len()];
    let proper: Vec<usize> = (0..members.len()).filter(|&i| !members[i].is_trivial).collect();

    let mut trivial = Vec::new();
    for t in [Ideal::zero(ring), Ideal::unit(ring)] {
        if !lattice.contains(&t) {
            trivial.push(format!("{t} missing"));
        }
    }

    let mut compatible = Vec::new();
    let mut contains_f = Vec::new();
    let mut primes = Vec::new();
    for &i in &proper {
        let ideal = &members[i].ideal;
        match is_compatible(s, ideal) {
            Ok(true) => {}
            Ok(false) => {
                compatible.push(ideal.to_string());
                local_ok[i] = false;
            }
            Err(e) => {
                compatible.push(format!("{ideal} ({e})"));
                local_ok[i] = false;
            }
        }
        match ideal.contains(f) {
            Ok(true) => {}
            Ok(false) => {
                contains_f.push(ideal.to_string());
                local_ok[i] = false;
            }
            Err(e) => {
                contains_f.push(format!("{ideal} ({e})"));
                local_ok[i] = false;
            }
        }
        match minimal_primes(ideal) {
            Ok(ps) => {
                for q in ps.iter().filter(|q| !lattice.contains(q)) {
                    primes.push(format!("{q} of {ideal}"));
                    local_ok[i] = false;
                }
            }
            Err(e) => {
                primes.push(format!("{ideal} ({e})"));
                local_ok[i] = false;
            }
        }
    }

    let minimum = check_minimum(s, lattice, &proper);

    let mut closed = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let (a, b) = (&members[i].ideal, &members[j].ideal);
            match (a.sum(b), a.intersect(b)) {
                (Ok(sum), Ok(meet)) => {
                    if !lattice.contains(&sum) {
                        closed.push(format!("{a} + {b} = {sum}"));
                    }
                    if !lattice.contains(&meet) {
                        closed.push(format!("{a} ∩ {b} = {meet}"));
                    }
                }
                (Err(e), _) | (_, Err(e)) => closed.push(format!("{a}, {b} ({e})")),
            }
        }
    }

    let check = |name, failures: Vec<String>| CheckResult { name, passed: failures.is_empty(), failures };
    VerificationReport {
        checks: vec![
            check(CHECK_TRIVIAL, trivial),
            check(CHECK_COMPATIBLE, compatible),
            check(CHECK_CONTAINS_F, contains_f),
            check(CHECK_MINIMUM, minimum),
            check(CHECK_PRIMES, primes),
            check(CHECK_CLOSED, closed),
        ],
        member_verified: local_ok,
    }
}

/// The proper nonzero members have a unique minimal element, it equals
/// `A((f))`, and every enumerated prime contains it. With no proper nonzero
/// members, `A((f))` must be trivial.
fn check_minimum(s: &Splitting, lattice: &CompatibleLattice, proper: &[usize]) -> Vec<String> {
    let members = lattice.members();
    let closure = Ideal::principal(s.polynomial().clone()).and_then(|pf| compatible_closure(s, &pf));
    let closure = match closure {
        Ok(c) => c,
        Err(e) => return vec![format!("closure of (f) failed ({e})")],
    };
    if proper.is_empty() {
        return if closure.is_unit() || closure.is_zero() {
            Vec::new()
        } else {
            vec![format!("closure {closure} of (f) is missing")]
        };
    }
    let below = |a: usize, b: usize| members[a].ideal.is_subset_of(&members[b].ideal).unwrap_or(false);
    let minimal: Vec<usize> =
        proper.iter().copied().filter(|&i| !proper.iter().any(|&k| k != i && below(k, i))).collect();
    let mut failures = Vec::new();
    match minimal.as_slice() {
        [m] if members[*m].ideal == closure => {}
        [m] => failures.push(format!("minimum {} differs from closure {closure} of (f)", members[*m].ideal)),
        many => failures.push(format!(
            "{} minimal proper members: {}",
            many.len(),
            many.iter().map(|&i| members[i].ideal.to_string()).collect::<Vec<_>>().join(" ")
        )),
    }
    for p in lattice.primes() {
        if !closure.is_subset_of(p).unwrap_or(false) {
            failures.push(format!("prime {p} does not contain {closure}"));
        }
    }
    failures
}
