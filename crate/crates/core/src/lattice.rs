//! The finite lattice of compatible ideals: `(0)`, `(1)`, every enumerated
//! compatible prime, and everything reachable from them by sums and
//! intersections.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::enumerate::{CompatiblePrimeNode, VerificationReport};
use crate::error::{Error, Result};
use crate::frobenius::Splitting;
use crate::ideal::Ideal;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Member {
    pub ideal: Ideal,
    /// Krull dimension of `S/I`; `None` for the unit ideal.
    pub dimension: Option<usize>,
    /// Proper nonzero member found as a compatible prime by the recursion.
    pub is_prime: bool,
    /// `(0)` or `(1)`.
    pub is_trivial: bool,
    pub verified: bool,
}

impl Member {
    pub fn key(&self) -> String {
        self.ideal.key()
    }
}

/// Members are sorted by dimension descending (the unit ideal last) and then
/// by canonical key. Hasse edges `(i, j)` mean `members[i] ⊊ members[j]`
/// with nothing strictly between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleLattice {
    splitting: Splitting,
    nodes: Vec<CompatiblePrimeNode>,
    members: Vec<Member>,
    hasse: Vec<(usize, usize)>,
}

impl CompatibleLattice {
    /// Closes `{(0), (1)} ∪ primes` under sum and intersection.
    pub fn close(splitting: Splitting, nodes: Vec<CompatiblePrimeNode>) -> Result<CompatibleLattice> {
        let ring = splitting.ring().clone();
        let mut ideals = Vec::new();
        let mut seen = BTreeSet::new();
        let seeds = [Ideal::zero(&ring), Ideal::unit(&ring)].into_iter().chain(nodes.iter().map(|n| n.prime.clone()));
        for ideal in seeds {
            if seen.insert(ideal.key()) {
                ideals.push(ideal);
            }
        }
        let mut j = 0;
        while j < ideals.len() {
            for i in 0..j {
                for candidate in [ideals[i].sum(&ideals[j])?, ideals[i].intersect(&ideals[j])?] {
                    if seen.insert(candidate.key()) {
                        ideals.push(candidate);
                    }
                }
            }
            j += 1;
        }
        Self::from_ideals(splitting, nodes, ideals)
    }

    /// Builds a lattice from an explicit member list, without closing it.
    /// Duplicates are dropped; `(0)` and `(1)` are not added.
    pub fn from_ideals(
        splitting: Splitting,
        nodes: Vec<CompatiblePrimeNode>,
        ideals: Vec<Ideal>,
    ) -> Result<CompatibleLattice> {
        let ring = splitting.ring().clone();
        let prime_keys: BTreeSet<String> = nodes.iter().filter(|n| !n.prime.is_zero()).map(|n| n.prime.key()).collect();
        let mut unique: BTreeMap<String, Ideal> = BTreeMap::new();
        for ideal in ideals {
            ideal.check_ring(&Ideal::zero(&ring))?;
            unique.entry(ideal.key()).or_insert(ideal);
        }
        let mut members = Vec::with_capacity(unique.len());
        for (key, ideal) in unique {
            let dimension = match ideal.dimension() {
                Ok(d) => Some(d),
                Err(Error::EmptyVariety) => None,
                Err(e) => return Err(e),
            };
            let is_trivial = ideal.is_zero() || ideal.is_unit();
            members.push(Member {
                is_prime: !is_trivial && prime_keys.contains(&key),
                ideal,
                dimension,
                is_trivial,
                verified: false,
            });
        }
        members.sort_by_cached_key(|m| (Reverse(m.dimension.map_or(-1, |d| d as i64)), m.key()));
        let hasse = cover_relation(&members)?;
        Ok(CompatibleLattice { splitting, nodes, members, hasse })
    }

    /// A copy with `ideal` added and nothing recomputed beyond order and
    /// covers. For negative controls.
    pub fn with_member(&self, ideal: Ideal) -> Result<CompatibleLattice> {
        let mut ideals: Vec<Ideal> = self.members.iter().map(|m| m.ideal.clone()).collect();
        ideals.push(ideal);
        Self::from_ideals(self.splitting.clone(), self.nodes.clone(), ideals)
    }

    /// A copy with `ideal` removed. For negative controls.
    pub fn without_member(&self, ideal: &Ideal) -> Result<CompatibleLattice> {
        let ideals = self.members.iter().filter(|m| &m.ideal != ideal).map(|m| m.ideal.clone()).collect();
        Self::from_ideals(self.splitting.clone(), self.nodes.clone(), ideals)
    }

    /// Copies the per-member verdicts of `report` onto the members.
    pub fn mark_verified(&mut self, report: &VerificationReport) {
        for (m, ok) in self.members.iter_mut().zip(&report.member_verified) {
            m.verified = *ok;
        }
    }

    pub fn splitting(&self) -> &Splitting {
        &self.splitting
    }

    pub fn ring(&self) -> &Ring {
        self.splitting.ring()
    }

    /// Recursion nodes in discovery order; node 0 is the root `(0)`.
    pub fn nodes(&self) -> &[CompatiblePrimeNode] {
        &self.nodes
    }

    /// Enumerated compatible primes in member order.
    pub fn primes(&self) -> impl Iterator<Item = &Ideal> {
        self.members.iter().filter(|m| m.is_prime).map(|m| &m.ideal)
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        let key = ideal.key();
        self.members.iter().position(|m| m.key() == key)
    }

    pub fn contains(&self, ideal: &Ideal) -> bool {
        self.index_of(ideal).is_some()
    }

    pub fn proper_nonzero_count(&self) -> usize {
        self.members.iter().filter(|m| !m.is_trivial).count()
    }
}

/// Cover relation of strict containment among distinct ideals.
pub(crate) fn cover_relation(members: &[Member]) -> Result<Vec<(usize, usize)>> {
    let n = members.len();
    let mut below = alloc::vec![alloc::vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                below[i][j] = members[i].ideal.is_subset_of(&members[j].ideal)?;
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if below[i][j] && !(0..n).any(|k| below[i][k] && below[k][j]) {
                edges.push((i, j));
            }
        }
    }
    Ok(edges)
}
