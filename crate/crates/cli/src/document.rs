//! JSON image of an enumerated lattice.
//!
//! The field order is fixed and nothing depends on time or thread
//! scheduling, so equal inputs produce byte-identical documents.

use frobsplit_core::enumerate::CheckResult;
use frobsplit_core::{
    validate_splitting, CompatibleLattice, CompatiblePrimeNode, Ideal, Polynomial, VerificationReport,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::parse::parse_polynomial;
use crate::session::{CountConvention, SessionSpec};

pub const TOOL: &str = "frobsplit";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDocument {
    pub tool: String,
    pub version: String,
    pub input: String,
    pub p: u64,
    pub vars: Vec<String>,
    pub f: String,
    pub members: Vec<MemberDoc>,
    pub hasse: Vec<[usize; 2]>,
    pub nodes: Vec<NodeDoc>,
    pub verification: VerificationDoc,
    pub counts: CountsDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberDoc {
    pub gens: Vec<String>,
    /// Krull dimension; `-1` for the unit ideal.
    pub dim: i64,
    pub is_prime: bool,
    pub is_trivial: bool,
    pub verified: bool,
}

/// A recursion node: the member index of its prime, the index of its parent
/// node, and its depth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDoc {
    pub member: usize,
    pub parent: Option<usize>,
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationDoc {
    pub passed: bool,
    pub checks: Vec<CheckDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsDoc {
    pub convention: String,
    pub reported: usize,
    pub members: usize,
    pub proper_nonzero: usize,
    pub primes: usize,
}

impl LatticeDocument {
    pub fn new(
        spec: &SessionSpec,
        lattice: &CompatibleLattice,
        report: &VerificationReport,
        convention: CountConvention,
    ) -> LatticeDocument {
        let members: Vec<MemberDoc> = lattice
            .members()
            .iter()
            .map(|m| MemberDoc {
                gens: m.ideal.basis().iter().map(|g| g.to_string()).collect(),
                dim: m.dimension.map_or(-1, |d| d as i64),
                is_prime: m.is_prime,
                is_trivial: m.is_trivial,
                verified: m.verified,
            })
            .collect();
        let nodes = lattice
            .nodes()
            .iter()
            .map(|n| NodeDoc {
                member: lattice.index_of(&n.prime).expect("every node prime is a member"),
                parent: n.parent,
                depth: n.depth,
            })
            .collect();
        let proper_nonzero = lattice.proper_nonzero_count();
        let reported = match convention {
            CountConvention::All => lattice.len(),
            CountConvention::ProperNonzero => proper_nonzero,
        };
        LatticeDocument {
            tool: TOOL.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            input: spec.to_string(),
            p: spec.p,
            vars: spec.vars.clone(),
            f: lattice.splitting().polynomial().to_string(),
            members,
            hasse: lattice.hasse_edges().iter().map(|&(i, j)| [i, j]).collect(),
            nodes,
            verification: VerificationDoc {
                passed: report.passed(),
                checks: report.checks.iter().map(CheckDoc::from).collect(),
            },
            counts: CountsDoc {
                convention: convention.as_str().into(),
                reported,
                members: lattice.len(),
                proper_nonzero,
                primes: lattice.primes().count(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents always serialize");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<LatticeDocument, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Rebuilds the lattice from member generators and nodes. Order, flags
    /// and edges are recomputed, not read.
    pub fn rebuild(&self) -> Result<CompatibleLattice, CliError> {
        let spec: SessionSpec = self.input.parse()?;
        let ring = spec.ring();
        let parse = |text: &str| -> Result<Polynomial, CliError> { Ok(parse_polynomial(&ring, text)?) };
        let splitting = validate_splitting(&parse(&self.f)?)?;
        let mut ideals = Vec::with_capacity(self.members.len());
        for m in &self.members {
            let gens = m.gens.iter().map(|g| parse(g)).collect::<Result<Vec<_>, _>>()?;
            ideals.push(Ideal::new(&ring, gens)?);
        }
        let nodes = self
            .nodes
            .iter()
            .map(|n| {
                let prime = ideals
                    .get(n.member)
                    .cloned()
                    .ok_or_else(|| CliError::Document("node member out of range".into()))?;
                Ok(CompatiblePrimeNode { prime, parent: n.parent, depth: n.depth })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(CompatibleLattice::from_ideals(splitting, nodes, ideals)?)
    }

    /// Rebuilds the lattice and requires the recomputed member order and
    /// edges to match the document.
    pub fn to_lattice(&self) -> Result<CompatibleLattice, CliError> {
        let mut lattice = self.rebuild()?;
        let verified: Vec<bool> = self.members.iter().map(|m| m.verified).collect();
        lattice.mark_verified(&VerificationReport { checks: Vec::new(), member_verified: verified });
        let hasse: Vec<[usize; 2]> = lattice.hasse_edges().iter().map(|&(i, j)| [i, j]).collect();
        let same_order = lattice
            .members()
            .iter()
            .zip(&self.members)
            .all(|(m, d)| m.ideal.basis().iter().map(|g| g.to_string()).eq(d.gens.iter().cloned()));
        if lattice.len() != self.members.len() || !same_order || hasse != self.hasse {
            return Err(CliError::Document("members or edges do not match the recomputed lattice".into()));
        }
        Ok(lattice)
    }
}

impl From<&CheckResult> for CheckDoc {
    fn from(c: &CheckResult) -> Self {
        CheckDoc { name: c.name.into(), passed: c.passed, failures: c.failures.clone() }
    }
}

/// Graphviz digraph with an edge from each ideal to the ideals covering it.
pub fn to_dot(doc: &LatticeDocument) -> String {
    let mut out = String::from("digraph compatible_ideals {\n    rankdir=BT;\n    node [shape=box];\n");
    for (i, m) in doc.members.iter().enumerate() {
        let gens = if m.gens.is_empty() { "0".to_string() } else { m.gens.join(", ") };
        let dim = if m.dim < 0 { "empty".to_string() } else { format!("dim {}", m.dim) };
        let style = if m.is_trivial {
            ", style=dashed, color=gray"
        } else if m.is_prime {
            ", peripheries=2"
        } else {
            ""
        };
        out.push_str(&format!("    n{i} [label=\"({gens})\\n{dim}\"{style}];\n"));
    }
    for [i, j] in &doc.hasse {
        out.push_str(&format!("    n{i} -> n{j};\n"));
    }
    out.push_str("}\n");
    out
}
