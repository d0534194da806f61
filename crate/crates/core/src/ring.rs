//! The ambient polynomial ring `F_p[x_1, ..., x_n]`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::MonomialOrder;

/// Work caps. Hitting one is a hard error, never a truncated answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Limits {
    /// S-pair reductions allowed per Buchberger run.
    pub max_pair_reductions: usize,
    /// Rounds of `J <- J + root(f J)` allowed in a compatible closure.
    pub max_closure_rounds: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_pair_reductions: 50_000, max_closure_rounds: 64 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
    limits: Limits,
}

/// Shared handle to a ring; every polynomial carries one.
pub type Ring = Arc<PolyRing>;

impl PolyRing {
    pub fn new<S: Into<String>>(
        field: PrimeField,
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Ring> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("variable {v} declared twice")));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order, limits: Limits::default() }))
    }

    /// Convenience constructor with the default grevlex order.
    pub fn grevlex(p: u64, vars: &[&str]) -> Result<Ring> {
        PolyRing::new(PrimeField::new(p)?, vars.iter().copied(), MonomialOrder::Grevlex)
    }

    pub fn with_limits(&self, limits: Limits) -> Ring {
        Arc::new(PolyRing { limits, ..self.clone() })
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Arc::new(PolyRing { order, ..self.clone() })
    }

    /// Same ring with the variables renamed/reordered by `vars`.
    pub fn with_vars(&self, vars: Vec<String>) -> Result<Ring> {
        let mut r = PolyRing::new(self.field, vars, self.order)?;
        Arc::make_mut(&mut r).limits = self.limits;
        Ok(r)
    }

    /// Ring with one extra variable in front, ordered so that it is
    /// eliminated first. Used for intersections and the Rabinowitsch trick.
    pub fn with_tag(&self) -> Ring {
        let mut name = String::from("_t");
        while self.vars.contains(&name) {
            name.push('_');
        }
        let mut vars = Vec::with_capacity(self.vars.len() + 1);
        vars.push(name);
        vars.extend(self.vars.iter().cloned());
        Arc::new(PolyRing {
            field: self.field,
            vars,
            order: MonomialOrder::Elimination { block: 1 },
            limits: self.limits,
        })
    }

    /// Ring on the variables whose indices are listed in `keep`.
    pub fn subring(&self, keep: &[usize]) -> Result<Ring> {
        let vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let order = match self.order {
            MonomialOrder::Elimination { .. } => MonomialOrder::Grevlex,
            o => o,
        };
        let mut r = PolyRing::new(self.field, vars, order)?;
        Arc::make_mut(&mut r).limits = self.limits;
        Ok(r)
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn describe(&self) -> String {
        let mut s = format!("F_{}[", self.characteristic());
        s.push_str(&self.vars.join(","));
        s.push(']');
        s.to_string()
    }
}

/// Ring identity check used by every binary operation.
pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || (a.field == b.field && a.vars == b.vars && a.order == b.order)
}
