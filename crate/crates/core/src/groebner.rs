//! Buchberger's algorithm with Gebauer–Möller pair elimination and the
//! normal selection strategy.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring};

/// A Gröbner basis of monic polynomials, sorted by leading monomial
/// (largest first). When `reduced` holds it is the unique reduced basis, so
/// two ideals are equal exactly when their bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Basis of the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().filter_map(Polynomial::leading_monomial)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }

    pub(crate) fn from_reduced_parts(ring: &Ring, elements: Vec<Polynomial>) -> Self {
        GroebnerBasis { ring: ring.clone(), elements, reduced: true }
    }
}

/// Full reduction of `f` by monic `basis` elements.
pub(crate) fn reduce(f: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let ring = f.ring();
    let mut remainder: Vec<(Monomial, u32)> = Vec::new();
    let mut pending = f.clone();
    while let Some((m, c)) = pending.leading_term().cloned() {
        let divisor = basis.iter().find_map(|g| {
            let lm = g.leading_monomial()?;
            lm.quotient_of(&m).map(|q| (*g, q))
        });
        match divisor {
            Some((g, q)) => {
                debug_assert_eq!(g.leading_coeff(), 1);
                let step = g.mul_term(&q, c).expect("exponent overflow during reduction");
                pending = &pending - &step;
            }
            None => {
                remainder.push((m, c));
                let rest = pending.terms()[1..].to_vec();
                pending = Polynomial::from_sorted(ring, rest);
            }
        }
    }
    Polynomial::from_sorted(ring, remainder)
}

/// Remainder of `f` modulo `gb`: no term is divisible by a leading monomial
/// of the basis, and it is zero exactly when `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if !same_ring(f.ring(), &gb.ring) {
        return Err(Error::RingMismatch);
    }
    let basis: Vec<&Polynomial> = gb.elements.iter().collect();
    Ok(reduce(f, &basis))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    ring: Ring,
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn active_basis(&self) -> Vec<&Polynomial> {
        self.active.iter().map(|&k| &self.polys[k]).collect()
    }

    fn s_polynomial(&self, pair: &Pair) -> Polynomial {
        let (a, b) = (&self.polys[pair.i], &self.polys[pair.j]);
        let qa = self.lms[pair.i].quotient_of(&pair.lcm).unwrap();
        let qb = self.lms[pair.j].quotient_of(&pair.lcm).unwrap();
        let ta = a.mul_term(&qa, 1).expect("exponent overflow in S-polynomial");
        let tb = b.mul_term(&qb, 1).expect("exponent overflow in S-polynomial");
        &ta - &tb
    }

    /// Gebauer–Möller update after adding the monic polynomial `h`.
    fn insert(&mut self, h: Polynomial) {
        let lh = h.leading_monomial().unwrap().clone();
        let hk = self.polys.len();
        self.polys.push(h);
        self.lms.push(lh.clone());

        let candidates: Vec<(usize, Monomial)> = self.active.iter().map(|&g| (g, lh.lcm(&self.lms[g]))).collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (g, l)) in candidates.iter().enumerate() {
            let coprime = lh.is_coprime(&self.lms[*g]);
            let dominated =
                candidates[idx + 1..].iter().any(|(_, l2)| l2.divides(l)) || kept.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone()));
            }
        }
        let lms = &self.lms;
        self.pairs.retain(|pr| !(lh.divides(&pr.lcm) && lms[pr.i].lcm(&lh) != pr.lcm && lms[pr.j].lcm(&lh) != pr.lcm));
        for (g, l) in kept {
            if !lh.is_coprime(&self.lms[g]) {
                self.pairs.push(Pair { i: g, j: hk, lcm: l });
            }
        }
        self.active.retain(|&g| !lh.divides(&lms[g]));
        self.active.push(hk);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            order.cmp(&pa.lcm, &pb.lcm).then((pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under the ring's
/// monomial order. Deterministic for a fixed input order. Fails with
/// [`Error::BudgetExceeded`] once the ring's pair-reduction limit is spent.
pub fn buchberger(ring: &Ring, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    for g in gens {
        if !same_ring(g.ring(), ring) {
            return Err(Error::RingMismatch);
        }
    }
    let unit = || GroebnerBasis { ring: ring.clone(), elements: alloc::vec![Polynomial::one(ring)], reduced: true };
    let mut engine =
        Engine { ring: ring.clone(), polys: Vec::new(), lms: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for g in gens {
        let h = reduce(g, &engine.active_basis());
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit());
        }
        engine.insert(h.monic());
    }
    let limit = ring.limits().max_pair_reductions;
    let mut spent = 0usize;
    while let Some(pair) = engine.next_pair() {
        spent += 1;
        if spent > limit {
            return Err(Error::BudgetExceeded { what: "Groebner pair reductions", limit });
        }
        let s = engine.s_polynomial(&pair);
        let h = reduce(&s, &engine.active_basis());
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit());
        }
        engine.insert(h.monic());
    }
    Ok(interreduce(ring, engine.active.iter().map(|&k| engine.polys[k].clone()).collect()))
}

/// Turns a minimal Gröbner basis into the reduced one.
fn interreduce(ring: &Ring, minimal: Vec<Polynomial>) -> GroebnerBasis {
    let order = ring.order();
    let mut out = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<&Polynomial> = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p).collect();
        let lead = Polynomial::from_sorted(ring, alloc::vec![g.leading_term().unwrap().clone()]);
        let tail = Polynomial::from_sorted(ring, g.terms()[1..].to_vec());
        let r = &lead + &reduce(&tail, &others);
        out.push(r.monic());
    }
    out.sort_by(|a, b| match (a.leading_monomial(), b.leading_monomial()) {
        (Some(x), Some(y)) => order.cmp(y, x),
        _ => Ordering::Equal,
    });
    GroebnerBasis { ring: ring.clone(), elements: out, reduced: true }
}

/// Checks Buchberger's criterion directly: every S-polynomial reduces to
/// zero. Used by tests as an independent certificate.
pub fn is_groebner_basis(gb: &GroebnerBasis) -> bool {
    let basis: Vec<&Polynomial> = gb.elements.iter().collect();
    for (i, a) in gb.elements.iter().enumerate() {
        for b in &gb.elements[i + 1..] {
            let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
            let l = la.lcm(lb);
            let sa = a.mul_term(&la.quotient_of(&l).unwrap(), b.leading_coeff()).unwrap();
            let sb = b.mul_term(&lb.quotient_of(&l).unwrap(), a.leading_coeff()).unwrap();
            if !reduce(&(&sa - &sb), &basis).is_zero() {
                return false;
            }
        }
    }
    true
}
