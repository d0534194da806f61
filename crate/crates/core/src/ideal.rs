//! Ideals of `F_p[x_1, ..., x_n]` and the ideal-level operations built on
//! Gröbner bases.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, normal_form, GroebnerBasis};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring};

/// An ideal given by generators together with its reduced Gröbner basis.
///
/// The basis is computed when the ideal is built and is its identity: two
/// ideals compare equal exactly when their reduced bases agree. `(0)` has
/// no generators; `(1)` has basis `{1}`.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: GroebnerBasis,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.gb.elements() == other.gb.elements()
    }
}

impl Eq for Ideal {}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        if self.gb.is_zero_ideal() {
            f.write_str("0")?;
        }
        for (k, g) in self.gb.elements().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let gb = buchberger(ring, &gens)?;
        Ok(Ideal { ring: ring.clone(), gens, gb })
    }

    pub fn from_groebner(gb: GroebnerBasis) -> Ideal {
        Ideal { ring: gb.ring().clone(), gens: gb.elements().to_vec(), gb }
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, []).expect("zero ideal")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, [Polynomial::one(ring)]).expect("unit ideal")
    }

    pub fn principal(f: Polynomial) -> Result<Ideal> {
        let ring = f.ring().clone();
        Ideal::new(&ring, [f])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Generators as supplied (zeros dropped).
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Reduced Gröbner basis elements.
    pub fn basis(&self) -> &[Polynomial] {
        self.gb.elements()
    }

    pub fn is_zero(&self) -> bool {
        self.gb.is_zero_ideal()
    }

    pub fn is_unit(&self) -> bool {
        self.gb.is_unit()
    }

    /// Generated by monomials. Equivalent to the reduced basis consisting of
    /// monomials.
    pub fn is_monomial(&self) -> bool {
        self.basis().iter().all(Polynomial::is_monomial)
    }

    pub fn is_principal(&self) -> bool {
        self.basis().len() == 1
    }

    /// Canonical text of the reduced basis, e.g. `(x, y^2)`; the ideal's
    /// identity as a string.
    pub fn key(&self) -> String {
        format!("{self}")
    }

    pub fn check_ring(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.gb.contains(f)
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, &self.gb)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        for g in self.basis() {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Moves the ideal to `target` by mapping exponent vectors.
    pub fn map_into(&self, target: &Ring, f: impl Fn(&Monomial) -> Monomial) -> Result<Ideal> {
        Ideal::new(target, self.basis().iter().map(|g| g.map_into(target, &f)))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_unit() {
            return Ok(other.clone());
        }
        if other.is_zero() || self.is_unit() {
            return Ok(self.clone());
        }
        let gens = self.basis().iter().chain(other.basis()).cloned();
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.basis().len() * other.basis().len());
        for a in self.basis() {
            for b in other.basis() {
                gens.push(a.checked_mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Frobenius power `I^[q] = (g^q : g ∈ I)` for `q = p^e`, `e ≥ 1`.
    ///
    /// Since `g -> g^q` is an injective ring endomorphism that scales every
    /// exponent by `q` and fixes `F_p`, it maps S-polynomials to
    /// S-polynomials and reduction chains to reduction chains. The `q`-th
    /// powers of the reduced basis of `I` are therefore already the reduced
    /// basis of `I^[q]`, and no Buchberger run is needed.
    pub fn bracket_power(&self, q: u64) -> Result<Ideal> {
        let p = self.ring.characteristic();
        if !is_power_of(q, p as u64) {
            return Err(Error::NotAPowerOfP { q, p });
        }
        let q = u32::try_from(q).map_err(|_| Error::ExponentOverflow)?;
        let gens = self.basis().iter().map(|g| g.frobenius_power(q)).collect::<Result<Vec<_>>>()?;
        let gb = GroebnerBasis::from_reduced_parts(&self.ring, gens);
        Ok(Ideal::from_groebner(gb))
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_unit() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_unit() {
            return Ok(other.clone());
        }
        if self.is_subset_of(other)? {
            return Ok(self.clone());
        }
        if other.is_subset_of(self)? {
            return Ok(other.clone());
        }
        if self.is_monomial() && other.is_monomial() {
            return self.intersect_monomial(other);
        }
        self.intersect_by_elimination(other)
    }

    pub(crate) fn intersect_monomial(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::new();
        for a in self.basis() {
            for b in other.basis() {
                let m = a.leading_monomial().unwrap().lcm(b.leading_monomial().unwrap());
                gens.push(Polynomial::monomial(&self.ring, m, 1));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Elimination route without shortcuts; exposed for cross-checks.
    pub fn intersect_by_elimination(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let tagged = self.ring.with_tag();
        let n = self.ring.nvars();
        let lift = |m: &Monomial| {
            let mut e = Vec::with_capacity(n + 1);
            e.push(0);
            e.extend_from_slice(m.exponents());
            Monomial::new(e)
        };
        let t = Polynomial::var(&tagged, 0);
        let one_minus_t = &Polynomial::one(&tagged) - &t;
        let mut gens = Vec::new();
        for g in self.basis() {
            gens.push(&t * &g.map_into(&tagged, lift));
        }
        for g in other.basis() {
            gens.push(&one_minus_t * &g.map_into(&tagged, lift));
        }
        let gb = buchberger(&tagged, &gens)?;
        let drop_tag = |m: &Monomial| Monomial::new(m.exponents()[1..].to_vec());
        let kept = gb.elements().iter().filter(|g| g.degree_in(0) == 0).map(|g| g.map_into(&self.ring, drop_tag));
        Ideal::new(&self.ring, kept)
    }

    /// `(I : J) = {h : h·J ⊆ I}`, as the intersection over generators `g` of
    /// `J` of `(I ∩ (g)) / g`. By convention `(I : (0)) = (1)`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if other.is_subset_of(self)? {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut acc: Option<Ideal> = None;
        for g in other.basis() {
            let part = self.colon_poly(g)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect(&part)?,
            });
            if acc.as_ref().is_some_and(|a| a.is_subset_of(self).unwrap_or(false)) {
                // (I : J) ⊇ I always, so it cannot shrink further
                break;
            }
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `(I : g)` for a single polynomial.
    pub fn colon_poly(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_zero() || self.contains(g)? {
            return Ok(Ideal::unit(&self.ring));
        }
        if self.is_monomial() && g.is_monomial() {
            let gm = g.leading_monomial().unwrap();
            let gens = self.basis().iter().map(|h| {
                let hm = h.leading_monomial().unwrap();
                let q = gm.quotient_of(&hm.lcm(gm)).unwrap();
                Polynomial::monomial(&self.ring, q, 1)
            });
            return Ideal::new(&self.ring, gens);
        }
        let principal = Ideal::principal(g.clone())?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.basis().len());
        for h in meet.basis() {
            let q = h.exact_div(g).ok_or_else(|| Error::Internal(format!("{g} does not divide {h} in (I ∩ (g))")))?;
            gens.push(q);
        }
        Ideal::new(&self.ring, gens)
    }

    /// Krull dimension of `S/I`: the size of a largest set of variables with
    /// no leading monomial of the basis supported inside it.
    pub fn dimension(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::EmptyVariety);
        }
        let n = self.ring.nvars();
        if n > 30 {
            return Err(Error::InvalidArgument(format!("dimension needs n <= 30, got {n}")));
        }
        let supports: Vec<u32> =
            self.gb.leading_monomials().map(|m| m.support().fold(0u32, |acc, i| acc | (1 << i))).collect();
        let mut best = 0;
        for set in 0u32..(1 << n) {
            let size = set.count_ones() as usize;
            if size > best && supports.iter().all(|s| s & !set != 0) {
                best = size;
            }
        }
        Ok(best)
    }

    /// `P` plus every `c×c` minor of the Jacobian of the reduced basis of
    /// `P`, where `c = n − dim P`. For a prime `P` its zero set contains the
    /// singular locus of `V(P)`. Returns `(1)` for `P = (0)`.
    pub fn jacobian_ideal(&self) -> Result<Ideal> {
        if self.is_unit() {
            return Err(Error::InvalidArgument("Jacobian ideal of the unit ideal".into()));
        }
        let n = self.ring.nvars();
        let c = n - self.dimension()?;
        if c == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        let gens = self.basis();
        let jac: Vec<Vec<Polynomial>> = gens.iter().map(|g| (0..n).map(|i| g.derivative(i)).collect()).collect();
        let mut out: Vec<Polynomial> = gens.to_vec();
        for rows in combinations(gens.len(), c) {
            for cols in combinations(n, c) {
                let minor: Vec<Vec<Polynomial>> =
                    rows.iter().map(|&r| cols.iter().map(|&k| jac[r][k].clone()).collect()).collect();
                let d = determinant(&self.ring, &minor);
                if !d.is_zero() {
                    out.push(d);
                }
            }
        }
        Ideal::new(&self.ring, out)
    }

    /// `f ∈ √I`, decided by checking `1 ∈ I + (1 − t·f)` with a fresh `t`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        if self.is_unit() || self.contains(f)? {
            return Ok(true);
        }
        let tagged = self.ring.with_tag();
        let n = self.ring.nvars();
        let lift = |m: &Monomial| {
            let mut e = Vec::with_capacity(n + 1);
            e.push(0);
            e.extend_from_slice(m.exponents());
            Monomial::new(e)
        };
        let t = Polynomial::var(&tagged, 0);
        let mut gens: Vec<Polynomial> = self.basis().iter().map(|g| g.map_into(&tagged, lift)).collect();
        gens.push(&Polynomial::one(&tagged) - &(&t * &f.map_into(&tagged, lift)));
        Ok(buchberger(&tagged, &gens)?.is_unit())
    }
}

/// `radical_membership(f, I)`: whether `f ∈ √I`.
pub fn radical_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if !same_ring(f.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    ideal.radical_contains(f)
}

pub(crate) fn is_power_of(q: u64, p: u64) -> bool {
    if q < p {
        return false;
    }
    let mut q = q;
    while q.is_multiple_of(p) {
        q /= p;
    }
    q == 1
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Determinant by cofactor expansion along the first row; matrices here are
/// at most `n × n` with `n` the number of variables.
fn determinant(ring: &Ring, m: &[Vec<Polynomial>]) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(ring),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        k => {
            let mut acc = Polynomial::zero(ring);
            for col in 0..k {
                if m[0][col].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][col] * &determinant(ring, &sub);
                acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;
    use alloc::string::ToString;
    use alloc::vec;

    struct Vars {
        r: Ring,
        x: Polynomial,
        y: Polynomial,
        z: Polynomial,
    }

    fn vars(p: u64) -> Vars {
        let r = PolyRing::grevlex(p, &["x", "y", "z"]).unwrap();
        Vars { x: Polynomial::var(&r, 0), y: Polynomial::var(&r, 1), z: Polynomial::var(&r, 2), r }
    }

    fn ideal(r: &Ring, gens: &[&Polynomial]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| (*g).clone())).unwrap()
    }

    #[test]
    fn sums_and_products() {
        let Vars { r, x, y, .. } = vars(3);
        let ix = ideal(&r, &[&x]);
        let iy = ideal(&r, &[&y]);
        assert_eq!(ix.sum(&iy).unwrap(), ideal(&r, &[&x, &y]));
        assert_eq!(ix.product(&iy).unwrap(), ideal(&r, &[&(&x * &y)]));
        let m = ideal(&r, &[&x, &y]);
        assert_eq!(m.product(&m).unwrap().to_string(), "(x^2, x*y, y^2)");
    }

    #[test]
    fn bracket_powers() {
        let Vars { r, x, y, .. } = vars(3);
        let i = ideal(&r, &[&x, &y.pow(2)]);
        assert_eq!(i.bracket_power(3).unwrap(), ideal(&r, &[&x.pow(3), &y.pow(6)]));
        assert_eq!(i.bracket_power(6), Err(Error::NotAPowerOfP { q: 6, p: 3 }));
        assert_eq!(i.bracket_power(1), Err(Error::NotAPowerOfP { q: 1, p: 3 }));

        let Vars { r, x, y, .. } = vars(2);
        let a = ideal(&r, &[&x, &y]).bracket_power(2).unwrap();
        let b = ideal(&r, &[&x, &(&x + &y)]).bracket_power(2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, ideal(&r, &[&x.pow(2), &y.pow(2)]));
        assert_eq!(ideal(&r, &[&(&x + &y)]).bracket_power(2).unwrap(), ideal(&r, &[&(&x.pow(2) + &y.pow(2))]));
    }

    #[test]
    fn bracket_power_basis_matches_buchberger() {
        let Vars { r, x, y, z } = vars(3);
        let one = Polynomial::one(&r);
        let i = ideal(&r, &[&(&(&x * &y) - &z), &(&y.pow(2) + &(&x * &z)), &(&z.pow(2) - &one)]);
        let fast = i.bracket_power(3).unwrap();
        let slow = Ideal::new(&r, i.generators().iter().map(|g| g.pow(3))).unwrap();
        assert_eq!(fast.basis(), slow.basis());
    }

    #[test]
    fn intersections() {
        let Vars { r, x, y, .. } = vars(3);
        let ix = ideal(&r, &[&x]);
        let iy = ideal(&r, &[&y]);
        let m = ideal(&r, &[&x, &y]);
        assert_eq!(ix.intersect(&iy).unwrap(), ideal(&r, &[&(&x * &y)]));
        assert_eq!(ix.intersect(&m).unwrap(), ix);
        let l = ideal(&r, &[&(&x + &y)]);
        // x + y already lies in (x, y)
        assert_eq!(m.intersect(&l).unwrap(), l);
        assert_eq!(m.intersect_by_elimination(&l).unwrap(), l);
        let a = ideal(&r, &[&x, &y.pow(2)]);
        let b = ideal(&r, &[&(&x + &y)]);
        let meet = a.intersect(&b).unwrap();
        assert!(meet.is_subset_of(&a).unwrap() && meet.is_subset_of(&b).unwrap());
        assert!(a.product(&b).unwrap().is_subset_of(&meet).unwrap());
        // (x, y^2) ∩ (x + y) = (x + y)·(x, y): h(x+y) ∈ (x, y^2) iff h(0, y)·y ∈ (y^2)
        assert_eq!(meet, b.product(&m).unwrap());
        assert_eq!(ix.intersect_by_elimination(&iy).unwrap(), ix.intersect_monomial(&iy).unwrap());
    }

    #[test]
    fn colons() {
        let Vars { r, x, y, .. } = vars(5);
        let ix = ideal(&r, &[&x]);
        assert_eq!(ideal(&r, &[&(&x.pow(2) * &y)]).colon(&ix).unwrap(), ideal(&r, &[&(&x * &y)]));
        let x2 = ideal(&r, &[&x.pow(2)]);
        assert!(x2.colon(&x2).unwrap().is_unit());
        let i = ideal(&r, &[&(&x * &y), &x.pow(2)]);
        assert_eq!(i.colon(&ix).unwrap(), ideal(&r, &[&x, &y]));
        assert!(i.colon(&Ideal::zero(&r)).unwrap().is_unit());
        // non-monomial route
        let g = &x + &y;
        let i = ideal(&r, &[&(&g * &(&x - &y)), &(&g * &y.pow(2))]);
        assert_eq!(i.colon_poly(&g).unwrap(), ideal(&r, &[&(&x - &y), &y.pow(2)]));
    }

    #[test]
    fn dimensions() {
        let Vars { r, x, y, z } = vars(3);
        assert_eq!(Ideal::zero(&r).dimension().unwrap(), 3);
        assert_eq!(ideal(&r, &[&(&x * &y)]).dimension().unwrap(), 2);
        assert_eq!(ideal(&r, &[&x, &y, &z]).dimension().unwrap(), 0);
        assert_eq!(Ideal::unit(&r).dimension(), Err(Error::EmptyVariety));
        let r2 = PolyRing::grevlex(3, &["x", "y"]).unwrap();
        let (a, b) = (Polynomial::var(&r2, 0), Polynomial::var(&r2, 1));
        assert_eq!(ideal(&r2, &[&(&a * &b)]).dimension().unwrap(), 1);
    }

    #[test]
    fn jacobians() {
        let Vars { r, x, y, z } = vars(7);
        assert!(Ideal::zero(&r).jacobian_ideal().unwrap().is_unit());
        let g = &(&x.pow(3) + &y.pow(3)) + &z.pow(3);
        let j = ideal(&r, &[&g]).jacobian_ideal().unwrap();
        assert_eq!(j, ideal(&r, &[&g, &x.pow(2), &y.pow(2), &z.pow(2)]));
        assert_eq!(j.dimension().unwrap(), 0);

        let r2 = PolyRing::grevlex(2, &["x", "y"]).unwrap();
        let line = Ideal::new(&r2, [Polynomial::var(&r2, 0)]).unwrap();
        assert!(line.jacobian_ideal().unwrap().is_unit());
    }

    #[test]
    fn radical_membership_examples() {
        let Vars { r, x, y, .. } = vars(3);
        assert!(radical_membership(&x, &ideal(&r, &[&x.pow(2)])).unwrap());
        assert!(radical_membership(&(&x + &y), &ideal(&r, &[&x, &y])).unwrap());
        assert!(!radical_membership(&x, &ideal(&r, &[&y])).unwrap());
        assert!(radical_membership(&(&x + &y), &ideal(&r, &[&(&x + &y).pow(3), &(&x * &y)])).unwrap());
    }

    #[test]
    fn combinations_enumerate_subsets() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(1, 2).is_empty());
    }
}
