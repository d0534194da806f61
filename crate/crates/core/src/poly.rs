//! Sparse multivariate polynomials over `F_p`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::ring::{same_ring, Ring};

/// Terms are kept sorted by the ring's monomial order, largest first, with
/// no zero coefficients. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: u64) -> Self {
        let c = ring.field().reduce(c);
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i, 1), 1)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.arity(), ring.nvars(), "monomial arity does not match ring");
        let c = c % ring.characteristic();
        let terms = if c == 0 { Vec::new() } else { alloc::vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let field = *ring.field();
        let order = ring.order();
        let mut v: Vec<(Monomial, Coeff)> = terms
            .into_iter()
            .map(|(m, c)| {
                assert_eq!(m.arity(), ring.nvars(), "monomial arity does not match ring");
                (m, field.reduce(c as u64))
            })
            .collect();
        v.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Assumes `terms` is already sorted and free of zeros.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial { ring: ring.clone(), terms }
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    /// A single term `c x^a`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Coeff {
        self.terms.first().map_or(0, |t| t.1)
    }

    /// Constant coefficient.
    pub fn constant_coeff(&self) -> Coeff {
        self.terms.last().filter(|t| t.0.is_one()).map_or(0, |t| t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Largest exponent of variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponents()[i]).max().unwrap_or(0)
    }

    /// Indices of the variables that occur.
    pub fn variables_used(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        (0..n).filter(|&i| self.terms.iter().any(|(m, _)| m.exponents()[i] > 0)).collect()
    }

    /// The variable this polynomial is univariate in, if any. Constants
    /// return `None`.
    pub fn univariate_var(&self) -> Option<usize> {
        let used = self.variables_used();
        if used.len() == 1 {
            Some(used[0])
        } else {
            None
        }
    }

    pub fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let conv = |c: Coeff| if negate_other { field.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), conv(b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(a[i].1, conv(b[j].1));
                    if c != 0 {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), conv(*c))));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let field = self.ring.field();
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                prods.push((ma.checked_mul(mb)?, field.mul(*ca, *cb)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, prods))
    }

    pub fn checked_pow(&self, mut e: u32) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Panics on exponent overflow; see [`Polynomial::checked_pow`].
    pub fn pow(&self, e: u32) -> Polynomial {
        self.checked_pow(e).expect("exponent overflow")
    }

    /// `g^q` for `q = p^e` via the Frobenius endomorphism: every exponent is
    /// multiplied by `q` and coefficients are fixed, since `c^p = c` on `F_p`.
    pub fn frobenius_power(&self, q: u32) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.checked_pow(q)?, *c));
        }
        // scaling every exponent by q preserves grevlex, lex and block orders
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    pub fn scale(&self, c: Coeff) -> Polynomial {
        let field = self.ring.field();
        let c = c % field.characteristic();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), field.mul(*a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `c * x^m * self`.
    pub fn mul_term(&self, m: &Monomial, c: Coeff) -> Result<Polynomial> {
        let field = self.ring.field();
        if c.is_multiple_of(field.characteristic()) {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (a, k) in &self.terms {
            terms.push((a.checked_mul(m)?, field.mul(*k, c)));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, 1)) => self.clone(),
            Some((_, c)) => self.scale(self.ring.field().inv(*c)),
        }
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let field = self.ring.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let k = field.mul(*c, field.reduce(e as u64));
            if k == 0 {
                continue;
            }
            let mut ex = m.exponents().to_vec();
            ex[i] -= 1;
            terms.push((Monomial::new(ex), k));
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Exact division. Returns `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading_term()?;
        let field = self.ring.field();
        let lc_inv = field.inv(*lc);
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first() {
            let q = lm.quotient_of(m)?;
            let k = field.mul(*c, lc_inv);
            let step = divisor.mul_term(&q, k).ok()?;
            quotient.push((q, k));
            rest = rest.merge(&step, true);
        }
        Some(Polynomial::from_terms(&self.ring, quotient))
    }

    /// Moves the polynomial into `target`, mapping each exponent vector.
    pub fn map_into(&self, target: &Ring, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        Polynomial::from_terms(target, self.terms.iter().map(|(m, c)| (f(m), *c)))
    }

    /// Same exponent vectors, resorted for a ring that differs only in order.
    pub fn reorder_into(&self, target: &Ring) -> Polynomial {
        assert_eq!(target.nvars(), self.ring.nvars());
        self.map_into(target, Monomial::clone)
    }

    /// Replaces `x_i` by `value`.
    pub fn substitute(&self, i: usize, value: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(&self.ring);
        // group terms by exponent of x_i
        let mut powers: Vec<Polynomial> = alloc::vec![Polynomial::one(&self.ring)];
        for (m, c) in &self.terms {
            let e = m.exponents()[i] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut ex = m.exponents().to_vec();
            ex[i] = 0;
            let t = powers[e].mul_term(&Monomial::new(ex), *c).expect("exponent overflow");
            acc = &acc + &t;
        }
        acc
    }

    /// Canonical text: terms in descending order, coefficients in `[1, p)`,
    /// `*` between factors and `^` for powers.
    pub fn to_canonical_string(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        write!(s, "{self}").unwrap();
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let vars = self.ring.vars();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mut first = true;
            if *c != 1 || m.is_one() {
                write!(f, "{c}")?;
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(&vars[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch or exponent overflow")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let field = self.ring.field();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), field.neg(*c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
