//! Univariate factorization over `F_p`: squarefree decomposition with
//! p-th-root descent, distinct-degree splitting, then Cantor–Zassenhaus
//! equal-degree splitting.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Coeff, PrimeField};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::upoly::{UArith, UPoly};

/// `unit · Π factor^multiplicity`, factors monic and irreducible, sorted by
/// degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Coeff,
    pub factors: Vec<(Polynomial, u32)>,
}

impl Factorization {
    /// Multiplies everything back together.
    pub fn expand(&self, ring: &crate::ring::Ring) -> Polynomial {
        self.factors.iter().fold(Polynomial::constant(ring, self.unit as u64), |acc, (f, e)| &acc * &f.pow(*e))
    }
}

/// Factors a nonzero polynomial in a single variable. Constants return an
/// empty factor list.
pub fn factor_univariate(f: &Polynomial) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("cannot factor the zero polynomial".into()));
    }
    let ring = f.ring();
    if f.is_constant() {
        return Ok(Factorization { unit: f.leading_coeff(), factors: Vec::new() });
    }
    let var = f.univariate_var().ok_or_else(|| Error::InvalidArgument(format!("{f} is not univariate")))?;
    let dense = to_dense(f, var);
    let field = *ring.field();
    let unit = dense.lead();
    let factors = factor_dense(&field, &dense).into_iter().map(|(g, e)| (from_dense(ring, var, &g), e)).collect();
    Ok(Factorization { unit, factors })
}

pub(crate) fn to_dense(f: &Polynomial, var: usize) -> UPoly {
    let mut c = vec![0; f.degree_in(var) as usize + 1];
    for (m, k) in f.terms() {
        c[m.exponents()[var] as usize] = *k;
    }
    UPoly::new(c)
}

pub(crate) fn from_dense(ring: &crate::ring::Ring, var: usize, g: &UPoly) -> Polynomial {
    let n = ring.nvars();
    Polynomial::from_terms(
        ring,
        g.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(e, &c)| (Monomial::var(n, var, e as u32), c)),
    )
}

/// Monic irreducible factors with multiplicities of a nonzero polynomial.
pub(crate) fn factor_dense(field: &PrimeField, f: &UPoly) -> Vec<(UPoly, u32)> {
    let u = UArith { f: *field };
    let f = u.monic(f);
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    for (sqfree, mult) in squarefree(&u, &f) {
        for (block, d) in distinct_degree(&u, &sqfree) {
            for g in equal_degree(&u, &block, d, &mut rng) {
                out.push((g, mult));
            }
        }
    }
    out.sort_by(|a, b| a.0 .0.len().cmp(&b.0 .0.len()).then_with(|| a.0 .0.cmp(&b.0 .0)).then(a.1.cmp(&b.1)));
    out
}

/// Squarefree decomposition `f = Π s_i^i` of a monic `f`.
pub(crate) fn squarefree(u: &UArith, f: &UPoly) -> Vec<(UPoly, u32)> {
    let p = u.f.characteristic();
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    let d = u.derivative(f);
    if d.is_zero() {
        // f = g(x^p) = h^p
        for (g, e) in squarefree(u, &u.pth_root(f)) {
            out.push((g, e * p));
        }
        return out;
    }
    let mut c = u.gcd(f, &d);
    let mut w = u.divrem(f, &c).0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = u.gcd(&w, &c);
        let fac = u.divrem(&w, &y).0;
        if !fac.is_one() {
            out.push((u.monic(&fac), i));
        }
        i += 1;
        w = y;
        c = u.divrem(&c, &w).0;
    }
    if !c.is_one() {
        for (g, e) in squarefree(u, &u.pth_root(&c)) {
            out.push((g, e * p));
        }
    }
    out
}

/// Splits a squarefree monic `f` into products of irreducibles of equal
/// degree.
fn distinct_degree(u: &UArith, f: &UPoly) -> Vec<(UPoly, usize)> {
    let p = u.f.characteristic() as u64;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = u.rem(&UPoly::x(), &rest);
    let mut d = 1;
    while rest.degree() >= 2 * d {
        h = u.powmod(&h, p, &rest);
        let g = u.gcd(&rest, &u.sub(&h, &UPoly::x()));
        if !g.is_one() {
            rest = u.divrem(&rest, &g).0;
            h = u.rem(&h, &rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree() > 0 {
        let deg = rest.degree();
        out.push((rest, deg));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct irreducibles of
/// degree `d`.
fn equal_degree(u: &UArith, f: &UPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<UPoly> {
    let n = f.degree();
    if n == d {
        return vec![f.clone()];
    }
    let p = u.f.characteristic() as u64;
    loop {
        let a = UPoly::new((0..n).map(|_| (rng.next_u64() % p) as Coeff).collect());
        if a.degree() == 0 {
            continue;
        }
        let b = if p == 2 {
            // absolute trace a + a^2 + ... + a^(2^(d-1))
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = u.mulmod(&t, &t, f);
                acc = u.add(&acc, &t);
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            let mut t = u.rem(&a, f);
            let mut norm = t.clone();
            for _ in 1..d {
                t = u.powmod(&t, p, f);
                norm = u.mulmod(&norm, &t, f);
            }
            u.sub(&u.powmod(&norm, (p - 1) / 2, f), &UPoly::one())
        };
        let g = u.gcd(f, &b);
        if g.degree() > 0 && g.degree() < n {
            let h = u.divrem(f, &g).0;
            let mut out = equal_degree(u, &g, d, rng);
            out.extend(equal_degree(u, &u.monic(&h), d, rng));
            return out;
        }
    }
}

/// Product of the distinct irreducible factors.
pub(crate) fn squarefree_part(field: &PrimeField, f: &UPoly) -> UPoly {
    let u = UArith { f: *field };
    squarefree(&u, &u.monic(f)).iter().fold(UPoly::one(), |acc, (g, _)| u.mul(&acc, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;
    use alloc::string::{String, ToString};

    fn show(fac: &Factorization) -> Vec<(String, u32)> {
        fac.factors.iter().map(|(g, e)| (g.to_string(), *e)).collect()
    }

    #[test]
    fn x2_plus_1() {
        let r = PolyRing::grevlex(2, &["x"]).unwrap();
        let x = Polynomial::var(&r, 0);
        let f = &x.pow(2) + &Polynomial::one(&r);
        assert_eq!(show(&factor_univariate(&f).unwrap()), [("x + 1".to_string(), 2)]);

        let r = PolyRing::grevlex(3, &["x"]).unwrap();
        let x = Polynomial::var(&r, 0);
        let f = &x.pow(2) + &Polynomial::one(&r);
        // no root in F_3
        assert!((0..3).all(|a| (a * a + 1) % 3 != 0));
        assert_eq!(show(&factor_univariate(&f).unwrap()), [("x^2 + 1".to_string(), 1)]);
    }

    #[test]
    fn x3_minus_x_mod_3() {
        let r = PolyRing::grevlex(3, &["x"]).unwrap();
        let x = Polynomial::var(&r, 0);
        let fac = factor_univariate(&(&x.pow(3) - &x)).unwrap();
        assert_eq!(show(&fac), [("x".to_string(), 1), ("x + 1".to_string(), 1), ("x + 2".to_string(), 1)]);
    }

    #[test]
    fn pth_power_descent_and_unit() {
        let r = PolyRing::grevlex(5, &["x", "y"]).unwrap();
        let y = Polynomial::var(&r, 1);
        let one = Polynomial::one(&r);
        // 3 (y^5 + 1)^2 (y^2 + 2) = 3 (y+1)^10 (y^2+2)
        let f = (&(&y.pow(5) + &one).pow(2) * &(&y.pow(2) + &Polynomial::constant(&r, 2))).scale(3);
        let fac = factor_univariate(&f).unwrap();
        assert_eq!(fac.unit, 3);
        assert_eq!(show(&fac), [("y + 1".to_string(), 10), ("y^2 + 2".to_string(), 1)]);
        assert_eq!(fac.expand(&r), f);
    }

    #[test]
    fn rejects_multivariate() {
        let r = PolyRing::grevlex(5, &["x", "y"]).unwrap();
        let f = &Polynomial::var(&r, 0) * &Polynomial::var(&r, 1);
        assert!(matches!(factor_univariate(&f), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn cyclotomic_splitting_mod_2() {
        // x^15 - 1 over F_2: (x+1)(x^2+x+1)(x^4+x+1)(x^4+x^3+1)(x^4+x^3+x^2+x+1)
        let r = PolyRing::grevlex(2, &["x"]).unwrap();
        let x = Polynomial::var(&r, 0);
        let fac = factor_univariate(&(&x.pow(15) + &Polynomial::one(&r))).unwrap();
        let degs: Vec<u64> = fac.factors.iter().map(|(g, _)| g.total_degree().unwrap()).collect();
        assert_eq!(degs, [1, 2, 4, 4, 4]);
        assert_eq!(fac.expand(&r), &x.pow(15) + &Polynomial::one(&r));
    }
}
