//! Dense univariate polynomials over `F_p`, coefficients low degree first.
//! Internal workhorse for factorization and minimal polynomials.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{Coeff, PrimeField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly(pub Vec<Coeff>);

impl UPoly {
    pub fn new(mut c: Vec<Coeff>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![1])
    }

    pub fn x() -> Self {
        UPoly(vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [1]
    }

    /// Degree; the zero polynomial reports 0 as well, callers check
    /// `is_zero` first.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Coeff {
        *self.0.last().unwrap_or(&0)
    }
}

pub(crate) struct UArith {
    pub f: PrimeField,
}

impl UArith {
    pub fn add(&self, a: &UPoly, b: &UPoly) -> UPoly {
        let n = a.0.len().max(b.0.len());
        let get = |p: &UPoly, i: usize| p.0.get(i).copied().unwrap_or(0);
        UPoly::new((0..n).map(|i| self.f.add(get(a, i), get(b, i))).collect())
    }

    pub fn sub(&self, a: &UPoly, b: &UPoly) -> UPoly {
        let n = a.0.len().max(b.0.len());
        let get = |p: &UPoly, i: usize| p.0.get(i).copied().unwrap_or(0);
        UPoly::new((0..n).map(|i| self.f.sub(get(a, i), get(b, i))).collect())
    }

    pub fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        if a.is_zero() || b.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![0; a.0.len() + b.0.len() - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                out[i + j] = self.f.add(out[i + j], self.f.mul(x, y));
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, a: &UPoly, c: Coeff) -> UPoly {
        UPoly::new(a.0.iter().map(|&x| self.f.mul(x, c)).collect())
    }

    pub fn monic(&self, a: &UPoly) -> UPoly {
        if a.is_zero() {
            return a.clone();
        }
        self.scale(a, self.f.inv(a.lead()))
    }

    pub fn divrem(&self, a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
        assert!(!b.is_zero(), "division by the zero polynomial");
        if a.0.len() < b.0.len() {
            return (UPoly::zero(), a.clone());
        }
        let mut r = a.0.clone();
        let db = b.degree();
        let inv = self.f.inv(b.lead());
        let mut q = vec![0; a.0.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.f.mul(r[k + db], inv);
            q[k] = c;
            if c != 0 {
                for (j, &bj) in b.0.iter().enumerate() {
                    r[k + j] = self.f.sub(r[k + j], self.f.mul(c, bj));
                }
            }
        }
        r.truncate(db);
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn rem(&self, a: &UPoly, b: &UPoly) -> UPoly {
        self.divrem(a, b).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &UPoly, b: &UPoly) -> UPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn derivative(&self, a: &UPoly) -> UPoly {
        UPoly::new(a.0.iter().enumerate().skip(1).map(|(i, &c)| self.f.mul(c, self.f.reduce(i as u64))).collect())
    }

    pub fn mulmod(&self, a: &UPoly, b: &UPoly, m: &UPoly) -> UPoly {
        self.rem(&self.mul(a, b), m)
    }

    pub fn powmod(&self, a: &UPoly, mut e: u64, m: &UPoly) -> UPoly {
        let mut base = self.rem(a, m);
        let mut acc = self.rem(&UPoly::one(), m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulmod(&acc, &base, m);
            }
            base = self.mulmod(&base, &base, m);
            e >>= 1;
        }
        acc
    }

    /// `h` with `h^p = a`, assuming every exponent of `a` is divisible by `p`.
    pub fn pth_root(&self, a: &UPoly) -> UPoly {
        let p = self.f.characteristic() as usize;
        UPoly::new(a.0.iter().step_by(p).map(|&c| self.f.pth_root(c)).collect())
    }

    #[cfg(test)]
    pub fn pow(&self, a: &UPoly, e: u32) -> UPoly {
        (0..e).fold(UPoly::one(), |acc, _| self.mul(&acc, a))
    }

    #[cfg(test)]
    pub fn eval(&self, a: &UPoly, x: Coeff) -> Coeff {
        a.0.iter().rev().fold(0, |acc, &c| self.f.add(self.f.mul(acc, x), c))
    }
}
