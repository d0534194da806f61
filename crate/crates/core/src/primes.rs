//! Minimal primes within a fixed capability envelope.
//!
//! Every path below is complete on its own domain:
//!
//! * monomial ideals: minimal vertex covers of the supports;
//! * principal ideals: monomial content, p-th-power descent, univariate
//!   factorization, exhaustive trial division by monic linear forms, and
//!   exhaustive quadratic trial for quartics when the search box is small;
//! * zero-dimensional ideals: Seidenberg's radical, then splitting by
//!   univariate minimal polynomials and by Frobenius-fixed idempotent-like
//!   elements until each piece is maximal; every maximal ideal is emitted
//!   through its lex triangular set;
//! * anything else: peel off basis elements `x_i - h` (a change of
//!   coordinates), or split on a basis element that factors, and recurse.
//!
//! When none applies the answer is [`Error::Unsupported`] with the ideal
//! attached. There is no heuristic fallback.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::factor::{factor_dense, factor_univariate, from_dense, squarefree_part};
use crate::field::Coeff;
use crate::ideal::Ideal;
use crate::linalg::{kernel, DependencyFinder};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::upoly::UPoly;

/// Upper bound on candidate divisors tried by the trial-division paths.
const TRIAL_CAP: u64 = 2_000_000;

/// A zero-dimensional prime written as a lex triangular set
/// `t_1(x_n), t_2(x_{n-1}, x_n), ..., t_n(x_1, ..., x_n)`: lowest variable
/// first, each `t_k` monic in its top variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularPrime {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl TriangularPrime {
    /// The lex ring the triangular set lives in.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Degree of the residue field over `F_p`.
    pub fn residue_degree(&self) -> u64 {
        self.elements.iter().map(|t| t.leading_monomial().unwrap().degree()).product()
    }

    /// The same prime as an ideal of `ring` (same variables, any order).
    pub fn to_ideal(&self, ring: &Ring) -> Result<Ideal> {
        Ideal::new(ring, self.elements.iter().map(|t| t.reorder_into(ring)))
    }

    fn from_maximal(m: &Ideal) -> Result<TriangularPrime> {
        let lex = m.ring().with_order(MonomialOrder::Lex);
        let lexed = Ideal::new(&lex, m.basis().iter().map(|g| g.reorder_into(&lex)))?;
        let n = lex.nvars();
        let mut elements: Vec<Polynomial> = lexed.basis().to_vec();
        elements.reverse();
        let shaped = elements.len() == n
            && elements.iter().enumerate().all(|(k, t)| {
                let lm = t.leading_monomial().unwrap();
                let top = n - 1 - k;
                lm.support().eq([top]) && t.variables_used().iter().all(|&v| v >= top)
            });
        if !shaped {
            return Err(Error::Internal(format!("lex basis of maximal ideal {m} is not triangular: {lexed}")));
        }
        Ok(TriangularPrime { ring: lex, elements })
    }
}

/// Minimal primes of `ideal`, deduplicated, pairwise incomparable and sorted
/// by canonical text.
pub fn minimal_primes(ideal: &Ideal) -> Result<Vec<Ideal>> {
    if ideal.is_unit() {
        return Err(Error::InvalidArgument("the unit ideal has no primes".into()));
    }
    let found = decompose(ideal)?;
    minimalize(found)
}

/// Keeps the inclusion-minimal members of a list of primes.
fn minimalize(mut primes: Vec<Ideal>) -> Result<Vec<Ideal>> {
    primes.sort_by_key(Ideal::key);
    primes.dedup();
    let mut keep = Vec::new();
    for (i, p) in primes.iter().enumerate() {
        let mut minimal = true;
        for (j, q) in primes.iter().enumerate() {
            if i != j && q.is_subset_of(p)? {
                minimal = false;
                break;
            }
        }
        if minimal {
            keep.push(p.clone());
        }
    }
    Ok(keep)
}

fn decompose(ideal: &Ideal) -> Result<Vec<Ideal>> {
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    if ideal.is_zero() {
        return Ok(vec![ideal.clone()]);
    }
    if ideal.is_monomial() {
        return monomial_primes(ideal);
    }
    if ideal.is_principal() {
        let ring = ideal.ring();
        return distinct_irreducible_factors(&ideal.basis()[0])?.into_iter().map(|q| Ideal::new(ring, [q])).collect();
    }
    if let Some(primes) = through_linear_heads(ideal)? {
        return Ok(primes);
    }
    if ideal.dimension()? == 0 {
        return zero_dimensional_primes(ideal);
    }
    if let Some(branches) = split_on_factor(ideal)? {
        let mut out = Vec::new();
        for b in branches {
            out.extend(decompose(&b)?);
        }
        return Ok(out);
    }
    Err(Error::Unsupported {
        ideal: ideal.key(),
        reason: "no basis element factors and the ideal is neither monomial, principal nor zero-dimensional".into(),
    })
}

fn monomial_primes(ideal: &Ideal) -> Result<Vec<Ideal>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if n > 30 {
        return Err(Error::Unsupported { ideal: ideal.key(), reason: "more than 30 variables".into() });
    }
    let supports: Vec<u32> =
        ideal.groebner().leading_monomials().map(|m| m.support().fold(0u32, |acc, i| acc | (1 << i))).collect();
    let mut subsets: Vec<u32> = (0u32..(1 << n)).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let mut covers: Vec<u32> = Vec::new();
    for s in subsets {
        if supports.iter().all(|sup| sup & s != 0) && !covers.iter().any(|c| c & !s == 0) {
            covers.push(s);
        }
    }
    covers
        .into_iter()
        .map(|s| Ideal::new(ring, (0..n).filter(|i| s & (1 << i) != 0).map(|i| Polynomial::var(ring, i))))
        .collect()
}

/// Uses basis elements whose leading monomial is a single variable `x_i`.
/// In a reduced basis `x_i` occurs nowhere else, so `S/I` is isomorphic to
/// the quotient of the ring without those variables by the remaining basis
/// elements.
fn through_linear_heads(ideal: &Ideal) -> Result<Option<Vec<Ideal>>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut heads = Vec::new();
    let mut rest = Vec::new();
    for g in ideal.basis() {
        let lm = g.leading_monomial().unwrap();
        if lm.degree() == 1 {
            heads.push((lm.support().next().unwrap(), g.clone()));
        } else {
            rest.push(g.clone());
        }
    }
    if heads.is_empty() {
        return Ok(None);
    }
    let keep: Vec<usize> = (0..n).filter(|i| !heads.iter().any(|(h, _)| h == i)).collect();
    if keep.is_empty() || rest.is_empty() {
        // a linear change of coordinates away from (x_i : i in heads)
        return Ok(Some(vec![ideal.clone()]));
    }
    let sub = ring.subring(&keep)?;
    let project = |m: &Monomial| Monomial::new(keep.iter().map(|&i| m.exponents()[i]).collect());
    let lift = |m: &Monomial| {
        let mut e = vec![0; n];
        for (k, &i) in keep.iter().enumerate() {
            e[i] = m.exponents()[k];
        }
        Monomial::new(e)
    };
    let reduced = Ideal::new(&sub, rest.iter().map(|g| g.map_into(&sub, project)))?;
    let mut out = Vec::new();
    for p in decompose(&reduced)? {
        let gens = p.basis().iter().map(|g| g.map_into(ring, lift)).chain(heads.iter().map(|(_, g)| g.clone()));
        out.push(Ideal::new(ring, gens)?);
    }
    Ok(Some(out))
}

/// `V(I) = ⋃ V(I + (q))` over the distinct irreducible factors `q` of any
/// basis element that is not itself irreducible and reduced.
fn split_on_factor(ideal: &Ideal) -> Result<Option<Vec<Ideal>>> {
    let ring = ideal.ring();
    for g in ideal.basis() {
        let factors = match distinct_irreducible_factors(g) {
            Ok(f) => f,
            Err(Error::Unsupported { .. }) => continue,
            Err(e) => return Err(e),
        };
        if factors.len() == 1 && factors[0] == *g {
            continue;
        }
        let mut branches = Vec::with_capacity(factors.len());
        for q in factors {
            branches.push(ideal.sum(&Ideal::new(ring, [q])?)?);
        }
        return Ok(Some(branches));
    }
    Ok(None)
}

/// Distinct monic irreducible factors of `g`, sorted canonically. Errors
/// with `Unsupported` outside the trial envelope.
pub fn distinct_irreducible_factors(g: &Polynomial) -> Result<Vec<Polynomial>> {
    let ring = g.ring().clone();
    let p = ring.characteristic();
    let n = ring.nvars();
    let mut out: Vec<Polynomial> = Vec::new();
    let mut work = vec![g.monic()];
    while let Some(h) = work.pop() {
        if h.is_constant() {
            continue;
        }
        let content = h.terms().iter().skip(1).fold(h.terms()[0].0.clone(), |acc, (m, _)| acc.gcd(m));
        if !content.is_one() {
            for i in content.support() {
                out.push(Polynomial::var(&ring, i));
            }
            let rest =
                Polynomial::from_terms(&ring, h.terms().iter().map(|(m, c)| (content.quotient_of(m).unwrap(), *c)));
            work.push(rest);
            continue;
        }
        if h.terms().iter().all(|(m, _)| m.exponents().iter().all(|e| e % p == 0)) {
            let root = Polynomial::from_terms(
                &ring,
                h.terms().iter().map(|(m, c)| (Monomial::new(m.exponents().iter().map(|e| e / p).collect()), *c)),
            );
            work.push(root);
            continue;
        }
        if h.univariate_var().is_some() {
            out.extend(factor_univariate(&h)?.factors.into_iter().map(|(q, _)| q));
            continue;
        }
        let deg = h.total_degree().unwrap();
        if deg == 1 {
            out.push(h);
            continue;
        }
        if let Some(l) = find_linear_factor(&h)? {
            let q = h.exact_div(&l).expect("trial divisor divides");
            out.push(l);
            work.push(q.monic());
            continue;
        }
        if deg <= 3 {
            // any proper factorization would contain a linear factor
            out.push(h);
            continue;
        }
        if deg == 4 {
            match find_quadratic_factor(&h)? {
                Some(q) => {
                    let r = h.exact_div(&q).expect("trial divisor divides");
                    out.push(q.monic());
                    out.push(r.monic());
                }
                None => out.push(h),
            }
            continue;
        }
        return Err(Error::Unsupported {
            ideal: format!("({h})"),
            reason: format!("degree {deg} polynomial in {n} variables without a linear factor"),
        });
    }
    out.sort_by_key(|q| q.to_canonical_string());
    out.dedup();
    Ok(out)
}

/// Tries every monic linear form in the variables of `h`.
fn find_linear_factor(h: &Polynomial) -> Result<Option<Polynomial>> {
    let ring = h.ring();
    let p = ring.characteristic() as u64;
    let n = ring.nvars();
    let used = h.variables_used();
    let total: u64 = (0..used.len()).map(|k| p.saturating_pow((used.len() - k) as u32)).fold(0u64, u64::saturating_add);
    if total > TRIAL_CAP {
        return Err(Error::Unsupported {
            ideal: format!("({h})"),
            reason: format!("linear trial division needs {total} candidates"),
        });
    }
    for (k, &lead) in used.iter().enumerate() {
        let tail = &used[k + 1..];
        let mut coeffs = vec![0 as Coeff; tail.len() + 1];
        loop {
            let mut terms = vec![(Monomial::var(n, lead, 1), 1 as Coeff)];
            for (j, &v) in tail.iter().enumerate() {
                terms.push((Monomial::var(n, v, 1), coeffs[j]));
            }
            terms.push((Monomial::one(n), coeffs[tail.len()]));
            let l = Polynomial::from_terms(ring, terms);
            if h.exact_div(&l).is_some() {
                return Ok(Some(l));
            }
            if !increment(&mut coeffs, p as Coeff) {
                break;
            }
        }
    }
    Ok(None)
}

/// Tries every monic quadratic in the variables of `h` whose leading
/// monomial divides that of `h`.
fn find_quadratic_factor(h: &Polynomial) -> Result<Option<Polynomial>> {
    let ring = h.ring();
    let order = ring.order();
    let p = ring.characteristic() as u64;
    let n = ring.nvars();
    let used = h.variables_used();
    let mut monos = vec![Monomial::one(n)];
    for (a, &i) in used.iter().enumerate() {
        monos.push(Monomial::var(n, i, 1));
        for &j in &used[a..] {
            monos.push(Monomial::var(n, i, 1).mul(&Monomial::var(n, j, 1)));
        }
    }
    monos.sort_by(|a, b| order.cmp(b, a));
    let lt = h.leading_monomial().unwrap();
    let heads: Vec<usize> = (0..monos.len()).filter(|&k| monos[k].degree() == 2 && monos[k].divides(lt)).collect();
    let total: u64 =
        heads.iter().map(|&k| p.saturating_pow((monos.len() - k - 1) as u32)).fold(0u64, u64::saturating_add);
    if total > TRIAL_CAP {
        return Err(Error::Unsupported {
            ideal: format!("({h})"),
            reason: format!("quadratic trial division needs {total} candidates"),
        });
    }
    for k in heads {
        let tail = &monos[k + 1..];
        let mut coeffs = vec![0 as Coeff; tail.len()];
        loop {
            let terms = core::iter::once((monos[k].clone(), 1)).chain(tail.iter().cloned().zip(coeffs.iter().copied()));
            let q = Polynomial::from_terms(ring, terms);
            if h.exact_div(&q).is_some() {
                return Ok(Some(q));
            }
            if !increment(&mut coeffs, p as Coeff) {
                break;
            }
        }
    }
    Ok(None)
}

/// Odometer over `[0, p)^k`; false once it wraps.
fn increment(digits: &mut [Coeff], p: Coeff) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

/// The finite-dimensional algebra `S/I` of a zero-dimensional ideal, with
/// the standard monomials as basis.
struct QuotientAlgebra<'a> {
    ideal: &'a Ideal,
    basis: Vec<Monomial>,
    index: BTreeMap<Vec<u32>, usize>,
}

impl<'a> QuotientAlgebra<'a> {
    fn new(ideal: &'a Ideal) -> Result<Self> {
        let n = ideal.ring().nvars();
        let lms: Vec<Monomial> = ideal.groebner().leading_monomials().cloned().collect();
        let standard = |m: &Monomial| !lms.iter().any(|l| l.divides(m));
        let mut basis = Vec::new();
        let mut index = BTreeMap::new();
        let mut queue = vec![Monomial::one(n)];
        while let Some(m) = queue.pop() {
            if index.contains_key(m.exponents()) || !standard(&m) {
                continue;
            }
            index.insert(m.exponents().to_vec(), basis.len());
            for i in 0..n {
                queue.push(m.mul(&Monomial::var(n, i, 1)));
            }
            basis.push(m);
            if basis.len() > 100_000 {
                return Err(Error::Unsupported { ideal: ideal.key(), reason: "quotient algebra too large".into() });
            }
        }
        Ok(QuotientAlgebra { ideal, basis, index })
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn coords(&self, f: &Polynomial) -> Result<Vec<Coeff>> {
        let r = self.ideal.reduce(f)?;
        let mut v = vec![0; self.dim()];
        for (m, c) in r.terms() {
            v[self.index[m.exponents()]] = *c;
        }
        Ok(v)
    }

    fn element(&self, v: &[Coeff]) -> Polynomial {
        Polynomial::from_terms(
            self.ideal.ring(),
            self.basis.iter().cloned().zip(v.iter().copied()).filter(|(_, c)| *c != 0),
        )
    }

    /// Monic minimal polynomial of `a` acting on `S/I`.
    fn minimal_polynomial(&self, a: &Polynomial) -> Result<UPoly> {
        let field = *self.ideal.ring().field();
        let mut finder = DependencyFinder::new(field, self.dim());
        let mut power = Polynomial::one(self.ideal.ring());
        loop {
            if let Some(c) = finder.push(self.coords(&power)?) {
                // a^k = Σ c_i a^i
                let mut m: Vec<Coeff> = c.iter().map(|&x| field.neg(x)).collect();
                m.push(1);
                return Ok(UPoly::new(m));
            }
            power = self.ideal.reduce(&(&power * a))?;
        }
    }
}

/// Radical of a zero-dimensional ideal: adjoin the squarefree part of the
/// minimal polynomial of every variable. Valid because `F_p` is perfect.
pub fn zero_dimensional_radical(ideal: &Ideal) -> Result<Ideal> {
    let ring = ideal.ring();
    let field = *ring.field();
    let alg = QuotientAlgebra::new(ideal)?;
    let mut gens: Vec<Polynomial> = ideal.basis().to_vec();
    for i in 0..ring.nvars() {
        let m = alg.minimal_polynomial(&Polynomial::var(ring, i))?;
        gens.push(from_dense(ring, i, &squarefree_part(&field, &m)));
    }
    Ideal::new(ring, gens)
}

/// Maximal ideals over a zero-dimensional ideal, as lex triangular sets.
pub fn triangular_decomposition(ideal: &Ideal) -> Result<Vec<TriangularPrime>> {
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    if ideal.dimension()? != 0 {
        return Err(Error::InvalidArgument(format!("{ideal} is not zero-dimensional")));
    }
    let ring = ideal.ring();
    let field = *ring.field();
    let p = field.characteristic() as u64;
    let mut work = vec![zero_dimensional_radical(ideal)?];
    let mut out = Vec::new();
    'next: while let Some(j) = work.pop() {
        if j.is_unit() {
            continue;
        }
        let alg = QuotientAlgebra::new(&j)?;
        for i in 0..ring.nvars() {
            let m = alg.minimal_polynomial(&Polynomial::var(ring, i))?;
            let factors = factor_dense(&field, &m);
            if factors.len() > 1 {
                for (q, _) in factors {
                    work.push(j.sum(&Ideal::new(ring, [from_dense(ring, i, &q)])?)?);
                }
                continue 'next;
            }
        }
        // S/J is a product of finite fields; the Frobenius-fixed subalgebra
        // is F_p^r with r the number of factors.
        let d = alg.dim();
        let mut rows = vec![vec![0 as Coeff; d]; d];
        for (k, b) in alg.basis.iter().enumerate() {
            let col = alg.coords(&Polynomial::monomial(ring, b.checked_pow(p as u32)?, 1))?;
            for r in 0..d {
                rows[r][k] = if r == k { field.sub(col[r], 1) } else { col[r] };
            }
        }
        let fixed = kernel(&field, &rows, d);
        if fixed.len() <= 1 {
            out.push(TriangularPrime::from_maximal(&j)?);
            continue;
        }
        let one = alg.index[Monomial::one(ring.nvars()).exponents()];
        let v = fixed
            .iter()
            .find(|v| v.iter().enumerate().any(|(k, &c)| k != one && c != 0))
            .ok_or_else(|| Error::Internal("Frobenius-fixed space has no splitting element".into()))?;
        let e = alg.element(v);
        let m = alg.minimal_polynomial(&e)?;
        for (q, _) in factor_dense(&field, &m) {
            if q.degree() != 1 {
                return Err(Error::Internal(format!("fixed element {e} has a non-rational eigenvalue")));
            }
            let root = field.neg(q.0[0]);
            work.push(j.sum(&Ideal::new(ring, [&e - &Polynomial::constant(ring, root as u64)])?)?);
        }
    }
    out.sort_by_key(|t| t.elements.iter().map(|e| e.to_canonical_string()).collect::<Vec<String>>());
    out.dedup();
    Ok(out)
}

fn zero_dimensional_primes(ideal: &Ideal) -> Result<Vec<Ideal>> {
    let ring = ideal.ring();
    triangular_decomposition(ideal)?.iter().map(|t| t.to_ideal(ring)).collect()
}
