//! Operators specific to characteristic `p`: p-th-power decompositions,
//! the trace map `u`, Frobenius roots of ideals, splittings and the
//! compatibility tests.
//!
//! A splitting of affine space is stored as one polynomial `f` and acts by
//! `σ(h) = u(f·h)`. Here `u` picks the `(p-1, ..., p-1)` component of the
//! decomposition `g = Σ_b g_b^p x^b`, which generates `Hom(F_* S, S)` as an
//! `S`-module. The zero set of the splitting section is therefore `V(f)`:
//! at a point where `f` is a unit the splitting is, up to that unit, the
//! standard one `u((x_1⋯x_n)^{p-1} ·)` in local parameters, and that map
//! stabilizes no proper ideal through the point. Reading the zero set
//! fiberwise as `f ∈ m_y^[p]` would contradict this unit argument, so it is
//! not used.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// `g = Σ_b (g_b)^p · x^b` with `b ∈ [0, p-1]^n`. Zero components are not
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobDecomposition {
    ring: Ring,
    components: BTreeMap<Vec<u32>, Polynomial>,
}

impl FrobDecomposition {
    pub fn component(&self, b: &[u32]) -> Option<&Polynomial> {
        self.components.get(b)
    }

    pub fn components(&self) -> impl Iterator<Item = (&[u32], &Polynomial)> {
        self.components.iter().map(|(b, g)| (b.as_slice(), g))
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// `Σ_b g_b^p x^b`.
    pub fn recompose(&self) -> Polynomial {
        let p = self.ring.characteristic();
        let mut acc = Polynomial::zero(&self.ring);
        for (b, g) in &self.components {
            let shifted = g
                .frobenius_power(p)
                .and_then(|h| h.mul_term(&Monomial::new(b.clone()), 1))
                .expect("exponent overflow in recomposition");
            acc = &acc + &shifted;
        }
        acc
    }
}

pub fn frob_decompose(g: &Polynomial) -> FrobDecomposition {
    let ring = g.ring().clone();
    let p = ring.characteristic();
    let field = *ring.field();
    let mut buckets: BTreeMap<Vec<u32>, Vec<(Monomial, u32)>> = BTreeMap::new();
    for (m, c) in g.terms() {
        let b: Vec<u32> = m.exponents().iter().map(|e| e % p).collect();
        let root = Monomial::new(m.exponents().iter().map(|e| e / p).collect());
        buckets.entry(b).or_default().push((root, field.pth_root(*c)));
    }
    let components = buckets.into_iter().map(|(b, terms)| (b, Polynomial::from_terms(&ring, terms))).collect();
    FrobDecomposition { ring, components }
}

/// The trace map `u`: the `(p-1, ..., p-1)` component of `g`.
pub fn trace(g: &Polynomial) -> Polynomial {
    let ring = g.ring();
    let p = ring.characteristic();
    let top = p - 1;
    let terms = g
        .terms()
        .iter()
        .filter(|(m, _)| m.exponents().iter().all(|e| e % p == top))
        .map(|(m, c)| (Monomial::new(m.exponents().iter().map(|e| e / p).collect()), ring.field().pth_root(*c)));
    Polynomial::from_terms(ring, terms)
}

/// Frobenius root of the ideal generated by `gens`: the smallest `K` with
/// `(gens) ⊆ K^[p]`, generated by all components of all generators.
///
/// Working on generators suffices. For `r = Σ_c r_c^p x^c` and a generator
/// `g`, each component of `r·g` is an `S`-combination of components of
/// `x^c·g`, and those are components of `g` multiplied by monomials. So
/// component extraction maps `S·g` into the ideal of `g`'s components.
pub fn frob_root_of(ring: &Ring, gens: &[Polynomial]) -> Result<Ideal> {
    let mut out = Vec::new();
    for g in gens {
        for (_, comp) in frob_decompose(g).components {
            out.push(comp);
        }
    }
    Ideal::new(ring, out)
}

/// `frob_root(J)` on the reduced basis of `J`.
pub fn frob_root(ideal: &Ideal) -> Result<Ideal> {
    frob_root_of(ideal.ring(), ideal.basis())
}

/// A Frobenius splitting `σ = u(f · _)` of the ambient affine space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    f: Polynomial,
    validated: bool,
}

impl Splitting {
    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn ring(&self) -> &Ring {
        self.f.ring()
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// `σ(h) = u(f·h)`.
    pub fn apply(&self, h: &Polynomial) -> Result<Polynomial> {
        Ok(trace(&self.f.checked_mul(h)?))
    }

    /// Bypasses validation. Only for negative controls in tests and
    /// diagnostics; every operation that needs a splitting checks the flag.
    pub fn unchecked(f: Polynomial) -> Splitting {
        Splitting { f, validated: false }
    }

    fn require_valid(&self) -> Result<()> {
        if self.validated {
            Ok(())
        } else {
            Err(Error::NotASplitting { trace: trace(&self.f).to_string() })
        }
    }
}

/// `σ(1) = 1`, i.e. `u(f) = 1`, is exactly the condition for `σ` to split
/// Frobenius: `σ(h^p) = u(f h^p) = h·u(f)`.
pub fn validate_splitting(f: &Polynomial) -> Result<Splitting> {
    let u = trace(f);
    if !u.is_one() {
        return Err(Error::NotASplitting { trace: u.to_string() });
    }
    Ok(Splitting { f: f.clone(), validated: true })
}

/// Fedder's criterion at the origin: `g^{p-1} ∉ (x_1^p, ..., x_n^p)`. A
/// monomial lies in that ideal iff some exponent reaches `p`.
pub fn fedder_is_fpure(g: &Polynomial) -> bool {
    let p = g.ring().characteristic();
    g.pow(p - 1).terms().iter().any(|(m, _)| m.exponents().iter().all(|&e| e < p))
}

/// Builds `f = c·x^b·g^{p-1}` with `u(f) = 1`, searching `b ∈ [0, p-1]^n`
/// by total degree and then lexicographically. Such an `f` lies in
/// `(g^{p-1}) ⊆ ((g)^[p] : (g))`, so `V(g)` is compatible. The search is
/// sufficient for the examples it is used on but not complete in general.
pub fn splitting_from_hypersurface(g: &Polynomial) -> Result<Splitting> {
    if g.is_constant() {
        return Err(Error::InvalidArgument(format!("{g} is constant")));
    }
    let ring = g.ring();
    let p = ring.characteristic();
    let n = ring.nvars();
    let power = g.pow(p - 1);
    let mut boxes: Vec<Vec<u32>> = Vec::new();
    let mut b = vec![0u32; n];
    loop {
        boxes.push(b.clone());
        let mut k = 0;
        while k < n {
            b[k] += 1;
            if b[k] < p {
                break;
            }
            b[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    boxes.sort_by(|x, y| {
        let (dx, dy): (u32, u32) = (x.iter().sum(), y.iter().sum());
        dx.cmp(&dy).then_with(|| y.cmp(x))
    });
    for b in boxes {
        let candidate = power.mul_term(&Monomial::new(b), 1)?;
        let u = trace(&candidate);
        if !u.is_zero() && u.is_constant() {
            let c = ring.field().inv(u.leading_coeff());
            return validate_splitting(&candidate.scale(c));
        }
    }
    Err(Error::NotConstructible(g.to_string()))
}

/// `σ(I) ⊆ I` tested as `frob_root(f·I) ⊆ I`.
pub fn is_compatible_by_root(s: &Splitting, ideal: &Ideal) -> Result<bool> {
    s.require_valid()?;
    let f = s.polynomial();
    let products = ideal.basis().iter().map(|g| f.checked_mul(g)).collect::<Result<Vec<_>>>()?;
    frob_root_of(ideal.ring(), &products)?.is_subset_of(ideal)
}

/// `σ(I) ⊆ I` tested as `f ∈ (I^[p] : I)`, i.e. `f·g ∈ I^[p]` for every
/// basis element `g` of `I`.
pub fn is_compatible_by_colon(s: &Splitting, ideal: &Ideal) -> Result<bool> {
    s.require_valid()?;
    let f = s.polynomial();
    let bracket = ideal.bracket_power(ideal.ring().characteristic() as u64)?;
    for g in ideal.basis() {
        if !bracket.contains(&f.checked_mul(g)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compatibility of `I` with `s`, computed both ways. The two tests are
/// equivalent (`root(J) ⊆ I ⟺ J ⊆ I^[p]`), so a disagreement is reported
/// as an internal error.
pub fn is_compatible(s: &Splitting, ideal: &Ideal) -> Result<bool> {
    let a = is_compatible_by_root(s, ideal)?;
    let b = is_compatible_by_colon(s, ideal)?;
    if a != b {
        return Err(Error::Internal(format!("compatibility tests disagree on {ideal}: root test {a}, colon test {b}")));
    }
    Ok(a)
}

/// Smallest compatible ideal containing `J`: iterate `J ← J + root(f·J)`
/// until stable. The chain ascends, so it stops by Noetherianity; the ring's
/// round limit turns a runaway into an error.
pub fn compatible_closure(s: &Splitting, ideal: &Ideal) -> Result<Ideal> {
    s.require_valid()?;
    let ring = ideal.ring();
    let limit = ring.limits().max_closure_rounds;
    let f = s.polynomial();
    let mut current = ideal.clone();
    for _ in 0..limit {
        if current.is_unit() {
            return Ok(current);
        }
        let products = current.basis().iter().map(|g| f.checked_mul(g)).collect::<Result<Vec<_>>>()?;
        let root = frob_root_of(ring, &products)?;
        if root.is_subset_of(&current)? {
            return Ok(current);
        }
        current = current.sum(&root)?;
    }
    Err(Error::BudgetExceeded { what: "compatible closure rounds", limit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;
    use alloc::string::String;

    fn r(p: u64, vars: &[&str]) -> Ring {
        PolyRing::grevlex(p, vars).unwrap()
    }

    fn v(ring: &Ring, i: usize) -> Polynomial {
        Polynomial::var(ring, i)
    }

    fn comps(d: &FrobDecomposition) -> Vec<(Vec<u32>, String)> {
        d.components().map(|(b, g)| (b.to_vec(), g.to_string())).collect()
    }

    fn fermat(ring: &Ring) -> Polynomial {
        (0..3).fold(Polynomial::zero(ring), |a, i| &a + &v(ring, i).pow(3))
    }

    #[test]
    fn decompositions() {
        let r2 = r(2, &["x", "y"]);
        let (x, y) = (v(&r2, 0), v(&r2, 1));
        assert_eq!(comps(&frob_decompose(&(&x.pow(3) * &y))), [(vec![1, 1], "x".into())]);
        let d = frob_decompose(&(&x.pow(2) + &x));
        assert_eq!(comps(&d), [(vec![0, 0], "x".into()), (vec![1, 0], "1".into())]);
        assert_eq!(d.recompose(), &x.pow(2) + &x);

        let r3 = r(3, &["x", "y"]);
        let (x, y) = (v(&r3, 0), v(&r3, 1));
        assert_eq!(comps(&frob_decompose(&(&x.pow(5) * &y.pow(2)))), [(vec![2, 2], "x".into())]);
    }

    #[test]
    fn traces() {
        let r3 = r(3, &["x", "y"]);
        let (x, y) = (v(&r3, 0), v(&r3, 1));
        assert!(trace(&(&x * &y).pow(2)).is_one());
        assert!(trace(&x).is_zero());
        assert_eq!(trace(&(&x.pow(2) * &y.pow(5))), y);
    }

    #[test]
    fn frobenius_roots() {
        let r2 = r(2, &["x", "y"]);
        let (x, y) = (v(&r2, 0), v(&r2, 1));
        let root = |g: Polynomial| frob_root(&Ideal::new(&r2, [g]).unwrap()).unwrap();
        assert!(root(x.clone()).is_unit());
        assert_eq!(root(&x.pow(2) * &y.pow(2)), Ideal::new(&r2, [&x * &y]).unwrap());
        assert_eq!(root(&x.pow(3) * &y.pow(2)), Ideal::new(&r2, [&x * &y]).unwrap());
    }

    #[test]
    fn splitting_validation() {
        let r3 = r(3, &["x", "y"]);
        assert!(validate_splitting(&(&v(&r3, 0) * &v(&r3, 1)).pow(2)).is_ok());

        let r7 = r(7, &["x", "y", "z"]);
        let f = fermat(&r7).pow(6).scale(6);
        assert!(validate_splitting(&f).unwrap().is_validated());

        let r2 = r(2, &["x", "y"]);
        assert_eq!(validate_splitting(&Polynomial::one(&r2)), Err(Error::NotASplitting { trace: "0".into() }));
    }

    #[test]
    fn fedder() {
        let r2 = r(2, &["x", "y"]);
        assert!(fedder_is_fpure(&(&v(&r2, 0) * &v(&r2, 1))));
        let r5 = r(5, &["x", "y"]);
        assert!(!fedder_is_fpure(&(&v(&r5, 1).pow(2) - &v(&r5, 0).pow(3))));
        assert!(fedder_is_fpure(&fermat(&r(7, &["x", "y", "z"]))));
        assert!(!fedder_is_fpure(&fermat(&r(5, &["x", "y", "z"]))));
    }

    #[test]
    fn splittings_from_hypersurfaces() {
        let r2 = r(2, &["x", "y"]);
        let xy = &v(&r2, 0) * &v(&r2, 1);
        assert_eq!(splitting_from_hypersurface(&xy).unwrap().polynomial(), &xy);

        let r7 = r(7, &["x", "y", "z"]);
        let g = fermat(&r7);
        assert_eq!(splitting_from_hypersurface(&g).unwrap().polynomial(), &g.pow(6).scale(6));

        let r3 = r(3, &["x", "y"]);
        let s = splitting_from_hypersurface(&v(&r3, 0)).unwrap();
        assert_eq!(s.polynomial(), &(&v(&r3, 0) * &v(&r3, 1)).pow(2));

        let r5 = r(5, &["x", "y", "z"]);
        assert!(matches!(splitting_from_hypersurface(&fermat(&r5)), Err(Error::NotConstructible(_))));
    }

    #[test]
    fn compatibility_examples() {
        let r2 = r(2, &["x", "y"]);
        let (x, y) = (v(&r2, 0), v(&r2, 1));
        let s = validate_splitting(&(&x * &y)).unwrap();
        let ideal = |g: &[Polynomial]| Ideal::new(&r2, g.to_vec()).unwrap();
        assert!(is_compatible(&s, &ideal(core::slice::from_ref(&x))).unwrap());
        assert!(!is_compatible(&s, &ideal(&[&x + &y])).unwrap());
        assert!(is_compatible(&s, &ideal(&[x.clone(), y.clone()])).unwrap());
        assert!(is_compatible(&s, &Ideal::zero(&r2)).unwrap());
        assert!(is_compatible(&s, &Ideal::unit(&r2)).unwrap());
    }

    #[test]
    fn closures() {
        let r2 = r(2, &["x", "y"]);
        let (x, y) = (v(&r2, 0), v(&r2, 1));
        let s = validate_splitting(&(&x * &y)).unwrap();
        let ideal = |g: &[Polynomial]| Ideal::new(&r2, g.to_vec()).unwrap();
        let xy = ideal(&[&x * &y]);
        assert_eq!(compatible_closure(&s, &xy).unwrap(), xy);
        assert_eq!(compatible_closure(&s, &ideal(&[x.pow(2)])).unwrap(), ideal(core::slice::from_ref(&x)));
        assert_eq!(compatible_closure(&s, &ideal(&[&x + &y])).unwrap(), ideal(&[x.clone(), y.clone()]));
    }

    #[test]
    fn unvalidated_splittings_are_refused() {
        let r2 = r(2, &["x", "y"]);
        let s = Splitting::unchecked(Polynomial::one(&r2));
        assert!(matches!(is_compatible(&s, &Ideal::zero(&r2)), Err(Error::NotASplitting { .. })));
        assert!(matches!(compatible_closure(&s, &Ideal::zero(&r2)), Err(Error::NotASplitting { .. })));
    }
}
