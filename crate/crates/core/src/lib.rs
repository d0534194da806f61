//! Ideal algebra over prime fields and enumeration of the ideals compatible
//! with a Frobenius splitting of affine space.
//!
//! The crate is `no_std` and only needs `alloc`. Everything that touches the
//! filesystem, the command line or threads lives in the `frobsplit` crate.
//!
//! Layout, bottom-up:
//!
//! * [`field`], [`monomial`], [`ring`], [`poly`]: exact arithmetic in
//!   `F_p[x_1, ..., x_n]`.
//! * [`groebner`]: Buchberger's algorithm and reduced Gröbner bases, which
//!   serve as the canonical identity of every ideal.
//! * [`ideal`], [`factor`], [`primes`]: sums, products, intersections,
//!   colons, dimension, Jacobian ideals, univariate factorization and a
//!   bounded minimal-prime decomposition.
//! * [`frobenius`]: p-th power decompositions, the trace map, Frobenius
//!   roots, splittings and the compatibility tests.
//! * [`enumerate`], [`lattice`]: the recursive search for compatible primes
//!   and the finite lattice they generate.

#![no_std]

extern crate alloc;

pub mod enumerate;
pub mod error;
pub mod factor;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod ideal;
pub mod lattice;
mod linalg;
pub mod monomial;
pub mod poly;
pub mod primes;
pub mod ring;
mod upoly;

pub use enumerate::{
    enumerate_all, enumerate_with, recursion_step, verify_lattice, z_ideal, CompatiblePrimeNode, SequentialExecutor,
    StepExecutor, VerificationReport,
};
pub use error::{Error, Result};
pub use factor::{factor_univariate, Factorization};
pub use field::PrimeField;
pub use frobenius::{
    compatible_closure, fedder_is_fpure, frob_decompose, frob_root, is_compatible, splitting_from_hypersurface, trace,
    validate_splitting, FrobDecomposition, Splitting,
};
pub use groebner::{buchberger, normal_form, GroebnerBasis};
pub use ideal::{radical_membership, Ideal};
pub use lattice::{CompatibleLattice, Member};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use primes::{minimal_primes, TriangularPrime};
pub use ring::{Limits, PolyRing, Ring};
