//! Exact graded commutative algebra over a prime field.
//!
//! The crate is organized bottom-up:
//!
//! * [`field`], [`monomial`], [`order`], [`poly`], [`free`] — arithmetic for
//!   multivariate polynomials and elements of graded free modules over `F_p`.
//! * [`groebner`], [`submodule`] — Buchberger's algorithm, normal forms,
//!   Schreyer syzygies, and the ideal/module operations built on them
//!   (powers, products, colons, membership, reduction numbers,
//!   Ratliff-Rush closures).
//! * [`ring`], [`presented`], [`resolution`], [`eisenbud`] — quotient rings
//!   `A = Q/(f_1..f_c)`, presented modules, minimal free resolutions over
//!   `A`, matrix factorizations and the degree `-2` operators on a
//!   resolution.
//! * [`linalg`], [`stdmon`], [`hilbert`] — finite-length computations:
//!   standard monomial bases, exact rank over `F_p`, Hilbert-Samuel tables,
//!   h-polynomials, Hilbert coefficients and their duals.
//! * [`superficial`] — superficial element selection/verification, b-vectors,
//!   depth of associated graded modules in dimension <= 2, Ratliff-Rush
//!   deviation tables.
//! * [`quasipoly`], [`checks`] — exact period-2 quasi-polynomial fitting and
//!   the verdict-producing growth checks.
//!
//! Everything is exact; there are no floating point numbers anywhere.
//! All values are immutable once constructed and safe to share across
//! threads. The crate is `no_std` (with `alloc`); IO, caching and file
//! formats live in the companion `syzlab` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod checks;
pub mod eisenbud;
pub mod error;
pub mod field;
pub mod free;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod presented;
pub mod quasipoly;
pub mod resolution;
pub mod ring;
pub mod stdmon;
pub mod submodule;
pub mod superficial;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use free::{Ambient, FreeElement};
pub use groebner::GroebnerBasis;
pub use monomial::Monomial;
pub use order::{ModuleOrder, ScalarOrder};
pub use poly::Polynomial;
// pub use presented::PresentedModule;
// pub use resolution::ResolutionData;
// pub use ring::QuotientRing;
// pub use submodule::Submodule;
