//! Exact-arithmetic toolkit for the combinatorics of Stirling permutations
//! and second-order Eulerian polynomials.
//!
//! Everything here is exact: integer coefficients are arbitrary precision,
//! evaluation is over the rationals, and real-rootedness is decided by Sturm
//! counts rather than numeric root finding. The crate provides
//!
//! * [`poly`] — sparse multivariate polynomials with a canonical text form;
//! * [`sturm`] / [`hessenberg`] — exact real-root counting and Hessenberg
//!   determinants;
//! * [`grammar`] — formal derivatives driven by substitution rules;
//! * [`stirling`], [`signed`], [`tableaux`] — enumeration of Stirling
//!   permutations, signed permutations and standard Young tableaux together
//!   with their statistics;
//! * [`weyl`] — the expansion of `(cD)^n` and the box-sorting bijection with
//!   ordered weak set partitions;
//! * [`identities`] — a registry of named cross-checks, each verifying one
//!   identity between two independently computed sides.
//!
//! ```
//! use stirperm::families::second_eulerian_poly;
//! use stirperm::grammar::Grammar;
//! use stirperm::poly::{var, Polynomial};
//! use stirperm::stirling::{gen_poly, MultisetSpec, Stat};
//!
//! // the descent polynomial over Stirling permutations on four letters ...
//! let by_enumeration = gen_poly(&MultisetSpec::classical(4), &[(Stat::Des, var("x"))])?;
//! // ... equals the recurrence-built second-order Eulerian polynomial
//! assert_eq!(by_enumeration, second_eulerian_poly(4));
//! assert_eq!(by_enumeration.to_string(), "x + 22*x^2 + 58*x^3 + 24*x^4");
//!
//! // and the squared-rule grammar reproduces it after specialization
//! let g = Grammar::parse("a->a*b^2; b->a*b^2")?;
//! let bind = [(var("a"), Polynomial::parse("x")?), (var("b"), Polynomial::one())].into();
//! assert_eq!(g.derivative_n(&Polynomial::var(var("a")), 4).subst(&bind), by_enumeration);
//! # Ok::<(), stirperm::Error>(())
//! ```

pub mod classical;
pub mod error;
pub mod families;
pub mod grammar;
pub mod hessenberg;
pub mod identities;
pub mod poly;
pub mod signed;
pub mod stirling;
pub mod sturm;
pub mod tableaux;
pub mod weyl;

pub use error::{Error, Result};
pub use poly::{var, Monomial, Polynomial, VarId};
