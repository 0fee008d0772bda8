//! Exact-arithmetic engine for the algebraic side of Bernstein-Gelfand-Gelfand
//! theory on flag manifolds.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point enters any code path. The crate is `no_std` (with `alloc`) so the
//! mathematical core carries no IO or platform dependencies; the companion
//! CLI crate provides file formats and the verification harness.
//!
//! The main pipeline:
//!
//! * [`rootcore`] — root systems, Weyl words, Bruhat order, parabolic
//!   subsets and the induced `|k|`-grading by root height.
//! * [`chevalley`] — Chevalley structure constants (extraspecial-pair
//!   gauge), graded nilpotent algebras and exact PBW arithmetic in their
//!   universal enveloping algebras.
//! * [`repkit`] — Weyl dimension, Freudenthal characters, and explicit
//!   irreducible modules built weight space by weight space.
//! * [`verma`] — truncated Verma modules, singular-vector solving, BGG
//!   resolutions and their exactness reports.
//! * [`kostant`] — the Chevalley-Eilenberg complex on `Λ*(p₊)* ⊗ V` with
//!   differential, codifferential and Laplacian, brute-force cohomology
//!   against the highest-weight prediction, operator diagrams, and the
//!   Euler index integer.
//! * [`splitkit`] — exact splittings of finite exact complexes and the
//!   equivariant-splitting rank verdict.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod chevalley;
pub mod error;
pub mod kostant;
pub mod linalg;
pub mod repkit;
pub mod rootcore;
pub mod splitkit;
pub mod verma;

pub use bounds::Bounds;
pub use error::Error;

/// Arbitrary-precision rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Shorthand for `Result` with the crate error type.
pub type Result<T> = core::result::Result<T, Error>;

/// Exact rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(num_bigint::BigInt::from(n))
}
