//! Exact number triangles generated by matrices, and the combinatorics that
//! feeds them.
//!
//! A triangle is generated from a coefficient matrix (or a sequence of
//! matrices) by repeated row-vector products: row `n` is row `n - 1` times the
//! `n x (n + 1)` block of the matrix. Choosing the matrix well yields Pascal,
//! Catalan and Motzkin triangles, and, through weights on Motzkin and Dyck
//! paths, tangent, Bernoulli, secant and Entringer numbers and the rational
//! part of `zeta(2n)`.
//!
//! Everything here is exact (`BigInt`, [`Rational`], [`Polynomial`]) and the
//! crate only needs `alloc`.
//!
//! Module map:
//!
//! - [`numerics`]: rationals, dense and Laurent polynomials, the [`Ring`] contract.
//! - [`paths`]: Motzkin/Dyck paths, enumeration, suffix classes, closed-form counts.
//! - [`triangle`]: the generation engine and the two weighted path engines.
//! - [`perm`]: brute force over symmetric groups (`phi`, preimage counts,
//!   alternating permutations, Entringer numbers).
//! - [`nu_rho`]: fast preimage counts and the `rho` path weight.
//! - [`constructions`]: named triangles and sequences.

#![no_std]

extern crate alloc;

pub mod constructions;
mod error;
pub mod nu_rho;
pub mod numerics;
pub mod paths;
pub mod perm;
pub mod triangle;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use numerics::{rational_make, Laurent, Polynomial, Rational, Ring};
pub use paths::{Path, Step, SuffixClass};
pub use perm::Permutation;
pub use triangle::{Matrix, Triangle};

/// Default largest path length accepted by the path enumerators (`M_16 = 853467`).
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

/// Default largest symmetric group swept by the brute-force oracles (`S_9`).
pub const DEFAULT_PERMUTATION_CAP: usize = 9;

/// Default largest number of rows produced by a named triangle.
pub const DEFAULT_ROW_CAP: usize = 256;
