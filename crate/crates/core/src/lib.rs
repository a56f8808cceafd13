//! Exact computations in the braid group of `Z^n` and in pseudo-Garside
//! groups generally.
//!
//! Everything here is pure arithmetic on arbitrary-precision integers and
//! rationals; there is no floating point and no IO. The crate only needs
//! `alloc`.
//!
//! Layout:
//!
//! * [`arith`], [`matrix`], [`hermite`], [`feasibility`]: exact scalars,
//!   unimodular matrices, coset reduction and homogeneous cone feasibility.
//! * [`cone`]: piecewise-linear sets as unions of relatively open cones.
//! * [`lex`]: lexicographic signs, the preorder on `GL(n, Z)` and the partial
//!   product.
//! * [`lattice`]: the lattice of cosets `GL(n, Z)/H` and the `Z^n` germ.
//! * [`engine`]: greedy and Delta normal forms over an abstract germ.
//! * [`bruhat`]: the symmetric-group germ used as a brute-forceable oracle.
//! * [`presentation`]: shapes, generator decompositions, type rewriting and
//!   the small presentation of the monoid.
#![no_std]
#![warn(rust_2018_idioms, unused_qualifications)]

extern crate alloc;

pub mod arith;
pub mod bruhat;
pub mod cone;
pub mod engine;
pub mod error;
pub mod feasibility;
pub mod hermite;
pub mod lattice;
pub mod lex;
pub mod matrix;
pub mod presentation;

pub use arith::{ext_gcd_bezout, Int, Rat};
pub use error::{Error, Result};
pub use matrix::{RatMatrix, UniMatrix};
