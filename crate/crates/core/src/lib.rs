//! Exact-arithmetic engine for classifying conics in quantum projective planes.
//!
//! Everything is computed over the fixed field tower
//! `Q ⊂ Q(zeta) ⊂ Frac(Q(zeta)[parameters])`, where `zeta` is a primitive
//! 12th root of unity. No floating point appears anywhere in this crate; all
//! point and root counting over the algebraic closure is reduced to gcd and
//! squarefree-degree computations of base-field polynomials.
//!
//! Module map:
//! - [`cyclotomic`], [`mpoly`], [`field`], [`literal`]: the base field and its
//!   input/output grammar,
//! - [`unipoly`], [`linalg`]: univariate polynomials and dense exact linear
//!   algebra over the field,
//! - [`freealg`]: the free algebra on three generators, quadratic quotients,
//!   graded pieces, centers and quadratic duals,
//! - [`tripoly`], [`clifford`], [`findim`]: Clifford deformations and the
//!   4-dimensional invariant algebra with its nine-class signature,
//! - [`geometry`], [`catalog`]: projective point geometry, the built-in
//!   catalog of point varieties with their automorphisms, and point counting,
//! - [`classify`]: the end-to-end pipeline producing an [`classify::InvariantRecord`].

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
pub mod classify;
pub mod clifford;
pub mod cyclotomic;
pub mod field;
pub mod findim;
pub mod freealg;
pub mod geometry;

pub mod linalg;
pub mod literal;
pub mod mpoly;
pub mod tripoly;
pub mod unipoly;

pub use cyclotomic::Cyclo;
pub use field::{FieldContext, FieldElem};
pub use unipoly::UniPoly;
