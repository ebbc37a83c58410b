//! Exact computation with plane quartic curves: bitangents, covariant quartics, and
//! Lüroth detection with pentalateral certificates.
//!
//! The library computes over exact coefficient fields — arbitrary-precision rationals
//! or prime fields ℤ/p — and never calls floating-point routines on the algebraic
//! path. The central construction associates to a ternary quartic f a covariant
//! quartic in the dual plane whose 28 singular points are the bitangent lines of
//! {f = 0}, and whose behaviour detects whether f lies on the Lüroth hypersurface:
//! quartics expressible as Σᵢ Π_{j≠i} lⱼ for five lines l₁…l₅ (equivalently, curves
//! passing through the ten vertices of a complete pentalateral).
//!
//! Modules, bottom-up:
//! - [`ring`]: fields, monomial orders, sparse polynomials, dense ternary/binary forms;
//! - [`exactla`]: fraction-free exact linear algebra (determinant, adjugate, kernel);
//! - [`invariants`]: the trilinear apolarity form, catalecticants, the Aronhold
//!   invariant, the Scorza map, and the covariant quartic itself;
//! - [`groebner`]: Buchberger bases, Hilbert-series dimension/degree, ideal operations;
//! - [`detector`]: bitangent ideals, the Lüroth classification, pentalateral recovery;
//! - [`fixtures`]: named example curves used throughout the tests;
//! - [`parse`] / [`plot`] / [`cli`]: the text interface.

pub mod cli;
pub mod detector;
pub mod exactla;
pub mod fixtures;
pub mod groebner;
pub mod invariants;
pub mod parse;
pub mod plot;
pub mod ring;
pub mod rng;
