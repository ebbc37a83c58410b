//! Exact coefficient arithmetic: fields, monomial orders, sparse multivariate
//! polynomials, and dense ternary/binary forms.

pub mod binary;
pub mod field;
pub mod monomial;
pub mod poly;
pub mod ternary;

pub use binary::{binary_apolarity, equianharmonic_invariant, restrict_to_line, BinaryForm};
pub use field::{Field, FieldError, Fp, Rat};
pub use monomial::{Monomial, Order, MAX_VARS};
pub use poly::{Ctx, MultiPoly};
pub use ternary::{cross_products_vanish, plain_exponents, plain_index, plain_len, TernaryForm};
