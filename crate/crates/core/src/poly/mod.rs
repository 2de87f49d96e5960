//! Exact coefficients, exponent vectors, monomial orders and sparse polynomials.

pub mod field;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polynomial;

pub use field::{Field, FieldElement};
pub use monomial::{Monomial, WeightVector};
pub use order::{cmp_weighted_degrevlex, MonomialOrder};
pub use parse::{parse_polynomial, parse_polynomial_lines};
pub use polynomial::{Polynomial, Ring};
