//! Fields, monomials, polynomials and the text grammar.

pub mod field;
pub mod monomial;
pub mod parse;
pub mod poly;

pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use monomial::{binomial, binomial_i, count_monomials, monomial_compare, monomials_of_degree, Monomial, MonomialOrder, MAX_VARS};
pub use parse::{parse_points, parse_polynomial, IdealFile};
pub use poly::{poly_arith, random_form, LinearChange, PolyOp, Polynomial};
