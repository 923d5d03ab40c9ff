//! Gröbner bases and the ideal operations built on them.

pub mod buchberger;
pub mod ideal;
pub mod monomial_ideal;
pub mod ops;

pub use buchberger::Budget;
pub use ideal::{GroebnerBasis, Ideal, Saturation};
pub use monomial_ideal::MonomialIdeal;
pub use ops::{colon_element, elimination_ideal, ideal_colon, ideal_intersection, saturation};
