//! Exact computations for linear systems of hypersurfaces with a general fat
//! point: actual and virtual dimensions, AV sequences, generic initial ideals
//! and the sequence-theoretic checks around them.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod gin;
pub mod graded;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod report;
pub mod seed;
pub mod sequences;
pub mod unexpected;

pub use error::{Error, Result};
