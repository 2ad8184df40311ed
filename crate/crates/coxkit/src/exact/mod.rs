//! Exact arithmetic: the real ring `Z[2cos(pi/L)]`, integer-matrix Smith
//! normal form and adjugates, and commutant dimensions over the rationals.
//!
//! All integer work uses arbitrary precision; there is no floating point and
//! no silent wraparound anywhere in this module.

mod cyclotomic;
mod cycmat;
mod intmat;
mod qmat;

pub use cyclotomic::{min_poly_degree, RealCyclotomic, Sign};
pub use cycmat::CycMatrix;
pub use intmat::{adjugate, smith_normal_form, IntMatrix, SnfResult};
pub use qmat::{commutant_dimension, QMatrix};
