//! Finite permutation-group engine.
//!
//! Element storage is flat image arrays with hashing; there is deliberately no
//! stabilizer-chain machinery. Groups are materialized by breadth-first
//! closure up to an explicit bound (desk scale caps near 10^6 elements) and
//! every operation past that point is brute force with cheap pruning, which
//! keeps the engine easy to audit.

mod group;
mod homs;
mod perm;

pub use group::{closure, Elements, PermGroup, DEFAULT_BOUND};
pub use homs::{
    cayley_presentation, eval_word, extend_homomorphism, hom_count, is_isomorphic_small,
    Presentation,
};
pub use perm::{cycle_type, Perm};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("closure bound exceeded: at least {partial} elements generated")]
    BoundExceeded { partial: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("element is not in the group")]
    ElementNotInGroup,
    #[error("not a subgroup of the ambient group")]
    NotASubgroup,
    #[error("parse error: {0}")]
    Parse(String),
}
