//! Exact computation of the φ and Υ concordance invariants of L-space knots
//! and torus-knot combinations, together with the certificates built from
//! them.

pub mod epsilon_order;
pub mod error;
pub mod knot_algebra;
pub mod phi;
pub mod pl;
pub mod semigroup;
pub mod staircase;
pub mod upsilon;

pub use error::{Error, Result};
