//! Exact computation in the braided Thompson group `BV`.
//!
//! Elements are reduced tree–braid–tree triples: a top tree of splits, a braid
//! in right-greedy normal form, and a bottom tree of merges. The crate also
//! carries the quotient map onto Thompson's group `V`, a checker for Brin's
//! presentation, and a simulator for the Anshel–Anshel–Goldfeld commutator key
//! exchange over `BV`.

pub mod aag;
pub mod bench;
pub mod braids;
pub mod bv;
mod error;
pub mod rng;
pub mod text;
pub mod trees;

pub use error::{Error, Result};
