//! Braid groups over the simple (non-repeating) generators.

pub mod artin;
mod normal;
mod perm;
mod simple;
mod word;

pub use artin::{action_equal, artin_action, ActionTable, FreeWord};
pub use normal::{is_right_weighted, normal_form, NormalForm};
pub use perm::Permutation;
pub use simple::SimpleBraid;
pub use word::{BraidWord, Letter, Sign};

pub(crate) use word::parallel_against;
