//! Elements of `BV` as tree–braid–tree triples, and the quotient onto `V`.

mod element;
mod generators;
mod relations;
mod v;

pub use element::{reduce, BVElement, RawTriple, Side};
pub use generators::{
    evaluate_word, format_word, generator, letter_element, parse_word, Family, GenLetter,
};
pub use relations::{
    check_relations, relation_instances, RelationInstance, RelationReport, FAMILY_NAMES,
};
pub use v::{project_to_v, VElement};
