//! Executable form of Brin's presentation of `BV`.
//!
//! Every relation family is instantiated for all index choices whose
//! generators have index at most `max_index`, and each instance is checked by
//! evaluating both sides and comparing reduced triples. Two commutator
//! identities in the `f` family are checked as well.

use std::collections::HashMap;
use std::fmt;

use super::element::BVElement;
use super::generators::{format_word, letter_element, GenLetter};

const F: fn(usize) -> GenLetter = GenLetter::f;
const B: fn(usize) -> GenLetter = GenLetter::b;
const A: fn(usize) -> GenLetter = GenLetter::a;

/// Relation families, numbered in the order of the presentation; the last
/// entry is the pair of commutator identities.
pub const FAMILY_NAMES: [&str; 11] = [
    "f_l f_h = f_h f_(l+1), h < l",
    "a_h^e f_h = f_(h+1) a_h^e a_(h+1)^e, e = +-1",
    "a_l f_h = f_h a_l, h > l+1",
    "b_l f_h = f_h b_(l+1), h < l",
    "a_h = b_(h+1)^-1 f_h^-1 b_h",
    "a_l a_h = a_h a_l, |h-l| >= 2",
    "a_h a_(h+1) a_h = a_(h+1) a_h a_(h+1)",
    "b_l a_h = a_h b_l, l >= h+2",
    "a_h b_(h+1) a_h = b_(h+1) a_h b_(h+1)",
    "a_j = b_j f_j b_(j+1)^-1",
    "f_i f_(i+1)^-1 = [f_0, f_(i+1)], f_(i+1) f_i^-1 = [f_(i+1), f_0]",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    /// 1-based family number; 11 is the commutator family.
    pub family: usize,
    pub lhs: Vec<GenLetter>,
    pub rhs: Vec<GenLetter>,
    pub passed: bool,
}

impl fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} = {} : {}",
            self.family,
            format_word(&self.lhs),
            format_word(&self.rhs),
            if self.passed { "pass" } else { "FAIL" }
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub max_index: usize,
    pub instances: Vec<RelationInstance>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.instances.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationInstance> {
        self.instances.iter().filter(|r| !r.passed)
    }

    /// `(family, passed, total)` for every family that has instances.
    pub fn family_counts(&self) -> Vec<(usize, usize, usize)> {
        (1..=FAMILY_NAMES.len())
            .filter_map(|fam| {
                let of: Vec<_> = self.instances.iter().filter(|r| r.family == fam).collect();
                (!of.is_empty()).then(|| (fam, of.iter().filter(|r| r.passed).count(), of.len()))
            })
            .collect()
    }
}

/// All relation instances with generator indices bounded by `max_index`, as
/// `(family, lhs, rhs)`.
pub fn relation_instances(max_index: usize) -> Vec<(usize, Vec<GenLetter>, Vec<GenLetter>)> {
    let k = max_index;
    let mut out = Vec::new();
    let pow = |g: GenLetter, e: bool| if e { g } else { g.inv() };

    for l in 1..k {
        for h in 0..l {
            out.push((1, vec![F(l), F(h)], vec![F(h), F(l + 1)]));
        }
    }
    for h in 0..k {
        for e in [true, false] {
            out.push((
                2,
                vec![pow(A(h), e), F(h)],
                vec![F(h + 1), pow(A(h), e), pow(A(h + 1), e)],
            ));
        }
    }
    for l in 0..=k {
        for h in l + 2..=k {
            out.push((3, vec![A(l), F(h)], vec![F(h), A(l)]));
        }
    }
    for l in 1..k {
        for h in 0..l {
            out.push((4, vec![B(l), F(h)], vec![F(h), B(l + 1)]));
        }
    }
    for h in 0..k {
        out.push((5, vec![A(h)], vec![B(h + 1).inv(), F(h).inv(), B(h)]));
    }
    for l in 0..=k {
        for h in l + 2..=k {
            out.push((6, vec![A(l), A(h)], vec![A(h), A(l)]));
        }
    }
    for h in 0..k {
        out.push((
            7,
            vec![A(h), A(h + 1), A(h)],
            vec![A(h + 1), A(h), A(h + 1)],
        ));
    }
    for h in 0..=k {
        for l in h + 2..=k {
            out.push((8, vec![B(l), A(h)], vec![A(h), B(l)]));
        }
    }
    for h in 0..k {
        out.push((
            9,
            vec![A(h), B(h + 1), A(h)],
            vec![B(h + 1), A(h), B(h + 1)],
        ));
    }
    for j in 0..k {
        out.push((10, vec![A(j)], vec![B(j), F(j), B(j + 1).inv()]));
    }
    for i in 1..=k {
        out.push((
            11,
            vec![F(i), F(i + 1).inv()],
            vec![F(0), F(i + 1), F(0).inv(), F(i + 1).inv()],
        ));
        out.push((
            11,
            vec![F(i + 1), F(i).inv()],
            vec![F(i + 1), F(0), F(i + 1).inv(), F(0).inv()],
        ));
    }
    out
}

/// Checks every instance from [`relation_instances`]. Requires `max_index >= 2`.
pub fn check_relations(max_index: usize) -> RelationReport {
    assert!(max_index >= 2, "relation check needs max_index >= 2");
    let mut cache: HashMap<GenLetter, BVElement> = HashMap::new();
    let mut eval = |word: &[GenLetter]| {
        word.iter().fold(BVElement::identity(), |acc, &g| {
            acc.multiply(cache.entry(g).or_insert_with(|| letter_element(g)))
        })
    };
    let instances = relation_instances(max_index)
        .into_iter()
        .map(|(family, lhs, rhs)| {
            let passed = eval(&lhs) == eval(&rhs);
            RelationInstance {
                family,
                lhs,
                rhs,
                passed,
            }
        })
        .collect();
    RelationReport {
        max_index,
        instances,
    }
}
