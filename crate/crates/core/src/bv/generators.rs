//! The three generator families `f_j`, `b_j`, `a_j` and words over them.
//!
//! Planar conventions (checked against the full presentation by
//! [`check_relations`](super::relations::check_relations)):
//!
//! * `f_j` has no braiding. Its top tree is a right vine with `j` spine carets
//!   ending in a left-leaning caret pair, its bottom tree the same vine ending
//!   in a right-leaning pair; both have `j + 3` leaves. `f_0` is the left vine
//!   over the right vine on three leaves.
//! * `b_j` is the right vine with `j + 2` leaves on both sides, with one
//!   positive crossing of the last two strands.
//! * `a_j = b_j f_j b_{j+1}^-1`.

use std::collections::HashMap;
use std::fmt;

use super::element::BVElement;
use crate::braids::BraidWord;
use crate::error::{Error, Result};
use crate::trees::BinaryTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    F,
    B,
    A,
}

impl Family {
    fn symbol(self) -> char {
        match self {
            Family::F => 'f',
            Family::B => 'b',
            Family::A => 'a',
        }
    }
}

/// `family_index^(+-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenLetter {
    pub family: Family,
    pub index: usize,
    pub inverse: bool,
}

impl GenLetter {
    pub fn new(family: Family, index: usize, inverse: bool) -> Self {
        GenLetter {
            family,
            index,
            inverse,
        }
    }

    pub fn f(index: usize) -> Self {
        Self::new(Family::F, index, false)
    }

    pub fn b(index: usize) -> Self {
        Self::new(Family::B, index, false)
    }

    pub fn a(index: usize) -> Self {
        Self::new(Family::A, index, false)
    }

    pub fn inv(self) -> Self {
        GenLetter {
            inverse: !self.inverse,
            ..self
        }
    }
}

impl fmt::Display for GenLetter {
    /// Lowercase for the generator, uppercase for its inverse.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.family.symbol();
        let c = if self.inverse {
            c.to_ascii_uppercase()
        } else {
            c
        };
        write!(f, "{c}{}", self.index)
    }
}

fn spine(leaves_below: BinaryTree, carets: usize) -> BinaryTree {
    (0..carets).fold(leaves_below, |t, _| BinaryTree::caret(BinaryTree::Leaf, t))
}

pub fn generator(family: Family, j: usize) -> BVElement {
    match family {
        Family::F => {
            let top = spine(BinaryTree::left_vine(3), j);
            let bot = spine(BinaryTree::right_vine(3), j);
            BVElement::from_parts(top, BraidWord::identity(j + 3), bot)
                .expect("generator shapes agree")
        }
        Family::B => {
            let n = j + 2;
            let vine = BinaryTree::right_vine(n);
            let braid = BraidWord::from_artin(n, &[(j + 1) as i64]).expect("valid Artin index");
            BVElement::from_parts(vine.clone(), braid, vine).expect("generator shapes agree")
        }
        Family::A => generator(Family::B, j)
            .multiply(&generator(Family::F, j))
            .multiply(&generator(Family::B, j + 1).invert()),
    }
}

pub fn letter_element(letter: GenLetter) -> BVElement {
    let g = generator(letter.family, letter.index);
    if letter.inverse {
        g.invert()
    } else {
        g
    }
}

/// Left-to-right product of the letters; the empty word gives the identity.
pub fn evaluate_word(word: &[GenLetter]) -> BVElement {
    let mut cache: HashMap<GenLetter, BVElement> = HashMap::new();
    word.iter().fold(BVElement::identity(), |acc, &letter| {
        let g = cache
            .entry(letter)
            .or_insert_with(|| letter_element(letter));
        acc.multiply(g)
    })
}

/// Parses tokens such as `f0 b1 a2 F0 B1 A2` (uppercase means inverse).
pub fn parse_word(text: &str) -> Result<Vec<GenLetter>> {
    let mut out = Vec::new();
    let mut column = 1;
    for raw in text.split(' ') {
        let start = column;
        column += raw.chars().count() + 1;
        let token = raw.trim();
        if token.is_empty() {
            continue;
        }
        let mut chars = token.chars();
        let head = chars.next().expect("nonempty token");
        let (family, inverse) = match head {
            'f' => (Family::F, false),
            'F' => (Family::F, true),
            'b' => (Family::B, false),
            'B' => (Family::B, true),
            'a' => (Family::A, false),
            'A' => (Family::A, true),
            other => {
                return Err(Error::parse(
                    start,
                    format!("unknown generator family '{other}'"),
                ))
            }
        };
        let digits = chars.as_str();
        let index: usize = digits.parse().map_err(|_| {
            Error::parse(
                start + 1,
                format!("expected a non-negative index after '{head}'"),
            )
        })?;
        out.push(GenLetter {
            family,
            index,
            inverse,
        });
    }
    Ok(out)
}

pub fn format_word(word: &[GenLetter]) -> String {
    word.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
