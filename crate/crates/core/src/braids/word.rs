use std::fmt;

use super::normal::{normal_form, NormalForm};
use super::perm::Permutation;
use super::simple::SimpleBraid;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flipped(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn is_pos(self) -> bool {
        self == Sign::Pos
    }
}

/// One letter of a braid word: a simple braid or its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub simple: SimpleBraid,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(simple: SimpleBraid) -> Self {
        Letter {
            simple,
            sign: Sign::Pos,
        }
    }

    pub fn neg(simple: SimpleBraid) -> Self {
        Letter {
            simple,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(&self) -> Self {
        Letter {
            simple: self.simple.clone(),
            sign: self.sign.flipped(),
        }
    }

    /// Top-to-bottom permutation induced by the letter.
    pub fn permutation(&self) -> Permutation {
        match self.sign {
            Sign::Pos => self.simple.permutation().clone(),
            Sign::Neg => self.simple.inverse_permutation().clone(),
        }
    }

    /// Bottom position of the strand entering at top position `i`.
    fn exit(&self, i: usize) -> usize {
        match self.sign {
            Sign::Pos => self.simple.permutation().at(i),
            Sign::Neg => self.simple.inverse_permutation().at(i),
        }
    }

    /// Top position, within the underlying simple braid, of the strand that
    /// enters this letter at position `i`.
    fn simple_top(&self, i: usize) -> usize {
        match self.sign {
            Sign::Pos => i,
            Sign::Neg => self.simple.inverse_permutation().at(i),
        }
    }
}

/// An element of the braid group on `n` strands, as a word in simple braids
/// and their inverses. The empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Self {
        BraidWord {
            strands: n,
            letters: Vec::new(),
        }
    }

    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| l.simple.strands() != n) {
            return Err(Error::StrandMismatch {
                left: n,
                right: bad.simple.strands(),
            });
        }
        Ok(BraidWord {
            strands: n,
            letters,
        })
    }

    pub(crate) fn from_letters_unchecked(n: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.simple.strands() == n));
        BraidWord {
            strands: n,
            letters,
        }
    }

    pub fn simple(s: SimpleBraid) -> Self {
        BraidWord {
            strands: s.strands(),
            letters: vec![Letter::pos(s)],
        }
    }

    /// Word in Artin generators: `+i` is `s_i`, `-i` is `s_i^-1` (1-based).
    pub fn from_artin(n: usize, word: &[i64]) -> Result<Self> {
        let letters = word
            .iter()
            .map(|&g| {
                let i = g.unsigned_abs() as usize;
                let s = SimpleBraid::artin(n, i)?;
                Ok(if g > 0 {
                    Letter::pos(s)
                } else {
                    Letter::neg(s)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord {
            strands: n,
            letters,
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Word length with respect to the simple generators.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub(crate) fn append(&mut self, other: &BraidWord) {
        assert_eq!(self.strands, other.strands, "strand count mismatch");
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn invert(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    pub fn normal_form(&self) -> NormalForm {
        normal_form(self)
    }

    /// Equality in the braid group, decided by comparing normal forms.
    pub fn equals(&self, other: &BraidWord) -> bool {
        self.strands == other.strands && self.normal_form() == other.normal_form()
    }

    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<u32> = (0..self.strands as u32).collect();
        for letter in &self.letters {
            for x in images.iter_mut() {
                *x = letter.exit(*x as usize) as u32;
            }
        }
        Permutation::from_images_unchecked(images)
    }

    /// Deletes the strand entering at top position `i` (1-based).
    pub fn delete_strand(&self, i: usize) -> Result<Self> {
        self.check_strand(i)?;
        Ok(self.delete_strand0(i - 1))
    }

    pub(crate) fn delete_strand0(&self, mut pos: usize) -> Self {
        let letters = self
            .letters
            .iter()
            .map(|letter| {
                let top = letter.simple_top(pos);
                let (s, exit) = letter.simple.delete_strand(top);
                pos = match letter.sign {
                    Sign::Pos => exit,
                    Sign::Neg => top,
                };
                Letter {
                    simple: s,
                    sign: letter.sign,
                }
            })
            .collect();
        BraidWord {
            strands: self.strands - 1,
            letters,
        }
    }

    /// Doubles the strand entering at top position `i` (1-based); the copies
    /// occupy top positions `i` and `i + 1`.
    pub fn double_strand(&self, i: usize) -> Result<Self> {
        self.check_strand(i)?;
        Ok(self.double_strand0(i - 1))
    }

    pub(crate) fn double_strand0(&self, mut pos: usize) -> Self {
        let letters = self
            .letters
            .iter()
            .map(|letter| {
                let top = letter.simple_top(pos);
                let (s, exit) = letter.simple.double_strand(top);
                pos = match letter.sign {
                    Sign::Pos => exit,
                    Sign::Neg => top,
                };
                Letter {
                    simple: s,
                    sign: letter.sign,
                }
            })
            .collect();
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Whether strands `i` and `i + 1` (1-based, indexed at the top) run
    /// parallel, i.e. doubling after deleting gives the braid back.
    pub fn strands_parallel(&self, i: usize) -> Result<bool> {
        if i == 0 || i >= self.strands {
            return Err(Error::StrandIndex {
                index: i,
                strands: self.strands,
            });
        }
        let target = self.normal_form();
        Ok(parallel_against(self, i - 1, &target))
    }

    fn check_strand(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.strands {
            return Err(Error::StrandIndex {
                index: i,
                strands: self.strands,
            });
        }
        Ok(())
    }

    /// Artin word (signed, 1-based) spelling the same braid.
    pub fn to_artin(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for letter in &self.letters {
            let f = letter.simple.artin_factors();
            match letter.sign {
                Sign::Pos => out.extend(f.iter().map(|&i| i as i64 + 1)),
                Sign::Neg => out.extend(f.iter().rev().map(|&i| -(i as i64 + 1))),
            }
        }
        out
    }
}

/// Parallel test at 0-based position `i` against a precomputed normal form
/// of `word`.
pub(crate) fn parallel_against(word: &BraidWord, i: usize, target: &NormalForm) -> bool {
    let p = word.permutation();
    if p.at(i) + 1 != p.at(i + 1) {
        return false;
    }
    normal_form(&word.delete_strand0(i).double_strand0(i)) == *target
}

impl fmt::Display for BraidWord {
    /// Artin-generator spelling (`s1 S2 ...`), or `id` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let artin = self.to_artin();
        if artin.is_empty() {
            return f.write_str("id");
        }
        for (k, g) in artin.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if *g > 0 {
                write!(f, "s{g}")?;
            } else {
                write!(f, "S{}", -g)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, a: &[i64]) -> BraidWord {
        BraidWord::from_artin(n, a).unwrap()
    }

    #[test]
    fn from_artin_examples() {
        assert_eq!(
            w(2, &[1]).letters(),
            &[Letter::pos(SimpleBraid::artin(2, 1).unwrap())]
        );
        assert!(w(3, &[]).is_empty());
        let x = w(3, &[1, -2]);
        assert_eq!(
            x.letters()[1],
            Letter::neg(SimpleBraid::artin(3, 2).unwrap())
        );
        assert!(matches!(
            BraidWord::from_artin(3, &[3]),
            Err(Error::ArtinIndex { .. })
        ));
        assert!(matches!(
            BraidWord::from_artin(3, &[0]),
            Err(Error::ArtinIndex { .. })
        ));
    }

    #[test]
    fn multiply_and_invert() {
        let id = BraidWord::identity(3);
        let b = w(3, &[1, -2]);
        assert_eq!(id.multiply(&b).unwrap(), b);
        assert_eq!(w(3, &[1]).multiply(&w(3, &[2])).unwrap(), w(3, &[1, 2]));
        assert!(w(2, &[1])
            .multiply(&w(2, &[-1]))
            .unwrap()
            .normal_form()
            .is_identity());
        assert!(w(2, &[1]).multiply(&w(3, &[1])).is_err());
        assert_eq!(b.invert(), w(3, &[2, -1]));
        assert_eq!(id.invert(), id);
        assert!(b.multiply(&b.invert()).unwrap().normal_form().is_identity());
    }

    #[test]
    fn equality_examples() {
        assert!(BraidWord::identity(3).equals(&BraidWord::identity(3)));
        assert!(w(3, &[1, 2, 1]).equals(&w(3, &[2, 1, 2])));
        assert!(!w(2, &[1]).equals(&w(2, &[-1])));
        assert!(!BraidWord::identity(2).equals(&BraidWord::identity(3)));
    }

    #[test]
    fn delete_strand_examples() {
        assert!(w(2, &[1])
            .delete_strand(1)
            .unwrap()
            .equals(&BraidWord::identity(1)));
        assert!(w(3, &[1]).delete_strand(3).unwrap().equals(&w(2, &[1])));
        assert!(w(3, &[1, 2])
            .delete_strand(1)
            .unwrap()
            .equals(&BraidWord::identity(2)));
        assert!(w(3, &[1]).delete_strand(4).is_err());
        assert!(w(3, &[1]).delete_strand(0).is_err());
    }

    #[test]
    fn double_strand_examples() {
        let one = BraidWord::identity(1).double_strand(1).unwrap();
        assert!(one.equals(&BraidWord::identity(2)));
        let d1 = w(2, &[1]).double_strand(1).unwrap();
        assert_eq!(d1.len(), 1);
        assert_eq!(
            d1.letters()[0].simple.permutation().one_line(),
            vec![2, 3, 1]
        );
        let d2 = w(2, &[1]).double_strand(2).unwrap();
        assert_eq!(
            d2.letters()[0].simple.permutation().one_line(),
            vec![3, 1, 2]
        );
        assert!(w(2, &[1]).double_strand(3).is_err());
    }

    #[test]
    fn negative_letters_track_the_right_strand() {
        // s1^-1 s2: strand 1 exits s1^-1 at 2, then s2 sends it to 3.
        let x = w(3, &[-1, 2]);
        assert_eq!(x.permutation().one_line(), vec![3, 1, 2]);
        let d = x.delete_strand(1).unwrap();
        assert_eq!(d.permutation().one_line(), vec![1, 2]);
        let back = x.double_strand(1).unwrap().delete_strand(1).unwrap();
        assert!(back.equals(&x));
    }

    #[test]
    fn parallel_examples() {
        for i in 1..3 {
            assert!(BraidWord::identity(3).strands_parallel(i).unwrap());
        }
        assert!(!w(2, &[1]).strands_parallel(1).unwrap());
        let doubled = w(2, &[1]).double_strand(1).unwrap();
        assert!(doubled.strands_parallel(1).unwrap());
        assert!(!doubled.strands_parallel(2).unwrap());
        assert!(w(2, &[1]).strands_parallel(2).is_err());
        // s1^2 has the identity permutation but the strands twist around each other.
        assert!(!w(2, &[1, 1]).strands_parallel(1).unwrap());
    }

    #[test]
    fn permutation_examples() {
        assert!(BraidWord::identity(3).permutation().is_identity());
        assert_eq!(w(2, &[1]).permutation().one_line(), vec![2, 1]);
        assert!(w(2, &[1, 1]).permutation().is_identity());
    }

    #[test]
    fn display_as_artin() {
        assert_eq!(w(3, &[1, -2, 1]).to_string(), "s1 S2 s1");
        assert_eq!(BraidWord::identity(4).to_string(), "id");
    }
}
