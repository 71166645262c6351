use std::fmt;

use crate::braids::{normal_form, parallel_against, BraidWord, NormalForm, Permutation};
use crate::error::{Error, Result};
use crate::trees::{common_refinement, BinaryTree, Expansion};

/// Which tree of a triple an expansion applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Top,
    Bottom,
}

/// A semi-reduced triple: splits on top, a braid in the middle, merges below.
///
/// This is the working representation for unreduction and products; it is
/// not canonical. [`reduce`] turns it into a [`BVElement`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTriple {
    pub top: BinaryTree,
    pub braid: BraidWord,
    pub bot: BinaryTree,
}

/// A reduced triple whose braid is in right-greedy normal form. Two elements
/// of `BV` are equal exactly when these triples are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BVElement {
    top: BinaryTree,
    braid: NormalForm,
    bot: BinaryTree,
}

impl RawTriple {
    pub fn new(top: BinaryTree, braid: BraidWord, bot: BinaryTree) -> Result<Self> {
        let (t, b) = (top.leaf_count(), bot.leaf_count());
        if t != braid.strands() || b != braid.strands() {
            return Err(Error::ShapeMismatch {
                top: t,
                strands: braid.strands(),
                bot: b,
            });
        }
        Ok(RawTriple { top, braid, bot })
    }

    pub fn identity() -> Self {
        RawTriple {
            top: BinaryTree::Leaf,
            braid: BraidWord::identity(1),
            bot: BinaryTree::Leaf,
        }
    }

    pub fn strands(&self) -> usize {
        self.braid.strands()
    }

    pub fn reduce(&self) -> BVElement {
        reduce(self)
    }

    /// Grows one of the trees along `expansion`, doubling strands so that the
    /// triple keeps representing the same element.
    pub fn expand(&self, side: Side, expansion: &Expansion) -> Result<RawTriple> {
        let mut out = self.clone();
        let mut perm = out.braid.permutation();
        let mut grafts: Vec<&(usize, BinaryTree)> = expansion.grafts.iter().collect();
        grafts.sort_by_key(|g| std::cmp::Reverse(g.0));
        let leaves = match side {
            Side::Top => out.top.leaf_count(),
            Side::Bottom => out.bot.leaf_count(),
        };
        for (leaf, sub) in grafts {
            if *leaf == 0 || *leaf > leaves {
                return Err(Error::LeafIndex {
                    index: *leaf,
                    leaves,
                });
            }
            out.graft(side, leaf - 1, sub, &mut perm);
        }
        Ok(out)
    }

    /// Grafts `sub` at 0-based leaf `k` of the given side by repeated single
    /// caret insertion.
    fn graft(&mut self, side: Side, k: usize, sub: &BinaryTree, perm: &mut Permutation) {
        let BinaryTree::Caret(l, r) = sub else {
            return;
        };
        let (top_pos, bot_pos) = match side {
            Side::Top => (k, perm.at(k)),
            Side::Bottom => {
                let top = perm
                    .images()
                    .iter()
                    .position(|&x| x as usize == k)
                    .expect("bijection");
                (top, k)
            }
        };
        self.braid = self.braid.double_strand0(top_pos);
        *perm = perm.double_point(top_pos);
        self.top = self
            .top
            .add_caret(top_pos + 1)
            .expect("strand index within tree");
        self.bot = self
            .bot
            .add_caret(bot_pos + 1)
            .expect("strand index within tree");
        self.graft(side, k + 1, r, perm);
        self.graft(side, k, l, perm);
    }

    /// Product without any reduction or normalization: unreduce both factors
    /// to the common refinement of the middle trees and concatenate braids.
    /// The result is semi-reduced.
    pub fn multiply(&self, other: &RawTriple) -> RawTriple {
        let (middle, e_left, e_right) = common_refinement(&self.bot, &other.top);
        let left = self
            .expand(Side::Bottom, &e_left)
            .expect("expansion fits its own tree");
        let right = other
            .expand(Side::Top, &e_right)
            .expect("expansion fits its own tree");
        debug_assert_eq!(left.bot, middle);
        debug_assert_eq!(right.top, middle);
        let mut braid = left.braid;
        braid.append(&right.braid);
        RawTriple {
            top: left.top,
            braid,
            bot: right.bot,
        }
    }

    pub fn invert(&self) -> RawTriple {
        RawTriple {
            top: self.bot.clone(),
            braid: self.braid.invert(),
            bot: self.top.clone(),
        }
    }
}

/// Removes every eye from a semi-reduced triple and normalizes the braid.
///
/// Top terminal carets are visited left to right. A caret at leaves `i, i+1`
/// is an eye when its two strands are parallel and land on a terminal caret
/// of the bottom tree. After a removal the scan resumes at `i - 1`, since the
/// parent of the removed caret may have become terminal there.
pub fn reduce(raw: &RawTriple) -> BVElement {
    let mut top = raw.top.clone();
    let mut bot = raw.bot.clone();
    let mut nf = normal_form(&raw.braid);
    let mut word = nf.to_word();
    let mut perm = word.permutation();
    let mut pos = 1usize;
    while let Some(i) = top.terminal_carets().into_iter().find(|&i| i >= pos) {
        let exit = perm.at(i - 1);
        if perm.at(i) == exit + 1
            && bot.is_terminal_caret(exit + 1)
            && parallel_against(&word, i - 1, &nf)
        {
            top = top.remove_caret(i).expect("terminal caret");
            bot = bot.remove_caret(exit + 1).expect("terminal caret");
            nf = normal_form(&word.delete_strand0(i - 1));
            word = nf.to_word();
            perm = perm.delete_point(i - 1);
            pos = i.saturating_sub(1).max(1);
        } else {
            pos = i + 1;
        }
    }
    BVElement {
        top,
        braid: nf,
        bot,
    }
}

impl BVElement {
    pub fn identity() -> Self {
        BVElement {
            top: BinaryTree::Leaf,
            braid: NormalForm::identity(1),
            bot: BinaryTree::Leaf,
        }
    }

    /// Reduces an arbitrary triple.
    pub fn from_parts(top: BinaryTree, braid: BraidWord, bot: BinaryTree) -> Result<Self> {
        Ok(RawTriple::new(top, braid, bot)?.reduce())
    }

    pub fn top(&self) -> &BinaryTree {
        &self.top
    }

    pub fn braid(&self) -> &NormalForm {
        &self.braid
    }

    pub fn bot(&self) -> &BinaryTree {
        &self.bot
    }

    pub fn strands(&self) -> usize {
        self.braid.strands()
    }

    pub fn is_identity(&self) -> bool {
        self.top.is_leaf()
    }

    /// Whether the braid part is trivial (the element lies in the copy of `F`).
    pub fn is_braid_free(&self) -> bool {
        self.braid.is_identity()
    }

    pub fn to_raw(&self) -> RawTriple {
        RawTriple {
            top: self.top.clone(),
            braid: self.braid.to_word(),
            bot: self.bot.clone(),
        }
    }

    /// An unreduced triple for the same element whose `side` tree is `target`.
    pub fn unreduce(&self, side: Side, target: &BinaryTree) -> Result<RawTriple> {
        let tree = match side {
            Side::Top => &self.top,
            Side::Bottom => &self.bot,
        };
        let expansion = tree.expansion_to(target)?;
        self.to_raw().expand(side, &expansion)
    }

    pub fn multiply(&self, other: &BVElement) -> BVElement {
        self.to_raw().multiply(&other.to_raw()).reduce()
    }

    pub fn invert(&self) -> BVElement {
        BVElement {
            top: self.bot.clone(),
            braid: normal_form(&self.braid.to_word().invert()),
            bot: self.top.clone(),
        }
    }

    pub fn pow(&self, exponent: i64) -> BVElement {
        let base = if exponent < 0 {
            self.invert()
        } else {
            self.clone()
        };
        let mut acc = BVElement::identity();
        for _ in 0..exponent.unsigned_abs() {
            acc = acc.multiply(&base);
        }
        acc
    }

    /// Group equality: reduced triples with identical trees and normal forms.
    pub fn equals(&self, other: &BVElement) -> bool {
        self == other
    }

    /// Bit length of the triple, roughly `h * n * log2(n)`.
    pub fn bit_length(&self) -> f64 {
        let n = self.strands().max(2) as f64;
        let h = self.braid.word_len().max(1) as f64;
        h * n * n.log2() + 4.0 * n
    }
}

impl fmt::Display for BVElement {
    /// Three-line element format with the braid in normal-form notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "T: {}", self.top)?;
        writeln!(f, "B: {}", self.braid)?;
        write!(f, "Tb: {}", self.bot)
    }
}

impl fmt::Display for RawTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "T: {}", self.top)?;
        writeln!(f, "B: {}", self.braid)?;
        write!(f, "Tb: {}", self.bot)
    }
}
