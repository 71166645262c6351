//! Thompson's group `V` as the quotient of `BV` that forgets braiding.

use std::fmt;

use super::element::BVElement;
use crate::braids::Permutation;
use crate::error::{Error, Result};
use crate::trees::{common_refinement, BinaryTree, Expansion};

/// A reduced tree pair with a permutation matching top leaves to bottom leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VElement {
    top: BinaryTree,
    perm: Permutation,
    bot: BinaryTree,
}

impl VElement {
    pub fn identity() -> Self {
        VElement {
            top: BinaryTree::Leaf,
            perm: Permutation::identity(1),
            bot: BinaryTree::Leaf,
        }
    }

    /// Reduces an arbitrary tree pair with permutation.
    pub fn new(top: BinaryTree, perm: Permutation, bot: BinaryTree) -> Result<Self> {
        let (t, b) = (top.leaf_count(), bot.leaf_count());
        if t != perm.len() || b != perm.len() {
            return Err(Error::ShapeMismatch {
                top: t,
                strands: perm.len(),
                bot: b,
            });
        }
        Ok(reduce_v(top, perm, bot))
    }

    pub fn top(&self) -> &BinaryTree {
        &self.top
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn bot(&self) -> &BinaryTree {
        &self.bot
    }

    pub fn is_identity(&self) -> bool {
        self.top.is_leaf()
    }

    pub fn multiply(&self, other: &VElement) -> VElement {
        let (_, e_left, e_right) = common_refinement(&self.bot, &other.top);
        let (top, p1, _) = expand(&self.top, &self.perm, &self.bot, Side::Bottom, &e_left);
        let (_, p2, bot) = expand(&other.top, &other.perm, &other.bot, Side::Top, &e_right);
        reduce_v(top, p1.then(&p2), bot)
    }

    pub fn invert(&self) -> VElement {
        VElement {
            top: self.bot.clone(),
            perm: self.perm.inverse(),
            bot: self.top.clone(),
        }
    }
}

impl fmt::Display for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "T: {}", self.top)?;
        writeln!(f, "P: {}", self.perm)?;
        write!(f, "Tb: {}", self.bot)
    }
}

#[derive(Clone, Copy)]
enum Side {
    Top,
    Bottom,
}

fn expand(
    top: &BinaryTree,
    perm: &Permutation,
    bot: &BinaryTree,
    side: Side,
    expansion: &Expansion,
) -> (BinaryTree, Permutation, BinaryTree) {
    let mut state = (top.clone(), perm.clone(), bot.clone());
    let mut grafts: Vec<&(usize, BinaryTree)> = expansion.grafts.iter().collect();
    grafts.sort_by_key(|g| std::cmp::Reverse(g.0));
    for (leaf, sub) in grafts {
        graft(&mut state, side, leaf - 1, sub);
    }
    state
}

fn graft(
    state: &mut (BinaryTree, Permutation, BinaryTree),
    side: Side,
    k: usize,
    sub: &BinaryTree,
) {
    let BinaryTree::Caret(l, r) = sub else {
        return;
    };
    let (top, perm, bot) = state;
    let (t, b) = match side {
        Side::Top => (k, perm.at(k)),
        Side::Bottom => (
            perm.images()
                .iter()
                .position(|&x| x as usize == k)
                .expect("bijection"),
            k,
        ),
    };
    *perm = perm.double_point(t);
    *top = top.add_caret(t + 1).expect("leaf in range");
    *bot = bot.add_caret(b + 1).expect("leaf in range");
    graft(state, side, k + 1, r);
    graft(state, side, k, l);
}

/// Removes carets whose two leaves go, in order, onto the two leaves of a
/// terminal bottom caret.
fn reduce_v(mut top: BinaryTree, mut perm: Permutation, mut bot: BinaryTree) -> VElement {
    let mut pos = 1usize;
    while let Some(i) = top.terminal_carets().into_iter().find(|&i| i >= pos) {
        let exit = perm.at(i - 1);
        if perm.at(i) == exit + 1 && bot.is_terminal_caret(exit + 1) {
            top = top.remove_caret(i).expect("terminal caret");
            bot = bot.remove_caret(exit + 1).expect("terminal caret");
            perm = perm.delete_point(i - 1);
            pos = i.saturating_sub(1).max(1);
        } else {
            pos = i + 1;
        }
    }
    VElement { top, perm, bot }
}

/// The quotient map `BV -> V`: keep the trees, replace the braid by its permutation.
pub fn project_to_v(e: &BVElement) -> VElement {
    reduce_v(
        e.top().clone(),
        e.braid().to_word().permutation(),
        e.bot().clone(),
    )
}
