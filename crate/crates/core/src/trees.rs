//! Planar rooted binary trees.
//!
//! A tree describes one layer of a braided band diagram: the splits at the top
//! or the merges at the bottom. Leaves are numbered `1..=n` from left to right.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Leaf,
    Caret(Box<BinaryTree>, Box<BinaryTree>),
}

/// Subtree grafts turning a tree into one of its refinements.
///
/// Each entry is `(leaf, subtree)` with `leaf` a 1-based leaf index of the
/// unexpanded tree. Entries are kept in ascending leaf order and are applied
/// right to left so that earlier indices stay valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expansion {
    pub grafts: Vec<(usize, BinaryTree)>,
}

impl BinaryTree {
    pub fn leaf() -> Self {
        BinaryTree::Leaf
    }

    pub fn caret(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Caret(Box::new(left), Box::new(right))
    }

    /// The single-caret tree `Caret(Leaf, Leaf)`.
    pub fn single_caret() -> Self {
        Self::caret(Self::Leaf, Self::Leaf)
    }

    /// Right vine with `leaves` leaves: every caret hangs off the right child.
    pub fn right_vine(leaves: usize) -> Self {
        assert!(leaves >= 1, "a tree has at least one leaf");
        let mut t = BinaryTree::Leaf;
        for _ in 1..leaves {
            t = Self::caret(BinaryTree::Leaf, t);
        }
        t
    }

    /// Left vine with `leaves` leaves.
    pub fn left_vine(leaves: usize) -> Self {
        assert!(leaves >= 1, "a tree has at least one leaf");
        let mut t = BinaryTree::Leaf;
        for _ in 1..leaves {
            t = Self::caret(t, BinaryTree::Leaf);
        }
        t
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Caret(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn caret_count(&self) -> usize {
        self.leaf_count() - 1
    }

    /// Every `i` such that leaves `i` and `i + 1` are the two children of one
    /// caret, in ascending order.
    pub fn terminal_carets(&self) -> Vec<usize> {
        fn walk(t: &BinaryTree, offset: usize, out: &mut Vec<usize>) -> usize {
            match t {
                BinaryTree::Leaf => 1,
                BinaryTree::Caret(l, r) => {
                    if l.is_leaf() && r.is_leaf() {
                        out.push(offset + 1);
                        return 2;
                    }
                    let nl = walk(l, offset, out);
                    nl + walk(r, offset + nl, out)
                }
            }
        }
        let mut out = Vec::new();
        walk(self, 0, &mut out);
        out
    }

    /// Whether leaves `i` and `i + 1` hang off the same caret.
    pub fn is_terminal_caret(&self, i: usize) -> bool {
        fn walk(t: &BinaryTree, i: usize) -> bool {
            match t {
                BinaryTree::Leaf => false,
                BinaryTree::Caret(l, r) => {
                    if l.is_leaf() && r.is_leaf() {
                        return i == 1;
                    }
                    let nl = l.leaf_count();
                    if i < nl {
                        walk(l, i)
                    } else if i > nl {
                        walk(r, i - nl)
                    } else {
                        false
                    }
                }
            }
        }
        i >= 1 && walk(self, i)
    }

    /// Replaces leaf `j` by a caret.
    pub fn add_caret(&self, j: usize) -> Result<Self> {
        self.graft(j, &Self::single_caret())
    }

    /// Replaces leaf `j` by `subtree`.
    pub fn graft(&self, j: usize, subtree: &BinaryTree) -> Result<Self> {
        let n = self.leaf_count();
        if j == 0 || j > n {
            return Err(Error::LeafIndex {
                index: j,
                leaves: n,
            });
        }
        fn walk(t: &BinaryTree, j: usize, subtree: &BinaryTree) -> BinaryTree {
            match t {
                BinaryTree::Leaf => subtree.clone(),
                BinaryTree::Caret(l, r) => {
                    let nl = l.leaf_count();
                    if j <= nl {
                        BinaryTree::Caret(Box::new(walk(l, j, subtree)), r.clone())
                    } else {
                        BinaryTree::Caret(l.clone(), Box::new(walk(r, j - nl, subtree)))
                    }
                }
            }
        }
        Ok(walk(self, j, subtree))
    }

    /// Collapses the terminal caret over leaves `i`, `i + 1` into one leaf.
    pub fn remove_caret(&self, i: usize) -> Result<Self> {
        if !self.is_terminal_caret(i) {
            return Err(Error::NotTerminalCaret { index: i });
        }
        fn walk(t: &BinaryTree, i: usize) -> BinaryTree {
            match t {
                BinaryTree::Leaf => unreachable!("index checked against terminal carets"),
                BinaryTree::Caret(l, r) => {
                    if l.is_leaf() && r.is_leaf() {
                        return BinaryTree::Leaf;
                    }
                    let nl = l.leaf_count();
                    if i < nl {
                        BinaryTree::Caret(Box::new(walk(l, i)), r.clone())
                    } else {
                        BinaryTree::Caret(l.clone(), Box::new(walk(r, i - nl)))
                    }
                }
            }
        }
        Ok(walk(self, i))
    }

    /// Whether `self` is obtained from `coarser` by grafting subtrees onto its leaves.
    pub fn refines(&self, coarser: &BinaryTree) -> bool {
        match (self, coarser) {
            (_, BinaryTree::Leaf) => true,
            (BinaryTree::Leaf, BinaryTree::Caret(..)) => false,
            (BinaryTree::Caret(a, b), BinaryTree::Caret(c, d)) => a.refines(c) && b.refines(d),
        }
    }

    /// The expansion taking `self` to `finer`, if `finer` refines `self`.
    pub fn expansion_to(&self, finer: &BinaryTree) -> Result<Expansion> {
        fn walk(
            coarse: &BinaryTree,
            fine: &BinaryTree,
            offset: usize,
            out: &mut Vec<(usize, BinaryTree)>,
        ) -> Option<usize> {
            match (coarse, fine) {
                (BinaryTree::Leaf, _) => {
                    if !fine.is_leaf() {
                        out.push((offset + 1, fine.clone()));
                    }
                    Some(1)
                }
                (BinaryTree::Caret(..), BinaryTree::Leaf) => None,
                (BinaryTree::Caret(a, b), BinaryTree::Caret(c, d)) => {
                    let nl = walk(a, c, offset, out)?;
                    let nr = walk(b, d, offset + nl, out)?;
                    Some(nl + nr)
                }
            }
        }
        let mut grafts = Vec::new();
        match walk(self, finer, 0, &mut grafts) {
            Some(_) => Ok(Expansion { grafts }),
            None => Err(Error::NotARefinement),
        }
    }

    /// Balanced-parenthesis encoding: `()` for a leaf, `(` left right `)` for a caret.
    pub fn to_parens(&self) -> String {
        fn walk(t: &BinaryTree, out: &mut String) {
            out.push('(');
            if let BinaryTree::Caret(l, r) = t {
                walk(l, out);
                walk(r, out);
            }
            out.push(')');
        }
        let mut s = String::with_capacity(4 * self.leaf_count());
        walk(self, &mut s);
        s
    }

    /// Parses the balanced-parenthesis encoding. Whitespace is ignored.
    pub fn from_parens(text: &str) -> Result<Self> {
        let chars: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut pos = 0;
        let tree = parse_node(&chars, &mut pos)?;
        if let Some(&(col, c)) = chars.get(pos) {
            return Err(Error::parse(
                col + 1,
                format!("unexpected '{c}' after tree"),
            ));
        }
        Ok(tree)
    }
}

fn parse_node(chars: &[(usize, char)], pos: &mut usize) -> Result<BinaryTree> {
    let end_col = chars.last().map_or(1, |&(c, _)| c + 2);
    match chars.get(*pos) {
        Some(&(_, '(')) => *pos += 1,
        Some(&(col, c)) => {
            return Err(Error::parse(
                col + 1,
                format!("expected '(' but found '{c}'"),
            ))
        }
        None => return Err(Error::parse(end_col, "expected '(' but input ended")),
    }
    match chars.get(*pos) {
        Some(&(_, ')')) => {
            *pos += 1;
            Ok(BinaryTree::Leaf)
        }
        Some(_) => {
            let l = parse_node(chars, pos)?;
            let r = parse_node(chars, pos)?;
            match chars.get(*pos) {
                Some(&(_, ')')) => {
                    *pos += 1;
                    Ok(BinaryTree::caret(l, r))
                }
                Some(&(col, c)) => Err(Error::parse(
                    col + 1,
                    format!("expected ')' closing a caret but found '{c}' (carets are binary)"),
                )),
                None => Err(Error::parse(end_col, "unbalanced parentheses")),
            }
        }
        None => Err(Error::parse(end_col, "unbalanced parentheses")),
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_parens())
    }
}

impl Expansion {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.grafts.is_empty()
    }

    /// Number of carets the expansion adds.
    pub fn added_carets(&self) -> usize {
        self.grafts.iter().map(|(_, t)| t.caret_count()).sum()
    }

    pub fn apply(&self, tree: &BinaryTree) -> Result<BinaryTree> {
        let mut out = tree.clone();
        let mut grafts: Vec<&(usize, BinaryTree)> = self.grafts.iter().collect();
        grafts.sort_by_key(|g| std::cmp::Reverse(g.0));
        for (leaf, sub) in grafts {
            out = out.graft(*leaf, sub)?;
        }
        Ok(out)
    }
}

/// Least common refinement of two trees together with the expansions taking
/// each input to it.
///
/// Trees correspond to dyadic subdivisions of the unit interval, and the
/// common refinement is the subdivision whose breakpoints are the union of
/// both breakpoint sets. Structurally that is the union of the two caret sets.
pub fn common_refinement(a: &BinaryTree, b: &BinaryTree) -> (BinaryTree, Expansion, Expansion) {
    fn walk(
        a: &BinaryTree,
        b: &BinaryTree,
        off_a: usize,
        off_b: usize,
        ea: &mut Vec<(usize, BinaryTree)>,
        eb: &mut Vec<(usize, BinaryTree)>,
    ) -> BinaryTree {
        match (a, b) {
            (BinaryTree::Leaf, BinaryTree::Leaf) => BinaryTree::Leaf,
            (BinaryTree::Leaf, _) => {
                ea.push((off_a + 1, b.clone()));
                b.clone()
            }
            (_, BinaryTree::Leaf) => {
                eb.push((off_b + 1, a.clone()));
                a.clone()
            }
            (BinaryTree::Caret(al, ar), BinaryTree::Caret(bl, br)) => {
                let l = walk(al, bl, off_a, off_b, ea, eb);
                let r = walk(
                    ar,
                    br,
                    off_a + al.leaf_count(),
                    off_b + bl.leaf_count(),
                    ea,
                    eb,
                );
                BinaryTree::caret(l, r)
            }
        }
    }
    let mut ea = Vec::new();
    let mut eb = Vec::new();
    let t = walk(a, b, 0, 0, &mut ea, &mut eb);
    (t, Expansion { grafts: ea }, Expansion { grafts: eb })
}
