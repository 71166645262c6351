//! Tree surgery and common refinements, checked against dyadic subdivisions.

use std::collections::BTreeSet;

use bv_core::trees::{common_refinement, BinaryTree, Expansion};
use proptest::prelude::*;

/// Interior breakpoints of the dyadic subdivision of [0, 1) drawn by `t`,
/// as numerators over 2^40.
fn breakpoints(t: &BinaryTree) -> BTreeSet<u64> {
    fn walk(t: &BinaryTree, lo: u64, width: u64, out: &mut BTreeSet<u64>) {
        if let BinaryTree::Caret(l, r) = t {
            let mid = lo + width / 2;
            out.insert(mid);
            walk(l, lo, width / 2, out);
            walk(r, mid, width / 2, out);
        }
    }
    let mut out = BTreeSet::new();
    walk(t, 0, 1 << 40, &mut out);
    out
}

fn tree(max_leaves: usize) -> impl Strategy<Value = BinaryTree> {
    let leaf = Just(BinaryTree::Leaf).boxed();
    leaf.prop_recursive(8, max_leaves as u32, 2, |inner| {
        prop_oneof![
            1 => Just(BinaryTree::Leaf),
            3 => (inner.clone(), inner).prop_map(|(l, r)| BinaryTree::caret(l, r)),
        ]
    })
}

#[test]
fn refinement_examples() {
    let c = BinaryTree::single_caret();
    let (t, ea, eb) = common_refinement(&c, &c);
    assert_eq!(t, c);
    assert!(ea.is_empty() && eb.is_empty());

    let (t, ea, eb) = common_refinement(&c, &BinaryTree::Leaf);
    assert_eq!(t, c);
    assert!(ea.is_empty());
    assert_eq!(
        eb,
        Expansion {
            grafts: vec![(1, c.clone())]
        }
    );

    let (t, ea, eb) = common_refinement(&BinaryTree::left_vine(3), &BinaryTree::right_vine(3));
    assert_eq!(t, BinaryTree::caret(c.clone(), c.clone()));
    assert_eq!(
        ea,
        Expansion {
            grafts: vec![(3, c.clone())]
        }
    );
    assert_eq!(
        eb,
        Expansion {
            grafts: vec![(1, c)]
        }
    );
}

#[test]
fn removing_a_non_caret_fails() {
    let t = BinaryTree::left_vine(3);
    assert!(t.remove_caret(2).is_err());
    assert_eq!(t.terminal_carets(), vec![1]);
}

proptest! {
    #[test]
    fn refinement_is_the_union_of_breakpoints(a in tree(24), b in tree(24)) {
        let (t, ea, eb) = common_refinement(&a, &b);
        let union: BTreeSet<u64> = breakpoints(&a).union(&breakpoints(&b)).copied().collect();
        prop_assert_eq!(breakpoints(&t), union);
        prop_assert_eq!(ea.apply(&a).unwrap(), t.clone());
        prop_assert_eq!(eb.apply(&b).unwrap(), t.clone());
        prop_assert!(t.refines(&a) && t.refines(&b));
    }

    #[test]
    fn refinement_is_symmetric(a in tree(16), b in tree(16)) {
        let (t, ea, eb) = common_refinement(&a, &b);
        let (u, fb, fa) = common_refinement(&b, &a);
        prop_assert_eq!(t, u);
        prop_assert_eq!(ea, fa);
        prop_assert_eq!(eb, fb);
    }

    #[test]
    fn remove_undoes_add(t in tree(16), seed in any::<usize>()) {
        let j = 1 + seed % t.leaf_count();
        let grown = t.add_caret(j).unwrap();
        prop_assert_eq!(grown.leaf_count(), t.leaf_count() + 1);
        prop_assert!(grown.is_terminal_caret(j));
        prop_assert_eq!(grown.remove_caret(j).unwrap(), t);
    }

    #[test]
    fn parens_round_trip(t in tree(20)) {
        prop_assert_eq!(BinaryTree::from_parens(&t.to_parens()).unwrap(), t.clone());
        prop_assert_eq!(t.caret_count() + 1, t.leaf_count());
    }
}
