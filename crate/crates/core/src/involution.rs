use crate::catalan::BinaryTree;
use crate::grafting::GraftingTree;
use crate::poset::IntervalPoset;

struct Node {
    id: usize,
    left: Option<Box<Node>>,
    right: Option<Box<Node>>,
}

fn unpack(t: &BinaryTree, v: Option<usize>) -> Option<Box<Node>> {
    let v = v?;
    Some(Box::new(Node {
        id: v,
        left: unpack(t, t.left(v)),
        right: unpack(t, t.right(v)),
    }))
}

fn pack(n: &Option<Box<Node>>, ids: &mut Vec<usize>) -> BinaryTree {
    match n {
        None => BinaryTree::empty(),
        Some(n) => {
            let l = pack(&n.left, ids);
            ids.push(n.id);
            let r = pack(&n.right, ids);
            BinaryTree::node(&l, &r)
        }
    }
}

fn relabel(g: &GraftingTree, root: Option<Box<Node>>) -> GraftingTree {
    let mut ids = Vec::with_capacity(g.size());
    let tree = pack(&root, &mut ids);
    let labels = ids.iter().map(|&v| g.label(v)).collect();
    GraftingTree::new(tree, labels).expect("left-branch involution keeps the budget")
}

/// Reverses the order of the nodes on every left branch. Each node keeps
/// its label and its (recursively transformed) right subtree.
pub fn left_branch_involution(g: &GraftingTree) -> GraftingTree {
    fn go(t: Option<Box<Node>>) -> Option<Box<Node>> {
        let mut cur = None;
        let mut next = t;
        while let Some(mut w) = next {
            next = w.left.take();
            w.right = go(w.right.take());
            w.left = cur;
            cur = Some(w);
        }
        cur
    }
    let t = g.tree();
    relabel(g, go(unpack(t, t.root())))
}

/// The same map written as a recursion on the root: the root, with its
/// transformed right subtree, hangs below the leftmost node of the
/// transformed left subtree.
pub fn left_branch_involution_recursive(g: &GraftingTree) -> GraftingTree {
    fn go(t: Option<Box<Node>>) -> Option<Box<Node>> {
        let mut v = t?;
        let l = go(v.left.take());
        v.right = go(v.right.take());
        match l {
            None => Some(v),
            Some(mut top) => {
                let mut slot = &mut top.left;
                while let Some(n) = slot {
                    slot = &mut n.left;
                }
                *slot = Some(v);
                Some(top)
            }
        }
    }
    let t = g.tree();
    relabel(g, go(unpack(t, t.root())))
}

/// The left-branch involution carried to interval-posets.
pub fn left_branch_on_interval(p: &IntervalPoset) -> IntervalPoset {
    left_branch_involution(&GraftingTree::from_interval(p)).to_interval()
}

/// The rise-contact involution `lb ∘ complement ∘ lb`.
pub fn rise_contact(p: &IntervalPoset) -> IntervalPoset {
    left_branch_on_interval(&left_branch_on_interval(p).complement())
}
