use serde::{Deserialize, Serialize};

use crate::catalan::BinaryTree;
use crate::error::{Error, Result};
use crate::poset::IntervalPoset;

/// A binary tree with a label on every node, bounded by the size of the
/// right subtree minus the labels already spent inside it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "GraftingTreeJson", try_from = "GraftingTreeJson")]
pub struct GraftingTree {
    tree: BinaryTree,
    labels: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraftingTreeJson {
    pub tree: BinaryTree,
    pub labels: Vec<usize>,
}

impl From<GraftingTree> for GraftingTreeJson {
    fn from(g: GraftingTree) -> Self {
        GraftingTreeJson { tree: g.tree, labels: g.labels }
    }
}

impl TryFrom<GraftingTreeJson> for GraftingTree {
    type Error = Error;

    fn try_from(j: GraftingTreeJson) -> Result<Self> {
        GraftingTree::new(j.tree, j.labels)
    }
}

impl GraftingTree {
    /// `labels[i]` is the label of in-order node `i + 1`.
    pub fn new(tree: BinaryTree, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != tree.size() {
            return Err(Error::InvalidLabels(labels.len().min(tree.size()) + 1));
        }
        let g = GraftingTree { tree, labels };
        for v in 1..=g.size() {
            if g.labels[v - 1] > g.budget(v) {
                return Err(Error::InvalidLabels(v));
            }
        }
        Ok(g)
    }

    pub fn empty() -> Self {
        GraftingTree { tree: BinaryTree::empty(), labels: Vec::new() }
    }

    pub fn tree(&self) -> &BinaryTree {
        &self.tree
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    pub fn size(&self) -> usize {
        self.tree.size()
    }

    /// `size(R) - labels(R)` for the right subtree `R` of `v`.
    pub fn budget(&self, v: usize) -> usize {
        match self.tree.right(v) {
            None => 0,
            Some(c) => {
                let (lo, hi) = self.tree.subtree_range(c);
                let spent: usize = self.labels[lo - 1..hi].iter().sum();
                (hi + 1 - lo) - spent
            }
        }
    }

    /// The grafting tree read directly from the poset: the upper bound tree,
    /// each node labelled by its number of decreasing children.
    pub fn from_interval(p: &IntervalPoset) -> GraftingTree {
        let tree = BinaryTree::from_initial_forest(&p.increasing_forest());
        let f = p.decreasing_forest();
        let mut labels = vec![0; p.size()];
        for v in 1..=p.size() {
            if let Some(a) = f.parent(v) {
                labels[a - 1] += 1;
            }
        }
        GraftingTree { tree, labels }
    }

    /// Same result as [`GraftingTree::from_interval`], built through the
    /// grafting decomposition.
    pub fn from_interval_recursive(p: &IntervalPoset) -> GraftingTree {
        match p.grafting_decomposition() {
            Err(_) => GraftingTree::empty(),
            Ok((l, r, rt)) => {
                let gl = Self::from_interval_recursive(&l);
                let gr = Self::from_interval_recursive(&rt);
                Self::join(&gl, r, &gr)
            }
        }
    }

    /// The grafting tree with root label `r` and the given subtrees.
    pub fn join(l: &GraftingTree, r: usize, rt: &GraftingTree) -> GraftingTree {
        let mut labels = l.labels.clone();
        labels.push(r);
        labels.extend_from_slice(&rt.labels);
        GraftingTree { tree: BinaryTree::node(&l.tree, &rt.tree), labels }
    }

    /// Left subtree, root label and right subtree.
    pub fn split(&self) -> Option<(GraftingTree, usize, GraftingTree)> {
        let (l, rt) = self.tree.split()?;
        let k = l.size();
        let gl = GraftingTree { labels: self.labels[..k].to_vec(), tree: l };
        let gr = GraftingTree { labels: self.labels[k + 1..].to_vec(), tree: rt };
        Some((gl, self.labels[k], gr))
    }

    /// Evaluates `left ⊲ (u ⊳_r right)` recursively.
    pub fn to_interval(&self) -> IntervalPoset {
        match self.split() {
            None => IntervalPoset::antichain(0),
            Some((l, r, rt)) => {
                let u = IntervalPoset::antichain(1);
                let right = u
                    .right_graft(r, &rt.to_interval())
                    .expect("labels respect the budget");
                l.to_interval().left_graft(&right)
            }
        }
    }

    /// Contacts of the lower bound: `n - sum of labels`.
    pub fn contacts(&self) -> usize {
        self.size() - self.labels.iter().sum::<usize>()
    }

    /// `budget(v) - label(v)` for every node.
    pub fn node_distances(&self) -> Vec<usize> {
        (1..=self.size()).map(|v| self.budget(v) - self.labels[v - 1]).collect()
    }

    pub fn distance(&self) -> usize {
        self.node_distances().iter().sum()
    }
}
