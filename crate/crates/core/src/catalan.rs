use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{Forest, ForestKind, IntervalPoset};

/// A Dyck path as a sequence of steps, `true` for an up-step.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct DyckPath {
    steps: Vec<bool>,
}

impl DyckPath {
    pub fn from_steps(steps: Vec<bool>) -> Result<Self> {
        let mut h: isize = 0;
        for (i, &s) in steps.iter().enumerate() {
            h += if s { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidDyckWord(format!("goes below zero at step {}", i + 1)));
            }
        }
        if h != 0 {
            return Err(Error::InvalidDyckWord("does not end at height zero".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Heights of the `2n + 1` lattice points.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0usize;
        out.push(0);
        for &s in &self.steps {
            if s {
                h += 1;
            } else {
                h -= 1;
            }
            out.push(h);
        }
        out
    }

    /// Positions of the matching down-step for every up-step, in up-step order.
    pub fn matching(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.semilength()];
        let mut stack = Vec::new();
        let mut k = 0;
        for (i, &s) in self.steps.iter().enumerate() {
            if s {
                out[k].0 = i;
                stack.push(k);
                k += 1;
            } else {
                let u = stack.pop().expect("validated path");
                out[u].1 = i;
            }
        }
        out
    }

    pub fn to_tree(&self) -> BinaryTree {
        let n = self.semilength();
        let mut left = vec![None; n];
        let mut right = vec![None; n];
        let mut stack: Vec<(usize, Option<usize>)> = Vec::new();
        let mut top = None;
        let mut k = 0;
        for &s in &self.steps {
            if s {
                left[k] = stack.last().map_or(top, |e| e.1);
                stack.push((k, None));
                k += 1;
            } else {
                let (node, last) = stack.pop().expect("validated path");
                right[node] = last;
                match stack.last_mut() {
                    Some(e) => e.1 = Some(node),
                    None => top = Some(node),
                }
            }
        }
        BinaryTree { root: top, left, right }
    }

    /// `b ◁ a` iff the up-step `b` lies strictly inside the pair opened by `a`.
    pub fn final_forest(&self) -> Forest {
        let mut parent = vec![0; self.semilength()];
        let mut stack: Vec<usize> = Vec::new();
        let mut k = 0;
        for &s in &self.steps {
            if s {
                k += 1;
                parent[k - 1] = stack.last().copied().unwrap_or(0);
                stack.push(k);
            } else {
                stack.pop();
            }
        }
        Forest::from_parents(ForestKind::Decreasing, parent)
    }

    /// `a` points to the first up-step after the down-step matching `a`.
    pub fn initial_forest(&self) -> Forest {
        let m = self.matching();
        let ups: Vec<usize> = m.iter().map(|p| p.0).collect();
        let parent = m
            .iter()
            .map(|&(_, d)| ups.iter().position(|&u| u > d).map_or(0, |b| b + 1))
            .collect();
        Forest::from_parents(ForestKind::Increasing, parent)
    }

    /// The path read backwards with up- and down-steps exchanged.
    pub fn reverse(&self) -> DyckPath {
        DyckPath { steps: self.steps.iter().rev().map(|s| !s).collect() }
    }

    /// Rotation at the down-step in position `d` (0-based), which must be
    /// followed by an up-step.
    pub fn rotate(&self, d: usize) -> Option<DyckPath> {
        rotate_steps(&self.steps, d, 1).map(|steps| DyckPath { steps })
    }

    /// Every path covering this one in the Tamari order.
    pub fn covers(&self) -> Vec<DyckPath> {
        (0..self.steps.len()).filter_map(|d| self.rotate(d)).collect()
    }
}

/// Moves the down-step at `d` past the primitive path that follows it.
/// An up-step raises the level by `up` and a down-step lowers it by one.
pub(crate) fn rotate_steps(steps: &[bool], d: usize, up: isize) -> Option<Vec<bool>> {
    if steps.get(d) != Some(&false) || steps.get(d + 1) != Some(&true) {
        return None;
    }
    let mut level = 0isize;
    let mut end = d + 1;
    loop {
        level += if steps[end] { up } else { -1 };
        end += 1;
        if level == 0 {
            break;
        }
    }
    let mut out = steps[..d].to_vec();
    out.extend_from_slice(&steps[d + 1..end]);
    out.push(false);
    out.extend_from_slice(&steps[end..]);
    Some(out)
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            f.write_str(if s { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                _ => Err(Error::InvalidDyckWord(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::from_steps(steps)
    }
}

impl From<DyckPath> for String {
    fn from(p: DyckPath) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for DyckPath {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// All Dyck paths of semilength `n`, up-steps first.
pub fn all_dyck_paths(n: usize) -> Vec<DyckPath> {
    fn go(ups: usize, downs: usize, n: usize, cur: &mut Vec<bool>, out: &mut Vec<DyckPath>) {
        if cur.len() == 2 * n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if ups < n {
            cur.push(true);
            go(ups + 1, downs, n, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(false);
            go(ups, downs + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, n, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// A binary tree whose nodes are stored in in-order, so node `k` (1-based)
/// is the `k`-th node visited and structural equality is plain equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct BinaryTree {
    root: Option<usize>,
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl BinaryTree {
    pub fn empty() -> Self {
        BinaryTree { root: None, left: Vec::new(), right: Vec::new() }
    }

    pub fn leaf() -> Self {
        Self::node(&Self::empty(), &Self::empty())
    }

    /// The tree with the given left and right subtrees.
    pub fn node(l: &BinaryTree, r: &BinaryTree) -> Self {
        let k = l.size();
        let shift = |c: &Option<usize>| c.map(|x| x + k + 1);
        let mut left = l.left.clone();
        let mut right = l.right.clone();
        left.push(l.root);
        right.push(r.root.map(|x| x + k + 1));
        left.extend(r.left.iter().map(shift));
        right.extend(r.right.iter().map(shift));
        BinaryTree { root: Some(k), left, right }
    }

    pub fn size(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    pub fn root(&self) -> Option<usize> {
        self.root.map(|r| r + 1)
    }

    pub fn left(&self, v: usize) -> Option<usize> {
        self.left[v - 1].map(|c| c + 1)
    }

    pub fn right(&self, v: usize) -> Option<usize> {
        self.right[v - 1].map(|c| c + 1)
    }

    /// Parent of every node, 1-based, 0 for the root.
    pub fn parents(&self) -> Vec<usize> {
        let mut p = vec![0; self.size()];
        for v in 0..self.size() {
            for c in [self.left[v], self.right[v]].into_iter().flatten() {
                p[c] = v + 1;
            }
        }
        p
    }

    /// Nodes of the subtree rooted at `v` form the in-order range returned.
    pub fn subtree_range(&self, v: usize) -> (usize, usize) {
        let mut lo = v - 1;
        while let Some(c) = self.left[lo] {
            lo = c;
        }
        let mut hi = v - 1;
        while let Some(c) = self.right[hi] {
            hi = c;
        }
        (lo + 1, hi + 1)
    }

    /// Left and right subtrees of the root, renumbered.
    pub fn split(&self) -> Option<(BinaryTree, BinaryTree)> {
        let r = self.root?;
        Some((self.subtree(self.left[r]), self.subtree(self.right[r])))
    }

    pub(crate) fn subtree(&self, v: Option<usize>) -> BinaryTree {
        match v {
            None => BinaryTree::empty(),
            Some(v) => {
                let (lo, hi) = self.subtree_range(v + 1);
                let (lo, hi) = (lo - 1, hi);
                let map = |c: &Option<usize>| c.map(|x| x - lo);
                BinaryTree {
                    root: Some(v - lo),
                    left: self.left[lo..hi].iter().map(map).collect(),
                    right: self.right[lo..hi].iter().map(map).collect(),
                }
            }
        }
    }

    pub fn to_dyck(&self) -> DyckPath {
        fn go(t: &BinaryTree, v: Option<usize>, out: &mut Vec<bool>) {
            if let Some(v) = v {
                go(t, t.left[v], out);
                out.push(true);
                go(t, t.right[v], out);
                out.push(false);
            }
        }
        let mut steps = Vec::with_capacity(2 * self.size());
        go(self, self.root, &mut steps);
        DyckPath { steps }
    }

    /// `b ◁ a` iff node `b` lies in the right subtree of node `a`.
    pub fn final_forest(&self) -> Forest {
        self.forest(ForestKind::Decreasing)
    }

    /// `a ◁ b` iff node `a` lies in the left subtree of node `b`.
    pub fn initial_forest(&self) -> Forest {
        self.forest(ForestKind::Increasing)
    }

    fn forest(&self, kind: ForestKind) -> Forest {
        let par = self.parents();
        let parent = (1..=self.size())
            .map(|v| {
                let mut c = v;
                while par[c - 1] != 0 {
                    let p = par[c - 1];
                    let from_right = self.right[p - 1] == Some(c - 1);
                    if from_right == (kind == ForestKind::Decreasing) {
                        return p;
                    }
                    c = p;
                }
                0
            })
            .collect();
        Forest::from_parents(kind, parent)
    }

    /// Left and right subtrees exchanged at every node.
    pub fn mirror(&self) -> BinaryTree {
        let n = self.size();
        let flip = |c: &Option<usize>| c.map(|x| n - 1 - x);
        BinaryTree {
            root: self.root.map(|r| n - 1 - r),
            left: self.right.iter().rev().map(flip).collect(),
            right: self.left.iter().rev().map(flip).collect(),
        }
    }

    /// Right rotation at `y`: `y(x(A, B), C)` becomes `x(A, y(B, C))`.
    pub fn rotate_right(&self, y: usize) -> Option<BinaryTree> {
        let y = y - 1;
        let x = self.left[y]?;
        let par = self.parents();
        let mut t = self.clone();
        t.left[y] = self.right[x];
        t.right[x] = Some(y);
        match par[y] {
            0 => t.root = Some(x),
            p if self.left[p - 1] == Some(y) => t.left[p - 1] = Some(x),
            p => t.right[p - 1] = Some(x),
        }
        Some(t)
    }

    /// Every tree covering this one in the Tamari order.
    pub fn covers(&self) -> Vec<BinaryTree> {
        (1..=self.size()).filter_map(|y| self.rotate_right(y)).collect()
    }

    /// Rebuilds a tree from its final forest.
    pub fn from_final_forest(f: &Forest) -> BinaryTree {
        // In each subtree range the root is the last vertex with no parent inside.
        Self::build(f, |lo, hi| {
            (lo..=hi)
                .rev()
                .find(|&v| f.parent(v).is_none_or(|p| p < lo))
                .expect("forest of an interval")
        })
    }

    /// Rebuilds a tree from its initial forest.
    pub fn from_initial_forest(f: &Forest) -> BinaryTree {
        Self::build(f, |lo, hi| {
            (lo..=hi)
                .find(|&v| f.parent(v).is_none_or(|p| p > hi))
                .expect("forest of an interval")
        })
    }

    fn build(f: &Forest, pick: impl Fn(usize, usize) -> usize) -> BinaryTree {
        fn go(
            lo: usize,
            hi: usize,
            pick: &dyn Fn(usize, usize) -> usize,
            t: &mut BinaryTree,
        ) -> Option<usize> {
            if lo > hi {
                return None;
            }
            let k = pick(lo, hi);
            t.left[k - 1] = go(lo, k - 1, pick, t);
            t.right[k - 1] = go(k + 1, hi, pick, t);
            Some(k - 1)
        }
        let n = f.size();
        let mut t = BinaryTree { root: None, left: vec![None; n], right: vec![None; n] };
        t.root = go(1, n, &pick, &mut t);
        t
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.to_dyck().steps() {
            f.write_str(if *s { "(" } else { ")" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryTree({self})")
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                '(' => Ok(true),
                ')' => Ok(false),
                _ => Err(Error::InvalidTree(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let d = DyckPath::from_steps(steps).map_err(|_| Error::InvalidTree(s.to_string()))?;
        Ok(d.to_tree())
    }
}

impl From<BinaryTree> for String {
    fn from(t: BinaryTree) -> String {
        t.to_string()
    }
}

impl TryFrom<String> for BinaryTree {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

pub fn all_trees(n: usize) -> Vec<BinaryTree> {
    all_dyck_paths(n).iter().map(DyckPath::to_tree).collect()
}

/// The interval `[t1, t2]` as an interval-poset: the final forest of `t1`
/// together with the initial forest of `t2`.
pub fn interval_from_bounds(t1: &BinaryTree, t2: &BinaryTree) -> Result<IntervalPoset> {
    let n = t1.size();
    if t2.size() != n {
        return Err(Error::SizeMismatch(n, t2.size()));
    }
    let dec = t1.final_forest().to_poset();
    let inc = t2.initial_forest().to_poset();
    for a in 1..=n {
        for b in a + 1..=n {
            if inc.lt(a, b) && dec.lt(b, a) {
                return Err(Error::NotComparable(a, b));
            }
        }
    }
    let mut p = IntervalPoset::antichain(n);
    let base: Vec<_> = inc.relations().into_iter().chain(dec.relations()).collect();
    for &(x, y) in &base {
        p.set(x - 1, y - 1);
    }
    p.close();
    if p.relation_count() != base.len() {
        let extra = p
            .relations()
            .into_iter()
            .find(|e| !base.contains(e))
            .expect("closure added a relation");
        return Err(Error::NotComparable(extra.0.min(extra.1), extra.0.max(extra.1)));
    }
    Ok(p)
}

/// The lower and upper bound trees of an interval-poset.
pub fn bounds_from_interval(p: &IntervalPoset) -> (BinaryTree, BinaryTree) {
    (
        BinaryTree::from_final_forest(&p.decreasing_forest()),
        BinaryTree::from_initial_forest(&p.increasing_forest()),
    )
}

/// Lower and upper bounds as Dyck paths.
pub fn dyck_bounds(p: &IntervalPoset) -> (DyckPath, DyckPath) {
    let (lo, hi) = bounds_from_interval(p);
    (lo.to_dyck(), hi.to_dyck())
}
