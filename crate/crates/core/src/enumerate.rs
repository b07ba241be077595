use std::collections::{HashMap, HashSet, VecDeque};
use std::rc::Rc;

use num_bigint::BigUint;

use crate::catalan::{all_trees, bounds_from_interval, BinaryTree};
use crate::error::Result;
use crate::grafting::GraftingTree;
use crate::mtamari::{all_ballot_paths, ballot_bounds, m_interval_stats, BallotPath};
use crate::poset::IntervalPoset;
use crate::stats::{interval_stats, StatBundle};

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of intervals of the Tamari lattice on trees of size `n`.
pub fn count_intervals(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    let n = n as u64;
    binomial(4 * n + 1, n - 1) * 2u32 / (n * (n + 1))
}

/// Number of intervals of the `m`-Tamari lattice of size `n`.
pub fn count_m_intervals(n: usize, m: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    let (n, m) = (n as u64, m as u64);
    binomial((m + 1) * (m + 1) * n + m, n - 1) * (m + 1) / (n * (m * n + 1))
}

/// Lazily yields every interval-poset of size `n` as `left ⊲ (u ⊳_r right)`,
/// ordered by the size of `left`, then `left`, then `right`, then `r`.
/// Only the smaller sizes are kept in memory.
pub struct IntervalStream {
    n: usize,
    tables: Vec<Rc<Vec<(IntervalPoset, usize)>>>,
    k: usize,
    k_end: usize,
    i: usize,
    j: usize,
    r: usize,
    pending_empty: bool,
}

impl IntervalStream {
    fn new(n: usize, splits: std::ops::Range<usize>) -> Self {
        let mut tables: Vec<Rc<Vec<(IntervalPoset, usize)>>> = Vec::with_capacity(n);
        for s in 0..n {
            let stream = IntervalStream::with_tables(s, tables.clone(), 0..s.max(1));
            let all = stream.map(|p| {
                let roots = p.decreasing_roots().len();
                (p, roots)
            });
            tables.push(Rc::new(all.collect()));
        }
        Self::with_tables(n, tables, splits)
    }

    fn with_tables(
        n: usize,
        tables: Vec<Rc<Vec<(IntervalPoset, usize)>>>,
        splits: std::ops::Range<usize>,
    ) -> Self {
        IntervalStream {
            n,
            tables,
            k: splits.start,
            k_end: splits.end.min(n),
            i: 0,
            j: 0,
            r: 0,
            pending_empty: n == 0,
        }
    }
}

impl Iterator for IntervalStream {
    type Item = IntervalPoset;

    fn next(&mut self) -> Option<IntervalPoset> {
        if self.pending_empty {
            self.pending_empty = false;
            return Some(IntervalPoset::antichain(0));
        }
        loop {
            if self.k >= self.k_end {
                return None;
            }
            let left = &self.tables[self.k];
            let right = &self.tables[self.n - 1 - self.k];
            if self.i >= left.len() {
                self.k += 1;
                self.i = 0;
                continue;
            }
            if self.j >= right.len() {
                self.i += 1;
                self.j = 0;
                continue;
            }
            let (rp, roots) = &right[self.j];
            if self.r > *roots {
                self.j += 1;
                self.r = 0;
                continue;
            }
            let u = IntervalPoset::antichain(1)
                .right_graft(self.r, rp)
                .expect("r bounded by the decreasing roots");
            self.r += 1;
            return Some(left[self.i].0.left_graft(&u));
        }
    }
}

pub fn enumerate_intervals(n: usize) -> IntervalStream {
    IntervalStream::new(n, 0..n)
}

/// The part of [`enumerate_intervals`] whose left graft has size `k`.
pub fn enumerate_intervals_with_split(n: usize, k: usize) -> IntervalStream {
    IntervalStream::new(n, k..k + 1)
}

/// All grafting trees of size `n` whose node `v` has label at least
/// `min_label(v)`.
pub fn grafting_trees_with(n: usize, min_label: impl Fn(usize) -> usize) -> Vec<GraftingTree> {
    fn labelings(
        t: &BinaryTree,
        v: Option<usize>,
        min_label: &dyn Fn(usize) -> usize,
    ) -> Vec<(Vec<usize>, usize)> {
        let Some(v) = v else {
            return vec![(Vec::new(), 0)];
        };
        let ls = labelings(t, t.left(v), min_label);
        let rs = labelings(t, t.right(v), min_label);
        let rsize = t.right(v).map_or(0, |c| {
            let (lo, hi) = t.subtree_range(c);
            hi + 1 - lo
        });
        let mut out = Vec::new();
        for (l, sl) in &ls {
            for (r, sr) in &rs {
                for x in min_label(v)..=rsize - sr {
                    let mut lab = l.clone();
                    lab.push(x);
                    lab.extend_from_slice(r);
                    out.push((lab, sl + x + sr));
                }
            }
        }
        out
    }
    let mut out = Vec::new();
    for t in all_trees(n) {
        for (labels, _) in labelings(&t, t.root(), &min_label) {
            out.push(GraftingTree::new(t.clone(), labels).expect("labels within budget"));
        }
    }
    out
}

/// Every `m`-interval-poset of size `nm`, built from its grafting tree.
pub fn enumerate_m_intervals(n: usize, m: usize) -> Vec<IntervalPoset> {
    grafting_trees_with(n * m, |v| usize::from(v % m != 0))
        .iter()
        .map(GraftingTree::to_interval)
        .collect()
}

/// Statistic bundles of every interval of size `n`, sorted.
pub fn phi_multiset(n: usize) -> Vec<StatBundle> {
    let mut out: Vec<_> = enumerate_intervals(n).map(|p| interval_stats(&p)).collect();
    out.sort();
    out
}

/// Statistic bundles of every `m`-interval of size `n`, sorted.
pub fn m_phi_multiset(n: usize, m: usize) -> Result<Vec<StatBundle>> {
    let mut out = enumerate_m_intervals(n, m)
        .iter()
        .map(|p| m_interval_stats(p, m))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Longest chain from `from` to `to` in a cover graph, if `to` is reachable.
fn longest_chain<T, F>(from: &T, to: &T, covers: F) -> Option<usize>
where
    T: Clone + Eq + std::hash::Hash,
    F: Fn(&T) -> Vec<T>,
{
    fn go<T, F>(x: &T, to: &T, covers: &F, memo: &mut HashMap<T, Option<usize>>) -> Option<usize>
    where
        T: Clone + Eq + std::hash::Hash,
        F: Fn(&T) -> Vec<T>,
    {
        if x == to {
            return Some(0);
        }
        if let Some(&v) = memo.get(x) {
            return v;
        }
        let best = covers(x)
            .iter()
            .filter_map(|y| go(y, to, covers, memo))
            .max()
            .map(|d| d + 1);
        memo.insert(x.clone(), best);
        best
    }
    go(from, to, &covers, &mut HashMap::new())
}

/// Distance computed as the longest rotation chain between the bounds.
pub fn brute_force_distance(p: &IntervalPoset) -> Option<usize> {
    let (lo, hi) = bounds_from_interval(p);
    longest_chain(&lo, &hi, BinaryTree::covers)
}

/// Longest chain between the ballot-path bounds of an `m`-interval.
pub fn brute_force_m_distance(p: &IntervalPoset, m: usize) -> Result<Option<usize>> {
    let (lo, hi) = ballot_bounds(p, m)?;
    Ok(longest_chain(&lo, &hi, BallotPath::covers))
}

fn upper_set<T, F>(x: &T, covers: F) -> Vec<T>
where
    T: Clone + Eq + std::hash::Hash,
    F: Fn(&T) -> Vec<T>,
{
    let mut seen = HashSet::from([x.clone()]);
    let mut order = vec![x.clone()];
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        for z in covers(&y) {
            if seen.insert(z.clone()) {
                order.push(z.clone());
                queue.push_back(z);
            }
        }
    }
    order
}

/// All comparable pairs `t1 <= t2` of trees of size `n`, found by rotation.
pub fn comparable_tree_pairs(n: usize) -> Vec<(BinaryTree, BinaryTree)> {
    all_trees(n)
        .into_iter()
        .flat_map(|t| {
            upper_set(&t, BinaryTree::covers)
                .into_iter()
                .map(move |u| (t.clone(), u))
        })
        .collect()
}

/// All comparable pairs of `m`-ballot paths of size `n`, found by rotation.
pub fn comparable_ballot_pairs(n: usize, m: usize) -> Vec<(BallotPath, BallotPath)> {
    all_ballot_paths(n, m)
        .into_iter()
        .flat_map(|b| {
            upper_set(&b, BallotPath::covers)
                .into_iter()
                .map(move |c| (b.clone(), c))
        })
        .collect()
}
