use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Tamari interval-poset on the vertices `1..=n`.
///
/// The relation is kept transitively closed in a dense bit matrix, so
/// `lt(a, b)` is a single lookup. Row `a` holds every `b` with `a ◁ b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "PosetJson", try_from = "PosetJson")]
pub struct IntervalPoset {
    size: usize,
    words: usize,
    bits: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForestKind {
    Increasing,
    Decreasing,
}

/// The increasing (initial) or decreasing (final) forest of an interval-poset.
///
/// `parent[v - 1]` is the Hasse-diagram parent of `v`, or 0 for a root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Forest {
    kind: ForestKind,
    parent: Vec<usize>,
}

impl Forest {
    pub(crate) fn from_parents(kind: ForestKind, parent: Vec<usize>) -> Self {
        Forest { kind, parent }
    }

    pub fn kind(&self) -> ForestKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent[v - 1] {
            0 => None,
            p => Some(p),
        }
    }

    pub fn roots(&self) -> Vec<usize> {
        (1..=self.size()).filter(|&v| self.parent[v - 1] == 0).collect()
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (1..=self.size()).filter(|&c| self.parent[c - 1] == v).collect()
    }

    /// Hasse edges `(x, y)` meaning `x ◁ y`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = (1..=self.size())
            .filter_map(|v| self.parent(v).map(|p| (v, p)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn to_poset(&self) -> IntervalPoset {
        let mut p = IntervalPoset::antichain(self.size());
        for (x, y) in self.edges() {
            p.set(x - 1, y - 1);
        }
        p.close();
        p
    }
}

impl IntervalPoset {
    /// The interval-poset with no relations; it is the whole lattice `[min, max]`.
    pub fn antichain(size: usize) -> Self {
        let words = size.div_ceil(64);
        IntervalPoset {
            size,
            words,
            bits: vec![0; size * words],
        }
    }

    /// Builds the transitive closure of `relations` (pairs `(x, y)` meaning
    /// `x ◁ y`) and checks it is an interval-poset.
    pub fn from_relations<I>(size: usize, relations: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut p = Self::antichain(size);
        for (x, y) in relations {
            for v in [x, y] {
                if v == 0 || v > size {
                    return Err(Error::VertexOutOfRange(v, size));
                }
            }
            if x == y {
                return Err(Error::CycleOrSymmetry);
            }
            p.set(x - 1, y - 1);
        }
        p.close();
        p.validate()?;
        Ok(p)
    }

    /// Checks that the stored relation is a strict order satisfying the
    /// Tamari axiom. Reports the lexicographically first bad triple.
    pub fn validate(&self) -> Result<()> {
        if (0..self.size).any(|a| self.get(a, a)) {
            return Err(Error::CycleOrSymmetry);
        }
        let n = self.size;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let bad_inc = self.get(a, c) && !self.get(b, c);
                    let bad_dec = self.get(c, a) && !self.get(b, a);
                    if bad_inc || bad_dec {
                        return Err(Error::TamariAxiomViolated(a + 1, b + 1, c + 1));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// `a ◁ b`, 1-based.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.get(a - 1, b - 1)
    }

    /// All pairs `(x, y)` with `x ◁ y`, lexicographically.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size {
            for b in 0..self.size {
                if self.get(a, b) {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out
    }

    pub fn relation_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when every relation of `other` also holds here.
    pub fn is_extension_of(&self, other: &IntervalPoset) -> bool {
        self.size == other.size
            && self.bits.iter().zip(&other.bits).all(|(s, o)| o & !s == 0)
    }

    pub fn increasing_forest(&self) -> Forest {
        let n = self.size;
        let parent = (0..n)
            .map(|a| (a + 1..n).find(|&b| self.get(a, b)).map_or(0, |b| b + 1))
            .collect();
        Forest::from_parents(ForestKind::Increasing, parent)
    }

    pub fn decreasing_forest(&self) -> Forest {
        let parent = (0..self.size)
            .map(|b| (0..b).rev().find(|&a| self.get(b, a)).map_or(0, |a| a + 1))
            .collect();
        Forest::from_parents(ForestKind::Decreasing, parent)
    }

    pub fn increasing_roots(&self) -> Vec<usize> {
        self.increasing_forest().roots()
    }

    pub fn decreasing_roots(&self) -> Vec<usize> {
        self.decreasing_forest().roots()
    }

    pub fn decreasing_children(&self, v: usize) -> Vec<usize> {
        let b = v - 1;
        (b + 1..self.size)
            .filter(|&c| self.get(c, b) && !(b + 1..c).any(|k| self.get(c, k)))
            .map(|c| c + 1)
            .collect()
    }

    pub fn increasing_children(&self, v: usize) -> Vec<usize> {
        let b = v - 1;
        (0..b)
            .filter(|&a| self.get(a, b) && !(a + 1..b).any(|k| self.get(a, k)))
            .map(|a| a + 1)
            .collect()
    }

    /// `(#decreasing roots, #decreasing children of 1, ..., of n-1)`.
    pub fn dc_vector(&self) -> Vec<usize> {
        if self.size == 0 {
            return Vec::new();
        }
        let f = self.decreasing_forest();
        let mut counts = vec![0; self.size + 1];
        for v in 1..=self.size {
            counts[f.parent[v - 1]] += 1;
        }
        counts.truncate(self.size);
        counts
    }

    /// `(#increasing roots, #increasing children of n, ..., of 2)`.
    pub fn ic_vector(&self) -> Vec<usize> {
        if self.size == 0 {
            return Vec::new();
        }
        let f = self.increasing_forest();
        let mut counts = vec![0; self.size + 1];
        for v in 1..=self.size {
            counts[f.parent[v - 1]] += 1;
        }
        let mut out = vec![counts[0]];
        out.extend((2..=self.size).rev().map(|v| counts[v]));
        out
    }

    /// `i ◁ j` in the result iff `n+1-i ◁ n+1-j` here.
    pub fn complement(&self) -> IntervalPoset {
        let n = self.size;
        let mut p = Self::antichain(n);
        for a in 0..n {
            for b in 0..n {
                if self.get(a, b) {
                    p.set(n - 1 - a, n - 1 - b);
                }
            }
        }
        p
    }

    /// Pairs `(a, b)`, `a < b`, such that no `a <= k < b` has `b ◁ k` and
    /// no `a < k <= b` has `a ◁ k`. Sorted lexicographically.
    pub fn tamari_inversions(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let dec = (a..b).any(|k| self.get(b, k));
                if !dec && !(a + 1..=b).any(|k| self.get(a, k)) {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out
    }

    /// Length of the longest chain between the interval's bounds.
    pub fn distance(&self) -> usize {
        self.tamari_inversions().len()
    }

    /// Adds `b ◁ a` for the first Tamari inversion `(a, b)`.
    pub fn add_inversion_step(&self) -> Result<IntervalPoset> {
        let (a, b) = *self.tamari_inversions().first().ok_or(Error::NoInversions)?;
        let mut p = self.clone();
        p.set(b - 1, a - 1);
        p.close();
        Ok(p)
    }

    /// Shifted concatenation with every vertex of `self` below the first
    /// vertex of `right`.
    pub fn left_graft(&self, right: &IntervalPoset) -> IntervalPoset {
        let n1 = self.size;
        let mut p = self.concat(right);
        if right.size > 0 {
            for y in 0..n1 {
                p.set(y, n1);
            }
            p.close();
        }
        p
    }

    /// Shifted concatenation with the first `r` decreasing roots of `right`
    /// placed below the last vertex of `self`.
    pub fn right_graft(&self, r: usize, right: &IntervalPoset) -> Result<IntervalPoset> {
        let roots = right.decreasing_roots();
        if r > roots.len() || (r > 0 && self.size == 0) {
            return Err(Error::RParameterOutOfRange {
                r,
                roots: if self.size == 0 { 0 } else { roots.len() },
            });
        }
        let n1 = self.size;
        let mut p = self.concat(right);
        for &y in &roots[..r] {
            p.set(n1 + y - 1, n1 - 1);
        }
        p.close();
        Ok(p)
    }

    /// Splits a non-empty interval-poset as `left ⊲ (u ⊳_r right)` where `u` is
    /// the single vertex `left.size() + 1`. Returns `(left, r, right)`.
    pub fn grafting_decomposition(&self) -> Result<(IntervalPoset, usize, IntervalPoset)> {
        let n = self.size;
        let k = (0..n)
            .find(|&a| !(a + 1..n).any(|b| self.get(a, b)))
            .ok_or(Error::EmptyInput)?;
        let r = (k + 1..n)
            .filter(|&c| self.get(c, k) && !(k + 1..c).any(|j| self.get(c, j)))
            .count();
        Ok((self.restrict(0, k), r, self.restrict(k + 1, n)))
    }

    /// The sub-poset on the vertices `lo+1..=hi` (0-based half-open), renumbered.
    pub(crate) fn restrict(&self, lo: usize, hi: usize) -> IntervalPoset {
        let mut p = Self::antichain(hi - lo);
        for a in lo..hi {
            for b in lo..hi {
                if self.get(a, b) {
                    p.set(a - lo, b - lo);
                }
            }
        }
        p
    }

    fn concat(&self, right: &IntervalPoset) -> IntervalPoset {
        let n1 = self.size;
        let mut p = Self::antichain(n1 + right.size);
        for a in 0..n1 {
            for b in 0..n1 {
                if self.get(a, b) {
                    p.set(a, b);
                }
            }
        }
        for a in 0..right.size {
            for b in 0..right.size {
                if right.get(a, b) {
                    p.set(n1 + a, n1 + b);
                }
            }
        }
        p
    }

    fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub(crate) fn set(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / 64] |= 1 << (b % 64);
    }

    pub(crate) fn close(&mut self) {
        let w = self.words;
        for k in 0..self.size {
            for i in 0..self.size {
                if i != k && self.get(i, k) {
                    for j in 0..w {
                        let src = self.bits[k * w + j];
                        self.bits[i * w + j] |= src;
                    }
                }
            }
        }
    }
}

impl fmt::Debug for IntervalPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntervalPoset")
            .field("size", &self.size)
            .field("increasing", &self.increasing_forest().edges())
            .field("decreasing", &self.decreasing_forest().edges())
            .finish()
    }
}

/// Canonical JSON form: Hasse edges of both forests, each edge `[x, y]`
/// meaning `x ◁ y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub size: usize,
    pub increasing: Vec<[usize; 2]>,
    pub decreasing: Vec<[usize; 2]>,
}

impl From<IntervalPoset> for PosetJson {
    fn from(p: IntervalPoset) -> Self {
        let edges = |f: Forest| f.edges().into_iter().map(|(x, y)| [x, y]).collect();
        PosetJson {
            size: p.size,
            increasing: edges(p.increasing_forest()),
            decreasing: edges(p.decreasing_forest()),
        }
    }
}

impl TryFrom<PosetJson> for IntervalPoset {
    type Error = Error;

    fn try_from(j: PosetJson) -> Result<Self> {
        let rel = j.increasing.iter().chain(&j.decreasing).map(|e| (e[0], e[1]));
        IntervalPoset::from_relations(j.size, rel)
    }
}
