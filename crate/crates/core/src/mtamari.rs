use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalan::{dyck_bounds, rotate_steps, DyckPath};
use crate::error::{Error, Result};
use crate::grafting::GraftingTree;
use crate::involution::rise_contact;
use crate::poset::IntervalPoset;
use crate::stats::{contact_vector, rise_vector, ExponentMultiset, StatBundle};

/// A lattice path of vertical (`true`) and horizontal steps from `(0, 0)` to
/// `(nm, n)` staying above the line `x = m y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "BallotJson", try_from = "BallotJson")]
pub struct BallotPath {
    m: usize,
    steps: Vec<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BallotJson {
    pub m: usize,
    pub word: String,
}

impl From<BallotPath> for BallotJson {
    fn from(b: BallotPath) -> Self {
        BallotJson { m: b.m, word: b.word() }
    }
}

impl TryFrom<BallotJson> for BallotPath {
    type Error = Error;

    fn try_from(j: BallotJson) -> Result<Self> {
        BallotPath::parse(j.m, &j.word)
    }
}

impl BallotPath {
    pub fn new(m: usize, steps: Vec<bool>) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroM);
        }
        let (mut v, mut h) = (0usize, 0usize);
        for (i, &s) in steps.iter().enumerate() {
            if s {
                v += 1;
            } else {
                h += 1;
            }
            if h > m * v {
                return Err(Error::InvalidBallotPath(format!("crosses the line at step {}", i + 1)));
            }
        }
        if h != m * v {
            return Err(Error::InvalidBallotPath(format!("ends at ({h}, {v})")));
        }
        Ok(BallotPath { m, steps })
    }

    /// Reads a word over `1` (vertical) and `0` (horizontal).
    pub fn parse(m: usize, word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                _ => Err(Error::InvalidBallotPath(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, steps)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    /// Number of vertical steps.
    pub fn size(&self) -> usize {
        self.steps.iter().filter(|&&s| s).count()
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|&s| if s { '1' } else { '0' }).collect()
    }

    /// Replaces every vertical step by `m` up-steps.
    pub fn to_mdyck(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(self.steps.len() + self.size() * (self.m - 1));
        for &s in &self.steps {
            if s {
                steps.extend(std::iter::repeat_n(true, self.m));
            } else {
                steps.push(false);
            }
        }
        DyckPath::from_steps(steps).expect("ballot paths map to Dyck paths")
    }

    /// Inverse of [`BallotPath::to_mdyck`]; every rise must be a multiple of `m`.
    pub fn from_mdyck(d: &DyckPath, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroM);
        }
        let mut steps = Vec::new();
        let mut run = 0;
        for &s in d.steps().iter().chain(std::iter::once(&false)) {
            if s {
                run += 1;
                continue;
            }
            if run % m != 0 {
                return Err(Error::NotRiseDivisible(run));
            }
            steps.extend(std::iter::repeat_n(true, run / m));
            run = 0;
            steps.push(false);
        }
        steps.pop();
        BallotPath::new(m, steps)
    }

    /// Rotation at the horizontal step in position `d` (0-based).
    pub fn rotate(&self, d: usize) -> Option<BallotPath> {
        rotate_steps(&self.steps, d, self.m as isize).map(|steps| BallotPath { m: self.m, steps })
    }

    pub fn covers(&self) -> Vec<BallotPath> {
        (0..self.steps.len()).filter_map(|d| self.rotate(d)).collect()
    }

    /// `m y - x` at the start of each vertical step.
    pub fn area_vector(&self) -> Vec<usize> {
        let (mut x, mut y) = (0, 0);
        let mut out = Vec::with_capacity(self.size());
        for &s in &self.steps {
            if s {
                out.push(self.m * y - x);
                y += 1;
            } else {
                x += 1;
            }
        }
        out
    }

    /// Sizes of the blocks of equal area values separated only by larger
    /// values, in order of first element.
    pub fn area_partition(&self) -> Vec<usize> {
        let a = self.area_vector();
        let mut block = vec![usize::MAX; a.len()];
        let mut sizes = Vec::new();
        for i in 0..a.len() {
            if block[i] == usize::MAX {
                block[i] = sizes.len();
                sizes.push(0);
            }
            sizes[block[i]] += 1;
            if let Some(j) = (i + 1..a.len()).find(|&j| a[j] <= a[i]) {
                if a[j] == a[i] {
                    block[j] = block[i];
                }
            }
        }
        sizes
    }

    pub fn area_monomial(&self) -> ExponentMultiset {
        ExponentMultiset::from_values(&self.area_partition())
    }

    pub fn contact_vector(&self) -> Vec<usize> {
        m_contact_vector(&self.to_mdyck(), self.m)
    }

    pub fn rise_vector(&self) -> Vec<usize> {
        m_rise_vector(&self.to_mdyck(), self.m)
    }
}

impl fmt::Display for BallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

impl fmt::Debug for BallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BallotPath(m={}, {})", self.m, self.word())
    }
}

/// All `m`-ballot paths with `n` vertical steps.
pub fn all_ballot_paths(n: usize, m: usize) -> Vec<BallotPath> {
    fn go(v: usize, h: usize, n: usize, m: usize, cur: &mut Vec<bool>, out: &mut Vec<BallotPath>) {
        if v == n && h == n * m {
            out.push(BallotPath { m, steps: cur.clone() });
            return;
        }
        if v < n {
            cur.push(true);
            go(v + 1, h, n, m, cur, out);
            cur.pop();
        }
        if h < m * v {
            cur.push(false);
            go(v, h + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        go(0, 0, n, m, &mut Vec::new(), &mut out);
    }
    out
}

/// Contact vector of an `m`-Dyck path: entry `k` loses one unless `m`
/// divides `k`.
pub fn m_contact_vector(d: &DyckPath, m: usize) -> Vec<usize> {
    let mut v = contact_vector(d);
    for (k, c) in v.iter_mut().enumerate().skip(1) {
        if k % m != 0 {
            *c -= 1;
        }
    }
    v
}

/// Rise vector of an `m`-Dyck path divided by `m`.
pub fn m_rise_vector(d: &DyckPath, m: usize) -> Vec<usize> {
    rise_vector(d).into_iter().map(|r| r / m).collect()
}

/// Checks `im ◁ im-1 ◁ ... ◁ im-m+1` for every `i`.
pub fn check_m_interval(p: &IntervalPoset, m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroM);
    }
    if !p.size().is_multiple_of(m) {
        return Err(Error::SizeNotDivisible(p.size(), m));
    }
    for v in 1..=p.size() {
        if v % m != 0 && !p.lt(v + 1, v) {
            return Err(Error::NotMInterval(v));
        }
    }
    Ok(())
}

pub fn is_m_interval_poset(p: &IntervalPoset, m: usize) -> bool {
    check_m_interval(p, m).is_ok()
}

/// A grafting tree of size `nm` whose node `i` has label at least one
/// whenever `m` does not divide `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MGraftingTree {
    m: usize,
    tree: GraftingTree,
}

impl MGraftingTree {
    pub fn new(m: usize, tree: GraftingTree) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroM);
        }
        if !tree.size().is_multiple_of(m) {
            return Err(Error::SizeNotDivisible(tree.size(), m));
        }
        if let Some(v) = (1..=tree.size()).find(|&v| v % m != 0 && tree.label(v) == 0) {
            return Err(Error::NotMInterval(v));
        }
        Ok(MGraftingTree { m, tree })
    }

    pub fn from_interval(p: &IntervalPoset, m: usize) -> Result<Self> {
        check_m_interval(p, m)?;
        Self::new(m, GraftingTree::from_interval(p))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn tree(&self) -> &GraftingTree {
        &self.tree
    }

    /// Label `l` becomes `m l` on multiples of `m` and `m (l - 1)` elsewhere.
    pub fn expand(&self) -> GraftingTree {
        let m = self.m;
        let labels = (1..=self.tree.size())
            .map(|v| {
                let l = self.tree.label(v);
                if v % m == 0 { m * l } else { m * (l - 1) }
            })
            .collect();
        GraftingTree::new(self.tree.tree().clone(), labels).expect("expansion keeps the budget")
    }

    /// Inverse of [`MGraftingTree::expand`] on rise-contact-`m`-divisible trees.
    pub fn contract(g: &GraftingTree, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroM);
        }
        if !g.size().is_multiple_of(m) {
            return Err(Error::SizeNotDivisible(g.size(), m));
        }
        let rises_ok = rise_vector(&g.tree().to_dyck()).iter().all(|r| r % m == 0);
        if !rises_ok || !g.contacts().is_multiple_of(m) || g.labels().iter().any(|l| l % m != 0) {
            return Err(Error::NotMDivisible);
        }
        let labels = (1..=g.size())
            .map(|v| g.label(v) / m + usize::from(v % m != 0))
            .collect();
        let tree = GraftingTree::new(g.tree().clone(), labels).map_err(|_| Error::NotMDivisible)?;
        Self::new(m, tree)
    }
}

/// The `m`-rise-contact involution `contract ∘ β ∘ expand`.
pub fn m_rise_contact(p: &IntervalPoset, m: usize) -> Result<IntervalPoset> {
    let g = MGraftingTree::from_interval(p, m)?;
    let image = rise_contact(&g.expand().to_interval());
    Ok(MGraftingTree::contract(&GraftingTree::from_interval(&image), m)?.tree.to_interval())
}

/// Statistics of an `m`-interval-poset of size `nm`, reported at size `n`.
pub fn m_interval_stats(p: &IntervalPoset, m: usize) -> Result<StatBundle> {
    check_m_interval(p, m)?;
    let (lo, hi) = dyck_bounds(p);
    let rises = rise_vector(&hi);
    if let Some(&r) = rises.iter().find(|&&r| r % m != 0) {
        return Err(Error::NotRiseDivisible(r));
    }
    Ok(StatBundle::new(
        p.size() / m,
        m_contact_vector(&lo, m),
        rises.into_iter().map(|r| r / m).collect(),
        p.distance(),
    ))
}

/// The lower and upper bounds of an `m`-interval-poset as ballot paths.
pub fn ballot_bounds(p: &IntervalPoset, m: usize) -> Result<(BallotPath, BallotPath)> {
    check_m_interval(p, m)?;
    let (lo, hi) = dyck_bounds(p);
    Ok((BallotPath::from_mdyck(&lo, m)?, BallotPath::from_mdyck(&hi, m)?))
}
