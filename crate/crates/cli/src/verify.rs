use std::collections::{BTreeSet, HashSet};
use std::fmt::Write;

use rayon::prelude::*;
use tamari_core::catalan::all_trees;
use tamari_core::enumerate::{
    brute_force_distance, brute_force_m_distance, comparable_ballot_pairs, comparable_tree_pairs,
    enumerate_intervals_with_split,
};
use tamari_core::mtamari::ballot_bounds;
use tamari_core::*;

const KEEP: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Classical,
    Mtamari,
    Oracles,
}

#[derive(Debug, Default)]
pub struct Row {
    pub check: String,
    pub n: usize,
    pub m: usize,
    pub cases: usize,
    pub failures: Vec<String>,
    pub failed: usize,
}

impl Row {
    fn new(check: &str, n: usize, m: usize) -> Self {
        Row { check: check.into(), n, m, ..Default::default() }
    }

    fn record(&mut self, outcome: Option<String>) {
        self.cases += 1;
        if let Some(msg) = outcome {
            self.failed += 1;
            if self.failures.len() < KEEP {
                self.failures.push(msg);
            }
        }
    }

    fn merge(mut self, other: Row) -> Row {
        self.cases += other.cases;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < KEEP {
                self.failures.push(f);
            }
        }
        self
    }
}

pub struct Report {
    pub rows: Vec<Row>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.failed == 0)
    }

    pub fn table(&self) -> String {
        let mut out = format!("{:<24} {:>3} {:>3} {:>8} {:>8}  result\n", "check", "n", "m", "cases", "failed");
        for r in &self.rows {
            let status = if r.failed == 0 { "ok" } else { "FAIL" };
            writeln!(out, "{:<24} {:>3} {:>3} {:>8} {:>8}  {status}", r.check, r.n, r.m, r.cases, r.failed)
                .unwrap();
            for f in &r.failures {
                writeln!(out, "    {f}").unwrap();
            }
        }
        let total: usize = self.rows.iter().map(|r| r.cases).sum();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{verdict}: {} checks, {total} cases", self.rows.len()).unwrap();
        out
    }
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    if cond { Some(msg()) } else { None }
}

/// Runs `check` on every interval of size `n`, one rayon task per first
/// size split of the grafting decomposition.
fn over_intervals<F>(name: &str, n: usize, check: F) -> Row
where
    F: Fn(&IntervalPoset) -> Option<String> + Sync,
{
    (0..n.max(1))
        .into_par_iter()
        .map(|k| {
            let mut row = Row::new(name, n, 1);
            for p in enumerate_intervals_with_split(n, k) {
                row.record(check(&p));
            }
            row
        })
        .reduce(|| Row::new(name, n, 1), Row::merge)
}

fn over_m_intervals<F>(name: &str, n: usize, m: usize, check: F) -> Row
where
    F: Fn(&IntervalPoset) -> Option<String> + Sync,
{
    enumerate_m_intervals(n, m)
        .par_iter()
        .map(|p| {
            let mut row = Row::new(name, n, m);
            row.record(check(p));
            row
        })
        .reduce(|| Row::new(name, n, m), Row::merge)
}

fn symmetric(terms: Vec<PhiTerm>) -> bool {
    let mut swapped: Vec<_> = terms.iter().map(PhiTerm::swapped).collect();
    let mut terms = terms;
    terms.sort();
    swapped.sort();
    terms == swapped
}

fn symmetry_row(name: &str, n: usize, m: usize, terms: Vec<PhiTerm>) -> Row {
    let mut row = Row::new(name, n, m);
    let cases = terms.len();
    row.record(fail_if(!symmetric(terms), || "multiset is not swap-invariant".into()));
    row.cases = cases;
    row
}

fn count_row(n: usize, m: usize, got: usize, want: impl std::fmt::Display) -> Row {
    let want = want.to_string();
    let mut row = Row::new("count", n, m);
    row.record(fail_if(got.to_string() != want, || format!("{got} intervals, formula {want}")));
    row
}

pub fn classical(max_n: usize) -> Report {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let count = over_intervals("count", n, |_| None).cases;
        rows.push(count_row(n, 1, count, count_intervals(n)));
        rows.push(over_intervals("involution", n, |p| {
            let j = rise_contact(p);
            let (s, t) = (interval_stats(p), interval_stats(&j));
            fail_if(rise_contact(&j) != *p, || format!("not an involution on {p:?}"))
                .or_else(|| fail_if(t.term() != s.term().swapped(), || format!("no swap on {p:?}")))
        }));
        rows.push(over_intervals("grafting-tree", n, |p| {
            let g = GraftingTree::from_interval(p);
            fail_if(g.to_interval() != *p, || format!("round trip {p:?}"))
                .or_else(|| fail_if(g.distance() != p.distance(), || format!("distance {p:?}")))
                .or_else(|| {
                    let h = left_branch_involution(&g);
                    fail_if(left_branch_involution(&h) != g, || format!("left branch {p:?}"))
                })
        }));
        let terms: Vec<_> = (0..n)
            .into_par_iter()
            .flat_map_iter(|k| enumerate_intervals_with_split(n, k).map(|p| interval_stats(&p).term()))
            .collect();
        rows.push(symmetry_row("phi-symmetry", n, 1, terms));
    }
    Report { rows }
}

pub fn mtamari(max_n: usize, m: usize) -> Report {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let all = enumerate_m_intervals(n, m);
        rows.push(count_row(n, m, all.len(), count_m_intervals(n, m)));
        rows.push(over_m_intervals("m-involution", n, m, |p| {
            let j = match m_rise_contact(p, m) {
                Ok(j) => j,
                Err(e) => return Some(format!("{e} on {p:?}")),
            };
            let back = m_rise_contact(&j, m).ok();
            let s = m_interval_stats(p, m).ok().map(|s| s.term().swapped());
            let t = m_interval_stats(&j, m).ok().map(|t| t.term());
            fail_if(back.as_ref() != Some(p), || format!("not an involution on {p:?}"))
                .or_else(|| fail_if(s != t, || format!("no swap on {p:?}")))
        }));
        rows.push(over_m_intervals("expand-distance", n, m, |p| {
            let g = match MGraftingTree::from_interval(p, m) {
                Ok(g) => g,
                Err(e) => return Some(format!("{e} on {p:?}")),
            };
            let e = g.expand();
            let want = m * g.tree().distance() + n * m * (m - 1) / 2;
            fail_if(e.distance() != want, || format!("distance {} != {want} on {p:?}", e.distance()))
                .or_else(|| fail_if(MGraftingTree::contract(&e, m).ok() != Some(g), || format!("contract {p:?}")))
        }));
        let terms: Vec<_> = all
            .par_iter()
            .filter_map(|p| m_interval_stats(p, m).ok().map(|s| s.term()))
            .collect();
        let mut row = symmetry_row("phi-symmetry", n, m, terms);
        if row.cases != all.len() {
            row.record(Some("statistics failed on some m-interval".into()));
        }
        rows.push(row);
    }
    Report { rows }
}

pub fn oracles(max_n: usize, m: usize) -> Report {
    let mut rows = Vec::new();
    for n in 0..=max_n {
        rows.push(over_intervals("brute-distance", n, |p| {
            let d = brute_force_distance(p);
            fail_if(d != Some(p.distance()), || format!("{d:?} != {} on {p:?}", p.distance()))
        }));
        let pairs: HashSet<_> = comparable_tree_pairs(n).into_iter().collect();
        let trees = all_trees(n);
        let mut row = trees
            .par_iter()
            .map(|t1| {
                let mut row = Row::new("comparability", n, 1);
                for t2 in &trees {
                    let r = interval_from_bounds(t1, t2);
                    let key = (t1.clone(), t2.clone());
                    row.record(
                        fail_if(r.is_ok() != pairs.contains(&key), || format!("{t1} vs {t2}")).or_else(|| {
                            r.ok().and_then(|p| {
                                fail_if(bounds_from_interval(&p) != key, || format!("bounds {t1} {t2}"))
                            })
                        }),
                    );
                }
                row
            })
            .reduce(|| Row::new("comparability", n, 1), Row::merge);
        let ours: BTreeSet<_> = (0..n.max(1))
            .into_par_iter()
            .flat_map_iter(|k| enumerate_intervals_with_split(n, k).map(|p| bounds_from_interval(&p)))
            .collect();
        let oracle: BTreeSet<_> = pairs.into_iter().collect();
        row.record(fail_if(ours != oracle, || format!("enumeration differs from rotation pairs at n={n}")));
        rows.push(row);
    }
    for n in 1..=max_n {
        rows.push(over_m_intervals("brute-m-distance", n, m, |p| {
            let d = brute_force_m_distance(p, m).ok().flatten();
            fail_if(d != Some(p.distance()), || format!("{d:?} != {} on {p:?}", p.distance()))
        }));
        let ours: BTreeSet<_> = enumerate_m_intervals(n, m)
            .iter()
            .filter_map(|p| ballot_bounds(p, m).ok())
            .collect();
        let oracle: BTreeSet<_> = comparable_ballot_pairs(n, m).into_iter().collect();
        let mut row = Row::new("m-comparability", n, m);
        row.record(fail_if(ours != oracle, || "m-enumeration differs from rotation pairs".into()));
        row.cases = oracle.len();
        rows.push(row);
    }
    Report { rows }
}
