use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalan::{dyck_bounds, DyckPath};
use crate::poset::IntervalPoset;

/// Sorted multiset of indices; `[0, 0, 2]` stands for `x0^2 x2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentMultiset(Vec<usize>);

impl ExponentMultiset {
    pub fn from_values(values: &[usize]) -> Self {
        let mut v = values.to_vec();
        v.sort_unstable();
        ExponentMultiset(v)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// `(index, power)` pairs in increasing index order.
    pub fn powers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &i in &self.0 {
            match out.last_mut() {
                Some((j, p)) if *j == i => *p += 1,
                _ => out.push((i, 1)),
            }
        }
        out
    }

    pub fn without_zeros(&self) -> Self {
        ExponentMultiset(self.0.iter().copied().filter(|&i| i != 0).collect())
    }

    /// Writes the monomial with variable name `var`, e.g. `x0^4 x1^2`.
    pub fn monomial(&self, var: &str) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .powers()
            .into_iter()
            .map(|(i, p)| match p {
                1 => format!("{var}{i}"),
                _ => format!("{var}{i}^{p}"),
            })
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for ExponentMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.monomial("x"))
    }
}

/// `(contacts, c_1, ..., c_{n-1})` where `c_i` counts the non-final contacts
/// of the longest Dyck subpath starting right after the `i`-th up-step.
pub fn contact_vector(d: &DyckPath) -> Vec<usize> {
    let n = d.semilength();
    if n == 0 {
        return Vec::new();
    }
    let h = d.heights();
    let last = h.len() - 1;
    let mut out = vec![h[..last].iter().filter(|&&x| x == 0).count()];
    let ups = d.steps().iter().enumerate().filter(|e| *e.1).map(|e| e.0);
    for p in ups.take(n - 1) {
        let h0 = h[p + 1];
        let mut count = 0;
        let mut j = p + 1;
        while j <= last && h[j] >= h0 {
            if h[j] == h0 {
                count += 1;
            }
            j += 1;
        }
        out.push(count - 1);
    }
    out
}

/// `(initial rise, r_1, ..., r_{n-1})` where `r_i` is the number of up-steps
/// directly after the `i`-th down-step.
pub fn rise_vector(d: &DyckPath) -> Vec<usize> {
    let n = d.semilength();
    if n == 0 {
        return Vec::new();
    }
    let s = d.steps();
    let run = |from: usize| s[from..].iter().take_while(|&&x| x).count();
    let mut out = vec![run(0)];
    out.extend(
        s.iter()
            .enumerate()
            .filter(|e| !*e.1)
            .take(n - 1)
            .map(|(i, _)| run(i + 1)),
    );
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StatBundle {
    pub size: usize,
    pub contacts: Vec<usize>,
    pub rises: Vec<usize>,
    pub distance: usize,
    #[serde(rename = "contactsP")]
    pub contacts_p: ExponentMultiset,
    #[serde(rename = "risesP")]
    pub rises_p: ExponentMultiset,
}

impl StatBundle {
    pub fn new(size: usize, contacts: Vec<usize>, rises: Vec<usize>, distance: usize) -> Self {
        let contacts_p = ExponentMultiset::from_values(&contacts);
        let rises_p = ExponentMultiset::from_values(&rises);
        StatBundle { size, contacts, rises, distance, contacts_p, rises_p }
    }

    /// Number of non-final contacts of the lower bound.
    pub fn contact_count(&self) -> usize {
        self.contacts.first().copied().unwrap_or(0)
    }

    /// Initial rise of the upper bound.
    pub fn rise_count(&self) -> usize {
        self.rises.first().copied().unwrap_or(0)
    }

    /// The term this bundle contributes to the generating function.
    pub fn term(&self) -> PhiTerm {
        PhiTerm {
            size: self.size,
            contacts: self.contact_count(),
            rises: self.rise_count(),
            distance: self.distance,
            contacts_p: self.contacts_p.clone(),
            rises_p: self.rises_p.clone(),
        }
    }
}

/// A monomial of the generating function: the leading statistics, the
/// distance and the two exponent multisets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PhiTerm {
    pub size: usize,
    pub contacts: usize,
    pub rises: usize,
    pub distance: usize,
    #[serde(rename = "contactsP")]
    pub contacts_p: ExponentMultiset,
    #[serde(rename = "risesP")]
    pub rises_p: ExponentMultiset,
}

impl PhiTerm {
    pub fn swapped(&self) -> PhiTerm {
        PhiTerm {
            size: self.size,
            contacts: self.rises,
            rises: self.contacts,
            distance: self.distance,
            contacts_p: self.rises_p.clone(),
            rises_p: self.contacts_p.clone(),
        }
    }
}

/// Contacts of the lower bound, rises of the upper bound, and distance.
pub fn interval_stats(p: &IntervalPoset) -> StatBundle {
    let (lo, hi) = dyck_bounds(p);
    StatBundle::new(p.size(), contact_vector(&lo), rise_vector(&hi), p.distance())
}
