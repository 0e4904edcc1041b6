//! Exact Stanley depth of small posets by interval-partition search.
//!
//! Feasibility at level `d` asks for a partition of `P` into intervals
//! `[C, D]` with every `|D| ≥ d`. Any such interval with `|C| < d` splits as
//! `[C, D \ x] ∪ [C ∪ x, D]`, so it suffices to search partitions in which
//! every member of size `< d` lies in an interval with `|D| = d` exactly, and
//! every member of size `≥ d` is a singleton. In that normal form the number
//! of lower endpoints of size `k` is forced to be `β_k^d`, which prunes the
//! search hard.
//!
//! Runtime is exponential in the worst case; the ambient size is capped.

use std::collections::HashMap;

use num_traits::{Signed, ToPrimitive};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::beta::beta_table;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::polarize::polarize_pair;
use crate::poset::{alpha_vector, build_poset, mask_to_indices, Interval, SubsetPoset};

/// Default largest ambient size for the search.
pub const DEFAULT_SDEPTH_CAP: usize = 10;

/// A set of intervals meant to partition a poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPartition {
    n: usize,
    intervals: Vec<Interval>,
}

impl IntervalPartition {
    pub fn new(n: usize, intervals: Vec<Interval>) -> Self {
        IntervalPartition { n, intervals }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// `min |D_i|`, or `None` for the empty partition.
    pub fn sdepth(&self) -> Option<usize> {
        self.intervals.iter().map(|i| i.upper().count_ones() as usize).min()
    }

    /// Checks that the intervals are disjoint, lie inside `poset` (so their
    /// endpoints are members) and cover it.
    pub fn validate(&self, poset: &SubsetPoset) -> Result<()> {
        if self.n != poset.n() {
            return Err(Error::AmbientMismatch { left: poset.n(), right: self.n });
        }
        let mut seen: HashMap<u64, usize> = HashMap::new();
        for (idx, iv) in self.intervals.iter().enumerate() {
            for m in iv.members() {
                if !poset.contains(m) {
                    return Err(Error::invalid(format!(
                        "interval {idx} contains {:?}, which is not in the poset",
                        mask_to_indices(m)
                    )));
                }
                if let Some(prev) = seen.insert(m, idx) {
                    return Err(Error::invalid(format!(
                        "intervals {prev} and {idx} both contain {:?}",
                        mask_to_indices(m)
                    )));
                }
            }
        }
        if seen.len() != poset.len() {
            return Err(Error::invalid(format!(
                "partition covers {} of {} members",
                seen.len(),
                poset.len()
            )));
        }
        Ok(())
    }
}

impl Serialize for IntervalPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Iv<'a>(&'a Interval);
        impl Serialize for Iv<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut st = s.serialize_struct("Interval", 2)?;
                st.serialize_field("lower", &mask_to_indices(self.0.lower()))?;
                st.serialize_field("upper", &mask_to_indices(self.0.upper()))?;
                st.end()
            }
        }
        s.collect_seq(self.intervals.iter().map(Iv))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SdepthReport {
    pub value: usize,
    pub n_effective: usize,
    pub n_added: usize,
    /// Optimal partition of the squarefree poset.
    pub witness: IntervalPartition,
}

/// Stanley depth of `poset` with an optimal partition.
pub fn sdepth_poset(poset: &SubsetPoset, cap: Option<usize>) -> Result<(usize, IntervalPartition)> {
    let cap = cap.unwrap_or(DEFAULT_SDEPTH_CAP);
    if poset.n() > cap {
        return Err(Error::TooLarge { what: "sdepth ambient size", got: poset.n(), cap });
    }
    let lo = (0..=poset.n()).find(|&k| !poset.level(k).is_empty()).ok_or(Error::EmptyPoset)?;
    let hi = (0..=poset.n()).rev().find(|&k| !poset.level(k).is_empty()).expect("nonempty");
    for d in (lo..=hi).rev() {
        if let Some(p) = partition_at(poset, d) {
            return Ok((d, p));
        }
    }
    unreachable!("singletons always give a partition at the least cardinality")
}

/// Stanley depth of `J/I` for monomial ideals `I ⊊ J`.
pub fn sdepth(upper: &MonomialIdeal, lower: &MonomialIdeal, cap: Option<usize>) -> Result<SdepthReport> {
    if upper.n() != lower.n() {
        return Err(Error::AmbientMismatch { left: upper.n(), right: lower.n() });
    }
    if !lower.is_subset_of(upper) {
        return Err(Error::NotContained);
    }
    let pair = polarize_pair(upper, lower)?;
    let cap_n = cap.unwrap_or(DEFAULT_SDEPTH_CAP);
    if pair.upper.n() > cap_n {
        return Err(Error::TooLarge { what: "sdepth ambient size", got: pair.upper.n(), cap: cap_n });
    }
    let poset = build_poset(&pair.upper, &pair.lower)?;
    let (sq, witness) = sdepth_poset(&poset, cap)?;
    let value = sq.checked_sub(pair.added).ok_or_else(|| {
        Error::Contradiction(format!("squarefree sdepth {sq} below the {} added variables", pair.added))
    })?;
    Ok(SdepthReport { value, n_effective: poset.n(), n_added: pair.added, witness })
}

/// A partition with every `|D| ≥ d`, if one exists.
pub fn partition_at(poset: &SubsetPoset, d: usize) -> Option<IntervalPartition> {
    let beta = beta_table(&alpha_vector(poset), d);
    if beta.entries().iter().any(Signed::is_negative) {
        return None;
    }
    let targets: Vec<usize> = beta.entries().iter().map(|b| b.to_usize().unwrap_or(usize::MAX)).collect();
    let members: Vec<u64> = poset.members().collect();
    let index: HashMap<u64, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut search = Search {
        d,
        members: &members,
        index: &index,
        uppers: poset.level(d),
        targets: &targets,
        covered: vec![false; members.len()],
        counts: vec![0; d + 1],
        chosen: Vec::new(),
    };
    if !search.run(0) {
        return None;
    }
    let mut intervals = search.chosen;
    let covered = search.covered;
    intervals.extend(
        members
            .iter()
            .zip(&covered)
            .filter(|(_, &c)| !c)
            .map(|(&m, _)| Interval::new(m, m).expect("singleton")),
    );
    Some(IntervalPartition::new(poset.n(), intervals))
}

struct Search<'a> {
    d: usize,
    members: &'a [u64],
    index: &'a HashMap<u64, usize>,
    uppers: &'a [u64],
    targets: &'a [usize],
    covered: Vec<bool>,
    counts: Vec<usize>,
    chosen: Vec<Interval>,
}

impl Search<'_> {
    fn run(&mut self, from: usize) -> bool {
        let Some(i) = (from..self.members.len()).find(|&i| !self.covered[i]) else {
            return true;
        };
        let c = self.members[i];
        let k = c.count_ones() as usize;
        // every level below k is finished, so its count must be exact
        if (0..k.min(self.d)).any(|j| self.counts[j] != self.targets[j]) {
            return false;
        }
        if k >= self.d {
            // the rest become singletons
            return true;
        }
        if self.counts[k] >= self.targets[k] {
            return false;
        }
        for &up in self.uppers {
            if up & c != c {
                continue;
            }
            let iv = Interval::new(c, up).expect("c ⊆ up");
            let Some(idxs) = self.free_members(&iv) else {
                continue;
            };
            for &j in &idxs {
                self.covered[j] = true;
            }
            self.counts[k] += 1;
            self.chosen.push(iv);
            if self.run(i + 1) {
                return true;
            }
            self.chosen.pop();
            self.counts[k] -= 1;
            for &j in &idxs {
                self.covered[j] = false;
            }
        }
        false
    }

    /// Indices of the members of `iv` if all are in the poset and uncovered.
    fn free_members(&self, iv: &Interval) -> Option<Vec<usize>> {
        iv.members()
            .map(|m| self.index.get(&m).copied().filter(|&j| !self.covered[j]))
            .collect()
    }
}
