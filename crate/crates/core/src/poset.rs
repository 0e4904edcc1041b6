//! Characteristic posets of squarefree quotients and their α-vectors.
//!
//! A subset `C ⊆ [n]` is a bitmask (bit `i` is variable `x_{i+1}`), so the
//! ambient size is capped at 62. `P_{J/I}` is built by scanning all `2^n`
//! masks, which is further capped by [`enumeration_cap`]. α-vectors can also
//! be obtained without enumeration by inclusion–exclusion over generator
//! lcms.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// Largest ambient size representable as a bitmask poset.
pub const MAX_MASK_BITS: usize = 62;

/// Default largest `n` for which `2^n` enumeration is attempted.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// Largest generator count for subset-based inclusion–exclusion.
pub const MAX_IE_GENERATORS: usize = 24;

/// Enumeration cap, overridable through the `QDEPTH_MAX_N` environment
/// variable (clamped to [`MAX_MASK_BITS`]).
pub fn enumeration_cap() -> usize {
    std::env::var("QDEPTH_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_ENUMERATION_CAP, |v| v.min(MAX_MASK_BITS))
}

/// Whether we compute α of an ideal `I` (i.e. `I/0`) or of `S/I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Module {
    Ideal,
    Quotient,
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Module::Ideal => "ideal",
            Module::Quotient => "quotient",
        })
    }
}

#[inline]
fn card(mask: u64) -> usize {
    mask.count_ones() as usize
}

/// A family of distinct subsets of `[n]`, grouped by cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetPoset {
    n: usize,
    levels: Vec<Vec<u64>>,
}

impl SubsetPoset {
    pub fn from_members(n: usize, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n > MAX_MASK_BITS {
            return Err(Error::TooLarge { what: "ambient size", got: n, cap: MAX_MASK_BITS });
        }
        let mut levels = vec![Vec::new(); n + 1];
        for m in members {
            if n < 64 && m >> n != 0 {
                return Err(Error::invalid(format!("subset {m:#b} is not inside [{n}]")));
            }
            levels[card(m)].push(m);
        }
        for level in &mut levels {
            level.sort_unstable();
            level.dedup();
        }
        Ok(SubsetPoset { n, levels })
    }

    /// The full Boolean lattice `2^[n]`.
    pub fn full(n: usize) -> Result<Self> {
        check_enumerable(n)?;
        SubsetPoset::from_members(n, 0..1u64 << n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.iter().all(Vec::is_empty)
    }

    /// Members of cardinality `k`, in increasing mask order.
    pub fn level(&self, k: usize) -> &[u64] {
        self.levels.get(k).map_or(&[], Vec::as_slice)
    }

    /// All members, smallest cardinality first, then by mask.
    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        self.levels.iter().flatten().copied()
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.levels
            .get(card(mask))
            .is_some_and(|l| l.binary_search(&mask).is_ok())
    }

    /// Union of two posets that must not share a member.
    pub fn disjoint_union(&self, other: &SubsetPoset) -> Result<SubsetPoset> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch { left: self.n, right: other.n });
        }
        if let Some(shared) = other.members().find(|&m| self.contains(m)) {
            return Err(Error::invalid(format!("posets share the member {shared:#b}")));
        }
        SubsetPoset::from_members(self.n, self.members().chain(other.members()))
    }

    /// Whether every member of `interval` is in the poset.
    pub fn contains_interval(&self, interval: &Interval) -> bool {
        interval.members().all(|m| self.contains(m))
    }
}

/// `[C, D] = { A : C ⊆ A ⊆ D }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lower: u64,
    upper: u64,
}

impl Interval {
    pub fn new(lower: u64, upper: u64) -> Result<Self> {
        if lower & !upper != 0 {
            return Err(Error::invalid(format!("{lower:#b} is not a subset of {upper:#b}")));
        }
        Ok(Interval { lower, upper })
    }

    pub fn lower(&self) -> u64 {
        self.lower
    }

    pub fn upper(&self) -> u64 {
        self.upper
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.lower & !mask == 0 && mask & !self.upper == 0
    }

    /// Number of members, `2^{|D \ C|}`.
    pub fn len(&self) -> u64 {
        1u64 << card(self.upper & !self.lower)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Every member, enumerated as `C ∪ T` over subsets `T` of `D \ C`.
    pub fn members(&self) -> impl Iterator<Item = u64> {
        let free = self.upper & !self.lower;
        let lower = self.lower;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let t = next?;
            next = if t == free { None } else { Some((t.wrapping_sub(free)) & free) };
            Some(lower | t)
        })
    }
}

/// Sorted 1-based variable indices of a mask.
pub fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Exact counts `α_0, ..., α_n` of poset members by cardinality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphaVector {
    counts: Vec<BigInt>,
}

impl AlphaVector {
    /// Checked constructor: `0 <= α_k <= C(n, k)` with `n = counts.len() - 1`.
    pub fn new(counts: Vec<BigInt>) -> Result<Self> {
        let a = AlphaVector::formal(counts)?;
        let n = a.n() as i64;
        for (k, c) in a.counts.iter().enumerate() {
            if *c > binomial(n, k as i64) {
                return Err(Error::invalid(format!("α_{k} = {c} exceeds C({n},{k})")));
            }
        }
        Ok(a)
    }

    /// Any nonnegative sequence, without the binomial ceiling. Used for
    /// formal β computations on arbitrary inputs.
    pub fn formal(counts: Vec<BigInt>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::invalid("α-vector needs at least α_0"));
        }
        if let Some(k) = counts.iter().position(Signed::is_negative) {
            return Err(Error::invalid(format!("α_{k} is negative")));
        }
        Ok(AlphaVector { counts })
    }

    pub fn from_u64(counts: &[u64]) -> Result<Self> {
        AlphaVector::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        AlphaVector { counts: vec![BigInt::zero(); n + 1] }
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// `α_k`, zero for `k > n`.
    pub fn get(&self, k: usize) -> BigInt {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(Zero::is_zero)
    }

    /// Smallest `k` with `α_k > 0`.
    pub fn min_support(&self) -> Option<usize> {
        self.counts.iter().position(|c| !c.is_zero())
    }

    /// Largest `k` with `α_k > 0`.
    pub fn max_support(&self) -> Option<usize> {
        self.counts.iter().rposition(|c| !c.is_zero())
    }

    /// Entrywise sum; the α-vector of a disjoint union.
    pub fn add(&self, other: &AlphaVector) -> Result<AlphaVector> {
        if self.n() != other.n() {
            return Err(Error::AmbientMismatch { left: self.n(), right: other.n() });
        }
        Ok(AlphaVector {
            counts: self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect(),
        })
    }

    /// Entrywise difference; errors if an entry would go negative.
    pub fn sub(&self, other: &AlphaVector) -> Result<AlphaVector> {
        if self.n() != other.n() {
            return Err(Error::AmbientMismatch { left: self.n(), right: other.n() });
        }
        let counts: Vec<BigInt> =
            self.counts.iter().zip(&other.counts).map(|(a, b)| a - b).collect();
        if counts.iter().any(Signed::is_negative) {
            return Err(Error::NotContained);
        }
        Ok(AlphaVector { counts })
    }

    /// Full lattice counts `C(n, k)`.
    pub fn full(n: usize) -> AlphaVector {
        AlphaVector { counts: (0..=n).map(|k| binomial(n as i64, k as i64)).collect() }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.counts.iter().map(ToString::to_string).collect()
    }
}

impl Serialize for AlphaVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl fmt::Display for AlphaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

fn check_enumerable(n: usize) -> Result<()> {
    if n > MAX_MASK_BITS {
        return Err(Error::TooLarge { what: "ambient size", got: n, cap: MAX_MASK_BITS });
    }
    let cap = enumeration_cap();
    if n > cap {
        return Err(Error::TooLarge { what: "ambient size for enumeration", got: n, cap });
    }
    Ok(())
}

fn generator_masks(ideal: &MonomialIdeal) -> Vec<u64> {
    ideal.generators().iter().map(|g| g.support_mask()).collect()
}

fn in_ideal(gens: &[u64], c: u64) -> bool {
    gens.iter().any(|&g| g & !c == 0)
}

/// `P_{J/I} = { C ⊆ [n] : x_C ∈ J \ I }` for squarefree `I ⊆ J`.
pub fn build_poset(upper: &MonomialIdeal, lower: &MonomialIdeal) -> Result<SubsetPoset> {
    check_pair(upper, lower)?;
    let n = upper.n();
    check_enumerable(n)?;
    let (jg, ig) = (generator_masks(upper), generator_masks(lower));
    SubsetPoset::from_members(n, (0..1u64 << n).filter(|&c| in_ideal(&jg, c) && !in_ideal(&ig, c)))
}

pub(crate) fn check_pair(upper: &MonomialIdeal, lower: &MonomialIdeal) -> Result<()> {
    if upper.n() != lower.n() {
        return Err(Error::AmbientMismatch { left: upper.n(), right: lower.n() });
    }
    if upper.n() > MAX_MASK_BITS {
        return Err(Error::TooLarge { what: "ambient size", got: upper.n(), cap: MAX_MASK_BITS });
    }
    upper.require_squarefree()?;
    lower.require_squarefree()?;
    if !lower.is_subset_of(upper) {
        return Err(Error::NotContained);
    }
    Ok(())
}

/// Counts members by cardinality.
pub fn alpha_vector(poset: &SubsetPoset) -> AlphaVector {
    AlphaVector {
        counts: (0..=poset.n()).map(|k| BigInt::from(poset.level(k).len())).collect(),
    }
}

/// `Σ_d c_d C(n-d, k-d)` for each `k`, from a table of signed multiplicities
/// `c_d` indexed by degree.
fn expand_by_degree(n: usize, tally: &[BigInt]) -> Vec<BigInt> {
    (0..=n as i64)
        .map(|k| {
            tally
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(d, c)| c * binomial(n as i64 - d as i64, k - d as i64))
                .sum()
        })
        .collect()
}

/// α-vector of `I` or `S/I` by inclusion–exclusion over the lcms `u_J` of
/// subsets of generators, without enumerating `2^n` subsets.
pub fn alpha_by_inclusion_exclusion(ideal: &MonomialIdeal, module: Module) -> Result<AlphaVector> {
    ideal.require_squarefree()?;
    let n = ideal.n();
    if n > MAX_MASK_BITS {
        return Err(Error::TooLarge { what: "ambient size", got: n, cap: MAX_MASK_BITS });
    }
    let gens = generator_masks(ideal);
    if gens.len() > MAX_IE_GENERATORS {
        return Err(Error::TooLarge {
            what: "generator count for inclusion-exclusion",
            got: gens.len(),
            cap: MAX_IE_GENERATORS,
        });
    }
    // tally[d] = Σ over nonempty J with d_J = d of (-1)^{|J|-1}
    let mut tally = vec![0i64; n + 1];
    fn walk(gens: &[u64], from: usize, lcm: u64, size: usize, tally: &mut [i64]) {
        for j in from..gens.len() {
            let l = lcm | gens[j];
            tally[card(l)] += if size.is_multiple_of(2) { 1 } else { -1 };
            walk(gens, j + 1, l, size + 1, tally);
        }
    }
    walk(&gens, 0, 0, 0, &mut tally);
    let tally: Vec<BigInt> = tally.into_iter().map(BigInt::from).collect();
    let ideal_counts = expand_by_degree(n, &tally);
    let counts = match module {
        Module::Ideal => ideal_counts,
        Module::Quotient => (0..=n)
            .map(|k| binomial(n as i64, k as i64) - &ideal_counts[k])
            .collect(),
    };
    AlphaVector::new(counts)
}

/// `α(J/I) = α(S/I) - α(S/J)`, both sides by inclusion–exclusion.
pub fn alpha_quotient_pair(upper: &MonomialIdeal, lower: &MonomialIdeal) -> Result<AlphaVector> {
    if upper.n() != lower.n() {
        return Err(Error::AmbientMismatch { left: upper.n(), right: lower.n() });
    }
    let s_lower = alpha_by_inclusion_exclusion(lower, Module::Quotient)?;
    let s_upper = alpha_by_inclusion_exclusion(upper, Module::Quotient)?;
    s_lower.sub(&s_upper)
}

/// α-vector of a squarefree complete intersection with generator degrees
/// `degs` in `n` variables. Since supports are disjoint, `d_J = Σ_{j∈J} d_j`
/// and the signed tally is the coefficient list of `Π_j (1 - z^{d_j})`.
pub fn alpha_ci(n: usize, degs: &[usize], module: Module) -> Result<AlphaVector> {
    validate_ci(n, degs)?;
    let mut poly = vec![BigInt::zero(); n + 1];
    poly[0] = BigInt::from(1);
    for &d in degs {
        for i in (d..=n).rev() {
            let shifted = poly[i - d].clone();
            poly[i] -= shifted;
        }
    }
    let quotient = expand_by_degree(n, &poly);
    let counts = match module {
        Module::Quotient => quotient,
        Module::Ideal => (0..=n)
            .map(|k| binomial(n as i64, k as i64) - &quotient[k])
            .collect(),
    };
    AlphaVector::new(counts)
}

pub(crate) fn validate_ci(n: usize, degs: &[usize]) -> Result<()> {
    if n == 0 {
        return Err(Error::NoVariables);
    }
    if degs.is_empty() {
        return Err(Error::invalid("a complete intersection needs at least one generator"));
    }
    if degs.contains(&0) {
        return Err(Error::invalid("generator degrees must be at least 1"));
    }
    let total: usize = degs.iter().sum();
    if total > n {
        return Err(Error::invalid(format!("degrees sum to {total}, more than n = {n}")));
    }
    Ok(())
}

/// The squarefree complete intersection with consecutive disjoint supports
/// of the given sizes: `(x1...x_{d1}, x_{d1+1}...x_{d1+d2}, ...)`.
pub fn ci_ideal(n: usize, degs: &[usize]) -> Result<MonomialIdeal> {
    validate_ci(n, degs)?;
    let mut next = 0;
    let supports: Vec<Vec<usize>> = degs
        .iter()
        .map(|&d| {
            let s: Vec<usize> = (next..next + d).collect();
            next += d;
            s
        })
        .collect();
    let refs: Vec<&[usize]> = supports.iter().map(Vec::as_slice).collect();
    MonomialIdeal::from_supports(n, &refs)
}
