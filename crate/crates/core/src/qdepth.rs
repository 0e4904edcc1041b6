//! Quasi depth of monomial quotients.
//!
//! For a squarefree pair the quasi depth is the largest `d` such that every
//! entry of the β-table at `d` is nonnegative. General pairs are polarized
//! jointly first and the number of added variables is subtracted.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::beta::{beta_table, BetaTable};
use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::polarize::polarize_pair;
use crate::poset::{
    alpha_by_inclusion_exclusion, alpha_quotient_pair, alpha_vector, build_poset, check_pair,
    enumeration_cap, AlphaVector, Module, SubsetPoset,
};

/// First negative entry of the β-table one step above the quasi depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blocker {
    pub k: usize,
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QDepthReport {
    /// The quasi depth, after subtracting `n_added`.
    pub value: usize,
    /// Ambient size the β-tables were computed in (after polarization).
    pub n_effective: usize,
    pub n_added: usize,
    /// β-table at the quasi depth of the squarefree quotient; all entries
    /// are nonnegative.
    pub witness: BetaTable,
    /// Absent when the squarefree quasi depth equals `n_effective`.
    pub blocker: Option<Blocker>,
}

impl QDepthReport {
    /// Quasi depth of the squarefree (polarized) quotient.
    pub fn squarefree_value(&self) -> usize {
        self.value + self.n_added
    }
}

impl Serialize for QDepthReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct BlockerOut {
            k: String,
            value: String,
        }
        let mut st = s.serialize_struct("QDepthReport", 5)?;
        st.serialize_field("value", &self.value.to_string())?;
        st.serialize_field("n_effective", &self.n_effective.to_string())?;
        st.serialize_field("n_added", &self.n_added.to_string())?;
        st.serialize_field("witness", &self.witness)?;
        st.serialize_field(
            "blocker",
            &self.blocker.as_ref().map(|b| BlockerOut { k: b.k.to_string(), value: b.value.to_string() }),
        )?;
        st.end()
    }
}

/// Quasi depth of any (nonempty) family with the given α-vector, reported
/// with `n_added` subtracted.
///
/// Scans every `d` in `0..=n` and keeps the largest feasible one rather
/// than stopping at the first failure.
pub fn qdepth_from_alpha(alpha: &AlphaVector, n_added: usize) -> Result<QDepthReport> {
    let (lo, hi) = match (alpha.min_support(), alpha.max_support()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::EmptyPoset),
    };
    let n = alpha.n();
    let mut best: Option<BetaTable> = None;
    for d in 0..=n {
        let t = beta_table(alpha, d);
        if t.is_nonnegative() {
            best = Some(t);
        }
    }
    let witness = best.expect("d = 0 is always feasible");
    let sq = witness.d();
    if sq < lo || sq > hi {
        return Err(Error::Contradiction(format!(
            "quasi depth {sq} outside [{lo}, {hi}] given by the α support"
        )));
    }
    let blocker = (sq < n).then(|| {
        let t = beta_table(alpha, sq + 1);
        let (k, v) = t.first_negative().expect("d above the quasi depth is infeasible");
        Blocker { k, value: v.clone() }
    });
    let value = sq.checked_sub(n_added).ok_or_else(|| {
        Error::Contradiction(format!("squarefree quasi depth {sq} below the {n_added} added variables"))
    })?;
    Ok(QDepthReport { value, n_effective: n, n_added, witness, blocker })
}

/// Quasi depth of an arbitrary subset family.
pub fn qdepth_poset(poset: &SubsetPoset) -> Result<QDepthReport> {
    qdepth_from_alpha(&alpha_vector(poset), 0)
}

/// α-vector of a squarefree pair: enumeration within the cap, otherwise
/// inclusion–exclusion.
pub fn alpha_of_pair(upper: &MonomialIdeal, lower: &MonomialIdeal) -> Result<AlphaVector> {
    check_pair(upper, lower)?;
    if upper.n() <= enumeration_cap() {
        Ok(alpha_vector(&build_poset(upper, lower)?))
    } else {
        alpha_quotient_pair(upper, lower)
    }
}

/// Quasi depth of `J/I` for squarefree `I ⊆ J`.
pub fn qdepth_squarefree(upper: &MonomialIdeal, lower: &MonomialIdeal) -> Result<QDepthReport> {
    qdepth_from_alpha(&alpha_of_pair(upper, lower)?, 0)
}

/// Quasi depth of `J/I` for arbitrary monomial ideals `I ⊊ J`.
pub fn qdepth(upper: &MonomialIdeal, lower: &MonomialIdeal) -> Result<QDepthReport> {
    if upper.n() != lower.n() {
        return Err(Error::AmbientMismatch { left: upper.n(), right: lower.n() });
    }
    if !lower.is_subset_of(upper) {
        return Err(Error::NotContained);
    }
    let pair = polarize_pair(upper, lower)?;
    let alpha = alpha_of_pair(&pair.upper, &pair.lower)?;
    let report = qdepth_from_alpha(&alpha, pair.added)?;

    let n = upper.n() as i64;
    let value = report.value as i64;
    if upper.is_unit() {
        let (bound, _) = qdepth_lower_bounds(lower);
        if value < bound {
            return Err(Error::Contradiction(format!("qdepth(S/I) = {value} < n - m = {bound}")));
        }
    }
    if lower.is_zero() {
        let (_, bound) = qdepth_lower_bounds(upper);
        if value < bound.min(n) {
            return Err(Error::Contradiction(format!("qdepth(I) = {value} below {bound}")));
        }
    }
    Ok(report)
}

/// `qdepth(S/I)` or `qdepth(I)`.
pub fn qdepth_module(ideal: &MonomialIdeal, module: Module) -> Result<QDepthReport> {
    let n = ideal.n();
    match module {
        Module::Quotient => qdepth(&MonomialIdeal::unit(n)?, ideal),
        Module::Ideal => qdepth(ideal, &MonomialIdeal::zero(n)?),
    }
}

/// `(n - m, max(1, n - ⌊m/2⌋))`, the lower bounds for `qdepth(S/I)` and
/// `qdepth(I)` in terms of the number `m` of minimal generators.
pub fn qdepth_lower_bounds(ideal: &MonomialIdeal) -> (i64, i64) {
    let n = ideal.n() as i64;
    let m = ideal.num_generators() as i64;
    (n - m, (n - m / 2).max(1))
}

/// Checks that adjoining one fresh variable raises the quasi depth by one.
pub fn check_extension_shift(upper: &MonomialIdeal, lower: &MonomialIdeal) -> Result<bool> {
    let before = qdepth(upper, lower)?.value;
    let n1 = upper.n() + 1;
    let after = qdepth(&upper.extend(n1)?, &lower.extend(n1)?)?.value;
    Ok(after == before + 1)
}

/// `qdepth(S/I) ≥ qdepth(S/(I,u)) ≥ qdepth(S/I) - 1` for a regular monomial
/// `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularSandwich {
    pub upper: i64,
    pub middle: i64,
    pub lower: i64,
}

impl RegularSandwich {
    pub fn holds(&self) -> bool {
        self.lower <= self.middle && self.middle <= self.upper
    }
}

/// A monomial `u` is regular on `S/I` exactly when it shares no variable
/// with any minimal generator of `I`.
pub fn is_regular(ideal: &MonomialIdeal, u: &Monomial) -> bool {
    !u.is_unit() && ideal.generators().iter().all(|g| !g.shares_variable_with(u))
}

/// Computes the sandwich for a regular monomial `u`; for a single variable
/// the lower bound is attained.
pub fn check_regular_sandwich(ideal: &MonomialIdeal, u: &Monomial) -> Result<RegularSandwich> {
    if u.n() != ideal.n() {
        return Err(Error::AmbientMismatch { left: ideal.n(), right: u.n() });
    }
    if !is_regular(ideal, u) {
        return Err(Error::NotRegular(u.to_string()));
    }
    let upper = qdepth_module(ideal, Module::Quotient)?.value as i64;
    let middle = qdepth_module(&ideal.with_generator(u)?, Module::Quotient)?.value as i64;
    let s = RegularSandwich { upper, middle, lower: upper - 1 };
    if !s.holds() {
        return Err(Error::Contradiction(format!(
            "sandwich {} >= {} >= {} fails for u = {u}",
            s.upper, s.middle, s.lower
        )));
    }
    if u.degree() == 1 && s.middle != s.lower {
        return Err(Error::Contradiction(format!(
            "variable {u}: qdepth(S/(I,u)) = {} but qdepth(S/I) - 1 = {}",
            s.middle, s.lower
        )));
    }
    Ok(s)
}

fn squarefree_quotient_alpha(ideal: &MonomialIdeal) -> Result<AlphaVector> {
    ideal.require_squarefree()?;
    if ideal.n() <= enumeration_cap() {
        alpha_of_pair(&MonomialIdeal::unit(ideal.n())?, ideal)
    } else {
        alpha_by_inclusion_exclusion(ideal, Module::Quotient)
    }
}

/// β-table of `S/(I'S, u)` at depth `d + s`, where `I' ⊂ K[x1..xm]` is
/// squarefree, `S = K[x1..x_{m+s}]` and `u = x_{m+1}...x_{m+s}`, assembled
/// only from the α- and β-data of `S'/I'`:
///
/// ```text
/// β_k^{d+s} = β_k^d(S'/I')                                    - β_{k-s}^d(S'/I')   (k ≤ d)
/// β_k^{d+s} = Σ_ℓ C(k-d-1, ℓ) α_{d+1+ℓ}(S'/I')                - β_{k-s}^d(S'/I')   (d < k ≤ d+s)
/// ```
///
/// with `β_j^d = 0` for `j < 0`. Here `s = deg u = n - m`.
pub fn lemma_kkk_table(base: &MonomialIdeal, s: usize, d: usize) -> Result<BetaTable> {
    if s == 0 {
        return Err(Error::invalid("u needs at least one new variable"));
    }
    let alpha_base = squarefree_quotient_alpha(base)?;
    let beta_base = beta_table(&alpha_base, d);
    let shifted = |k: usize| -> BigInt {
        k.checked_sub(s)
            .filter(|&j| j <= d)
            .map_or_else(BigInt::zero, |j| beta_base.get(j).clone())
    };
    let entries: Vec<BigInt> = (0..=d + s)
        .map(|k| {
            let head = if k <= d {
                beta_base.get(k).clone()
            } else {
                let r = (k - d - 1) as i64;
                (0..=r)
                    .map(|l| binomial(r, l) * alpha_base.get(d + 1 + l as usize))
                    .sum()
            };
            head - shifted(k)
        })
        .collect();

    // α of S/(I'S, u): α_k(S/I'S) - α_{k-s}(S'/I'), α_k(S/I'S) = Σ_i α'_i C(s, k-i)
    let n = base.n() + s;
    let counts: Vec<BigInt> = (0..=n)
        .map(|k| {
            let ext: BigInt = (0..=k.min(base.n()))
                .map(|i| alpha_base.get(i) * binomial(s as i64, (k - i) as i64))
                .sum();
            ext - k.checked_sub(s).map_or_else(BigInt::zero, |j| alpha_base.get(j))
        })
        .collect();
    Ok(BetaTable::from_parts(d + s, entries, AlphaVector::new(counts)?))
}

/// Diagnostic only: `α_{d+1}(S'/I') < β^d_{d+1-s}(S'/I')` with
/// `d = qdepth(S'/I')`, the sufficient condition for
/// `qdepth(S/(I,u)) = qdepth(S/I) - 1` as it is usually quoted. The index
/// bookkeeping of that condition is not consistent, so the flag is never
/// relied upon.
pub fn sandwich_collapse_hint(base: &MonomialIdeal, s: usize) -> Result<bool> {
    let alpha = squarefree_quotient_alpha(base)?;
    let d = qdepth_from_alpha(&alpha, 0)?.value;
    let rhs = (d + 1)
        .checked_sub(s)
        .map_or_else(BigInt::zero, |j| beta_table(&alpha, d).get(j).clone());
    Ok(alpha.get(d + 1) < rhs)
}

/// Whether every entry of the β-table at `d` is nonnegative.
pub fn feasible_at(alpha: &AlphaVector, d: usize) -> bool {
    !beta_table(alpha, d).entries().iter().any(Signed::is_negative)
}
