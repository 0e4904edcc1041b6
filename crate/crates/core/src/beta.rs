//! The β-table of an α-vector at a target depth `d`.
//!
//! `β_0^d = α_0` and `β_k^d = α_k - Σ_{j<k} C(d-j, k-j) β_j^d`. The same
//! numbers have the closed form `β_k^d = Σ_j (-1)^{k-j} C(d-j, k-j) α_j`,
//! and `α_k = Σ_j C(d-j, k-j) β_j^d` inverts the recursion. Entries of α
//! beyond `n` count as zero, so `d` may exceed `n`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::binomial::binomial;
use crate::poset::AlphaVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaTable {
    d: usize,
    entries: Vec<BigInt>,
    source_alpha: AlphaVector,
}

impl BetaTable {
    pub(crate) fn from_parts(d: usize, entries: Vec<BigInt>, source_alpha: AlphaVector) -> Self {
        debug_assert_eq!(entries.len(), d + 1);
        BetaTable { d, entries, source_alpha }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `β_0^d, ..., β_d^d`.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, k: usize) -> &BigInt {
        &self.entries[k]
    }

    pub fn source_alpha(&self) -> &AlphaVector {
        &self.source_alpha
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.entries.iter().any(Signed::is_negative)
    }

    /// Least `k` with `β_k^d < 0`, with that entry.
    pub fn first_negative(&self) -> Option<(usize, &BigInt)> {
        self.entries.iter().enumerate().find(|(_, b)| b.is_negative())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(ToString::to_string).collect()
    }
}

impl Serialize for BetaTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// β-table by the defining recursion.
pub fn beta_table(alpha: &AlphaVector, d: usize) -> BetaTable {
    let di = d as i64;
    let mut entries: Vec<BigInt> = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut b = alpha.get(k);
        for (j, bj) in entries.iter().enumerate() {
            if !bj.is_zero() {
                b -= bj * binomial(di - j as i64, (k - j) as i64);
            }
        }
        entries.push(b);
    }
    BetaTable { d, entries, source_alpha: alpha.clone() }
}

/// `β_k^d` by the alternating closed form.
pub fn beta_closed(alpha: &AlphaVector, d: usize, k: usize) -> BigInt {
    let (di, ki) = (d as i64, k as i64);
    (0..=k)
        .map(|j| {
            let term = binomial(di - j as i64, ki - j as i64) * alpha.get(j);
            if (k - j).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Reconstructs `α_0, ..., α_d` from a β-table. Entries are returned as
/// plain integers because an arbitrary table may not come from a poset.
pub fn alpha_from_beta(beta: &BetaTable) -> Vec<BigInt> {
    let d = beta.d as i64;
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|j| binomial(d - j, k - j) * &beta.entries[j as usize])
                .sum()
        })
        .collect()
}
