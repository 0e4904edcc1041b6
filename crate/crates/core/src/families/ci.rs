//! Squarefree monomial complete intersections: `m` generators of degrees
//! `d_1, ..., d_m` on pairwise disjoint supports inside `[n]`.

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::beta::beta_table;
use crate::error::{Error, Result};
use crate::poset::{alpha_ci, AlphaVector, Module};
use crate::qdepth::qdepth_from_alpha;

/// Which depth a symmetry check was run at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DReading {
    /// `d = n - m + 1`
    NMinusMPlusOne,
    /// `d = n + m - 1`
    NPlusMMinusOne,
    Override,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryCheck {
    pub d: usize,
    pub reading: DReading,
    /// `(k, β_k^d + β_{d-k}^d)` for every `k ≤ d/2` where the sum is nonzero.
    pub violations: Vec<(usize, BigInt)>,
}

impl SymmetryCheck {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Serialize for SymmetryCheck {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct V {
            k: usize,
            sum: String,
        }
        let mut st = s.serialize_struct("SymmetryCheck", 4)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("reading", &self.reading)?;
        st.serialize_field("holds", &self.holds())?;
        let v: Vec<V> = self.violations.iter().map(|(k, x)| V { k: *k, sum: x.to_string() }).collect();
        st.serialize_field("violations", &v)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CISymmetryReport {
    pub n: usize,
    pub degs: Vec<usize>,
    pub checks: Vec<SymmetryCheck>,
    /// `β_{n-m+1}^{n-m+1}(S/I)`.
    pub endpoint_check: BigInt,
}

impl CISymmetryReport {
    pub fn m(&self) -> usize {
        self.degs.len()
    }

    /// Whether the generators involve every variable.
    pub fn full_support(&self) -> bool {
        self.degs.iter().sum::<usize>() == self.n
    }

    pub fn check_at(&self, reading: DReading) -> Option<&SymmetryCheck> {
        self.checks.iter().find(|c| c.reading == reading)
    }
}

impl Serialize for CISymmetryReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CISymmetryReport", 5)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("degs", &self.degs)?;
        st.serialize_field("checks", &self.checks)?;
        st.serialize_field("endpoint_check", &self.endpoint_check.to_string())?;
        st.serialize_field("full_support", &self.full_support())?;
        st.end()
    }
}

/// Expected `β_{n-m+1}^{n-m+1}(S/I)`: `-1` when the supports cover `[n]`.
/// With free variables the top entry is `0`, since `S/I` is then a
/// polynomial extension of a complete intersection with full support.
pub fn expected_endpoint(n: usize, degs: &[usize]) -> i64 {
    if degs.iter().sum::<usize>() == n {
        -1
    } else {
        0
    }
}

fn symmetry_at(alpha: &AlphaVector, d: usize, reading: DReading) -> SymmetryCheck {
    let t = beta_table(alpha, d);
    let violations = (0..=d / 2)
        .filter_map(|k| {
            let s = t.get(k) + t.get(d - k);
            (s != BigInt::from(0)).then_some((k, s))
        })
        .collect();
    SymmetryCheck { d, reading, violations }
}

/// Tests `β_k^d + β_{d-k}^d = 0` on `S/I` at `d_override`, or at both
/// `d = n - m + 1` and `d = n + m - 1`. α above `n` counts as zero.
///
/// Also checks the top entry of the table at `d = n - m + 1` against
/// [`expected_endpoint`].
pub fn ci_symmetry(n: usize, degs: &[usize], d_override: Option<usize>) -> Result<CISymmetryReport> {
    let alpha = alpha_ci(n, degs, Module::Quotient)?;
    let m = degs.len();
    let checks = match d_override {
        Some(d) => vec![symmetry_at(&alpha, d, DReading::Override)],
        None => {
            let low = n - m + 1;
            let high = n + m - 1;
            let mut v = vec![symmetry_at(&alpha, low, DReading::NMinusMPlusOne)];
            if high != low {
                v.push(symmetry_at(&alpha, high, DReading::NPlusMMinusOne));
            } else {
                v.push(SymmetryCheck { reading: DReading::NPlusMMinusOne, ..v[0].clone() });
            }
            v
        }
    };
    let d0 = n - m + 1;
    let endpoint_check = beta_table(&alpha, d0).get(d0).clone();
    let expected = expected_endpoint(n, degs);
    if endpoint_check != BigInt::from(expected) {
        return Err(Error::Contradiction(format!(
            "top β at d = {d0} is {endpoint_check}, expected {expected} for degrees {degs:?} in {n} variables"
        )));
    }
    Ok(CISymmetryReport { n, degs: degs.to_vec(), checks, endpoint_check })
}

/// `qdepth(S/I)` from the product-form α.
pub fn ci_qdepth(n: usize, degs: &[usize]) -> Result<usize> {
    Ok(qdepth_from_alpha(&alpha_ci(n, degs, Module::Quotient)?, 0)?.value)
}

/// `qdepth(I)` from the product-form α.
pub fn ci_ideal_qdepth(n: usize, degs: &[usize]) -> Result<usize> {
    Ok(qdepth_from_alpha(&alpha_ci(n, degs, Module::Ideal)?, 0)?.value)
}

/// Whether `qdepth(S/I) = n - m`.
pub fn ci_qdepth_check(n: usize, degs: &[usize]) -> Result<bool> {
    Ok(ci_qdepth(n, degs)? == n - degs.len())
}
