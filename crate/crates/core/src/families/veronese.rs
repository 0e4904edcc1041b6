//! Squarefree Veronese ideals `J_{n,m}`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::poset::{AlphaVector, Module};
use crate::qdepth::qdepth_from_alpha;

/// Largest generator count [`veronese_ideal`] will materialize.
pub const MAX_VERONESE_GENERATORS: usize = 1 << 20;

/// `(n, m)` with the derived `q = ⌊(n - m)/(m + 1)⌋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VeroneseSpec {
    n: usize,
    m: usize,
    q: usize,
}

impl VeroneseSpec {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::invalid(format!("Veronese degree m = {m} must satisfy 1 <= m <= n = {n}")));
        }
        Ok(VeroneseSpec { n, m, q: (n - m) / (m + 1) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `n ≤ max{m² + 4m + 1, 7m + 5}`, i.e. `q ≤ max{m + 1, 5}`.
    pub fn in_proved_region(&self) -> bool {
        let m = self.m;
        self.n <= (m * m + 4 * m + 1).max(7 * m + 5)
    }
}

/// `J_{n,m}`, generated by every squarefree monomial of degree `m`.
pub fn veronese_ideal(n: usize, m: usize) -> Result<MonomialIdeal> {
    VeroneseSpec::new(n, m)?;
    let count = binomial(n as i64, m as i64);
    if count > BigInt::from(MAX_VERONESE_GENERATORS) {
        return Err(Error::TooLarge {
            what: "Veronese generator count",
            got: count.to_usize().unwrap_or(usize::MAX),
            cap: MAX_VERONESE_GENERATORS,
        });
    }
    let mut gens = Vec::new();
    let mut pick: Vec<usize> = (0..m).collect();
    loop {
        gens.push(Monomial::from_support(n, &pick));
        // next m-combination of 0..n in lexicographic order
        let Some(i) = (0..m).rev().find(|&i| pick[i] < n - m + i) else {
            break;
        };
        pick[i] += 1;
        for j in i + 1..m {
            pick[j] = pick[j - 1] + 1;
        }
    }
    MonomialIdeal::new(n, gens)
}

/// Closed-form α of `S/J_{n,m}` (`C(n,k)` below `m`) or of `J_{n,m}`
/// (`C(n,k)` from `m` on).
pub fn alpha_veronese(n: usize, m: usize, module: Module) -> Result<AlphaVector> {
    VeroneseSpec::new(n, m)?;
    let counts = (0..=n)
        .map(|k| {
            let keep = match module {
                Module::Quotient => k < m,
                Module::Ideal => k >= m,
            };
            if keep {
                binomial(n as i64, k as i64)
            } else {
                BigInt::zero()
            }
        })
        .collect();
    AlphaVector::new(counts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VeroneseQDepth {
    pub n: usize,
    pub m: usize,
    pub q: usize,
    pub value: usize,
    /// `m + q`.
    pub upper_bound: usize,
    pub in_proved_region: bool,
    pub method: &'static str,
}

/// `qdepth(J_{n,m})` from the closed-form α. Checks `value ≤ m + q`, and
/// equality inside the proved region.
pub fn qdepth_veronese(n: usize, m: usize) -> Result<VeroneseQDepth> {
    let spec = VeroneseSpec::new(n, m)?;
    let value = qdepth_from_alpha(&alpha_veronese(n, m, Module::Ideal)?, 0)?.value;
    let upper_bound = m + spec.q;
    let in_region = spec.in_proved_region();
    if value > upper_bound || (in_region && value != upper_bound) {
        return Err(Error::Contradiction(format!(
            "qdepth(J_{{{n},{m}}}) = {value}, expected {} m + q = {upper_bound}",
            if in_region { "exactly" } else { "at most" }
        )));
    }
    Ok(VeroneseQDepth {
        n,
        m,
        q: spec.q,
        value,
        upper_bound,
        in_proved_region: in_region,
        method: "closed-form-alpha",
    })
}

/// `qdepth(S/J_{n,m})`, which is `m - 1`.
pub fn qdepth_veronese_quotient(n: usize, m: usize) -> Result<usize> {
    let value = qdepth_from_alpha(&alpha_veronese(n, m, Module::Quotient)?, 0)?.value;
    if value != m - 1 {
        return Err(Error::Contradiction(format!("qdepth(S/J_{{{n},{m}}}) = {value}, expected {}", m - 1)));
    }
    Ok(value)
}
