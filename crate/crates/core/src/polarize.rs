//! Polarization: turning monomial ideals into squarefree ones in more
//! variables.
//!
//! With `g` the exponent-wise lcm of the generators, each power `x_i^a`
//! (`a <= g_i`) becomes `x_i * x_{i,2} * ... * x_{i,a}`. The original
//! variables keep indices `1..=n`; the replica `x_{i,j}` (`2 <= j <= g_i`)
//! is appended after them in lexicographic `(i, j)` order.

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};

/// Where the replica variables of a polarization live.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplicaMap {
    n: usize,
    bounds: Vec<u32>,
    offsets: Vec<usize>,
}

impl ReplicaMap {
    fn new(bounds: Vec<u32>) -> Self {
        let n = bounds.len();
        let mut offsets = Vec::with_capacity(n);
        let mut next = n;
        for &g in &bounds {
            offsets.push(next);
            next += g.saturating_sub(1) as usize;
        }
        ReplicaMap { n, bounds, offsets }
    }

    /// Number of added variables `N = Σ max(0, g_i - 1)`.
    pub fn added(&self) -> usize {
        self.bounds.iter().map(|&g| g.saturating_sub(1) as usize).sum()
    }

    pub fn original_n(&self) -> usize {
        self.n
    }

    /// 0-based index of the replica `x_{i,j}` for the 0-based variable `i`
    /// and copy number `j >= 2`.
    pub fn replica(&self, i: usize, j: u32) -> Option<usize> {
        let g = *self.bounds.get(i)?;
        (2..=g).contains(&j).then(|| self.offsets[i] + (j as usize - 2))
    }

    /// `(original variable, copy number, new variable)`, all 1-based, in
    /// index order.
    pub fn entries(&self) -> Vec<(usize, u32, usize)> {
        (0..self.n)
            .flat_map(|i| (2..=self.bounds[i]).map(move |j| (i, j)))
            .map(|(i, j)| (i + 1, j, self.replica(i, j).expect("in range") + 1))
            .collect()
    }

    fn polarize_monomial(&self, u: &Monomial) -> Monomial {
        let mut e = vec![0u32; self.n + self.added()];
        for (i, &a) in u.exponents().iter().enumerate() {
            if a >= 1 {
                e[i] = 1;
            }
            for j in 2..=a {
                e[self.replica(i, j).expect("exponent bounded by g")] = 1;
            }
        }
        Monomial::new(e)
    }

    fn polarize_ideal(&self, ideal: &MonomialIdeal) -> MonomialIdeal {
        let n_new = self.n + self.added();
        MonomialIdeal::new(n_new, ideal.generators().iter().map(|u| self.polarize_monomial(u)))
            .expect("polarized ring has at least the original variables")
    }
}

/// `I^p` together with its replica bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizationResult {
    pub polarized: MonomialIdeal,
    pub added: usize,
    pub var_map: ReplicaMap,
}

/// Polarizes a single ideal against its own lcm.
pub fn polarize(ideal: &MonomialIdeal) -> PolarizationResult {
    let var_map = ReplicaMap::new(ideal.lcm_all().exponents().to_vec());
    PolarizationResult {
        polarized: var_map.polarize_ideal(ideal),
        added: var_map.added(),
        var_map,
    }
}

/// Jointly polarized pair `I^p ⊆ J^p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizedPair {
    pub upper: MonomialIdeal,
    pub lower: MonomialIdeal,
    pub added: usize,
    pub var_map: ReplicaMap,
}

/// Polarizes `lower ⊆ upper` against the joint lcm of both generating sets,
/// so inclusion survives.
pub fn polarize_pair(upper: &MonomialIdeal, lower: &MonomialIdeal) -> Result<PolarizedPair> {
    if upper.n() != lower.n() {
        return Err(Error::AmbientMismatch { left: upper.n(), right: lower.n() });
    }
    let g = upper.lcm_all().lcm(&lower.lcm_all());
    let var_map = ReplicaMap::new(g.exponents().to_vec());
    Ok(PolarizedPair {
        upper: var_map.polarize_ideal(upper),
        lower: var_map.polarize_ideal(lower),
        added: var_map.added(),
        var_map,
    })
}
