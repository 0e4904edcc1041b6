//! Monomials and monomial ideals over a fixed number of variables.
//!
//! Ideals are always stored by their minimal generating set, sorted by degree
//! and then by exponent vector (descending), so two ideals are equal exactly
//! when their generator lists are equal.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x1^a1 * ... * xn^an`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    /// The monomial `1` in `n` variables.
    pub fn unit(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    /// The variable `x_{index+1}` (0-based index).
    pub fn var(n: usize, index: usize) -> Self {
        let mut e = vec![0; n];
        e[index] = 1;
        Monomial::new(e)
    }

    /// Squarefree monomial `x_C` for the set of 0-based indices `C`.
    pub fn from_support(n: usize, support: &[usize]) -> Self {
        let mut e = vec![0; n];
        for &i in support {
            e[i] = 1;
        }
        Monomial::new(e)
    }

    /// Squarefree monomial from the low `n` bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Monomial::new((0..n).map(|i| ((mask >> i) & 1) as u32).collect())
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_unit(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Indices (0-based) of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.exponents[i] > 0).collect()
    }

    /// Support as a bitmask. Only meaningful for `n <= 64`.
    pub fn support_mask(&self) -> u64 {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << i))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    /// `self / gcd(self, other)`, i.e. the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    /// The same monomial in a ring with `n_new >= n` variables.
    pub fn embed(&self, n_new: usize) -> Monomial {
        let mut e = self.exponents.clone();
        e.resize(n_new, 0);
        Monomial { exponents: e, degree: self.degree }
    }

    pub fn shares_variable_with(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .any(|(&a, &b)| a > 0 && b > 0)
    }

    /// Canonical order: degree ascending, then exponent vectors descending,
    /// which lists `x1*x2` before `x1*x3` before `x2*x3`.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Inclusion-minimal generating subset of `gens`, in canonical order.
///
/// Duplicates collapse; every input is divisible by some output; no output
/// divides another.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = gens.into_iter().collect();
    all.sort_by(Monomial::canonical_cmp);
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for g in all {
        // earlier entries have degree <= g, so only they can divide g
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// A monomial ideal given by its minimal generators.
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
    squarefree: bool,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVariables);
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::ExponentLength { expected: n, got: bad.n() });
        }
        let generators = minimalize(gens);
        let squarefree = generators.iter().all(Monomial::is_squarefree);
        Ok(MonomialIdeal { n, generators, squarefree })
    }

    pub fn zero(n: usize) -> Result<Self> {
        MonomialIdeal::new(n, [])
    }

    pub fn unit(n: usize) -> Result<Self> {
        MonomialIdeal::new(n, [Monomial::unit(n)])
    }

    /// Squarefree ideal from generator supports given as 0-based index lists.
    pub fn from_supports(n: usize, supports: &[&[usize]]) -> Result<Self> {
        if let Some(&i) = supports.iter().flat_map(|s| s.iter()).find(|&&i| i >= n) {
            return Err(Error::VariableOutOfRange { index: i + 1, n, pos: 0 });
        }
        MonomialIdeal::new(n, supports.iter().map(|s| Monomial::from_support(n, s)))
    }

    /// Squarefree ideal from generator bitmasks.
    pub fn from_masks(n: usize, masks: &[u64]) -> Result<Self> {
        MonomialIdeal::new(n, masks.iter().map(|&m| Monomial::from_mask(n, m)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Number of minimal generators, `m = |G(I)|`.
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.squarefree
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_unit()
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(u))
    }

    /// `self ⊆ other`, decided on generators.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n && self.generators.iter().all(|g| other.contains(g))
    }

    /// Exponent-wise lcm of all generators (the `g` of the polarization).
    pub fn lcm_all(&self) -> Monomial {
        self.generators
            .iter()
            .fold(Monomial::unit(self.n), |acc, g| acc.lcm(g))
    }

    /// `lcm(u_j : j ∈ subset)` for 0-based generator indices; `1` for the
    /// empty subset.
    pub fn lcm_subset(&self, subset: &[usize]) -> Result<Monomial> {
        let mut acc = Monomial::unit(self.n);
        for &j in subset {
            let g = self
                .generators
                .get(j)
                .ok_or(Error::IndexOutOfRange { index: j, len: self.generators.len() })?;
            acc = acc.lcm(g);
        }
        Ok(acc)
    }

    /// Extension `I·S[x_{n+1}, ..., x_{n_new}]`.
    pub fn extend(&self, n_new: usize) -> Result<MonomialIdeal> {
        if n_new < self.n {
            return Err(Error::invalid(format!(
                "cannot extend from {} to {} variables",
                self.n, n_new
            )));
        }
        MonomialIdeal::new(n_new, self.generators.iter().map(|g| g.embed(n_new)))
    }

    /// The ideal `(I, u)`.
    pub fn with_generator(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check_ambient(u)?;
        MonomialIdeal::new(self.n, self.generators.iter().cloned().chain([u.clone()]))
    }

    /// The ideal `u·I`.
    pub fn times(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check_ambient(u)?;
        MonomialIdeal::new(self.n, self.generators.iter().map(|g| g.mul(u)))
    }

    /// The colon ideal `(I : u)`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check_ambient(u)?;
        MonomialIdeal::new(self.n, self.generators.iter().map(|g| g.colon(u)))
    }

    fn check_ambient(&self, u: &Monomial) -> Result<()> {
        if u.n() != self.n {
            return Err(Error::AmbientMismatch { left: self.n, right: u.n() });
        }
        Ok(())
    }

    pub(crate) fn require_squarefree(&self) -> Result<()> {
        if self.squarefree {
            Ok(())
        } else {
            Err(Error::NotSquarefree)
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
